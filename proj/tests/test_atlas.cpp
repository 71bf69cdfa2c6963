#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "atlas.hpp"

using namespace critmono;

namespace {

ParametricFamily sample(const std::string& name) {
  std::ifstream in(std::string(CRITMONO_SAMPLES_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ParametricFamily::parse(ss.str());
}

ParametricFamily power_family(int j) {
  std::vector<MPoly> coeffs(static_cast<std::size_t>(j), MPoly::zero(1));
  coeffs.back() = MPoly(1, {MTerm{Complex(-1.0), {1}}});
  return ParametricFamily(j, std::move(coeffs));
}

RootSet make_roots(CVec roots) {
  RootSet rs;
  rs.residuals.assign(roots.size(), 0.0);
  rs.roots = std::move(roots);
  return rs;
}

bool has_class(const PermGroup& g, const CycleType& c) {
  for (const auto& p : g.elements)
    if (cycle_type(p) == c) return true;
  return false;
}

}  // namespace

TEST_CASE("coincidence clustering groups equal limits") {
  RootSet rs = make_roots({Complex(1.0), Complex(1e-9, -1e-9), Complex(1.0, 1e-9),
                           Complex(0.0), Complex(-1e-9)});
  CoincidencePattern pat = coincidence_pattern(rs, 1e-6);
  REQUIRE(pat.blocks.size() == 2);
  CHECK(pat.blocks[0] == std::vector<int>{1, 3, 4});
  CHECK(pat.blocks[1] == std::vector<int>{0, 2});
  CHECK(std::abs(pat.centers[0]) < 1e-8);
  CHECK(std::abs(pat.centers[1] - Complex(1.0)) < 1e-8);
  CHECK(pattern_class(pat) == CycleType({3, 2}));

  // the threshold is relative for large configurations
  RootSet big = make_roots({Complex(1e6), Complex(1e6 + 0.5), Complex(-1e6)});
  CoincidencePattern bp = coincidence_pattern(big, 1e-6);
  CHECK(pattern_class(bp) == CycleType({2, 1}));
  CHECK(bp.blocks[0] == std::vector<int>{0, 1});
}

TEST_CASE("coincidence clustering rejects ambiguous gaps") {
  RootSet rs = make_roots({Complex(0.0), Complex(5e-6)});
  CHECK_THROWS_AS(coincidence_pattern(rs, 1e-6), Error);
  CHECK_THROWS_AS(coincidence_pattern(rs, 0.0), Error);
  CHECK_THROWS_AS(coincidence_pattern(make_roots({}), 1e-6), Error);
}

TEST_CASE("vanishing product test: forms supported on a collapsed orbit") {
  ParametricFamily prod = sample("product32.json");
  CVec point{Complex(0.0), Complex(4.0)};
  PhiOptions opt;
  opt.basepoint = CVec{Complex(1.0), Complex(4.0)};

  // the cube roots collapse at w1 = 0: forms on their labels vanish identically
  opt.layout = std::vector<std::vector<int>>{{1, 2, 3}};
  PhiReport yes = phi_s_test(prod, point, CycleType({3, 1, 1}), opt);
  CHECK(yes.vanishes);
  CHECK(yes.max_abs == 0.0);
  CHECK(yes.group_order == 6);
  CHECK(!yes.symmetric_fallback);
  REQUIRE(yes.limit_values.size() == 5);
  CHECK(std::abs(yes.limit_values[1]) < 1e-9);
  CHECK(std::abs(yes.limit_values[2]) < 1e-9);
  CHECK(std::abs(yes.limit_values[3]) < 1e-9);

  // the pair {-2, 2} does not collapse there, so its form survives
  opt.layout = std::vector<std::vector<int>>{{0, 4}};
  PhiReport no = phi_s_test(prod, point, CycleType({2, 1, 1, 1}), opt);
  CHECK(!no.vanishes);
  // six group elements, each contributing +-4/sqrt(2)
  CHECK(no.max_abs == doctest::Approx(512.0).epsilon(1e-6));
  CHECK(no.min_abs == doctest::Approx(512.0).epsilon(1e-6));
}

TEST_CASE("vanishing product test: double root of the square root family") {
  ParametricFamily fam = sample("sqrt.json");
  PhiOptions opt;
  opt.basepoint = CVec{Complex(1.0)};

  PhiReport at0 = phi_s_test(fam, CVec{Complex(0.0)}, CycleType({2}), opt);
  CHECK(at0.vanishes);
  CHECK(at0.max_abs == 0.0);
  CHECK(at0.group_order == 2);

  opt.basepoint = CVec{Complex(1.0, 1.0)};
  PhiReport at4 = phi_s_test(fam, CVec{Complex(4.0)}, CycleType({2}), opt);
  CHECK(!at4.vanishes);
  // both group elements contribute -+4/sqrt(2)
  CHECK(at4.max_abs == doctest::Approx(8.0).epsilon(1e-6));
}

TEST_CASE("vanishing product test: input validation") {
  ParametricFamily fam = sample("sqrt.json");
  PhiOptions opt;
  opt.basepoint = CVec{Complex(1.0)};
  CVec pt{Complex(0.0)};
  CHECK_THROWS_AS(phi_s_test(fam, pt, CycleType({3}), opt), Error);
  CHECK_THROWS_AS(phi_s_test(fam, CVec{Complex(0.0), Complex(1.0)}, CycleType({2}), opt), Error);

  PhiOptions bad = opt;
  bad.samples = 0;
  CHECK_THROWS_AS(phi_s_test(fam, pt, CycleType({2}), bad), Error);

  bad = opt;
  bad.layout = std::vector<std::vector<int>>{{0, 2}};
  CHECK_THROWS_AS(phi_s_test(fam, pt, CycleType({2}), bad), Error);

  bad = opt;
  bad.layout = std::vector<std::vector<int>>{{0}, {0, 1}};
  CHECK_THROWS_AS(phi_s_test(fam, pt, CycleType({2}), bad), Error);

  bad = opt;
  bad.layout = std::vector<std::vector<int>>{{0}};  // sizes (1,1) cannot realize (2)
  CHECK_THROWS_AS(phi_s_test(fam, pt, CycleType({2}), bad), Error);
}

TEST_CASE("local loops at a double root generate the swap") {
  ParametricFamily fam = power_family(2);
  InertiaOptions opt;
  opt.probes = 4;
  InertiaReport rep = inertia_group(fam, CVec{Complex(0.0)}, opt);
  CHECK(rep.cls == CycleType({2}));
  CHECK(rep.group.order == 2);
  CHECK(has_class(rep.group, CycleType({2})));
  CHECK(rep.probes.size() == 4);
  for (const auto& pr : rep.probes) CHECK(pr.rho > 0.0);
  CHECK(rep.anchor_roots.size() == 2);
}

TEST_CASE("local loops at a triple root generate a three cycle") {
  ParametricFamily fam = power_family(3);
  InertiaOptions opt;
  opt.probes = 4;
  InertiaReport rep = inertia_group(fam, CVec{Complex(0.0)}, opt);
  CHECK(rep.cls == CycleType({3}));
  CHECK(rep.group.order == 3);
  CHECK(has_class(rep.group, CycleType({3})));
}

TEST_CASE("local loops at a mixed degeneration") {
  // x^5 - 2x^4 + x^3 + v (x - 2) pinches to x^3 (x - 1)^2 at v = 0
  ParametricFamily fam = sample("quintic_pinned.json");
  InertiaOptions opt;
  opt.probes = 4;
  InertiaReport rep = inertia_group(fam, CVec{Complex(0.0)}, opt);
  CHECK(rep.cls == CycleType({3, 2}));
  CHECK(rep.group.order == 6);
  CHECK(has_class(rep.group, CycleType({3, 2})));
  // every element respects the cluster partition
  for (const auto& g : rep.group.elements) CHECK(class_is_higher(rep.cls, cycle_type(g)));
}

TEST_CASE("local loops where all five roots meet") {
  ParametricFamily prod = sample("product32.json");
  InertiaOptions opt;
  opt.probes = 4;
  InertiaReport rep = inertia_group(prod, CVec{Complex(0.0), Complex(0.0)}, opt);
  CHECK(rep.cls == CycleType({5}));
  CHECK(rep.group.order == 6);
  CHECK(has_class(rep.group, CycleType({3, 2})));
}

TEST_CASE("local loop validation") {
  ParametricFamily fam = power_family(2);
  InertiaOptions opt;
  CHECK_THROWS_AS(inertia_group(fam, CVec{Complex(1.0)}, opt), Error);  // regular point
  CHECK_THROWS_AS(inertia_group(fam, CVec{Complex(0.0), Complex(0.0)}, opt), Error);
  InertiaOptions bad;
  bad.probes = 0;
  CHECK_THROWS_AS(inertia_group(fam, CVec{Complex(0.0)}, bad), Error);

  std::vector<MPoly> lin{MPoly(1, {MTerm{Complex(-1.0), {1}}})};
  ParametricFamily deg1(1, std::move(lin));
  CHECK_THROWS_AS(inertia_group(deg1, CVec{Complex(0.0)}, opt), Error);
}

TEST_CASE("a chain of strictly coarsening degenerations certifies a bound") {
  ParametricFamily fam = sample("quintic_chain.json");
  std::vector<CVec> pts{
      {Complex(1.0), Complex(4.0), Complex(0.0), Complex(0.0)},
      {Complex(1.0), Complex(0.0), Complex(0.0), Complex(0.0)},
      {Complex(0.0), Complex(0.0), Complex(0.0), Complex(0.0)},
  };
  ChainReport rep = chain_certificate(fam, pts);
  CHECK(rep.lower_bound == 3);
  CHECK(rep.certificate.length() == 3);
  // the first pattern is odd, so the certificate lives in the symmetric setting
  CHECK(rep.certificate.kind == GroupKind::symmetric);
  REQUIRE(rep.certificate.chain.size() == 3);
  CHECK(rep.certificate.chain[0] == CycleType({2, 1, 1, 1}));
  CHECK(rep.certificate.chain[1] == CycleType({3, 1, 1}));
  CHECK(rep.certificate.chain[2] == CycleType({5}));

  // dropping the odd first step leaves an even chain
  ChainReport even = chain_certificate(fam, {pts[1], pts[2]});
  CHECK(even.lower_bound == 2);
  CHECK(even.certificate.kind == GroupKind::alternating);
}

TEST_CASE("chains reject non-coarsening point lists") {
  ParametricFamily fam = sample("quintic_chain.json");
  CVec triple{Complex(1.0), Complex(0.0), Complex(0.0), Complex(0.0)};
  CVec origin{Complex(0.0), Complex(0.0), Complex(0.0), Complex(0.0)};
  CVec regular{Complex(1.0), Complex(4.0), Complex(2.0), Complex(7.0)};
  // x^5 - 2x^3 + x = x (x^2 - 1)^2: two double roots
  CVec twopairs{Complex(-2.0), Complex(0.0), Complex(1.0), Complex(0.0)};

  CHECK_THROWS_AS(chain_certificate(fam, {}), Error);
  CHECK_THROWS_AS(chain_certificate(fam, {regular, triple}), Error);
  CHECK_THROWS_AS(chain_certificate(fam, {origin, triple}), Error);   // refines instead
  CHECK_THROWS_AS(chain_certificate(fam, {triple, triple}), Error);   // no strict step
  CHECK_THROWS_AS(chain_certificate(fam, {twopairs, triple}), Error); // incomparable

  // (2,2,1) really is the pattern at that point
  RootFindOptions ro;
  RootSet rs = all_roots(fam.specialize(twopairs), ro);
  CHECK(pattern_class(coincidence_pattern(rs, 1e-6)) == CycleType({2, 2, 1}));
}
