#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "monodromy.hpp"

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

std::vector<std::size_t> orbit_sizes(const PermGroup& g) {
  std::vector<std::size_t> sizes;
  for (const auto& o : g.orbits) sizes.push_back(o.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

TEST_CASE("restricted discriminant zeros: simple branch point") {
  // along u = 1 + lambda the cubic x^3 - u degenerates exactly at lambda = -1
  ParametricFamily fam = power_family(3);
  LineCriticalPoints crit = critical_lambdas_on_line(fam, CVec{Complex(1.0)}, CVec{Complex(1.0)}, 1e-6);
  REQUIRE(crit.centers.size() == 1);
  CHECK(std::abs(crit.centers[0] - Complex(-1.0)) < 1e-6);
}

TEST_CASE("restricted discriminant zeros: base point already critical") {
  // x^2 - lambda from the branch point itself: the only zero sits at the origin
  ParametricFamily fam = power_family(2);
  LineCriticalPoints crit = critical_lambdas_on_line(fam, CVec{Complex(0.0)}, CVec{Complex(1.0)}, 1e-6);
  REQUIRE(crit.centers.size() == 1);
  CHECK(std::abs(crit.centers[0]) < 1e-9);

  // (x^3 - lambda)(x^2 - lambda): a seventh-order zero at 0 plus a double zero at 1
  ParametricFamily prod = sample("product32.json");
  LineCriticalPoints crit2 = critical_lambdas_on_line(prod, CVec{Complex(0.0), Complex(0.0)},
                                                      CVec{Complex(1.0), Complex(1.0)}, 1e-6);
  REQUIRE(crit2.centers.size() == 2);
  CHECK(std::abs(crit2.centers[0]) < 1e-6);
  CHECK(std::abs(crit2.centers[1] - Complex(1.0)) < 1e-3);
}

TEST_CASE("restricted discriminant zeros: degenerate families") {
  // degree 1: nothing to degenerate
  std::vector<MPoly> lin{MPoly(1, {MTerm{Complex(-1.0), {1}}})};
  ParametricFamily deg1(1, std::move(lin));
  CHECK(critical_lambdas_on_line(deg1, CVec{Complex(0.0)}, CVec{Complex(1.0)}, 1e-6).centers.empty());

  // constant coefficients: the discriminant never moves
  ParametricFamily frozen = ParametricFamily::parse(
      R"({"degree": 2, "parameters": ["u"],
          "coefficients": [{"index": 2, "terms": [{"c": [-4, 0], "e": [0]}]}]})");
  CHECK(critical_lambdas_on_line(frozen, CVec{Complex(0.0)}, CVec{Complex(1.0)}, 1e-6).centers.empty());
}

TEST_CASE("loops around line points validate their radius") {
  CVec base{Complex(0.0)};
  CVec dir{Complex(1.0)};
  CHECK_THROWS_AS(conjugated_line_loop(base, dir, Complex(2.0), 0.0), Error);
  CHECK_THROWS_AS(conjugated_line_loop(base, dir, Complex(2.0), 2.5), Error);
  ParamLoop loop = conjugated_line_loop(base, dir, Complex(2.0), 0.5);
  CHECK(loop.path.is_closed());
  CVec s = loop.path.start();
  REQUIRE(s.size() == 1);
  CHECK(std::abs(s[0]) < 1e-12);
}

TEST_CASE("explicit loops drive the group computation") {
  ParametricFamily fam = power_family(3);
  MonodromyOptions opt;

  CircleSegment c;
  c.center = CVec{Complex(0.0)};
  c.direction = CVec{Complex(1.0)};
  c.radius = 1.0;
  c.turns = 1;
  ParamLoop circle{ParamPath({c})};

  MonodromyResult res = monodromy_with_loops(fam, CVec{Complex(1.0)}, {circle}, opt);
  CHECK(res.group.order == 3);
  CHECK(res.group.transitive);
  REQUIRE(res.loop_perms.size() == 1);
  CHECK(cycle_type(res.loop_perms[0]) == CycleType({3}));
  CHECK(!res.auto_mode);
  CHECK(res.base_roots.size() == 3);

  // no loops: the trivial group
  MonodromyResult none = monodromy_with_loops(fam, CVec{Complex(1.0)}, {}, opt);
  CHECK(none.group.order == 1);
  CHECK(!none.group.transitive);
}

TEST_CASE("explicit loop validation") {
  ParametricFamily fam = power_family(3);
  MonodromyOptions opt;
  CHECK_THROWS_AS(monodromy_with_loops(fam, CVec{Complex(1.0), Complex(0.0)}, {}, opt), Error);
  // the basepoint must stay clear of the discriminant locus
  CHECK_THROWS_AS(monodromy_with_loops(fam, CVec{Complex(0.0)}, {}, opt), Error);

  CircleSegment c;
  c.center = CVec{Complex(5.0)};
  c.direction = CVec{Complex(1.0)};
  c.radius = 1.0;
  c.turns = 1;
  ParamLoop far_loop{ParamPath({c})};
  CHECK_THROWS_AS(monodromy_with_loops(fam, CVec{Complex(1.0)}, {far_loop}, opt), Error);
}

TEST_CASE("automatic loops recover the full group") {
  MonodromyOptions opt;
  MonodromyResult cubic = monodromy_auto(sample("cubic.json"),
                                         CVec{Complex(1.0), Complex(4.0)}, opt);
  CHECK(cubic.group.order == 6);
  CHECK(cubic.group.transitive);
  CHECK(cubic.auto_mode);
  CHECK(!cubic.loops.empty());
  CHECK(cubic.seed == opt.config.seed);

  MonodromyResult prod = monodromy_auto(sample("product32.json"),
                                        CVec{Complex(1.0), Complex(4.0)}, opt);
  CHECK(prod.group.order == 6);
  CHECK(!prod.group.transitive);
  CHECK(orbit_sizes(prod.group) == std::vector<std::size_t>{2, 3});
}

TEST_CASE("automatic and explicit loops agree") {
  ParametricFamily fam = power_family(3);
  MonodromyOptions opt;
  MonodromyResult autom = monodromy_auto(fam, CVec{Complex(1.0)}, opt);

  CircleSegment c;
  c.center = CVec{Complex(0.0)};
  c.direction = CVec{Complex(1.0)};
  c.radius = 1.0;
  c.turns = 1;
  MonodromyResult expl =
      monodromy_with_loops(fam, CVec{Complex(1.0)}, {ParamLoop{ParamPath({c})}}, opt);
  CHECK(autom.group.order == expl.group.order);
  CHECK(autom.group.transitive == expl.group.transitive);
}

TEST_CASE("families with no branch points give the trivial group") {
  ParametricFamily frozen = ParametricFamily::parse(
      R"({"degree": 2, "parameters": ["u"],
          "coefficients": [{"index": 2, "terms": [{"c": [-4, 0], "e": [0]}]}]})");
  MonodromyOptions opt;
  MonodromyResult res = monodromy_auto(frozen, CVec{Complex(0.0)}, opt);
  CHECK(res.group.order == 1);
  CHECK(res.loops.empty());
  CHECK(res.auto_mode);
}

TEST_CASE("identical seeds replay identical loops") {
  MonodromyOptions opt;
  opt.config.seed = 12345;
  ParametricFamily fam = sample("cubic.json");
  MonodromyResult a = monodromy_auto(fam, CVec{Complex(1.0), Complex(4.0)}, opt);
  MonodromyResult b = monodromy_auto(fam, CVec{Complex(1.0), Complex(4.0)}, opt);
  REQUIRE(a.loop_perms.size() == b.loop_perms.size());
  for (std::size_t i = 0; i < a.loop_perms.size(); ++i) CHECK(a.loop_perms[i] == b.loop_perms[i]);
  CHECK(loops_to_json(a.loops) == loops_to_json(b.loops));
}
