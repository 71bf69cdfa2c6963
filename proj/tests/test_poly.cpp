#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "cpoly.hpp"

using namespace critmono;

namespace {
constexpr double kTight = 1e-8;

double dist(Complex a, Complex b) { return std::abs(a - b); }
}  // namespace

TEST_CASE("evaluation and derivative") {
  // (x - 2)(x + 3) = x^2 + x - 6
  CPoly p({Complex(-6), Complex(1), Complex(1)});
  CHECK(p.degree() == 2);
  CHECK(dist(p.eval(Complex(1)), Complex(-4)) < 1e-14);
  auto [v, d] = p.eval_with_derivative(Complex(1));
  CHECK(dist(v, Complex(-4)) < 1e-14);
  CHECK(dist(d, Complex(3)) < 1e-14);
  CHECK(p.derivative().degree() == 1);
  CHECK(dist(p.derivative().eval(Complex(0)), Complex(1)) < 1e-14);
  CHECK(p.coeff_scale() == 6.0);
  CHECK(CPoly({Complex(0.25)}).coeff_scale() == 1.0);
}

TEST_CASE("roots of factored polynomials come back sorted") {
  // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
  CPoly p({Complex(-6), Complex(11), Complex(-6), Complex(1)});
  RootSet r = all_roots(p);
  REQUIRE(r.size() == 3);
  CHECK(dist(r.roots[0], Complex(1)) < kTight);
  CHECK(dist(r.roots[1], Complex(2)) < kTight);
  CHECK(dist(r.roots[2], Complex(3)) < kTight);
  for (double res : r.residuals) CHECK(res <= 1e-10 * p.coeff_scale());

  CPoly q({Complex(1), Complex(0), Complex(1)});  // x^2 + 1
  RootSet rq = all_roots(q);
  REQUIRE(rq.size() == 2);
  CHECK(dist(rq.roots[0], Complex(0, -1)) < kTight);
  CHECK(dist(rq.roots[1], Complex(0, 1)) < kTight);
}

TEST_CASE("monic reconstruction round trip") {
  CVec roots{Complex(0.5, -1.25), Complex(-2, 0.75), Complex(3, 0), Complex(0, 2)};
  CPoly p = CPoly::monic_from_roots(roots);
  CHECK(p.degree() == 4);
  CHECK(dist(p.lead(), Complex(1)) < 1e-14);
  RootSet r = all_roots(p);
  // both lists are lexicographically sorted, so compare elementwise
  CVec want = roots;
  std::sort(want.begin(), want.end(), lex_less);
  for (int i = 0; i < 4; ++i) CHECK(dist(r.roots[i], want[i]) < kTight);
}

TEST_CASE("exact zero roots are split off") {
  // x^4 - x^3 = x^3 (x - 1)
  CPoly p({Complex(0), Complex(0), Complex(0), Complex(-1), Complex(1)});
  RootSet r = all_roots(p);
  REQUIRE(r.size() == 4);
  CHECK(r.roots[0] == Complex(0));
  CHECK(r.roots[1] == Complex(0));
  CHECK(r.roots[2] == Complex(0));
  CHECK(dist(r.roots[3], Complex(1)) < kTight);
}

TEST_CASE("near-coincident roots come back as a cluster") {
  // (x - 1)^2 (x + 1): the double root splits by about sqrt(eps)
  CPoly p({Complex(1), Complex(-1), Complex(-1), Complex(1)});
  RootFindOptions relax;
  relax.residual_tol = 1e-8;
  RootSet r = all_roots(p, relax);
  REQUIRE(r.size() == 3);
  CHECK(dist(r.roots[0], Complex(-1)) < 1e-6);
  CHECK(dist(r.roots[1], Complex(1)) < 1e-5);
  CHECK(dist(r.roots[2], Complex(1)) < 1e-5);
}

TEST_CASE("degenerate inputs") {
  CHECK_THROWS_AS(all_roots(CPoly({Complex(7)})), Error);
  CHECK_THROWS_AS(all_roots(CPoly()), Error);
}

TEST_CASE("quadratic discriminant equals b^2 - 4c") {
  auto check_quad = [](Complex b, Complex c) {
    CPoly p({c, b, Complex(1)});
    Complex want = b * b - 4.0 * c;
    CHECK(dist(discriminant_value(p), want) <= kTight * (1.0 + std::abs(want)));
  };
  check_quad(Complex(3), Complex(1));
  check_quad(Complex(0), Complex(-2));
  check_quad(Complex(-1.5, 2.0), Complex(0.25, -1.0));
  check_quad(Complex(2), Complex(1));  // (x+1)^2: discriminant zero
}

TEST_CASE("depressed cubic discriminant equals -4p^3 - 27q^2") {
  auto check_cubic = [](Complex p, Complex q) {
    CPoly f({q, p, Complex(0), Complex(1)});
    Complex want = -4.0 * p * p * p - 27.0 * q * q;
    CHECK(dist(discriminant_value(f), want) <= kTight * (1.0 + std::abs(want)));
  };
  check_cubic(Complex(1), Complex(4));
  check_cubic(Complex(-3), Complex(2));  // (x-1)^2 (x+2): discriminant zero
  check_cubic(Complex(0.5, -0.5), Complex(1, 1));
}

TEST_CASE("discriminant against the root-product form") {
  CVec roots{Complex(1), Complex(2), Complex(3)};
  CHECK(dist(discriminant_from_roots(roots), Complex(4)) < 1e-12);
  CVec roots2{Complex(0.5, 1), Complex(-1, 0.25), Complex(2, -2), Complex(-0.75, 0)};
  CPoly p = CPoly::monic_from_roots(roots2);
  Complex via_resultant = discriminant_value(p);
  Complex via_roots = discriminant_from_roots(roots2);
  CHECK(dist(via_resultant, via_roots) <= 1e-6 * (1.0 + std::abs(via_roots)));
  CHECK_THROWS_AS(discriminant_value(CPoly({Complex(1), Complex(1)})), Error);
}

TEST_CASE("newton refinement") {
  CPoly p({Complex(-2), Complex(0), Complex(1)});  // x^2 - 2
  Complex r = newton_refine(p, Complex(1.4));
  CHECK(dist(r, Complex(std::sqrt(2.0))) < 1e-12);
  Complex rneg = newton_refine(p, Complex(-1.4));
  CHECK(dist(rneg, Complex(-std::sqrt(2.0))) < 1e-12);

  // a point already inside the residual target is accepted as-is
  CPoly sq({Complex(0), Complex(0), Complex(1)});  // x^2
  CHECK(std::abs(newton_refine(sq, Complex(1e-9))) <= 1e-6);

  // flat derivative with an unreachable target must be refused
  NewtonOptions strict;
  strict.target_residual = 1e-30;
  CHECK_THROWS_AS(newton_refine(sq, Complex(1e-9), strict), Error);

  // iteration budget exhaustion is a failure, not a silent partial result
  NewtonOptions one_step;
  one_step.max_iterations = 1;
  CHECK_THROWS_AS(newton_refine(p, Complex(0.5), one_step), Error);
}
