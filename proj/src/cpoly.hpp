#pragma once

#include <span>
#include <utility>

#include "common.hpp"

namespace critmono {

// Univariate polynomial over C, coefficients stored lowest-degree first and
// trimmed, so degree() == coeffs().size() - 1 (the zero polynomial is empty).
class CPoly {
 public:
  CPoly() = default;
  explicit CPoly(std::vector<Complex> coeffs);
  static CPoly monic_from_roots(std::span<const Complex> roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Complex>& coeffs() const { return c_; }
  Complex lead() const { return c_.empty() ? Complex(0) : c_.back(); }

  Complex eval(Complex x) const;
  std::pair<Complex, Complex> eval_with_derivative(Complex x) const;
  CPoly derivative() const;

  // max(1, ||coeffs||_inf); the scale residual tolerances refer to.
  double coeff_scale() const;

 private:
  std::vector<Complex> c_;
};

// Labeled roots with per-root certification residuals |p(x_i)|. Labels are
// deterministic: roots sorted lexicographically by (re, im).
struct RootSet {
  CVec roots;
  std::vector<double> residuals;
  int size() const { return static_cast<int>(roots.size()); }
};

struct RootFindOptions {
  double residual_tol = 1e-10;  // certification: |p(x)| <= tol * coeff_scale
  int max_iterations = 600;
};

// All degree() roots with multiplicity, via simultaneous Aberth iteration
// started from a perturbed circle. Exact zero roots (trailing zero
// coefficients) are split off first. Near-coincident roots come back as
// clustered copies; nothing is deflated or factored. Fails (numeric) if any
// residual misses the certification tolerance.
RootSet all_roots(const CPoly& p, const RootFindOptions& opt = {});

struct NewtonOptions {
  double target_residual = 1e-12;  // scaled by coeff_scale
  double derivative_floor = 1e-8;  // scaled by coeff_scale
  int max_iterations = 16;
};

// Newton correction from x0. Fails (numeric) if the derivative magnitude
// drops below the floor (likely root collision) or the residual target is
// never met.
Complex newton_refine(const CPoly& p, Complex x0, const NewtonOptions& opt = {});

// (-1)^{n(n-1)/2} Res(p, p') / lead(p), via the Sylvester determinant.
// Requires degree >= 2.
Complex discriminant_value(const CPoly& p);

// prod_{i<j} (z_i - z_j)^2: the discriminant of the monic polynomial with
// these roots; cheap proxy for |D| along tracked paths.
Complex discriminant_from_roots(std::span<const Complex> z);

}  // namespace critmono
