#include "cpoly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace critmono {

namespace {
bool exactly_zero(Complex z) { return z.real() == 0.0 && z.imag() == 0.0; }
}  // namespace

CPoly::CPoly(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && exactly_zero(c_.back())) c_.pop_back();
}

CPoly CPoly::monic_from_roots(std::span<const Complex> roots) {
  std::vector<Complex> c{Complex(1.0)};
  for (Complex r : roots) {
    c.insert(c.begin(), Complex(0.0));
    for (std::size_t k = 0; k + 1 < c.size(); ++k) c[k] -= r * c[k + 1];
  }
  return CPoly(std::move(c));
}

Complex CPoly::eval(Complex x) const {
  Complex acc(0.0);
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

std::pair<Complex, Complex> CPoly::eval_with_derivative(Complex x) const {
  Complex p(0.0), dp(0.0);
  for (std::size_t k = c_.size(); k-- > 0;) {
    dp = dp * x + p;
    p = p * x + c_[k];
  }
  return {p, dp};
}

CPoly CPoly::derivative() const {
  if (c_.size() <= 1) return CPoly{};
  std::vector<Complex> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = double(k) * c_[k];
  return CPoly(std::move(d));
}

double CPoly::coeff_scale() const {
  double m = 1.0;
  for (Complex z : c_) m = std::max(m, std::abs(z));
  return m;
}

namespace {

// Aberth-Ehrlich sweep on a monic polynomial (lowest-first coefficients,
// back() == 1, degree >= 2). In-place updates; linear convergence into root
// clusters, quadratic once separated. Runs until the corrections stall at
// rounding level or the iteration budget is exhausted; certification happens
// in the caller.
CVec aberth(const std::vector<Complex>& c, int max_iter) {
  const int d = static_cast<int>(c.size()) - 1;
  double maxabs = 0.0;
  for (int k = 0; k < d; ++k) maxabs = std::max(maxabs, std::abs(c[static_cast<std::size_t>(k)]));
  const Complex centroid = -c[static_cast<std::size_t>(d - 1)] / double(d);
  const double r0 = 1.0 + maxabs;  // Cauchy bound on |root - 0|

  CVec z(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    double angle = 2.0 * M_PI * j / d + 0.41;
    double rj = r0 * (0.55 + 0.03 * ((j * 7) % 5));  // perturbed circle
    z[static_cast<std::size_t>(j)] = centroid + std::polar(rj, angle);
  }

  auto horner2 = [&](Complex x) {
    Complex p(0.0), dp(0.0);
    for (std::size_t k = c.size(); k-- > 0;) {
      dp = dp * x + p;
      p = p * x + c[k];
    }
    return std::pair{p, dp};
  };

  int calm = 0;
  for (int iter = 0; iter < max_iter && calm < 2; ++iter) {
    double worst = 0.0;
    for (int i = 0; i < d; ++i) {
      Complex zi = z[static_cast<std::size_t>(i)];
      auto [p, dp] = horner2(zi);
      if (exactly_zero(p)) continue;
      if (exactly_zero(dp)) {  // stationary start; nudge deterministically
        z[static_cast<std::size_t>(i)] = zi + std::polar(1e-6 * (1.0 + std::abs(zi)), 0.7 * i + 0.3);
        worst = 1.0;
        continue;
      }
      Complex newton = p / dp;
      Complex repulsion(0.0);
      bool collided = false;
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        Complex diff = zi - z[static_cast<std::size_t>(j)];
        if (std::abs(diff) < 1e-300) {
          collided = true;
          break;
        }
        repulsion += Complex(1.0) / diff;
      }
      if (collided) {
        z[static_cast<std::size_t>(i)] = zi + std::polar(1e-6 * (1.0 + std::abs(zi)), 1.1 * i + 0.5);
        worst = 1.0;
        continue;
      }
      Complex den = Complex(1.0) - newton * repulsion;
      Complex delta = std::abs(den) < 1e-12 ? newton : newton / den;
      z[static_cast<std::size_t>(i)] = zi - delta;
      worst = std::max(worst, std::abs(delta) / (1.0 + std::abs(zi)));
    }
    calm = worst < 5e-15 ? calm + 1 : 0;
  }
  return z;
}

}  // namespace

RootSet all_roots(const CPoly& p, const RootFindOptions& opt) {
  const int n = p.degree();
  if (n < 1) fail_invalid("all_roots requires degree >= 1");
  const auto& c = p.coeffs();

  std::size_t zeros = 0;
  while (zeros < static_cast<std::size_t>(n) && exactly_zero(c[zeros])) ++zeros;

  CVec roots(zeros, Complex(0.0));  // exact roots at the origin
  const int d = n - static_cast<int>(zeros);
  if (d >= 1) {
    std::vector<Complex> monic(c.begin() + static_cast<std::ptrdiff_t>(zeros), c.end());
    Complex lead = monic.back();
    for (auto& a : monic) a /= lead;
    if (d == 1) {
      roots.push_back(-monic[0]);
    } else {
      CVec found = aberth(monic, opt.max_iterations);
      roots.insert(roots.end(), found.begin(), found.end());
    }
  }

  std::sort(roots.begin(), roots.end(), lex_less);
  RootSet rs;
  rs.roots = std::move(roots);
  rs.residuals.resize(rs.roots.size());
  const double scale = p.coeff_scale();
  double worst = 0.0;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    rs.residuals[i] = std::abs(p.eval(rs.roots[i]));
    worst = std::max(worst, rs.residuals[i]);
  }
  if (worst > opt.residual_tol * scale)
    fail_numeric("root finding did not certify: worst residual " + std::to_string(worst) +
                 " exceeds tolerance at coefficient scale " + std::to_string(scale));
  return rs;
}

Complex newton_refine(const CPoly& p, Complex x0, const NewtonOptions& opt) {
  if (p.degree() < 1) fail_invalid("newton_refine requires degree >= 1");
  const double scale = p.coeff_scale();
  Complex x = x0;
  for (int it = 0; it < opt.max_iterations; ++it) {
    auto [f, df] = p.eval_with_derivative(x);
    if (std::abs(f) <= opt.target_residual * scale) return x;
    if (std::abs(df) < opt.derivative_floor * scale)
      fail_numeric("newton_refine: derivative below threshold near x=(" +
                   std::to_string(x.real()) + "," + std::to_string(x.imag()) +
                   "); possible root collision");
    x -= f / df;
  }
  if (std::abs(p.eval(x)) <= 10.0 * opt.target_residual * scale) return x;
  fail_numeric("newton_refine did not converge from the given start");
}

Complex discriminant_value(const CPoly& p) {
  const int n = p.degree();
  if (n < 2) fail_invalid("discriminant_value requires degree >= 2");
  CPoly dp = p.derivative();
  const int m = dp.degree();  // == n - 1 for exact-degree input
  const int size = n + m;

  Eigen::MatrixXcd syl = Eigen::MatrixXcd::Zero(size, size);
  // m rows of p's coefficients (highest first), n rows of p''s.
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) syl(r, r + k) = p.coeffs()[static_cast<std::size_t>(n - k)];
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) syl(m + r, r + k) = dp.coeffs()[static_cast<std::size_t>(m - k)];

  Complex res = syl.determinant();
  double sign = (static_cast<long>(n) * (n - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
  return sign * res / p.lead();
}

Complex discriminant_from_roots(std::span<const Complex> z) {
  Complex acc(1.0);
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      Complex d = z[i] - z[j];
      acc *= d * d;
    }
  return acc;
}

}  // namespace critmono
