#include "monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace critmono {

namespace {

struct Clusters {
  CVec centers;
  std::vector<double> radii;  // max member distance from the center
};

// Single-linkage clusters of a point list at threshold tol; centers sorted
// lexicographically. Fails when inter-cluster gaps fall inside 10x the
// threshold (ambiguous clustering).
Clusters cluster_points(const CVec& pts, double tol, const char* what) {
  std::vector<int> ids = single_linkage(pts, tol);
  double min_gap = min_inter_cluster_gap(pts, ids);
  if (min_gap < 10.0 * tol)
    fail_numeric(std::string(what) + ": clusters not isolated (closest inter-cluster gap " +
                 std::to_string(min_gap) + " inside 10x tolerance); try a different seed");

  int k = pts.empty() ? 0 : 1 + *std::max_element(ids.begin(), ids.end());
  std::vector<std::pair<Complex, double>> out;
  for (int c = 0; c < k; ++c) {
    Complex sum(0.0);
    int count = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (ids[i] == c) {
        sum += pts[i];
        count += 1;
      }
    Complex mean = sum / double(count);
    double radius = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (ids[i] == c) radius = std::max(radius, std::abs(pts[i] - mean));
    out.emplace_back(mean, radius);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  Clusters cl;
  for (auto& [c, r] : out) {
    cl.centers.push_back(c);
    cl.radii.push_back(r);
  }
  return cl;
}

}  // namespace

LineCriticalPoints critical_lambdas_on_line(const ParametricFamily& fam, const CVec& base,
                                            const CVec& dir, double cluster_tol) {
  const int n = fam.degree();
  if (n < 2) return {};  // no discriminant below degree 2
  const int delta = fam.max_coeff_degree();
  if (delta == 0) return {};  // family constant along every line
  const int K = (2 * n - 1) * delta + 1;

  // Sample D on the unit circle and recover its lambda-polynomial by DFT.
  CVec values(static_cast<std::size_t>(K));
  for (int j = 0; j < K; ++j) {
    double a = 2.0 * M_PI * j / K;
    Complex lam(std::cos(a), std::sin(a));
    CVec u(base.size());
    for (std::size_t k = 0; k < u.size(); ++k) u[k] = base[k] + lam * dir[k];
    values[static_cast<std::size_t>(j)] = discriminant_value(fam.specialize(u));
  }
  std::vector<Complex> coeff(static_cast<std::size_t>(K), Complex(0.0));
  for (int k = 0; k < K; ++k) {
    Complex acc(0.0);
    for (int j = 0; j < K; ++j) {
      double a = -2.0 * M_PI * double(j) * double(k) / K;
      acc += values[static_cast<std::size_t>(j)] * Complex(std::cos(a), std::sin(a));
    }
    coeff[static_cast<std::size_t>(k)] = acc / double(K);
  }
  double mx = 0.0;
  for (Complex c : coeff) mx = std::max(mx, std::abs(c));
  if (mx == 0.0)
    fail_numeric("discriminant vanishes identically on the probe line; family degenerate");
  int deg = -1;
  for (int k = K - 1; k >= 0; --k)
    if (std::abs(coeff[static_cast<std::size_t>(k)]) > 1e-9 * mx) {
      deg = k;
      break;
    }
  if (deg <= 0) return {};  // no lambda dependence: no critical points on this line
  coeff.resize(static_cast<std::size_t>(deg) + 1);

  // A base point on the discriminant gives a structural zero at lambda = 0
  // whose multiplicity defeats the simultaneous iteration; strip it and keep
  // a single representative root at the origin.
  int lo = 0;
  while (lo < deg && std::abs(coeff[static_cast<std::size_t>(lo)]) <= 1e-9 * mx) ++lo;
  if (lo > 0) coeff.erase(coeff.begin(), coeff.begin() + lo);

  CVec lam_values;
  if (coeff.size() > 1) {
    RootFindOptions relax;
    relax.residual_tol = 1e-6;  // interpolated coefficients carry rounding noise
    RootSet lam_roots = all_roots(CPoly(std::move(coeff)), relax);
    lam_values = lam_roots.roots;
  }
  if (lo > 0) lam_values.push_back(Complex(0.0));
  double scale = 1.0;
  for (Complex r : lam_values) scale = std::max(scale, std::abs(r));
  // Multiple zeros of the restricted discriminant (non-reduced components,
  // e.g. squared resultant factors) split under coefficient noise by roughly
  // noise^(1/multiplicity); the widened threshold re-merges splits up to
  // fourfold zeros so each geometric branch point counts once.
  double tol = std::max(cluster_tol, 1e-3) * scale;
  Clusters cl = cluster_points(lam_values, tol, "discriminant points on line");
  return LineCriticalPoints{cl.centers, cl.radii};
}

ParamLoop conjugated_line_loop(const CVec& base, const CVec& dir, Complex lambda, double radius) {
  double dist = std::abs(lambda);
  if (!(radius > 0.0) || radius >= dist)
    fail_invalid("loop radius must be positive and smaller than the basepoint distance");
  Complex phase = -lambda / dist;  // circle starts at the point facing the basepoint
  Complex boundary = lambda * (1.0 - radius / dist);
  const std::size_t m = base.size();
  CVec b_pt(m), center(m), circ_dir(m);
  for (std::size_t k = 0; k < m; ++k) {
    b_pt[k] = base[k] + boundary * dir[k];
    center[k] = base[k] + lambda * dir[k];
    circ_dir[k] = phase * dir[k];
  }
  std::vector<PathSegment> segs;
  segs.push_back(LineSegment{base, b_pt});
  segs.push_back(CircleSegment{center, circ_dir, radius, 1});
  segs.push_back(LineSegment{b_pt, base});
  return ParamLoop(ParamPath(std::move(segs)));
}

MonodromyResult monodromy_with_loops(const ParametricFamily& fam, const CVec& basepoint,
                                     const std::vector<ParamLoop>& loops,
                                     const MonodromyOptions& opt) {
  if (static_cast<int>(basepoint.size()) != fam.param_count())
    fail_invalid("basepoint dimension does not match the family parameter count");
  CPoly p0 = fam.specialize(basepoint);
  if (fam.degree() >= 2 && std::abs(discriminant_value(p0)) < opt.config.tol.safety)
    fail_invalid("basepoint lies on the discriminant locus; pick a generic basepoint");

  MonodromyResult res;
  res.basepoint = basepoint;
  res.seed = opt.config.seed;
  RootFindOptions rootopt;
  rootopt.residual_tol = opt.config.tol.residual;
  res.base_roots = all_roots(p0, rootopt);

  for (const auto& loop : loops) {
    CVec s = loop.path.start();
    double d = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) d = std::max(d, std::abs(s[k] - basepoint[k]));
    if (d > 1e-9) fail_invalid("every loop must start at the basepoint");
    res.loop_perms.push_back(loop_permutation(fam, loop, res.base_roots, opt.track));
    res.loops.push_back(loop);
  }
  res.group = group_closure(fam.degree(), res.loop_perms, opt.closure_cap);
  return res;
}

MonodromyResult monodromy_auto(const ParametricFamily& fam, const CVec& basepoint,
                               const MonodromyOptions& opt) {
  if (static_cast<int>(basepoint.size()) != fam.param_count())
    fail_invalid("basepoint dimension does not match the family parameter count");
  if (fam.param_count() < 1) fail_invalid("auto monodromy needs at least one parameter");
  CPoly p0 = fam.specialize(basepoint);
  if (fam.degree() >= 2 && std::abs(discriminant_value(p0)) < opt.config.tol.safety)
    fail_invalid("basepoint lies on the discriminant locus; pick a generic basepoint");

  std::string last_error = "no probe line attempted";
  for (int attempt = 0; attempt < opt.line_attempts; ++attempt) {
    Rng rng(opt.config.seed, "monodromy.line." + std::to_string(attempt));
    CVec dir = rng.unit_direction(static_cast<std::size_t>(fam.param_count()));
    try {
      LineCriticalPoints crit =
          critical_lambdas_on_line(fam, basepoint, dir, opt.config.tol.cluster);
      std::vector<ParamLoop> loops;
      for (std::size_t i = 0; i < crit.centers.size(); ++i) {
        Complex lam = crit.centers[i];
        double nearest = std::abs(lam);  // fallback: distance to the basepoint
        for (std::size_t j = 0; j < crit.centers.size(); ++j)
          if (j != i) nearest = std::min(nearest, std::abs(lam - crit.centers[j]));
        double cap = std::min(0.3 * nearest, 0.5 * std::abs(lam));
        double radius = std::max(0.05 * nearest, 4.0 * crit.radii[i]);
        if (radius > cap)
          fail_numeric("cannot enclose a split discriminant cluster without touching its "
                       "neighbors; try a different seed");
        loops.push_back(conjugated_line_loop(basepoint, dir, lam, radius));
      }
      MonodromyResult res;
      if (loops.empty()) {
        res.basepoint = basepoint;
        res.seed = opt.config.seed;
        RootFindOptions rootopt;
        rootopt.residual_tol = opt.config.tol.residual;
        res.base_roots = all_roots(p0, rootopt);
        res.group = group_closure(fam.degree(), {}, opt.closure_cap);
      } else {
        res = monodromy_with_loops(fam, basepoint, loops, opt);
      }
      res.auto_mode = true;
      return res;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::invalid_argument) throw;
      last_error = e.what();
    }
  }
  fail_numeric("auto monodromy failed on " + std::to_string(opt.line_attempts) +
               " probe lines (" + last_error + "); try a different seed");
}

}  // namespace critmono
