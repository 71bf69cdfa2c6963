#include "track.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace critmono {

std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost) {
  const int n = static_cast<int>(cost.size());
  if (n == 0) return {};
  for (const auto& row : cost)
    if (static_cast<int>(row.size()) != n) fail_invalid("assignment cost matrix must be square");
  const double INF = std::numeric_limits<double>::infinity();
  std::vector<double> u(static_cast<std::size_t>(n) + 1, 0.0), v(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<int> p(static_cast<std::size_t>(n) + 1, 0), way(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(static_cast<std::size_t>(n) + 1, INF);
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    do {
      used[static_cast<std::size_t>(j0)] = 1;
      int i0 = p[static_cast<std::size_t>(j0)], j1 = -1;
      double delta = INF;
      for (int j = 1; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        double cur = cost[static_cast<std::size_t>(i0 - 1)][static_cast<std::size_t>(j - 1)] -
                     u[static_cast<std::size_t>(i0)] - v[static_cast<std::size_t>(j)];
        if (cur < minv[static_cast<std::size_t>(j)]) {
          minv[static_cast<std::size_t>(j)] = cur;
          way[static_cast<std::size_t>(j)] = j0;
        }
        if (minv[static_cast<std::size_t>(j)] < delta) {
          delta = minv[static_cast<std::size_t>(j)];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) {
          u[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += delta;
          v[static_cast<std::size_t>(j)] -= delta;
        } else {
          minv[static_cast<std::size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (p[static_cast<std::size_t>(j0)] != 0);
    do {
      int j1 = way[static_cast<std::size_t>(j0)];
      p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> result(static_cast<std::size_t>(n), -1);
  for (int j = 1; j <= n; ++j)
    if (p[static_cast<std::size_t>(j)] > 0) result[static_cast<std::size_t>(p[static_cast<std::size_t>(j)] - 1)] = j - 1;
  return result;
}

namespace {

double min_separation(const CVec& z) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) m = std::min(m, std::abs(z[i] - z[j]));
  return m;
}

}  // namespace

RootSet track_path(const ParametricFamily& fam, const ParamPath& path, const RootSet& start,
                   const TrackOptions& opt, const std::vector<MPoly>* pmap) {
  const int n = fam.degree();
  if (start.size() != n) fail_invalid("track_path: start configuration size mismatch");
  if (pmap) {
    if (static_cast<int>(pmap->size()) != fam.param_count())
      fail_invalid("track_path: parameter map output dimension mismatch");
    for (const auto& p : *pmap)
      if (p.var_count() != path.dim())
        fail_invalid("track_path: parameter map input dimension mismatch");
  } else if (path.dim() != fam.param_count()) {
    fail_invalid("track_path: path dimension does not match the family parameter count");
  }

  auto family_point = [&](std::size_t seg, double s) {
    CVec u = segment_point(path.segment(seg), s);
    return pmap ? eval_poly_map(*pmap, u) : u;
  };

  NewtonOptions newton{opt.corrector_tol, opt.deriv_floor, opt.newton_iterations};

  // Start configuration must already solve the specialized polynomial.
  {
    CPoly p0 = fam.specialize(family_point(0, 0.0));
    double scale = p0.coeff_scale();
    for (Complex r : start.roots)
      if (std::abs(p0.eval(r)) > 1e-6 * scale)
        fail_invalid("track_path: start configuration does not solve the polynomial at the path start");
  }

  CVec current = start.roots;
  for (std::size_t seg = 0; seg < path.segment_count(); ++seg) {
    double s = 0.0;
    double h = opt.max_step;
    while (s < 1.0 - 1e-15) {
      double step = std::min(h, 1.0 - s);
      bool ok = true;
      CVec cand(static_cast<std::size_t>(n));
      CPoly p = fam.specialize(family_point(seg, s + step));
      for (int i = 0; i < n && ok; ++i) {
        try {
          cand[static_cast<std::size_t>(i)] = newton_refine(p, current[static_cast<std::size_t>(i)], newton);
        } catch (const Error&) {
          ok = false;
        }
      }
      if (ok) {
        const double limit = min_separation(current) / 3.0;
        double worst = 0.0;
        for (int i = 0; i < n; ++i)
          worst = std::max(worst, std::abs(cand[static_cast<std::size_t>(i)] - current[static_cast<std::size_t>(i)]));
        if (!(worst < limit)) {
          // Labels may have crossed during correction; try the optimal
          // reassignment before shrinking the step.
          std::vector<std::vector<double>> cost(static_cast<std::size_t>(n),
                                                std::vector<double>(static_cast<std::size_t>(n)));
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
              cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                  std::abs(current[static_cast<std::size_t>(i)] - cand[static_cast<std::size_t>(j)]);
          std::vector<int> match = min_cost_assignment(cost);
          CVec reordered(static_cast<std::size_t>(n));
          double worst2 = 0.0;
          for (int i = 0; i < n; ++i) {
            reordered[static_cast<std::size_t>(i)] = cand[static_cast<std::size_t>(match[static_cast<std::size_t>(i)])];
            worst2 = std::max(worst2, cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(match[static_cast<std::size_t>(i)])]);
          }
          // Distinct labels must stay distinct: duplicated targets show up as
          // a matched distance at separation scale and fail the bound.
          if (worst2 < limit)
            cand = std::move(reordered);
          else
            ok = false;
        }
      }
      if (ok && n >= 2 && std::abs(discriminant_from_roots(cand)) < opt.safety_disc) ok = false;
      if (ok) {
        current = std::move(cand);
        s += step;
        h = std::min(opt.max_step, step * opt.step_growth);
      } else {
        h = step / 2.0;
        if (h < opt.min_step)
          fail_numeric("tracking stalled in segment " + std::to_string(seg) + " near s=" +
                       std::to_string(s) + "; path may touch the discriminant locus");
      }
    }
  }

  RootSet out;
  out.roots = std::move(current);
  CPoly pend = fam.specialize(family_point(path.segment_count() - 1, 1.0));
  out.residuals.resize(out.roots.size());
  for (std::size_t i = 0; i < out.roots.size(); ++i)
    out.residuals[i] = std::abs(pend.eval(out.roots[i]));
  return out;
}

Permutation match_roots(const CVec& moved, const CVec& targets) {
  if (moved.size() != targets.size()) fail_invalid("match_roots: configuration size mismatch");
  const std::size_t n = moved.size();
  std::vector<std::vector<double>> cost(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cost[i][j] = std::abs(moved[i] - targets[j]);
  std::vector<int> images = min_cost_assignment(cost);
  const double limit = min_separation(targets) / 3.0;
  for (std::size_t i = 0; i < n; ++i)
    if (!(cost[i][static_cast<std::size_t>(images[i])] < limit))
      fail_numeric("tracked roots do not match the target configuration; tracking drifted");
  return Permutation(std::move(images));
}

Permutation loop_permutation(const ParametricFamily& fam, const ParamLoop& loop,
                             const RootSet& base, const TrackOptions& opt,
                             const std::vector<MPoly>* pmap) {
  RootSet end = track_path(fam, loop.path, base, opt, pmap);
  return match_roots(end.roots, base.roots);
}

}  // namespace critmono
