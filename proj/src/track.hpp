#pragma once

#include "cpoly.hpp"
#include "family.hpp"
#include "path.hpp"
#include "perm.hpp"

namespace critmono {

struct TrackOptions {
  double max_step = 0.05;    // in normalized segment parameter
  double min_step = 1e-10;   // below this the tracker gives up (numeric failure)
  double step_growth = 1.4;
  double safety_disc = 1e-12;   // lower bound on |prod (x_i-x_j)^2| along the path
  double corrector_tol = 1e-12; // newton target, scaled by coefficient size
  double deriv_floor = 1e-8;
  int newton_iterations = 16;
};

// Min-cost perfect assignment (Hungarian, O(n^3)); result[i] is the column
// matched to row i. Used when greedy label continuation is ambiguous.
std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost);

// Continue the labeled start configuration along the path by adaptive
// predictor-corrector steps. A step is accepted only when the corrected
// configuration matches the previous one bijectively with every matched
// distance under a third of the minimal pairwise root separation, and the
// root-product discriminant stays above the safety threshold. When `pmap` is
// given the path lives in its source parameter space and points are pushed
// through the map before specializing.
RootSet track_path(const ParametricFamily& fam, const ParamPath& path, const RootSet& start,
                   const TrackOptions& opt = {}, const std::vector<MPoly>* pmap = nullptr);

// Permutation sigma with moved[i] = targets[sigma(i)]; every match must land
// within a third of the minimal pairwise separation of the targets.
Permutation match_roots(const CVec& moved, const CVec& targets);

// Permutation sigma with end_root[i] = base_root[sigma(i)] after continuing
// `base` around the closed path. Composition convention: traversing loop A
// then loop B yields sigma_B o sigma_A.
Permutation loop_permutation(const ParametricFamily& fam, const ParamLoop& loop,
                             const RootSet& base, const TrackOptions& opt = {},
                             const std::vector<MPoly>* pmap = nullptr);

}  // namespace critmono
