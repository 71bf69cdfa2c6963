#pragma once

#include <optional>

#include "common.hpp"
#include "cpoly.hpp"
#include "family.hpp"
#include "path.hpp"
#include "perm.hpp"
#include "track.hpp"

namespace critmono {

// Roots of two equations of the same degree with a label alignment:
// y[alignment(i)] is the partner of x[i].
struct MatchedRoots {
  RootSet x;
  RootSet y;
  Permutation alignment;
};

// s_0, ..., s_upto with s_m the sum of m-th powers of the roots.
CVec power_sums(const RootSet& x, int upto);

// u_k = sum_i x_i^k * y_{alignment(i)} for k = 0, ..., n-1.
CVec u_invariants(const MatchedRoots& mr);

// Solves the n x n power-sum system u_k = sum_j alpha_j s_{k+j}. Requires
// distinct x roots (the system matrix is the Gram matrix of the Vandermonde).
CVec solve_alphas(const RootSet& x, const CVec& u);

struct TransformOptions {
  RunConfig config;
  TrackOptions track;
  double residual_tol = 1e-8;
  int t_samples = 3;  // scalarization samples for the invariant drift readout

  TransformOptions() { track.safety_disc = config.tol.safety; }
  explicit TransformOptions(const RunConfig& cfg) : config(cfg) {
    track.safety_disc = cfg.tol.safety;
  }
};

struct TransformReport {
  bool transformable = false;
  CVec alphas;
  double residual = 0.0;  // max_i |y_{align(i)} - sum_j alpha_j x_i^j|
  bool invariant_ok = false;
  std::optional<Permutation> alignment;
  double u_drift = 0.0;  // largest invariant change observed over the loops
  std::uint64_t seed = 0;
};

// Numerical verdict on whether the second family is a polynomial transform of
// the first along pmap: picks the root alignment (exhaustive over
// permutations) that interpolates within tolerance and commutes with every
// supplied loop's pair of permutations, then reports the transform
// coefficients and the loop-equivariance verdict.
TransformReport transformability_test(const ParametricFamily& famF, const ParametricFamily& famG,
                                      const std::vector<MPoly>& pmap, const CVec& basepoint,
                                      const std::vector<ParamLoop>& loops,
                                      const TransformOptions& opt = {});

}  // namespace critmono
