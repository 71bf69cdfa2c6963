#pragma once

#include "common.hpp"
#include "cpoly.hpp"
#include "family.hpp"
#include "group.hpp"
#include "path.hpp"
#include "track.hpp"

namespace critmono {

struct MonodromyOptions {
  RunConfig config;
  TrackOptions track;
  int line_attempts = 6;
  std::size_t closure_cap = 1000000;

  MonodromyOptions() { track.safety_disc = config.tol.safety; }
  explicit MonodromyOptions(const RunConfig& cfg) : config(cfg) {
    track.safety_disc = cfg.tol.safety;
  }
};

struct MonodromyResult {
  PermGroup group;
  CVec basepoint;
  RootSet base_roots;
  std::vector<ParamLoop> loops;
  std::vector<Permutation> loop_perms;
  std::uint64_t seed = 0;
  bool auto_mode = false;
};

// Critical lambda values of a family restricted to base + lambda*dir, found by
// interpolating the discriminant along the line and clustering its zeros.
// Each cluster is one geometric branch point; radii give the cluster extents.
struct LineCriticalPoints {
  CVec centers;
  std::vector<double> radii;
};

LineCriticalPoints critical_lambdas_on_line(const ParametricFamily& fam, const CVec& base,
                                            const CVec& dir, double cluster_tol);

// Loop from `base` out to the circle of `radius` around base + lambda*dir,
// once around counterclockwise, and back.
ParamLoop conjugated_line_loop(const CVec& base, const CVec& dir, Complex lambda, double radius);

MonodromyResult monodromy_with_loops(const ParametricFamily& fam, const CVec& basepoint,
                                     const std::vector<ParamLoop>& loops,
                                     const MonodromyOptions& opt);

MonodromyResult monodromy_auto(const ParametricFamily& fam, const CVec& basepoint,
                               const MonodromyOptions& opt);

}  // namespace critmono
