#pragma once

#include <optional>

#include "common.hpp"
#include "cpoly.hpp"
#include "family.hpp"
#include "group.hpp"
#include "monodromy.hpp"
#include "perm.hpp"
#include "track.hpp"

namespace critmono {

// Set partition of root indices by numerical coincidence. Blocks are ordered
// by descending size, ties by the lexicographic order of their limit values;
// indices inside a block ascend.
struct CoincidencePattern {
  int n = 0;
  std::vector<std::vector<int>> blocks;
  CVec centers;  // one limit value per block
};

// Single-linkage clustering of the roots at threshold tol (scaled by the root
// magnitude when roots are large). Errors when some inter-cluster gap falls
// under 10x the threshold.
CoincidencePattern coincidence_pattern(const RootSet& rs, double tol);

// Block sizes as a descending cycle type.
CycleType pattern_class(const CoincidencePattern& p);

struct PhiOptions {
  RunConfig config;
  TrackOptions track;
  int samples = 8;
  double vanish_tol = 1e-8;
  std::size_t closure_cap = 1000000;
  // Generic basepoint for the monodromy group and the root labeling; chosen
  // automatically (seeded) when absent.
  std::optional<CVec> basepoint;
  // Explicit symbol blocks for the constraint layout. Unlisted symbols become
  // singletons; block sizes must realize the tested class. Defaults to parts
  // in descending size order over symbols in index order.
  std::optional<std::vector<std::vector<int>>> layout;

  PhiOptions() { track.safety_disc = config.tol.safety; }
  explicit PhiOptions(const RunConfig& cfg) : config(cfg) { track.safety_disc = cfg.tol.safety; }
};

struct PhiReport {
  bool vanishes = false;
  double max_abs = 0.0;  // largest |Phi| over the t samples
  double min_abs = 0.0;
  CycleType cls;
  std::vector<std::vector<int>> blocks;  // full layout, singletons included
  CVec point;
  CVec basepoint;
  CVec limit_values;  // per base label, the coincidence limit it lands on
  std::size_t group_order = 0;
  bool symmetric_fallback = false;  // closure did not materialize; used S_n
  int samples = 0;
  std::uint64_t seed = 0;
};

// Vanishing test for the constrained linear-form product over the monodromy
// group: true when every seeded t sample satisfying the per-block sum-zero
// conditions gives |Phi| below vanish_tol.
PhiReport phi_s_test(const ParametricFamily& fam, const CVec& point, const CycleType& cls,
                     const PhiOptions& opt = {});

struct ProbeLog {
  CVec direction;
  double rho = 0.0;
  Permutation perm;  // on anchor labels
};

struct InertiaOptions {
  RunConfig config;
  TrackOptions track;
  int probes = 8;
  int direction_attempts = 4;
  double rho_factor = 1e-2;  // initial rho as a fraction of the local scale
  int max_halvings = 40;
  std::size_t closure_cap = 1000000;

  InertiaOptions() { track.safety_disc = config.tol.safety; }
  explicit InertiaOptions(const RunConfig& cfg) : config(cfg) {
    track.safety_disc = cfg.tol.safety;
  }
};

struct InertiaReport {
  CVec point;
  CoincidencePattern pattern;  // clusters of the roots at the point itself
  CycleType cls;
  PermGroup group;  // closure of the probe permutations, on anchor labels
  std::vector<ProbeLog> probes;
  CVec anchor;  // shared basepoint the probe loops are conjugated from
  RootSet anchor_roots;
  std::uint64_t seed = 0;
};

// Group generated by small circles around the point in seeded random
// directions, each conjugated to a shared nearby anchor by an approach
// segment. The probe radius starts at rho_factor times the distance to the
// nearest other critical value on the probe line and halves until the circle
// tracks cleanly and the probe roots associate unambiguously with the
// coincidence clusters at the point.
InertiaReport inertia_group(const ParametricFamily& fam, const CVec& point,
                            const InertiaOptions& opt = {});

struct ChainReport {
  ChainCertificate certificate;
  std::vector<CoincidencePattern> patterns;
  std::vector<CVec> points;
  int lower_bound = 0;  // chain length = certified parameter lower bound
};

// Certifies that the coincidence patterns at the given points strictly coarsen
// from one point to the next and packages the class chain.
ChainReport chain_certificate(const ParametricFamily& fam, const std::vector<CVec>& points,
                              const RunConfig& config = {});

}  // namespace critmono
