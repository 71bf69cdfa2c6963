#include "atlas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace critmono {

namespace {

double root_scale(const CVec& roots) {
  double m = 1.0;
  for (Complex r : roots) m = std::max(m, std::abs(r));
  return m;
}

// Block index per root, each root required to sit well inside the catchment
// of one limit value, with cluster head-counts matching the pattern.
std::vector<int> associate_to_centers(const CVec& roots, const CoincidencePattern& pat) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pat.centers.size(); ++i)
    for (std::size_t j = i + 1; j < pat.centers.size(); ++j)
      gap = std::min(gap, std::abs(pat.centers[i] - pat.centers[j]));
  std::vector<int> assoc(roots.size(), -1);
  std::vector<std::size_t> counts(pat.blocks.size(), 0);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    int best = 0;
    double bd = std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < pat.centers.size(); ++b) {
      double d = std::abs(roots[i] - pat.centers[b]);
      if (d < bd) {
        bd = d;
        best = static_cast<int>(b);
      }
    }
    if (!(bd < gap / 3.0))
      fail_numeric("root does not associate cleanly with a coincidence cluster");
    assoc[i] = best;
    counts[static_cast<std::size_t>(best)] += 1;
  }
  for (std::size_t b = 0; b < pat.blocks.size(); ++b)
    if (counts[b] != pat.blocks[b].size())
      fail_numeric("root counts per coincidence cluster disagree with the pattern");
  return assoc;
}

// Distance to the nearest critical parameter value on the line through
// `point` in direction `dir`, the point's own critical cluster excluded;
// 1.0 when the line meets no other critical value.
double local_scale_on_line(const ParametricFamily& fam, const CVec& point, const CVec& dir,
                           double cluster_tol) {
  LineCriticalPoints lc = critical_lambdas_on_line(fam, point, dir, cluster_tol);
  double maxc = 0.0;
  for (Complex c : lc.centers) maxc = std::max(maxc, std::abs(c));
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < lc.centers.size(); ++i) {
    double d = std::abs(lc.centers[i]);
    if (d <= std::max({4.0 * lc.radii[i], 1e-6 * maxc, 1e-9})) continue;
    best = std::min(best, d);
  }
  return std::isfinite(best) ? best : 1.0;
}

}  // namespace

CoincidencePattern coincidence_pattern(const RootSet& rs, double tol) {
  if (!(tol > 0.0)) fail_invalid("cluster tolerance must be positive");
  if (rs.roots.empty()) fail_invalid("cannot cluster an empty root configuration");
  const double scaled = tol * root_scale(rs.roots);
  std::vector<int> ids = single_linkage(rs.roots, scaled);
  double gap = min_inter_cluster_gap(rs.roots, ids);
  if (gap < 10.0 * scaled)
    fail_numeric("root coincidence clusters not isolated (closest gap " + std::to_string(gap) +
                 " inside 10x the cluster tolerance); adjust the tolerance");
  int k = 1 + *std::max_element(ids.begin(), ids.end());
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(k));
  CVec centers(static_cast<std::size_t>(k), Complex(0.0));
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    blocks[static_cast<std::size_t>(ids[i])].push_back(static_cast<int>(i));
    centers[static_cast<std::size_t>(ids[i])] += rs.roots[i];
  }
  for (int c = 0; c < k; ++c)
    centers[static_cast<std::size_t>(c)] /= double(blocks[static_cast<std::size_t>(c)].size());
  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    std::size_t sa = blocks[static_cast<std::size_t>(a)].size();
    std::size_t sb = blocks[static_cast<std::size_t>(b)].size();
    if (sa != sb) return sa > sb;
    return lex_less(centers[static_cast<std::size_t>(a)], centers[static_cast<std::size_t>(b)]);
  });
  CoincidencePattern pat;
  pat.n = static_cast<int>(rs.roots.size());
  for (int c : order) {
    pat.blocks.push_back(blocks[static_cast<std::size_t>(c)]);
    pat.centers.push_back(centers[static_cast<std::size_t>(c)]);
  }
  return pat;
}

CycleType pattern_class(const CoincidencePattern& p) {
  std::vector<int> parts;
  for (const auto& b : p.blocks) parts.push_back(static_cast<int>(b.size()));
  return CycleType(std::move(parts));
}

PhiReport phi_s_test(const ParametricFamily& fam, const CVec& point, const CycleType& cls,
                     const PhiOptions& opt) {
  const int n = fam.degree();
  if (static_cast<int>(point.size()) != fam.param_count())
    fail_invalid("point dimension does not match the family parameter count");
  if (cls.n() != n) fail_invalid("class degree does not match the family degree");
  if (opt.samples < 1) fail_invalid("sample count must be at least 1");

  std::vector<std::vector<int>> blocks;
  if (opt.layout) {
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (const auto& b : *opt.layout) {
      if (b.empty()) fail_invalid("layout blocks must be nonempty");
      for (int i : b) {
        if (i < 0 || i >= n) fail_invalid("layout symbol out of range");
        if (seen[static_cast<std::size_t>(i)]++) fail_invalid("layout symbols must be distinct");
      }
      blocks.push_back(b);
    }
    for (int i = 0; i < n; ++i)
      if (!seen[static_cast<std::size_t>(i)]) blocks.push_back({i});
    std::vector<int> sizes;
    for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    if (sizes != cls.parts()) fail_invalid("layout block sizes do not realize the class");
  } else {
    int next = 0;
    for (int part : cls.parts()) {
      std::vector<int> b(static_cast<std::size_t>(part));
      std::iota(b.begin(), b.end(), next);
      next += part;
      blocks.push_back(std::move(b));
    }
  }

  MonodromyOptions mopt(opt.config);
  mopt.track = opt.track;
  mopt.closure_cap = opt.closure_cap;
  CVec bp;
  if (opt.basepoint) {
    if (opt.basepoint->size() != point.size())
      fail_invalid("basepoint dimension does not match the family parameter count");
    bp = *opt.basepoint;
  } else {
    bool found = false;
    for (int a = 0; a < 10 && !found; ++a) {
      Rng rng(opt.config.seed, "phi.basepoint." + std::to_string(a));
      CVec dir = rng.unit_direction(point.size());
      CVec cand(point.size());
      for (std::size_t k = 0; k < cand.size(); ++k) cand[k] = point[k] + dir[k];
      if (std::abs(discriminant_value(fam.specialize(cand))) >= opt.config.tol.safety) {
        bp = std::move(cand);
        found = true;
      }
    }
    if (!found)
      fail_numeric("no generic basepoint found near the point; try a different seed");
  }

  MonodromyResult mono = monodromy_auto(fam, bp, mopt);

  RootFindOptions ro;
  ro.residual_tol = opt.config.tol.residual;
  RootSet at_point = all_roots(fam.specialize(point), ro);
  CoincidencePattern pat = coincidence_pattern(at_point, opt.config.tol.cluster);

  // Land the base labels on their coincidence limits by tracking most of the
  // way to the point; the endpoint approaches the discriminant as a limit, so
  // the absolute discriminant floor is waived for this segment.
  TrackOptions approach = opt.track;
  approach.safety_disc = 0.0;
  CVec limits(static_cast<std::size_t>(n));
  bool labeled = false;
  std::string note;
  for (double delta : {1e-6, 1e-8, 1e-10}) {
    CVec q(point.size());
    for (std::size_t k = 0; k < q.size(); ++k) q[k] = point[k] + delta * (bp[k] - point[k]);
    try {
      std::vector<PathSegment> seg;
      seg.push_back(LineSegment{bp, q});
      RootSet moved = track_path(fam, ParamPath(std::move(seg)), mono.base_roots, approach);
      std::vector<int> assoc = associate_to_centers(moved.roots, pat);
      for (int i = 0; i < n; ++i)
        limits[static_cast<std::size_t>(i)] = pat.centers[static_cast<std::size_t>(
            assoc[static_cast<std::size_t>(i)])];
      labeled = true;
      break;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::invalid_argument) throw;
      note = e.what();
    }
  }
  if (!labeled)
    fail_numeric("could not carry the base labels onto the point's coincidence limits (" + note +
                 ")");

  PhiReport rep;
  rep.cls = cls;
  rep.blocks = blocks;
  rep.point = point;
  rep.basepoint = bp;
  rep.limit_values = limits;
  rep.samples = opt.samples;
  rep.seed = opt.config.seed;
  rep.symmetric_fallback = !mono.group.materialized;
  rep.group_order = mono.group.materialized ? mono.group.order : 0;

  auto phi_abs = [&](const CVec& t) {
    double logmag = 0.0;
    bool zero = false;
    auto feed = [&](const std::vector<int>& images) {
      if (zero) return;
      Complex f(0.0);
      for (int i = 0; i < n; ++i)
        f += t[static_cast<std::size_t>(i)] *
             limits[static_cast<std::size_t>(images[static_cast<std::size_t>(i)])];
      double a = std::abs(f);
      if (a == 0.0) {
        zero = true;
        return;
      }
      logmag += std::log(a);
    };
    if (rep.symmetric_fallback) {
      std::vector<int> im(static_cast<std::size_t>(n));
      std::iota(im.begin(), im.end(), 0);
      do feed(im);
      while (std::next_permutation(im.begin(), im.end()) && !zero);
    } else {
      for (const Permutation& g : mono.group.elements) feed(g.images());
    }
    if (zero) return 0.0;
    return std::exp(std::min(logmag, 700.0));
  };

  double mx = 0.0, mn = std::numeric_limits<double>::infinity();
  for (int s = 0; s < opt.samples; ++s) {
    Rng rng(opt.config.seed, "phi.t." + std::to_string(s));
    CVec t(static_cast<std::size_t>(n), Complex(0.0));
    double norm2 = 0.0;
    for (const auto& b : blocks) {
      if (b.size() < 2) continue;  // a singleton row forces its t to zero
      CVec raw;
      Complex mean(0.0);
      for (std::size_t j = 0; j < b.size(); ++j) {
        raw.push_back(rng.gaussian());
        mean += raw.back();
      }
      mean /= double(b.size());
      for (std::size_t j = 0; j < b.size(); ++j) {
        Complex v = raw[j] - mean;
        t[static_cast<std::size_t>(b[j])] = v;
        norm2 += abs2(v);
      }
    }
    if (norm2 > 0.0) {
      double inv = 1.0 / std::sqrt(norm2);
      for (auto& v : t) v *= inv;
    }
    double a = phi_abs(t);
    mx = std::max(mx, a);
    mn = std::min(mn, a);
  }
  rep.max_abs = mx;
  rep.min_abs = mn;
  rep.vanishes = mx < opt.vanish_tol;
  return rep;
}

InertiaReport inertia_group(const ParametricFamily& fam, const CVec& point,
                            const InertiaOptions& opt) {
  const int n = fam.degree();
  if (static_cast<int>(point.size()) != fam.param_count())
    fail_invalid("point dimension does not match the family parameter count");
  if (n < 2) fail_invalid("inertia needs degree at least 2");
  if (opt.probes < 1) fail_invalid("probe count must be at least 1");

  RootFindOptions ro;
  ro.residual_tol = opt.config.tol.residual;
  RootSet at_point = all_roots(fam.specialize(point), ro);
  CoincidencePattern pat = coincidence_pattern(at_point, opt.config.tol.cluster);
  CycleType cls = pattern_class(pat);
  if (cls.is_identity())
    fail_invalid("point is not on the discriminant locus (all roots separate)");

  // Probe circles and approach segments run arbitrarily close to the
  // discriminant by construction; the matching-distance rule alone guards
  // those limit paths.
  TrackOptions probe_track = opt.track;
  probe_track.safety_disc = 0.0;

  CVec anchor, d0;
  RootSet anchor_roots;
  bool placed = false;
  std::string reason = "no anchor direction tried";
  for (int a = 0; a < opt.direction_attempts && !placed; ++a) {
    Rng rng(opt.config.seed, "inertia.anchor." + std::to_string(a));
    CVec dir = rng.unit_direction(point.size());
    try {
      double ls = local_scale_on_line(fam, point, dir, opt.config.tol.cluster);
      CVec cand(point.size());
      for (std::size_t k = 0; k < cand.size(); ++k) cand[k] = point[k] + 0.5 * ls * dir[k];
      if (std::abs(discriminant_value(fam.specialize(cand))) < opt.config.tol.safety)
        fail_numeric("anchor candidate lies too close to the discriminant");
      anchor_roots = all_roots(fam.specialize(cand), ro);
      anchor = std::move(cand);
      d0 = dir;
      placed = true;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::invalid_argument) throw;
      reason = e.what();
    }
  }
  if (!placed)
    fail_numeric("could not place a generic anchor near the point (" + reason +
                 "); try a different seed");

  InertiaReport rep;
  rep.point = point;
  rep.pattern = pat;
  rep.cls = cls;
  rep.anchor = anchor;
  rep.anchor_roots = anchor_roots;
  rep.seed = opt.config.seed;

  std::vector<Permutation> gens;
  for (int k = 0; k < opt.probes; ++k) {
    bool done = false;
    std::string why = "no probe direction tried";
    for (int att = 0; att < opt.direction_attempts && !done; ++att) {
      CVec dir;
      if (k == 0 && att == 0) {
        dir = d0;  // radial approach from the anchor for the first probe
      } else {
        Rng rng(opt.config.seed,
                "inertia.dir." + std::to_string(k) + "." + std::to_string(att));
        dir = rng.unit_direction(point.size());
      }
      try {
        double rho = opt.rho_factor * local_scale_on_line(fam, point, dir, opt.config.tol.cluster);
        for (int h = 0; h <= opt.max_halvings && !done; ++h, rho *= 0.5) {
          try {
            CVec q(point.size());
            for (std::size_t j = 0; j < q.size(); ++j) q[j] = point[j] + rho * dir[j];
            RootSet rq = all_roots(fam.specialize(q), ro);
            std::vector<int> assoc = associate_to_centers(rq.roots, pat);
            std::vector<PathSegment> circ;
            circ.push_back(CircleSegment{point, dir, rho, 1});
            Permutation sq =
                loop_permutation(fam, ParamLoop(ParamPath(std::move(circ))), rq, probe_track);
            for (int i = 0; i < n; ++i)
              if (assoc[static_cast<std::size_t>(sq(i))] != assoc[static_cast<std::size_t>(i)])
                fail_numeric("probe loop mixes roots across coincidence clusters");
            std::vector<PathSegment> seg;
            seg.push_back(LineSegment{anchor, q});
            RootSet moved = track_path(fam, ParamPath(std::move(seg)), anchor_roots, probe_track);
            Permutation tau = match_roots(moved.roots, rq.roots);
            Permutation on_anchor = tau.inverse().compose(sq).compose(tau);
            gens.push_back(on_anchor);
            rep.probes.push_back(ProbeLog{dir, rho, on_anchor});
            done = true;
          } catch (const Error& e) {
            if (e.code() == ErrorCode::invalid_argument) throw;
            why = e.what();
          }
        }
      } catch (const Error& e) {
        if (e.code() == ErrorCode::invalid_argument) throw;
        why = e.what();
      }
    }
    if (!done)
      fail_numeric("no admissible probe radius found for probe " + std::to_string(k) + " (" +
                   why + ")");
  }

  rep.group = group_closure(n, gens, opt.closure_cap);
  if (rep.group.materialized)
    for (const Permutation& g : rep.group.elements)
      if (!class_is_higher(cls, cycle_type(g)))
        fail_numeric("inertia closure exceeds the point's coincidence class; try a different seed");
  return rep;
}

ChainReport chain_certificate(const ParametricFamily& fam, const std::vector<CVec>& points,
                              const RunConfig& config) {
  if (points.empty()) fail_invalid("chain needs at least one point");
  RootFindOptions ro;
  ro.residual_tol = config.tol.residual;
  ChainReport rep;
  std::vector<CycleType> classes;
  for (const auto& pt : points) {
    if (static_cast<int>(pt.size()) != fam.param_count())
      fail_invalid("chain point dimension does not match the family parameter count");
    RootSet rs = all_roots(fam.specialize(pt), ro);
    CoincidencePattern pat = coincidence_pattern(rs, config.tol.cluster);
    classes.push_back(pattern_class(pat));
    rep.patterns.push_back(std::move(pat));
  }
  if (classes.front().is_identity())
    fail_invalid("point 1 is not critical (all roots separate)");
  for (std::size_t i = 0; i + 1 < classes.size(); ++i)
    if (!class_is_higher(classes[i + 1], classes[i]))
      fail_invalid("coincidence patterns at points " + std::to_string(i + 1) + " and " +
                   std::to_string(i + 2) + " do not strictly coarsen");
  bool all_even = true;
  for (const auto& c : classes) all_even = all_even && c.is_even_class();
  rep.certificate =
      make_chain_certificate(all_even ? GroupKind::alternating : GroupKind::symmetric, classes);
  rep.points = points;
  rep.lower_bound = rep.certificate.length();
  return rep;
}

}  // namespace critmono
