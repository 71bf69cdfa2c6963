#include "path.hpp"

#include <cmath>

namespace critmono {

namespace {

double max_dist(const CVec& a, const CVec& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

Complex complex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail_invalid("complex values must be [re, im] number pairs");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

CVec cvec_from_json(const nlohmann::json& j) {
  if (!j.is_array()) fail_invalid("points must be arrays of [re, im] pairs");
  CVec v;
  for (const auto& e : j) v.push_back(complex_from_json(e));
  return v;
}

nlohmann::json cvec_to_json(const CVec& v) {
  nlohmann::json j = nlohmann::json::array();
  for (Complex z : v) j.push_back({z.real(), z.imag()});
  return j;
}

int seg_dim(const PathSegment& s) {
  if (const auto* l = std::get_if<LineSegment>(&s)) return static_cast<int>(l->from.size());
  return static_cast<int>(std::get<CircleSegment>(s).center.size());
}

}  // namespace

CVec segment_point(const PathSegment& seg, double s) {
  if (const auto* line = std::get_if<LineSegment>(&seg)) {
    CVec u(line->from.size());
    for (std::size_t k = 0; k < u.size(); ++k)
      u[k] = line->from[k] + s * (line->to[k] - line->from[k]);
    return u;
  }
  const auto& c = std::get<CircleSegment>(seg);
  double theta = 2.0 * M_PI * c.turns * s;
  Complex rot = c.radius * Complex(std::cos(theta), std::sin(theta));
  CVec u(c.center.size());
  for (std::size_t k = 0; k < u.size(); ++k) u[k] = c.center[k] + rot * c.direction[k];
  return u;
}

CVec segment_start(const PathSegment& seg) { return segment_point(seg, 0.0); }
CVec segment_end(const PathSegment& seg) { return segment_point(seg, 1.0); }

PathSegment segment_reversed(const PathSegment& seg) {
  if (const auto* line = std::get_if<LineSegment>(&seg)) return LineSegment{line->to, line->from};
  CircleSegment c = std::get<CircleSegment>(seg);
  c.turns = -c.turns;  // same start point, opposite orientation
  return c;
}

ParamPath::ParamPath(std::vector<PathSegment> segments) : segs_(std::move(segments)) {
  if (segs_.empty()) fail_invalid("path needs at least one segment");
  dim_ = seg_dim(segs_.front());
  for (const auto& s : segs_) {
    if (seg_dim(s) != dim_) fail_invalid("path segments disagree on the parameter dimension");
    if (const auto* l = std::get_if<LineSegment>(&s)) {
      if (static_cast<int>(l->to.size()) != dim_)
        fail_invalid("line segment endpoints disagree on the parameter dimension");
    } else {
      const auto& c = std::get<CircleSegment>(s);
      if (static_cast<int>(c.direction.size()) != dim_)
        fail_invalid("circle segment center/direction dimension mismatch");
      if (!(c.radius > 0.0)) fail_invalid("circle segment radius must be positive");
    }
  }
  for (std::size_t i = 0; i + 1 < segs_.size(); ++i) {
    if (max_dist(segment_end(segs_[i]), segment_start(segs_[i + 1])) > 1e-12)
      fail_invalid("consecutive path segments do not share endpoints (segment " +
                   std::to_string(i) + ")");
  }
}

CVec ParamPath::start() const { return segment_start(segs_.front()); }
CVec ParamPath::end() const { return segment_end(segs_.back()); }

bool ParamPath::is_closed(double tol) const { return max_dist(start(), end()) <= tol; }

ParamPath ParamPath::reversed() const {
  std::vector<PathSegment> rev;
  for (std::size_t i = segs_.size(); i-- > 0;) rev.push_back(segment_reversed(segs_[i]));
  return ParamPath(std::move(rev));
}

ParamPath ParamPath::then(const ParamPath& continuation) const {
  std::vector<PathSegment> all = segs_;
  all.insert(all.end(), continuation.segs_.begin(), continuation.segs_.end());
  return ParamPath(std::move(all));
}

ParamPath ParamPath::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("segments") || !j["segments"].is_array())
    fail_invalid("path JSON must be an object with a \"segments\" array");
  std::vector<PathSegment> segs;
  for (const auto& s : j["segments"]) {
    if (!s.is_object() || s.size() != 1)
      fail_invalid("each segment must be a one-key object: {\"line\": ...} or {\"circle\": ...}");
    if (s.contains("line")) {
      const auto& l = s["line"];
      if (!l.contains("from") || !l.contains("to"))
        fail_invalid("line segments need \"from\" and \"to\"");
      segs.push_back(LineSegment{cvec_from_json(l["from"]), cvec_from_json(l["to"])});
    } else if (s.contains("circle")) {
      const auto& c = s["circle"];
      if (!c.contains("center") || !c.contains("direction") || !c.contains("radius") ||
          !c.contains("turns"))
        fail_invalid("circle segments need center, direction, radius, turns");
      if (!c["radius"].is_number() || !c["turns"].is_number_integer())
        fail_invalid("circle radius must be a number and turns an integer");
      segs.push_back(CircleSegment{cvec_from_json(c["center"]), cvec_from_json(c["direction"]),
                                   c["radius"].get<double>(), c["turns"].get<int>()});
    } else {
      fail_invalid("unknown segment kind (want \"line\" or \"circle\")");
    }
  }
  return ParamPath(std::move(segs));
}

nlohmann::json ParamPath::to_json() const {
  nlohmann::json segs = nlohmann::json::array();
  for (const auto& s : segs_) {
    nlohmann::json e;
    if (const auto* line = std::get_if<LineSegment>(&s)) {
      e["line"] = {{"from", cvec_to_json(line->from)}, {"to", cvec_to_json(line->to)}};
    } else {
      const auto& c = std::get<CircleSegment>(s);
      e["circle"] = {{"center", cvec_to_json(c.center)},
                     {"direction", cvec_to_json(c.direction)},
                     {"radius", c.radius},
                     {"turns", c.turns}};
    }
    segs.push_back(e);
  }
  return nlohmann::json{{"segments", segs}};
}

ParamLoop::ParamLoop(ParamPath p) : path(std::move(p)) {
  if (!path.is_closed(1e-12)) fail_invalid("loop endpoints do not match within 1e-12");
}

std::vector<ParamLoop> loops_from_json(const nlohmann::json& j) {
  const nlohmann::json* arr = &j;
  if (j.is_object() && j.contains("loops")) arr = &j["loops"];
  if (!arr->is_array()) fail_invalid("loops JSON must be an array of paths");
  std::vector<ParamLoop> loops;
  for (const auto& p : *arr) loops.emplace_back(ParamPath::from_json(p));
  if (loops.empty()) fail_invalid("loops JSON contains no loops");
  return loops;
}

nlohmann::json loops_to_json(const std::vector<ParamLoop>& loops) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& l : loops) j.push_back(l.path.to_json());
  return j;
}

}  // namespace critmono
