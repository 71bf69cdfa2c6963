#pragma once

#include <variant>

#include <json.hpp>

#include "common.hpp"

namespace critmono {

// Straight segment u(s) = from + s (to - from), s in [0,1].
struct LineSegment {
  CVec from, to;
};

// u(theta) = center + radius e^{i theta} direction, theta from 0 to 2 pi turns;
// negative turns traverse clockwise. Start and end coincide, so a single
// circle is already a loop.
struct CircleSegment {
  CVec center;
  CVec direction;
  double radius = 0.0;
  int turns = 1;
};

using PathSegment = std::variant<LineSegment, CircleSegment>;

CVec segment_point(const PathSegment& seg, double s);  // s in [0,1]
CVec segment_start(const PathSegment& seg);
CVec segment_end(const PathSegment& seg);
PathSegment segment_reversed(const PathSegment& seg);

// Piecewise path in C^m. Consecutive segments must share endpoints within
// 1e-12 (absolute, desk scale).
class ParamPath {
 public:
  explicit ParamPath(std::vector<PathSegment> segments);

  std::size_t segment_count() const { return segs_.size(); }
  const PathSegment& segment(std::size_t i) const { return segs_[i]; }
  int dim() const { return dim_; }
  CVec start() const;
  CVec end() const;
  bool is_closed(double tol = 1e-12) const;
  ParamPath reversed() const;
  ParamPath then(const ParamPath& continuation) const;

  static ParamPath from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

 private:
  std::vector<PathSegment> segs_;
  int dim_ = 0;
};

// A closed ParamPath; construction validates closure.
struct ParamLoop {
  ParamPath path;
  explicit ParamLoop(ParamPath p);
};

std::vector<ParamLoop> loops_from_json(const nlohmann::json& j);
nlohmann::json loops_to_json(const std::vector<ParamLoop>& loops);

}  // namespace critmono
