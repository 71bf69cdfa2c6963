#include "common.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace critmono {

std::uint64_t fnv1a64(std::string_view data, std::uint64_t basis) {
  std::uint64_t h = basis;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Rng::Rng(std::uint64_t seed, std::string_view stream)
    : gen_(stream.empty() ? seed : (seed ^ fnv1a64(stream))) {}

double Rng::uniform() {
  // 53 high-quality bits; exact dyadic rational, reproducible everywhere.
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

Complex Rng::unit_phase() {
  double a = 2.0 * M_PI * uniform();
  return Complex(std::cos(a), std::sin(a));
}

Complex Rng::gaussian() {
  // Box-Muller in polar form; |z|^2 ~ Exp(1).
  double u1 = uniform();
  double r = std::sqrt(-std::log1p(-(u1 < 1.0 ? u1 : 0.0)));
  return r * unit_phase();
}

CVec Rng::unit_direction(std::size_t m) {
  CVec d(m);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      d[k] = gaussian();
      norm2 += abs2(d[k]);
    }
  } while (norm2 < 1e-12);
  double inv = 1.0 / std::sqrt(norm2);
  for (auto& z : d) z *= inv;
  return d;
}

std::vector<int> single_linkage(const CVec& pts, double tol) {
  const std::size_t n = pts.size();
  std::vector<int> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(pts[i] - pts[j]) <= tol) {
        int a = find(static_cast<int>(i)), b = find(static_cast<int>(j));
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
  std::vector<int> ids(n, -1);
  int next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int r = find(static_cast<int>(i));
    if (ids[static_cast<std::size_t>(r)] < 0) ids[static_cast<std::size_t>(r)] = next++;
    ids[i] = ids[static_cast<std::size_t>(r)];
  }
  return ids;
}

double min_inter_cluster_gap(const CVec& pts, const std::vector<int>& ids) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (ids[i] != ids[j]) gap = std::min(gap, std::abs(pts[i] - pts[j]));
  return gap;
}

}  // namespace critmono
