#include "group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace critmono {

namespace {

struct ImagesHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

std::vector<std::vector<int>> orbits_of(int degree, const std::vector<Permutation>& gens) {
  std::vector<int> parent(static_cast<std::size_t>(degree));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  for (const auto& g : gens)
    for (int i = 0; i < degree; ++i) {
      int a = find(i), b = find(g(i));
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  std::vector<std::vector<int>> buckets(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) buckets[static_cast<std::size_t>(find(i))].push_back(i);
  std::vector<std::vector<int>> orbits;
  for (auto& b : buckets)
    if (!b.empty()) orbits.push_back(std::move(b));
  return orbits;
}

}  // namespace

bool PermGroup::contains(const Permutation& p) const {
  if (!materialized) fail_invalid("membership query on a non-materialized group");
  return std::find(elements.begin(), elements.end(), p) != elements.end();
}

PermGroup group_closure(int degree, const std::vector<Permutation>& generators, std::size_t cap) {
  if (degree < 1) fail_invalid("group degree must be >= 1");
  for (const auto& g : generators)
    if (g.degree() != degree) fail_invalid("generator degree mismatch");

  PermGroup grp;
  grp.degree = degree;
  grp.generators = generators;
  grp.orbits = orbits_of(degree, generators);
  grp.transitive = grp.orbits.size() == 1;

  std::unordered_set<std::vector<int>, ImagesHash> seen;
  std::deque<Permutation> queue;
  std::vector<Permutation> elements;
  Permutation e = Permutation::identity(degree);
  seen.insert(e.images());
  elements.push_back(e);
  queue.push_back(e);
  bool capped = false;
  while (!queue.empty()) {
    Permutation cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation w = g.compose(cur);
      if (seen.insert(w.images()).second) {
        if (elements.size() >= cap) {
          capped = true;
          queue.clear();
          break;
        }
        elements.push_back(w);
        queue.push_back(std::move(w));
      }
    }
    if (capped) break;
  }
  if (capped) {
    grp.materialized = false;
    grp.order = 0;
  } else {
    grp.materialized = true;
    grp.order = elements.size();
    grp.elements = std::move(elements);
  }
  return grp;
}

}  // namespace critmono
