#pragma once

#include "perm.hpp"

namespace critmono {

// Finitely generated permutation group. Elements are materialized by product
// closure up to `cap`; beyond that only order-independent facts (orbits,
// transitivity) remain available.
struct PermGroup {
  int degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // BFS order when materialized
  bool materialized = false;
  std::uint64_t order = 0;  // 0 when unknown (cap exceeded)
  std::vector<std::vector<int>> orbits;
  bool transitive = false;

  bool contains(const Permutation& p) const;
};

PermGroup group_closure(int degree, const std::vector<Permutation>& generators,
                        std::size_t cap = 1000000);

}  // namespace critmono
