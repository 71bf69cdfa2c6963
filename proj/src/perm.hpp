#pragma once

#include <compare>
#include <string>
#include <vector>

#include "common.hpp"

namespace critmono {

// Element of S_n acting on {0, ..., n-1}; images()[i] is the image of i.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  // Cycle notation over {0..n-1}; symbols absent from `cycles` stay fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation compose(const Permutation& rhs) const;  // (this o rhs): rhs acts first
  Permutation inverse() const;
  Permutation power(int k) const;
  bool is_identity() const;

  // Cycle decomposition including fixed points; each cycle starts at its
  // smallest symbol and cycles are ordered by that leading symbol.
  std::vector<std::vector<int>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

// Partition of n listing cycle lengths in descending order; fixed points
// appear as 1-parts, so the parts always sum to the degree.
class CycleType {
 public:
  CycleType() = default;  // degree 0, no parts
  explicit CycleType(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int part_count() const { return static_cast<int>(parts_.size()); }
  bool is_identity() const;       // all parts equal 1
  bool is_transposition() const;  // (2, 1, ..., 1)
  bool is_even_class() const;     // permutation parity: n - #parts even

  std::string to_string() const;               // "3,1,1"
  static CycleType parse(std::string_view s);  // inverse of to_string

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType& a, const CycleType& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

CycleType cycle_type(const Permutation& p);
int cycle_count(const Permutation& p);
bool is_even(const Permutation& p);

// "t is higher than s": every cycle of s, read as a set of symbols, lies
// inside a single cycle of t. Partial order up to equality of the induced
// symbol partitions.
bool is_higher(const Permutation& t, const Permutation& s);

// Class-level version: some representative of ct is higher than one of cs,
// equivalently cs can be regrouped so the group sums give exactly ct.
bool class_is_higher(const CycleType& ct, const CycleType& cs);

// All partitions of n, descending lexicographic order starting at (n).
std::vector<CycleType> all_class_reps(int n);
// The subset of even classes (classes meeting the alternating group).
std::vector<CycleType> even_class_reps(int n);

enum class GroupKind { alternating, symmetric };
std::string to_string(GroupKind k);
GroupKind parse_group_kind(std::string_view s);

// Strictly ascending chain of classes witnessing a parameter-count bound;
// its length is the number of chain entries.
struct ChainCertificate {
  GroupKind kind = GroupKind::alternating;
  std::vector<CycleType> chain;
  int length() const { return static_cast<int>(chain.size()); }
};

// Validates the chain invariants (nonempty, strictly ascending, admissible
// first entry, parity for the alternating kind) and fails loudly otherwise.
ChainCertificate make_chain_certificate(GroupKind kind, std::vector<CycleType> chain);

// Longest strictly ascending chain in the class order; for the alternating
// kind only even classes participate and the chain may not start at the
// identity (transpositions are odd, hence excluded automatically); for the
// symmetric kind any non-identity class may start the chain. Deterministic
// witness: classes are scanned in descending lexicographic order and the
// first chain achieving the maximum is kept.
ChainCertificate max_chain(int n, GroupKind kind);

// floor((n-1)/2), cross-checked against max_chain(n, alternating).
int lower_bound_s(int n);

}  // namespace critmono
