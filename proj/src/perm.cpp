#include "perm.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace critmono {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      fail_invalid("permutation images must be a bijection on 0.." + std::to_string(n - 1));
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) fail_invalid("permutation degree must be nonnegative");
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(n);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int a = cyc[k];
      int b = cyc[(k + 1) % cyc.size()];
      if (a < 0 || a >= n || used[static_cast<std::size_t>(a)])
        fail_invalid("cycle notation reuses or exceeds symbols");
      used[static_cast<std::size_t>(a)] = 1;
      p.images_[static_cast<std::size_t>(a)] = b;
    }
  }
  return Permutation(std::move(p.images_));  // revalidate
}

Permutation Permutation::compose(const Permutation& rhs) const {
  if (degree() != rhs.degree()) fail_invalid("compose: degree mismatch");
  std::vector<int> im(images_.size());
  for (std::size_t i = 0; i < im.size(); ++i)
    im[i] = images_[static_cast<std::size_t>(rhs.images_[i])];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (std::size_t i = 0; i < im.size(); ++i)
    im[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(im));
}

Permutation Permutation::power(int k) const {
  Permutation base = k < 0 ? inverse() : *this;
  int e = k < 0 ? -k : k;
  Permutation acc = identity(degree());
  while (e > 0) {
    if (e & 1) acc = acc.compose(base);
    base = base.compose(base);
    e >>= 1;
  }
  return acc;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  const int n = degree();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<int> cyc;
    int j = i;
    do {
      seen[static_cast<std::size_t>(j)] = 1;
      cyc.push_back(j);
      j = images_[static_cast<std::size_t>(j)];
    } while (j != i);
    out.push_back(std::move(cyc));
  }
  return out;
}

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) fail_invalid("cycle type needs at least one part");
  for (int p : parts_)
    if (p < 1) fail_invalid("cycle type parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool CycleType::is_identity() const { return parts_.front() == 1; }

bool CycleType::is_transposition() const {
  return parts_.front() == 2 && (part_count() == 1 || parts_[1] == 1);
}

bool CycleType::is_even_class() const { return (n_ - part_count()) % 2 == 0; }

std::string CycleType::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

CycleType CycleType::parse(std::string_view s) {
  std::vector<int> parts;
  const char* p = s.data();
  const char* end = s.data() + s.size();
  while (p < end) {
    while (p < end && (*p == ',' || *p == ' ')) ++p;
    if (p == end) break;
    int v = 0;
    auto [np, ec] = std::from_chars(p, end, v);
    if (ec != std::errc() || np == p) fail_invalid("cannot parse cycle type '" + std::string(s) + "'");
    parts.push_back(v);
    p = np;
  }
  if (parts.empty()) fail_invalid("empty cycle type");
  return CycleType(std::move(parts));
}

CycleType cycle_type(const Permutation& p) {
  std::vector<int> parts;
  for (const auto& c : p.cycles()) parts.push_back(static_cast<int>(c.size()));
  return CycleType(std::move(parts));
}

int cycle_count(const Permutation& p) { return static_cast<int>(p.cycles().size()); }

bool is_even(const Permutation& p) {
  return (p.degree() - cycle_count(p)) % 2 == 0;
}

bool is_higher(const Permutation& t, const Permutation& s) {
  if (t.degree() != s.degree()) fail_invalid("is_higher: degree mismatch");
  std::vector<int> cycle_of(static_cast<std::size_t>(t.degree()));
  auto tc = t.cycles();
  for (std::size_t c = 0; c < tc.size(); ++c)
    for (int sym : tc[c]) cycle_of[static_cast<std::size_t>(sym)] = static_cast<int>(c);
  for (const auto& cyc : s.cycles()) {
    int home = cycle_of[static_cast<std::size_t>(cyc.front())];
    for (int sym : cyc)
      if (cycle_of[static_cast<std::size_t>(sym)] != home) return false;
  }
  return true;
}

namespace {

// Pack source parts (descending) into bins with the target parts as exact
// capacities; equal-capacity bins are tried once per level.
bool pack(std::vector<int>& caps, const std::vector<int>& parts, std::size_t idx) {
  if (idx == parts.size()) return true;  // sums match, so all caps are zero
  int p = parts[idx];
  std::vector<int> tried;
  for (auto& cap : caps) {
    if (cap < p) continue;
    if (std::find(tried.begin(), tried.end(), cap) != tried.end()) continue;
    tried.push_back(cap);
    cap -= p;
    if (pack(caps, parts, idx + 1)) {
      cap += p;
      return true;
    }
    cap += p;
  }
  return false;
}

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<CycleType>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool class_is_higher(const CycleType& ct, const CycleType& cs) {
  if (ct.n() != cs.n()) fail_invalid("class_is_higher: classes of different degree");
  if (ct.part_count() > cs.part_count()) return false;
  std::vector<int> caps = ct.parts();
  return pack(caps, cs.parts(), 0);
}

std::vector<CycleType> all_class_reps(int n) {
  if (n < 1) fail_invalid("class enumeration requires n >= 1");
  std::vector<CycleType> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);  // emitted in descending lexicographic order
  return out;
}

std::vector<CycleType> even_class_reps(int n) {
  std::vector<CycleType> out;
  for (auto& c : all_class_reps(n))
    if (c.is_even_class()) out.push_back(std::move(c));
  return out;
}

std::string to_string(GroupKind k) {
  return k == GroupKind::alternating ? "alternating" : "symmetric";
}

GroupKind parse_group_kind(std::string_view s) {
  if (s == "alternating") return GroupKind::alternating;
  if (s == "symmetric") return GroupKind::symmetric;
  fail_invalid("unknown group kind '" + std::string(s) + "' (want alternating|symmetric)");
}

ChainCertificate make_chain_certificate(GroupKind kind, std::vector<CycleType> chain) {
  if (chain.empty()) fail_invalid("chain certificate must contain at least one class");
  int n = chain.front().n();
  for (const auto& c : chain)
    if (c.n() != n) fail_invalid("chain certificate mixes degrees");
  if (chain.front().is_identity())
    fail_invalid("chain may not start at the identity class");
  if (kind == GroupKind::alternating) {
    for (const auto& c : chain)
      if (!c.is_even_class())
        fail_invalid("alternating chain contains the odd class (" + c.to_string() + ")");
    if (chain.front().is_transposition())
      fail_invalid("alternating chain may not start at a transposition class");
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!(class_is_higher(chain[i + 1], chain[i]) && !(chain[i + 1] == chain[i])))
      fail_invalid("chain is not strictly ascending between (" + chain[i].to_string() +
                   ") and (" + chain[i + 1].to_string() + ")");
  }
  return ChainCertificate{kind, std::move(chain)};
}

ChainCertificate max_chain(int n, GroupKind kind) {
  if (n < 1) fail_invalid("max_chain requires n >= 1");
  if (kind == GroupKind::alternating && n < 3)
    fail_invalid("alternating chain search requires n >= 3");
  auto classes = kind == GroupKind::alternating ? even_class_reps(n) : all_class_reps(n);
  const std::size_t K = classes.size();

  std::vector<std::vector<std::size_t>> above(K);
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < K; ++j)
      if (i != j && class_is_higher(classes[j], classes[i])) above[i].push_back(j);

  std::vector<int> longest(K, 0);
  std::vector<int> next(K, -1);
  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    if (longest[i]) return;
    int best = 1, nx = -1;
    for (std::size_t j : above[i]) {  // ascending index = descending lexicographic
      dfs(j);
      if (1 + longest[j] > best) {
        best = 1 + longest[j];
        nx = static_cast<int>(j);
      }
    }
    longest[i] = best;
    next[i] = nx;
  };

  int best_len = 0;
  std::size_t best_start = K;
  for (std::size_t i = 0; i < K; ++i) {
    if (classes[i].is_identity()) continue;
    if (kind == GroupKind::alternating && classes[i].is_transposition()) continue;
    dfs(i);
    if (longest[i] > best_len) {
      best_len = longest[i];
      best_start = i;
    }
  }
  if (best_start == K) fail_invalid("no admissible starting class for n=" + std::to_string(n));

  std::vector<CycleType> chain;
  for (int i = static_cast<int>(best_start); i >= 0; i = next[static_cast<std::size_t>(i)])
    chain.push_back(classes[static_cast<std::size_t>(i)]);
  return make_chain_certificate(kind, std::move(chain));
}

int lower_bound_s(int n) {
  if (n < 3) fail_invalid("lower_bound_s requires n >= 3");
  int s = (n - 1) / 2;
  ChainCertificate cert = max_chain(n, GroupKind::alternating);
  if (cert.length() != s)
    fail_numeric("chain search disagrees with the closed form at n=" + std::to_string(n));
  return s;
}

}  // namespace critmono
