#pragma once

// Subsets of [2n], juggling patterns on the cycle with 2n vertices, their
// closure order and the R involution.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sympat/error.hpp"

namespace sympat {

// Largest half-rank accepted by enumeration routines unless SYMPAT_MAX_N says
// otherwise.
inline constexpr int kDefaultMaxN = 4;
// Hard ceiling imposed by the 32-bit set representation.
inline constexpr int kHardMaxN = 16;

inline int configured_max_n() {
  if (const char* env = std::getenv("SYMPAT_MAX_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1)
      return static_cast<int>(std::min<long>(v, kHardMaxN));
  }
  return kDefaultMaxN;
}

inline void check_size_guard(int n, int limit = configured_max_n()) {
  if (n < 1)
    throw InvalidInput("half-rank must be positive, got " + std::to_string(n));
  if (n > limit)
    throw ResourceLimit("n = " + std::to_string(n) + " exceeds the size guard " +
                        std::to_string(limit) + " (set SYMPAT_MAX_N to raise it)");
}

inline int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

// The index paired with i by the symplectic form: 2n - i + 1.
inline int tilde(int i, int n) {
  if (i < 1 || i > 2 * n)
    throw InvalidInput("index " + std::to_string(i) + " outside [1, " +
                       std::to_string(2 * n) + "]");
  return 2 * n - i + 1;
}

// A subset of [2n], stored as a bitmask (bit i-1 <-> element i).
class IndexSet {
public:
  IndexSet() = default;

  IndexSet(int n, std::initializer_list<int> elems) : IndexSet(n, std::vector<int>(elems)) {}

  IndexSet(int n, const std::vector<int>& elems) : n_(n) {
    if (n < 1 || n > kHardMaxN)
      throw InvalidInput("half-rank out of range: " + std::to_string(n));
    for (int e : elems) {
      if (e < 1 || e > 2 * n)
        throw InvalidInput("element " + std::to_string(e) + " outside [1, " +
                           std::to_string(2 * n) + "]");
      std::uint32_t bit = std::uint32_t{1} << (e - 1);
      if (mask_ & bit)
        throw InvalidInput("repeated element " + std::to_string(e));
      mask_ |= bit;
    }
  }

  static IndexSet from_mask(int n, std::uint32_t mask) {
    IndexSet s;
    s.n_ = n;
    s.mask_ = mask & full_mask(n);
    return s;
  }

  static std::uint32_t full_mask(int n) {
    return n >= 16 ? 0xffffffffu : ((std::uint32_t{1} << (2 * n)) - 1);
  }

  int n() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }

  bool contains(int e) const {
    return e >= 1 && e <= 2 * n_ && (mask_ >> (e - 1)) & 1u;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint32_t m = mask_; m; m &= m - 1)
      out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  IndexSet with(int e) const { return from_mask(n_, mask_ | (std::uint32_t{1} << (e - 1))); }
  IndexSet without(int e) const { return from_mask(n_, mask_ & ~(std::uint32_t{1} << (e - 1))); }

  // s(J \ {2n}) = {j + 1 : j in J, j < 2n}.
  IndexSet successor() const {
    return from_mask(n_, (mask_ & (full_mask(n_) >> 1)) << 1);
  }

  bool operator==(const IndexSet&) const = default;

  // Lexicographic on the sorted element lists; this is the enumeration order.
  std::strong_ordering operator<=>(const IndexSet& other) const {
    if (auto c = n_ <=> other.n_; c != 0) return c;
    auto a = elements(), b = other.elements();
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }

  std::string str() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int e : elements()) {
      if (!first) os << ',';
      os << e;
      first = false;
    }
    os << '}';
    return os.str();
  }

private:
  int n_ = 1;
  std::uint32_t mask_ = 0;
};

// R(J) = [2n] \ {tilde(j) : j in J}.
inline IndexSet complement_R(const IndexSet& J) {
  const int n = J.n();
  std::uint32_t image = 0;
  for (int j : J.elements()) image |= std::uint32_t{1} << (tilde(j, n) - 1);
  return IndexSet::from_mask(n, IndexSet::full_mask(n) & ~image);
}

// Gale order: the i-th smallest element of A is at most the i-th of B.
inline bool set_leq(const IndexSet& A, const IndexSet& B) {
  if (A.size() != B.size())
    throw InvalidInput("set_leq: cardinality mismatch " + A.str() + " vs " + B.str());
  auto a = A.elements(), b = B.elements();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// sets[i] = J_i for vertex i of the cycle Z/2n.
class JugglingPattern {
public:
  JugglingPattern() = default;

  // Throws InvalidInput naming the first offending vertex.
  JugglingPattern(int n, std::vector<IndexSet> sets) : n_(n), sets_(std::move(sets)) {
    if (auto why = violation(n_, sets_)) throw InvalidInput(*why);
  }

  JugglingPattern(int n, const std::vector<std::vector<int>>& sets) : n_(n) {
    sets_.reserve(sets.size());
    for (const auto& s : sets) sets_.emplace_back(n, s);
    if (auto why = violation(n_, sets_)) throw InvalidInput(*why);
  }

  // Description of the first violated condition, or nullopt when `sets` is a
  // valid (n, 2n)-juggling pattern.
  static std::optional<std::string> violation(int n, const std::vector<IndexSet>& sets) {
    const int N = 2 * n;
    if (static_cast<int>(sets.size()) != N)
      return "expected " + std::to_string(N) + " sets, got " + std::to_string(sets.size());
    for (int i = 0; i < N; ++i) {
      if (sets[i].n() != n)
        return "vertex " + std::to_string(i) + ": set built for a different half-rank";
      if (sets[i].size() != n)
        return "vertex " + std::to_string(i) + ": " + sets[i].str() + " does not have " +
               std::to_string(n) + " elements";
    }
    for (int i = 0; i < N; ++i) {
      const IndexSet& next = sets[mod(i + 1, N)];
      if ((sets[i].successor().mask() & ~next.mask()) != 0)
        return "vertex " + std::to_string(i) + ": successor of " + sets[i].str() +
               " not contained in J_" + std::to_string(mod(i + 1, N)) + " = " + next.str();
    }
    return std::nullopt;
  }

  static JugglingPattern unchecked(int n, std::vector<IndexSet> sets) {
    JugglingPattern p;
    p.n_ = n;
    p.sets_ = std::move(sets);
    return p;
  }

  int n() const { return n_; }
  int period() const { return 2 * n_; }
  const std::vector<IndexSet>& sets() const { return sets_; }
  // Vertex index taken modulo 2n.
  const IndexSet& at(int vertex) const { return sets_[mod(vertex, 2 * n_)]; }

  bool operator==(const JugglingPattern&) const = default;
  std::strong_ordering operator<=>(const JugglingPattern& other) const {
    if (auto c = n_ <=> other.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(sets_.begin(), sets_.end(),
                                                  other.sets_.begin(), other.sets_.end());
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (i) s += ',';
      s += sets_[i].str();
    }
    return s + ")";
  }

private:
  int n_ = 1;
  std::vector<IndexSet> sets_;
};

inline bool validate_pattern(int n, const std::vector<IndexSet>& sets) {
  if (static_cast<int>(sets.size()) != 2 * n)
    throw InvalidInput("validate_pattern: expected " + std::to_string(2 * n) + " sets");
  return !JugglingPattern::violation(n, sets).has_value();
}

// J <= J2 in the closure order iff J_i >= J2_i at every vertex.
inline bool pattern_leq(const JugglingPattern& J, const JugglingPattern& J2) {
  if (J.n() != J2.n()) throw InvalidInput("pattern_leq: half-rank mismatch");
  for (int i = 0; i < J.period(); ++i)
    if (!set_leq(J2.at(i), J.at(i))) return false;
  return true;
}

// (R J)_i = R(J_{-i}).
inline JugglingPattern R_pattern(const JugglingPattern& J) {
  std::vector<IndexSet> out;
  out.reserve(J.period());
  for (int i = 0; i < J.period(); ++i) out.push_back(complement_R(J.at(-i)));
  return JugglingPattern::unchecked(J.n(), std::move(out));
}

inline bool is_symplectic(const JugglingPattern& J) {
  for (int i = 0; i < J.period(); ++i)
    if (complement_R(J.at(-i)) != J.at(i)) return false;
  return true;
}

// All n-subsets of [2n] in lexicographic order.
inline std::vector<IndexSet> n_subsets(int n) {
  std::vector<IndexSet> out;
  const int N = 2 * n;
  std::vector<int> pick(n);
  for (int i = 0; i < n; ++i) pick[i] = i + 1;
  while (true) {
    out.emplace_back(n, pick);
    int i = n - 1;
    while (i >= 0 && pick[i] == N - n + i + 1) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

// Calls `emit` on every (n, 2n)-juggling pattern in lexicographic order of the
// flattened tuple, optionally only the R-fixed ones.
inline void for_each_pattern(int n, bool symplectic_only,
                             const std::function<void(const JugglingPattern&)>& emit,
                             int limit = configured_max_n()) {
  check_size_guard(n, limit);
  const int N = 2 * n;
  const auto subsets = n_subsets(n);
  std::vector<IndexSet> sets(N);
  // Candidates are tried in lexicographic order at each vertex, so the
  // depth-first traversal is lexicographic on the flattened tuple.
  std::function<void(int)> extend = [&](int v) {
    if (v == N) {
      if ((sets[N - 1].successor().mask() & ~sets[0].mask()) != 0) return;
      auto p = JugglingPattern::unchecked(n, sets);
      if (!symplectic_only || is_symplectic(p)) emit(p);
      return;
    }
    const std::uint32_t required = v == 0 ? 0 : sets[v - 1].successor().mask();
    for (const auto& s : subsets) {
      if ((required & ~s.mask()) != 0) continue;
      sets[v] = s;
      extend(v + 1);
    }
  };
  extend(0);
}

inline std::vector<JugglingPattern> enumerate_patterns(int n, bool symplectic_only,
                                                       int limit = configured_max_n()) {
  std::vector<JugglingPattern> out;
  for_each_pattern(n, symplectic_only, [&](const JugglingPattern& p) { out.push_back(p); }, limit);
  return out;
}

}  // namespace sympat
