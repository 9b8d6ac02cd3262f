#pragma once

// Affine permutations of period 2n in window notation, the bijection between
// bounded ones and juggling patterns, inversion sets, lengths and the R map.

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sympat/error.hpp"
#include "sympat/pattern.hpp"

namespace sympat {

inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// A bijection f of Z with f(i + 2n) = f(i) + 2n, stored by its values on
// [0, 2n - 1]. The shift class k satisfies sum_i (f(i) - i) = 2n k.
class AffinePermutation {
public:
  AffinePermutation() = default;

  AffinePermutation(int n, std::vector<long> window) : n_(n), window_(std::move(window)) {
    if (n < 1) throw InvalidInput("half-rank must be positive");
    const long N = 2L * n;
    if (static_cast<long>(window_.size()) != N)
      throw InvalidInput("window must have " + std::to_string(N) + " entries, got " +
                         std::to_string(window_.size()));
    std::vector<bool> seen(N, false);
    long sum = 0;
    for (long i = 0; i < N; ++i) {
      long r = window_[i] % N;
      if (r < 0) r += N;
      if (seen[r])
        throw InvalidInput("window residues collide at position " + std::to_string(i));
      seen[r] = true;
      sum += window_[i] - i;
    }
    if (sum % N != 0)
      throw InvalidInput("displacement sum " + std::to_string(sum) + " is not a multiple of " +
                         std::to_string(N));
    k_ = static_cast<int>(sum / N);
  }

  int n() const { return n_; }
  long period() const { return 2L * n_; }
  int k() const { return k_; }
  const std::vector<long>& window() const { return window_; }

  long operator()(long i) const {
    const long N = period();
    long q = floor_div(i, N);
    return window_[i - q * N] + q * N;
  }

  bool is_bounded() const {
    for (long i = 0; i < period(); ++i)
      if (window_[i] < i || window_[i] > i + period()) return false;
    return true;
  }

  long max_displacement() const {
    long m = 0;
    for (long i = 0; i < period(); ++i) m = std::max(m, window_[i] - i);
    return m;
  }
  long min_displacement() const {
    long m = 0;
    for (long i = 0; i < period(); ++i) m = std::min(m, window_[i] - i);
    return m;
  }

  bool operator==(const AffinePermutation&) const = default;
  auto operator<=>(const AffinePermutation&) const = default;

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < window_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(window_[i]);
    }
    return s + "]";
  }

private:
  int n_ = 1;
  std::vector<long> window_{0, 1};
  int k_ = 0;
};

// True iff `window` is the window of an affine permutation of class k.
// Boundedness is not checked here.
inline bool validate(int n, std::span<const long> window, int k) {
  if (static_cast<long>(window.size()) != 2L * n)
    throw InvalidInput("validate: window must have " + std::to_string(2 * n) + " entries");
  try {
    AffinePermutation f(n, std::vector<long>(window.begin(), window.end()));
    return f.k() == k;
  } catch (const InvalidInput&) {
    return false;
  }
}

inline AffinePermutation shift(int n, long k) {
  std::vector<long> w(2 * n);
  for (long i = 0; i < 2L * n; ++i) w[i] = i + k;
  return AffinePermutation(n, std::move(w));
}

inline AffinePermutation identity(int n) { return shift(n, 0); }

// (f o g)(i) = f(g(i)).
inline AffinePermutation compose(const AffinePermutation& f, const AffinePermutation& g) {
  if (f.n() != g.n()) throw InvalidInput("compose: period mismatch");
  std::vector<long> w(g.period());
  for (long i = 0; i < g.period(); ++i) w[i] = f(g(i));
  return AffinePermutation(f.n(), std::move(w));
}

inline AffinePermutation inverse(const AffinePermutation& f) {
  const long N = f.period();
  std::vector<long> w(N);
  for (long i = 0; i < N; ++i) {
    long v = f.window()[i];
    long q = floor_div(v, N);
    w[v - q * N] = i - q * N;
  }
  return AffinePermutation(f.n(), std::move(w));
}

// Bounded permutation of class n attached to a juggling pattern.
inline AffinePermutation from_pattern(const JugglingPattern& J) {
  const int n = J.n();
  const long N = 2L * n;
  std::vector<long> w(N);
  for (long a = 0; a < N; ++a) {
    const IndexSet& cur = J.at(static_cast<int>(a));
    if (!cur.contains(static_cast<int>(N))) {
      w[a] = a;
      continue;
    }
    std::uint32_t extra = J.at(static_cast<int>(a + 1)).mask() & ~cur.successor().mask();
    if (std::popcount(extra) != 1)
      throw InvalidInput("from_pattern: vertex " + std::to_string(a + 1) +
                         " does not add exactly one new element");
    long b = std::countr_zero(extra) + 1;
    w[a] = a + N + 1 - b;
  }
  return AffinePermutation(n, std::move(w));
}

// Juggling pattern of a bounded permutation of class n: J_a collects the
// representatives in [1, 2n] of a - f(b) over b < a with f(b) >= a.
inline JugglingPattern to_pattern(const AffinePermutation& f) {
  if (!f.is_bounded()) throw InvalidInput("to_pattern: " + f.str() + " is not bounded");
  if (f.k() != f.n()) throw InvalidInput("to_pattern: shift class must equal n");
  const int n = f.n();
  const long N = f.period();
  std::vector<IndexSet> sets;
  sets.reserve(N);
  for (long a = 0; a < N; ++a) {
    std::vector<int> elems;
    for (long b = a - N; b < a; ++b) {
      if (f(b) < a) continue;
      long r = (a - f(b)) % N;
      if (r <= 0) r += N;
      elems.push_back(static_cast<int>(r));
    }
    sets.emplace_back(n, elems);
  }
  return JugglingPattern(n, std::move(sets));
}

struct InversionPair {
  long x = 0;
  long y = 0;
  bool operator==(const InversionPair&) const = default;
  auto operator<=>(const InversionPair&) const = default;
};

// L(f) = {(x, y) : 0 <= x < 2n, y > x, f(x) > f(y)}. Any inversion has
// y - x < max displacement - min displacement, which bounds the scan.
inline std::vector<InversionPair> inversions(const AffinePermutation& f) {
  std::vector<InversionPair> out;
  const long span = f.max_displacement() - f.min_displacement();
  for (long x = 0; x < f.period(); ++x)
    for (long y = x + 1; y <= x + span; ++y)
      if (f(x) > f(y)) out.push_back({x, y});
  return out;
}

inline long length(const AffinePermutation& f) {
  return static_cast<long>(inversions(f).size());
}

// (R f)(i) = 2n - f(-i - 1) - 1.
inline AffinePermutation R_perm(const AffinePermutation& f) {
  const long N = f.period();
  std::vector<long> w(N);
  for (long i = 0; i < N; ++i) w[i] = N - f(-i - 1) - 1;
  return AffinePermutation(f.n(), std::move(w));
}

inline bool is_symplectic_perm(const AffinePermutation& f) {
  const long N = f.period();
  for (long i = 0; i < N; ++i) {
    long j = N - i - 1;
    if (f(j) - j + f(i) - i != N) return false;
  }
  return true;
}

// Involution on L(f) for symplectic bounded f.
inline InversionPair phi(const InversionPair& p, const AffinePermutation& f) {
  const long N = f.period();
  if (p.x < 0 || p.x >= N || p.y <= p.x || f(p.x) <= f(p.y))
    throw InvalidInput("phi: (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                       ") is not an inversion of " + f.str());
  if (p.y <= N - 1) return {N - p.y - 1, N - p.x - 1};
  if (p.y <= 2 * N - 1) return {2 * N - p.y - 1, 2 * N - p.x - 1};
  throw InvalidInput("phi: inversion outside the bounded range");
}

// Window positions x of the phi-fixed inversions (x, y); each x carries at
// most one, so this is in bijection with the fixed points of phi.
inline std::vector<long> phi_fixed_set(const AffinePermutation& f) {
  if (!f.is_bounded() || !is_symplectic_perm(f))
    throw InvalidInput("phi_fixed_set: " + f.str() + " is not bounded symplectic");
  std::vector<long> out;
  for (const auto& p : inversions(f))
    if (phi(p, f) == p) out.push_back(p.x);
  return out;
}

// The displacement criterion {i : f(i) - i > n}. It contains phi_fixed_set
// but can be strictly larger.
inline std::vector<long> large_displacement_set(const AffinePermutation& f) {
  std::vector<long> out;
  for (long i = 0; i < f.period(); ++i)
    if (f(i) - i > f.n()) out.push_back(i);
  return out;
}

// Number of phi-orbits on L(f), cross-checked against (l(f) + #fixed) / 2.
inline long symplectic_length(const AffinePermutation& f) {
  const auto fixed = phi_fixed_set(f);
  const auto inv = inversions(f);
  std::set<InversionPair> members(inv.begin(), inv.end());
  long orbits = 0;
  std::set<InversionPair> seen;
  for (const auto& p : inv) {
    if (seen.count(p)) continue;
    InversionPair q = phi(p, f);
    if (!members.count(q)) throw InternalError("phi left the inversion set at " + f.str());
    seen.insert(p);
    seen.insert(q);
    ++orbits;
  }
  const long total = static_cast<long>(inv.size()) + static_cast<long>(fixed.size());
  if (total % 2 != 0 || total / 2 != orbits)
    throw InternalError("symplectic length mismatch for " + f.str() + ": orbits " +
                        std::to_string(orbits) + ", (l + fixed)/2 from " + std::to_string(total));
  return orbits;
}

// Closure order transported through the pattern bijection.
inline bool bruhat_leq(const AffinePermutation& f, const AffinePermutation& f2) {
  if (f.n() != f2.n()) throw InvalidInput("bruhat_leq: rank mismatch");
  return pattern_leq(to_pattern(f), to_pattern(f2));
}

// Affine reflection (i, j) exchanging i + t 2n and j + t 2n for all t, kept in
// the base form 0 <= i < 2n, i < j.
struct Reflection {
  long i = 0;
  long j = 1;

  static Reflection make(int n, long a, long b) {
    const long N = 2L * n;
    if (a == b || (a - b) % N == 0)
      throw InvalidInput("reflection endpoints must differ modulo 2n");
    if (a > b) std::swap(a, b);
    long q = floor_div(a, N);
    return {a - q * N, b - q * N};
  }

  bool operator==(const Reflection&) const = default;
  auto operator<=>(const Reflection&) const = default;
};

inline AffinePermutation as_permutation(int n, const Reflection& t) {
  const long N = 2L * n;
  std::vector<long> w(N);
  for (long p = 0; p < N; ++p) w[p] = p;
  long q = floor_div(t.j, N);
  w[t.i] = t.j;
  w[t.j - q * N] = t.i - q * N;
  return AffinePermutation(n, std::move(w));
}

// f . (i, j): swaps the values of f at the two orbits.
inline AffinePermutation right_multiply(const AffinePermutation& f, const Reflection& t) {
  return compose(f, as_permutation(f.n(), t));
}

// The reflection h equals, if it is one.
inline std::optional<Reflection> as_reflection(const AffinePermutation& h) {
  if (h.k() != 0) return std::nullopt;
  std::vector<long> moved;
  for (long p = 0; p < h.period(); ++p)
    if (h.window()[p] != p) moved.push_back(p);
  if (moved.size() != 2 || (h(moved[0]) - moved[0]) % h.period() == 0) return std::nullopt;
  Reflection t = Reflection::make(h.n(), moved[0], h(moved[0]));
  if (as_permutation(h.n(), t) != h) return std::nullopt;
  return t;
}

}  // namespace sympat
