#pragma once

// Independent oracles shared by the test suites. Nothing here calls the
// library's enumeration or order code.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "sympat/sympat.hpp"

namespace oracle {

using Sets = std::vector<std::vector<int>>;

inline std::vector<std::vector<int>> subsets_of_size(int m, int k) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> s;
    for (int e = 1; e <= m; ++e)
      if (mask & (1u << (e - 1))) s.push_back(e);
    out.push_back(s);
  }
  return out;
}

inline bool successor_ok(const std::vector<int>& cur, const std::vector<int>& next, int N) {
  std::set<int> nx(next.begin(), next.end());
  for (int j : cur)
    if (j < N && !nx.count(j + 1)) return false;
  return true;
}

// Every 2n-tuple of n-subsets of [2n], filtered by the successor condition
// on bitmasks; bit e - 1 stands for element e.
inline std::vector<Sets> brute_force_patterns(int n) {
  const int N = 2 * n;
  const std::uint32_t top = 1u << (N - 1);
  std::vector<std::uint32_t> subs;
  for (std::uint32_t mask = 0; mask < (1u << N); ++mask)
    if (__builtin_popcount(mask) == n) subs.push_back(mask);
  auto succ_ok = [&](std::uint32_t cur, std::uint32_t next) {
    return (((cur & ~top) << 1) & ~next) == 0;
  };
  auto to_sets = [&](const std::vector<std::size_t>& idx) {
    Sets t;
    for (int a = 0; a < N; ++a) {
      std::vector<int> s;
      for (int e = 1; e <= N; ++e)
        if (subs[idx[a]] & (1u << (e - 1))) s.push_back(e);
      t.push_back(s);
    }
    return t;
  };
  std::vector<Sets> out;
  std::vector<std::size_t> idx(N, 0);
  while (true) {
    bool ok = true;
    for (int a = 0; a < N && ok; ++a) ok = succ_ok(subs[idx[a]], subs[idx[(a + 1) % N]]);
    if (ok) out.push_back(to_sets(idx));
    int p = N - 1;
    while (p >= 0 && ++idx[p] == subs.size()) idx[p--] = 0;
    if (p < 0) break;
  }
  return out;
}

// Gale order through tail counts: A <= B iff |A cap [t, m]| <= |B cap [t, m]|
// for every t.
inline bool gale_leq(const std::vector<int>& A, const std::vector<int>& B, int m) {
  for (int t = 1; t <= m; ++t) {
    int ca = 0, cb = 0;
    for (int a : A) ca += a >= t;
    for (int b : B) cb += b >= t;
    if (ca > cb) return false;
  }
  return true;
}

inline std::vector<int> complement(const std::vector<int>& A, int m) {
  std::vector<int> out;
  for (int e = 1; e <= m; ++e)
    if (std::find(A.begin(), A.end(), e) == A.end()) out.push_back(e);
  return out;
}

// Shi's length formula for an affine permutation of period N.
inline long shi_length(const sympat::AffinePermutation& f) {
  const long N = f.period();
  long total = 0;
  for (long i = 0; i < N; ++i)
    for (long j = i + 1; j < N; ++j) {
      long d = f(j) - f(i);
      long q = d >= 0 ? d / N : -((-d + N - 1) / N);
      total += q < 0 ? -q : q;
    }
  return total;
}

// Inversions by a wide scan, independent of the library's bound.
inline long scan_length(const sympat::AffinePermutation& f, long reach) {
  long c = 0;
  for (long x = 0; x < f.period(); ++x)
    for (long y = x + 1; y <= x + reach; ++y)
      if (f(x) > f(y)) ++c;
  return c;
}

inline std::vector<sympat::JugglingPattern> all_patterns(int n, bool symplectic_only = false) {
  static std::map<std::pair<int, bool>, std::vector<sympat::JugglingPattern>> cache;
  if (auto it = cache.find({n, symplectic_only}); it != cache.end()) return it->second;
  std::vector<sympat::JugglingPattern> out;
  for (const auto& s : brute_force_patterns(n)) {
    sympat::JugglingPattern J(n, s);
    if (!symplectic_only || sympat::is_symplectic(J)) out.push_back(J);
  }
  cache[{n, symplectic_only}] = out;
  return out;
}

// Transitive closure of f < f.t (length increasing, both bounded) on the
// bounded permutations of class n.
inline std::map<std::pair<std::size_t, std::size_t>, bool> reflection_closure(
    const std::vector<sympat::AffinePermutation>& perms) {
  const std::size_t m = perms.size();
  const int n = perms.front().n();
  const long N = 2L * n;
  std::map<std::vector<long>, std::size_t> index;
  for (std::size_t k = 0; k < m; ++k) index[perms[k].window()] = k;
  std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
  for (std::size_t k = 0; k < m; ++k) {
    reach[k][k] = true;
    for (long i = 0; i < N; ++i)
      for (long j = i + 1; j < i + N; ++j) {
        auto g = sympat::right_multiply(perms[k], sympat::Reflection::make(n, i, j));
        auto it = index.find(g.window());
        if (it != index.end() && shi_length(g) > shi_length(perms[k])) reach[k][it->second] = true;
      }
  }
  for (std::size_t via = 0; via < m; ++via)
    for (std::size_t a = 0; a < m; ++a)
      if (reach[a][via])
        for (std::size_t b = 0; b < m; ++b)
          if (reach[via][b]) reach[a][b] = true;
  std::map<std::pair<std::size_t, std::size_t>, bool> out;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) out[{a, b}] = reach[a][b];
  return out;
}

// Seeded sample of `count` items from `pool` (with the whole pool when small).
template <class T>
std::vector<T> sample(const std::vector<T>& pool, std::size_t count, std::uint32_t seed) {
  if (pool.size() <= count) return pool;
  std::vector<T> copy = pool;
  std::mt19937 rng(seed);
  std::shuffle(copy.begin(), copy.end(), rng);
  copy.resize(count);
  return copy;
}

}  // namespace oracle
