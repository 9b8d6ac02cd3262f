#pragma once

// The subgroup of the affine symmetric group A^0_{2n} fixed by the
// automorphism g -> (a -> -g(-a - 1) - 1), an affine Coxeter group of type C
// with generators r_{-1}, ..., r_{n-1}.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "sympat/affine_perm.hpp"
#include "sympat/error.hpp"

namespace sympat {

// s_i exchanges i and i + 1 modulo 2n; any integer i is accepted.
inline AffinePermutation simple_reflection(int n, long i) {
  return as_permutation(n, Reflection::make(n, i, i + 1));
}

// (R^0 g)(a) = -g(-a - 1) - 1.
inline AffinePermutation r0_map(const AffinePermutation& g) {
  std::vector<long> w(g.period());
  for (long a = 0; a < g.period(); ++a) w[a] = -g(-a - 1) - 1;
  return AffinePermutation(g.n(), std::move(w));
}

inline bool is_fixed(const AffinePermutation& g) { return g.k() == 0 && r0_map(g) == g; }

struct TypeCGenerator {
  int label = -1;  // in [-1, n - 1]
  AffinePermutation realization;
};

inline TypeCGenerator generator(int n, int label) {
  if (label < -1 || label > n - 1)
    throw InvalidInput("generator label " + std::to_string(label) + " outside [-1, " +
                       std::to_string(n - 1) + "]");
  if (label == -1 || label == n - 1) return {label, simple_reflection(n, label)};
  return {label, compose(simple_reflection(n, label), simple_reflection(n, -label - 2))};
}

// Letters are generator labels; the product is taken left to right.
struct TypeCWord {
  int n = 1;
  std::vector<int> letters;
  bool operator==(const TypeCWord&) const = default;
};

inline AffinePermutation evaluate_word(const TypeCWord& w) {
  AffinePermutation g = identity(w.n);
  for (int letter : w.letters) g = compose(g, generator(w.n, letter).realization);
  return g;
}

// Smallest m >= 1 with g^m = id, or nullopt if none up to `limit`.
inline std::optional<int> element_order(const AffinePermutation& g, int limit = 64) {
  const auto id = identity(g.n());
  AffinePermutation p = g;
  for (int m = 1; m <= limit; ++m) {
    if (p == id) return m;
    p = compose(p, g);
  }
  return std::nullopt;
}

struct RelationCheck {
  int a = 0;
  int b = 0;
  int expected = 0;
  std::optional<int> actual;
  bool ok() const { return actual && *actual == expected; }
};

struct RelationReport {
  int n = 0;
  std::vector<RelationCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }
};

// Order of r_a r_b for every a <= b; a == b checks r_a^2 = id (order 1).
inline RelationReport verify_relations(int n) {
  if (n < 2) throw InvalidInput("verify_relations needs n >= 2");
  RelationReport report{n, {}};
  for (int a = -1; a <= n - 1; ++a) {
    for (int b = a; b <= n - 1; ++b) {
      int expected;
      if (a == b)
        expected = 1;
      else if (b - a >= 2)
        expected = 2;
      else if (a == -1 || b == n - 1)
        expected = 4;
      else
        expected = 3;
      auto prod = compose(generator(n, a).realization, generator(n, b).realization);
      report.checks.push_back({a, b, expected, element_order(prod)});
    }
  }
  return report;
}

// Reduced word for g in the type C generators, found by repeatedly stripping
// a right descent (lowest label first). A type C generator is a right
// descent exactly when it shortens g in type A as well.
inline TypeCWord greedy_word(const AffinePermutation& g) {
  if (!is_fixed(g)) throw InvalidInput("greedy_word: " + g.str() + " is not R^0-fixed");
  const int n = g.n();
  const auto id = identity(n);
  std::vector<AffinePermutation> gens;
  for (int label = -1; label <= n - 1; ++label) gens.push_back(generator(n, label).realization);

  TypeCWord word{n, {}};
  AffinePermutation cur = g;
  long cur_len = length(cur);
  while (cur != id) {
    bool found = false;
    for (int label = -1; label <= n - 1; ++label) {
      auto next = compose(cur, gens[label + 1]);
      long next_len = length(next);
      if (next_len < cur_len) {
        word.letters.push_back(label);
        cur = std::move(next);
        cur_len = next_len;
        found = true;
        break;
      }
    }
    if (!found) throw InternalError("greedy_word: no descent at " + cur.str());
  }
  std::reverse(word.letters.begin(), word.letters.end());
  return word;
}

inline long type_c_length(const AffinePermutation& g) {
  return static_cast<long>(greedy_word(g).letters.size());
}

// A^0 element attached to a bounded permutation of class n.
inline AffinePermutation to_group(const AffinePermutation& f) {
  return compose(f, shift(f.n(), -f.n()));
}

// True iff h is a reflection of the type C group: either an R^0-fixed affine
// reflection (i, -i - 1), or a product (i, j)(-j - 1, -i - 1) of two distinct
// commuting affine reflections exchanged by R^0.
inline bool is_type_c_reflection(const AffinePermutation& h) {
  if (!is_fixed(h)) return false;
  if (as_reflection(h)) return true;
  const long N = h.period();
  std::vector<long> moved;
  for (long p = 0; p < N; ++p)
    if (h.window()[p] != p) moved.push_back(p);
  if (moved.size() != 4) return false;
  const long p = moved[0];
  if ((h(p) - p) % N == 0) return false;
  const Reflection t1 = Reflection::make(h.n(), p, h(p));
  const auto t1_perm = as_permutation(h.n(), t1);
  const auto t2_perm = r0_map(t1_perm);
  if (t2_perm == t1_perm) return false;
  return compose(t1_perm, t2_perm) == h && compose(t2_perm, t1_perm) == h;
}

}  // namespace sympat
