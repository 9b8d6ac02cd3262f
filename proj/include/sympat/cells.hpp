#pragma once

// Coordinate triples of the cell attached to a juggling pattern and their
// equivalence classes, plain and symplectic.

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "sympat/error.hpp"
#include "sympat/pattern.hpp"

namespace sympat {

// (a, i, j) with j in J_a, i not in J_a, i > j: the coefficient of e_i in the
// basis vector of V_a with pivot e_j.
struct CoordinateTriple {
  int a = 0;
  int i = 0;
  int j = 0;
  bool operator==(const CoordinateTriple&) const = default;
  auto operator<=>(const CoordinateTriple&) const = default;

  std::string str() const {
    return "(" + std::to_string(a) + "," + std::to_string(i) + "," + std::to_string(j) + ")";
  }
};

inline bool is_triple(const JugglingPattern& J, const CoordinateTriple& t) {
  if (t.a < 0 || t.a >= J.period()) return false;
  const IndexSet& S = J.at(t.a);
  return t.i > t.j && t.i <= J.period() && S.contains(t.j) && !S.contains(t.i);
}

inline std::vector<CoordinateTriple> coordinate_triples(const JugglingPattern& J) {
  std::vector<CoordinateTriple> out;
  for (int a = 0; a < J.period(); ++a)
    for (int j : J.at(a).elements())
      for (int i = j + 1; i <= J.period(); ++i)
        if (!J.at(a).contains(i)) out.push_back({a, i, j});
  return out;
}

// One equivalence class. signs[k] relates members[k] to members[0]:
// u(members[k]) = signs[k] * u(members[0]). members[0] is the smallest triple.
struct TripleClass {
  std::vector<CoordinateTriple> members;
  std::vector<int> signs;
  const CoordinateTriple& representative() const { return members.front(); }
};

namespace detail {

// Union-find with a sign (parity) attached to each link.
class SignedUnionFind {
public:
  explicit SignedUnionFind(std::size_t size) : parent_(size), sign_(size, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  // Root of x and the sign of x relative to it.
  std::pair<std::size_t, int> find(std::size_t x) {
    int s = 1;
    std::size_t r = x;
    while (parent_[r] != r) {
      s *= sign_[r];
      r = parent_[r];
    }
    // Compress with accumulated signs.
    std::size_t cur = x;
    int cur_sign = s;
    while (parent_[cur] != cur) {
      std::size_t next = parent_[cur];
      int next_sign = cur_sign * sign_[cur];
      parent_[cur] = r;
      sign_[cur] = cur_sign;
      cur = next;
      cur_sign = next_sign;
    }
    return {r, s};
  }

  // Impose value(x) = sign * value(y). Returns false on a parity conflict.
  bool unite(std::size_t x, std::size_t y, int sign) {
    auto [rx, sx] = find(x);
    auto [ry, sy] = find(y);
    if (rx == ry) return sx == sign * sy;
    parent_[rx] = ry;
    sign_[rx] = sx * sign * sy;
    return true;
  }

private:
  std::vector<std::size_t> parent_;
  std::vector<int> sign_;
};

inline std::vector<TripleClass> collect_classes(const std::vector<CoordinateTriple>& triples,
                                                SignedUnionFind& uf) {
  std::map<std::size_t, std::size_t> root_to_class;
  std::vector<TripleClass> classes;
  // Triples are sorted, so each class sees its smallest member first.
  std::vector<std::pair<std::size_t, int>> roots;
  for (std::size_t k = 0; k < triples.size(); ++k) roots.push_back(uf.find(k));
  for (std::size_t k = 0; k < triples.size(); ++k) {
    auto [root, sign] = roots[k];
    auto [it, inserted] = root_to_class.emplace(root, classes.size());
    if (inserted) classes.push_back({});
    classes[it->second].members.push_back(triples[k]);
    classes[it->second].signs.push_back(sign);
  }
  for (auto& c : classes) {
    const int base = c.signs.front();
    for (int& s : c.signs) s *= base;
  }
  return classes;
}

}  // namespace detail

// Triples modulo (a, i, j) ~ (a + 1, i + 1, j + 1), linking only valid
// triples. The class count is the dimension of the cell.
inline std::vector<TripleClass> triple_classes(const JugglingPattern& J) {
  auto triples = coordinate_triples(J);
  std::sort(triples.begin(), triples.end());
  std::map<CoordinateTriple, std::size_t> index;
  for (std::size_t k = 0; k < triples.size(); ++k) index[triples[k]] = k;
  detail::SignedUnionFind uf(triples.size());
  for (std::size_t k = 0; k < triples.size(); ++k) {
    const auto& t = triples[k];
    CoordinateTriple next{mod(t.a + 1, J.period()), t.i + 1, t.j + 1};
    if (auto it = index.find(next); it != index.end()) uf.unite(k, it->second, 1);
  }
  return detail::collect_classes(triples, uf);
}

// Symplectic classes: the shift relation together with
// (a, i, j) ~ (-a, tilde(j), tilde(i)), where the coordinates of a symplectic
// point satisfy u(a, i, j) = (-1)^(i + j + 1) u(-a, tilde(j), tilde(i)).
inline std::vector<TripleClass> symplectic_triple_classes(const JugglingPattern& J) {
  if (!is_symplectic(J))
    throw InvalidInput("symplectic_triple_classes: " + J.str() + " is not symplectic");
  const int n = J.n();
  auto triples = coordinate_triples(J);
  std::sort(triples.begin(), triples.end());
  std::map<CoordinateTriple, std::size_t> index;
  for (std::size_t k = 0; k < triples.size(); ++k) index[triples[k]] = k;
  detail::SignedUnionFind uf(triples.size());
  for (std::size_t k = 0; k < triples.size(); ++k) {
    const auto& t = triples[k];
    CoordinateTriple next{mod(t.a + 1, J.period()), t.i + 1, t.j + 1};
    if (auto it = index.find(next); it != index.end()) uf.unite(k, it->second, 1);
    CoordinateTriple mirror{mod(-t.a, J.period()), tilde(t.j, n), tilde(t.i, n)};
    auto it = index.find(mirror);
    if (it == index.end()) throw InternalError("mirror of " + t.str() + " is not a triple");
    const int sign = (t.i + t.j + 1) % 2 == 0 ? 1 : -1;
    if (!uf.unite(k, it->second, sign))
      throw InternalError("sign conflict in the symplectic class of " + t.str());
  }
  return detail::collect_classes(triples, uf);
}

}  // namespace sympat
