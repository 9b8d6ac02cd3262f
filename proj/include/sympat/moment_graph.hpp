#pragma once

// The moment graph of the symplectic torus action: symplectic patterns as
// vertices, symplectic mutations as edges, labeled by characters
// z x + sum_m c_m y_m.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "sympat/affine_perm.hpp"
#include "sympat/coxeter_c.hpp"
#include "sympat/error.hpp"
#include "sympat/mutations.hpp"
#include "sympat/pattern.hpp"

namespace sympat {

struct Character {
  int n = 1;
  long z = 0;
  std::vector<long> gamma;

  Character() = default;
  Character(int n_, long z_, std::vector<long> g) : n(n_), z(z_), gamma(std::move(g)) {
    if (static_cast<int>(gamma.size()) != n)
      throw InvalidInput("character needs " + std::to_string(n) + " gamma coefficients");
  }

  bool is_zero() const {
    return z == 0 && std::all_of(gamma.begin(), gamma.end(), [](long c) { return c == 0; });
  }

  // Flips the sign so the first nonzero coefficient (z, then y_0, ...) is
  // positive.
  Character normalized() const {
    long lead = z;
    for (std::size_t m = 0; lead == 0 && m < gamma.size(); ++m) lead = gamma[m];
    if (lead >= 0) return *this;
    Character c = *this;
    c.z = -c.z;
    for (long& g : c.gamma) g = -g;
    return c;
  }

  // "(z;c_0;...;c_{n-1})"
  std::string label() const {
    std::string s = "(" + std::to_string(z);
    for (long g : gamma) s += ";" + std::to_string(g);
    return s + ")";
  }

  bool operator==(const Character&) const = default;
  auto operator<=>(const Character&) const = default;
};

// The segment j with e^{(a)}_p = b_{j,p}.
inline int segment_index(int a, int p, int n) {
  if (n < 1) throw InvalidInput("segment_index: half-rank must be positive");
  if (p < 1 || p > 2 * n)
    throw InvalidInput("segment_index: position " + std::to_string(p) + " outside [1, " +
                       std::to_string(2 * n) + "]");
  return mod(a - p, 2 * n);
}

// Exponents of gamma_0..gamma_{n-1} in gamma_{seg(a,i)} / gamma_{seg(a,j)},
// using gamma_{-m-1} = gamma_m^{-1}.
inline std::vector<long> gamma_exponents(int a, int i, int j, int n) {
  std::vector<long> out(n, 0);
  auto add = [&](int seg, long sign) {
    if (seg >= n)
      out[2 * n - 1 - seg] -= sign;
    else
      out[seg] += sign;
  };
  add(segment_index(a, i, n), 1);
  add(segment_index(a, j, n), -1);
  return out;
}

// Hat weight 2p - 2n - 1 of a basis vector at position p.
inline long hat_weight(int p, int n) { return 2L * p - 2L * n - 1; }

// Character of the coordinate moving e_j to e_i at vertex a, normalized.
inline Character coordinate_character(int a, int i, int j, int n) {
  return Character(n, hat_weight(i, n) - hat_weight(j, n), gamma_exponents(a, i, j, n))
      .normalized();
}

inline Character mutation_character(const Mutation& mu, int n) {
  return coordinate_character(mu.vertex, mu.value + mu.shift, mu.value, n);
}

inline Character edge_character(const JugglingPattern& lower, const JugglingPattern& upper,
                                const SymplecticMutation& m) {
  if (m.lower != lower || m.upper != upper)
    throw InvalidInput("edge_character: mutation endpoints do not match");
  for (const auto& run : m.runs()) {
    const int a = run.vertex;
    if (!upper.at(a).contains(run.value) || lower.at(a).contains(run.value) ||
        !lower.at(a).contains(run.value + run.shift) ||
        upper.at(a).contains(run.value + run.shift))
      throw InvalidInput("edge_character: " + run.str() + " does not connect the endpoints");
  }
  return mutation_character(m.first, upper.n());
}

struct GraphVertex {
  int id = 0;  // 1-based
  JugglingPattern pattern;
  int dim = 0;
};

struct GraphEdge {
  int lo = 0;
  int hi = 0;
  Character character;
  std::optional<SymplecticMutation> witness;

  bool operator==(const GraphEdge& o) const {
    return lo == o.lo && hi == o.hi && character == o.character;
  }
};

class MomentGraph {
public:
  MomentGraph() = default;
  MomentGraph(int n, std::vector<GraphVertex> vertices, std::vector<GraphEdge> edges)
      : n_(n), vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
      if (vertices_[k].id != static_cast<int>(k) + 1)
        throw InvalidInput("vertex ids must be 1..V in order");
      by_pattern_.emplace(vertices_[k].pattern, vertices_[k].id);
    }
    for (const auto& e : edges_) {
      if (e.lo < 1 || e.hi < 1 || e.lo > size() || e.hi > size())
        throw InvalidInput("edge endpoint outside the vertex range");
      if (e.character.is_zero()) throw InvalidInput("edge character is zero");
      if (e.character.n != n_) throw InvalidInput("edge character has the wrong rank");
    }
  }

  int n() const { return n_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<GraphVertex>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const GraphVertex& vertex(int id) const {
    if (id < 1 || id > size()) throw InvalidInput("unknown vertex id " + std::to_string(id));
    return vertices_[id - 1];
  }

  std::optional<int> id_of(const JugglingPattern& J) const {
    auto it = by_pattern_.find(J);
    if (it == by_pattern_.end()) return std::nullopt;
    return it->second;
  }

  // Edges whose upper endpoint is v.
  std::vector<const GraphEdge*> down_edges(int v) const {
    std::vector<const GraphEdge*> out;
    for (const auto& e : edges_)
      if (e.hi == v) out.push_back(&e);
    return out;
  }

  std::vector<int> dimension_spectrum() const {
    std::vector<int> out;
    for (const auto& v : vertices_) {
      if (v.dim >= static_cast<int>(out.size())) out.resize(v.dim + 1, 0);
      ++out[v.dim];
    }
    return out;
  }

  // Vertex ids w with pattern_leq(vertex v, vertex w).
  bool leq(int v, int w) const { return pattern_leq(vertex(v).pattern, vertex(w).pattern); }

  // Equality of vertex data and edge sets, ignoring witnesses and edge order.
  bool same_as(const MomentGraph& o) const {
    if (n_ != o.n_ || size() != o.size() || edges_.size() != o.edges_.size()) return false;
    for (int k = 0; k < size(); ++k)
      if (vertices_[k].pattern != o.vertices_[k].pattern || vertices_[k].dim != o.vertices_[k].dim)
        return false;
    auto key = [](const GraphEdge& e) { return std::make_tuple(e.lo, e.hi, e.character); };
    std::vector<std::tuple<int, int, Character>> a, b;
    for (const auto& e : edges_) a.push_back(key(e));
    for (const auto& e : o.edges_) b.push_back(key(e));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

private:
  int n_ = 1;
  std::vector<GraphVertex> vertices_;
  std::vector<GraphEdge> edges_;
  std::map<JugglingPattern, int> by_pattern_;
};

// Symplectic patterns with their dimensions, ordered by (dimension, pattern).
inline std::vector<GraphVertex> symplectic_vertices(int n, int limit = configured_max_n()) {
  std::vector<GraphVertex> vs;
  for (const auto& J : enumerate_patterns(n, true, limit))
    vs.push_back({0, J, static_cast<int>(symplectic_length(from_pattern(J)))});
  std::stable_sort(vs.begin(), vs.end(), [](const GraphVertex& a, const GraphVertex& b) {
    return a.dim < b.dim;
  });
  for (std::size_t k = 0; k < vs.size(); ++k) vs[k].id = static_cast<int>(k) + 1;
  return vs;
}

inline MomentGraph build_moment_graph(int n, int limit = configured_max_n()) {
  auto vs = symplectic_vertices(n, limit);
  std::map<JugglingPattern, int> ids;
  for (const auto& v : vs) ids.emplace(v.pattern, v.id);
  std::vector<GraphEdge> edges;
  for (const auto& v : vs) {
    for (auto& [sm, lower] : down_neighbors(v.pattern)) {
      const int lo = ids.at(lower);
      Character c = edge_character(lower, v.pattern, sm);
      if (sm.second && mutation_character(*sm.second, n) != c)
        throw InternalError("correction pair runs disagree on the character of " + sm.upper.str() +
                            " -> " + sm.lower.str());
      edges.push_back({lo, v.id, c, sm});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const GraphEdge& a, const GraphEdge& b) {
    return std::tie(a.lo, a.hi) < std::tie(b.lo, b.hi);
  });
  return MomentGraph(n, std::move(vs), std::move(edges));
}

// Pairs (lo, hi) of vertex ids with sl(lo) < sl(hi) whose group elements
// differ by a type C reflection on the right: g_lo^{-1} g_hi.
inline std::vector<std::pair<int, int>> reflection_edge_pairs(const MomentGraph& G) {
  std::vector<AffinePermutation> gs;
  for (const auto& v : G.vertices()) gs.push_back(to_group(from_pattern(v.pattern)));
  std::vector<std::pair<int, int>> out;
  for (const auto& lo : G.vertices())
    for (const auto& hi : G.vertices()) {
      if (lo.dim >= hi.dim) continue;
      auto q = compose(inverse(gs[lo.id - 1]), gs[hi.id - 1]);
      if (is_type_c_reflection(q)) out.emplace_back(lo.id, hi.id);
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string to_dot(const MomentGraph& G) {
  std::ostringstream os;
  os << "graph moment_graph_n" << G.n() << " {\n";
  for (const auto& v : G.vertices())
    os << "  v" << v.id << " [label=\"" << v.id << ": " << v.pattern.str() << " dim " << v.dim
       << "\"];\n";
  for (const auto& e : G.edges())
    os << "  v" << e.lo << " -- v" << e.hi << " [label=\"" << e.character.label() << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace sympat
