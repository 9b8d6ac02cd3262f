#pragma once

// Embedded reference data for n = 2: the worked examples, the moment graph
// with its edge labels and the basis tables xi_1..xi_13. Vertices here use
// the reference numbering 1..13 (bottom up, left to right), which differs
// from MomentGraph ids; translate through the patterns.

#include <array>
#include <map>
#include <vector>

#include "sympat/affine_perm.hpp"
#include "sympat/gkm.hpp"
#include "sympat/moment_graph.hpp"
#include "sympat/pattern.hpp"
#include "sympat/poly.hpp"

namespace sympat::fixtures {

inline JugglingPattern pattern_J() { return JugglingPattern(2, {{2, 4}, {3, 4}, {3, 4}, {3, 4}}); }
inline JugglingPattern pattern_J_prime() {
  return JugglingPattern(2, {{2, 4}, {2, 3}, {3, 4}, {3, 4}});
}
inline std::vector<long> window_J() { return {1, 3, 4, 6}; }
inline std::vector<long> window_J_prime() { return {3, 1, 4, 6}; }
inline std::vector<long> window_R_J_prime() { return {1, 3, 6, 4}; }
inline JugglingPattern pattern_R_J_prime() {
  return JugglingPattern(2, {{2, 4}, {3, 4}, {3, 4}, {1, 4}});
}

// The two ends of the mutation example.
inline JugglingPattern mutation_upper() { return JugglingPattern(2, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }
inline JugglingPattern mutation_lower() { return JugglingPattern(2, {{1, 3}, {2, 4}, {3, 4}, {2, 4}}); }

// The symplectic mutation example: upper J'', the non-symplectic middle J'
// and the lower J.
inline JugglingPattern correction_upper() {
  return JugglingPattern(2, {{2, 4}, {2, 3}, {3, 4}, {1, 4}});
}
inline JugglingPattern correction_middle() {
  return JugglingPattern(2, {{2, 4}, {2, 3}, {3, 4}, {3, 4}});
}
inline JugglingPattern correction_lower() { return pattern_J(); }

// Reference vertices 1..13 (index 0 unused).
inline std::vector<JugglingPattern> reference_vertices() {
  using S = std::vector<std::vector<int>>;
  const std::vector<S> sets = {
      {{3, 4}, {3, 4}, {3, 4}, {3, 4}}, {{2, 4}, {3, 4}, {3, 4}, {3, 4}},
      {{3, 4}, {2, 4}, {3, 4}, {2, 4}}, {{3, 4}, {3, 4}, {2, 4}, {3, 4}},
      {{2, 4}, {2, 3}, {3, 4}, {1, 4}}, {{1, 3}, {2, 4}, {3, 4}, {2, 4}},
      {{2, 4}, {3, 4}, {2, 4}, {3, 4}}, {{3, 4}, {2, 4}, {1, 3}, {2, 4}},
      {{3, 4}, {1, 4}, {2, 4}, {2, 3}}, {{1, 2}, {2, 3}, {3, 4}, {1, 4}},
      {{2, 4}, {1, 3}, {2, 4}, {1, 3}}, {{1, 3}, {2, 4}, {1, 3}, {2, 4}},
      {{3, 4}, {1, 4}, {1, 2}, {2, 3}}};
  std::vector<JugglingPattern> out{JugglingPattern::unchecked(2, {})};
  for (const auto& s : sets) out.emplace_back(2, s);
  return out;
}

inline std::vector<int> reference_dims() { return {-1, 0, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 3}; }

struct ReferenceEdge {
  int a = 0;
  int b = 0;
  std::array<long, 3> label{};  // (x; y_0; y_1)
};

inline std::vector<ReferenceEdge> reference_edges() {
  return {{1, 2, {2, 0, 2}},   {1, 3, {2, 1, -1}},  {1, 4, {2, -2, 0}},  {2, 5, {4, 1, 1}},
          {2, 6, {2, 1, -1}},  {2, 7, {2, -2, 0}},  {3, 5, {2, 0, 2}},   {3, 6, {6, 2, 0}},
          {3, 8, {6, 0, -2}},  {3, 9, {2, -2, 0}},  {4, 7, {2, 0, 2}},   {4, 8, {2, 1, -1}},
          {4, 9, {4, -1, -1}}, {5, 10, {6, 2, 0}},  {5, 11, {2, -2, 0}}, {6, 10, {2, 0, 2}},
          {6, 12, {6, 0, -2}}, {7, 11, {6, -1, 1}}, {7, 12, {2, 1, -1}}, {8, 12, {6, 2, 0}},
          {8, 13, {2, -2, 0}}, {9, 11, {2, 0, 2}},  {9, 13, {6, 0, -2}}, {1, 10, {4, 1, 1}},
          {1, 13, {4, -1, -1}}};
}

inline Character label_character(const std::array<long, 3>& l) {
  return Character(2, l[0], {l[1], l[2]});
}

// A table row: components given as products of linear forms; an empty
// product is the constant 1.
//
// As printed, the row of xi_3 has zeros at vertices 5, 9 and 11, which breaks
// divisibility on edges 3-5, 5-10, 3-9 and 9-13. The degree-1 class with that
// diagonal is unique, and its values there are 4x+y0+y1, 4x-y0-y1 and
// 6x-y0+y1. `as_printed` selects the uncorrected row.
struct ReferenceClass {
  int index = 0;
  int degree = 0;
  std::map<int, std::vector<std::array<long, 3>>> components;
};

inline std::vector<ReferenceClass> reference_tables(bool as_printed = false) {
  using F = std::array<long, 3>;
  const F a{2, 0, 2}, b{6, 2, 0}, c{2, 1, -1}, d{4, 1, 1}, e{4, -1, -1}, f{2, -2, 0},
      g{6, 0, -2}, h{6, -1, 1};
  std::vector<ReferenceClass> t;
  ReferenceClass xi1{1, 0, {}};
  for (int v = 1; v <= 13; ++v) xi1.components[v] = {};
  t.push_back(xi1);
  t.push_back({2, 1, {{2, {a}}, {5, {a}}, {6, {b}}, {7, {a}}, {10, {{8, 2, 2}}}, {11, {a}}, {12, {b}}}});
  t.push_back({3, 1, {{3, {c}}, {6, {c}}, {8, {c}}, {10, {d}}, {12, {c}}, {13, {e}}}});
  if (!as_printed) {
    t.back().components[5] = {d};
    t.back().components[9] = {e};
    t.back().components[11] = {h};
  }
  t.push_back({4, 1, {{4, {f}}, {7, {f}}, {8, {g}}, {9, {f}}, {11, {f}}, {12, {g}}, {13, {{8, -2, -2}}}}});
  t.push_back({5, 2, {{5, {d, a}}, {10, {d, a}}, {11, {h, a}}}});
  t.push_back({6, 2, {{6, {c, b}}, {10, {d, b}}, {12, {c, b}}}});
  t.push_back({7, 2, {{7, {f, a}}, {11, {f, a}}, {12, {g, b}}}});
  t.push_back({8, 2, {{8, {c, g}}, {12, {c, g}}, {13, {e, g}}}});
  t.push_back({9, 2, {{9, {e, f}}, {11, {h, f}}, {13, {e, f}}}});
  t.push_back({10, 3, {{10, {b, d, a}}}});
  t.push_back({11, 3, {{11, {f, h, a}}}});
  t.push_back({12, 3, {{12, {g, c, b}}}});
  t.push_back({13, 3, {{13, {f, e, g}}}});
  return t;
}

inline MultiPoly product_of_forms(const std::vector<std::array<long, 3>>& forms) {
  MultiPoly p = MultiPoly::constant(2, 1);
  for (const auto& l : forms) p = p * MultiPoly::linear(label_character(l));
  return p;
}

// Reference vertex number -> MomentGraph id.
inline std::map<int, int> reference_to_graph_ids(const MomentGraph& G) {
  const auto refs = reference_vertices();
  std::map<int, int> out;
  for (int r = 1; r <= 13; ++r) {
    auto id = G.id_of(refs[r]);
    if (!id) throw InternalError("reference vertex " + std::to_string(r) + " missing from the graph");
    out[r] = *id;
  }
  return out;
}

inline GKMClass to_gkm_class(const MomentGraph& G, const ReferenceClass& rc) {
  const auto ids = reference_to_graph_ids(G);
  GKMClass cls{2, ids.at(rc.index), rc.degree, {}};
  for (const auto& [r, forms] : rc.components) cls.components[ids.at(r)] = product_of_forms(forms);
  return cls;
}

inline BasisTable reference_basis(const MomentGraph& G, bool as_printed = false) {
  BasisTable t{2, {}};
  for (const auto& rc : reference_tables(as_printed)) t.classes.push_back(to_gkm_class(G, rc));
  return t;
}

}  // namespace sympat::fixtures
