#include <gtest/gtest.h>

#include <regex>

#include "support.hpp"

using namespace sympat;

namespace {

const MomentGraph& graph2() {
  static const MomentGraph G = build_moment_graph(2);
  return G;
}

std::set<std::pair<int, int>> edge_pairs(const MomentGraph& G) {
  std::set<std::pair<int, int>> out;
  for (const auto& e : G.edges()) out.insert({e.lo, e.hi});
  return out;
}

}  // namespace

TEST(Segments, Examples) {
  EXPECT_EQ(segment_index(0, 3, 2), 1);
  for (int a = 0; a < 4; ++a) EXPECT_EQ(segment_index(a, 4, 2), a);
  EXPECT_EQ(segment_index(3, 4, 2), 3);
  EXPECT_THROW(segment_index(0, 5, 2), InvalidInput);
}

TEST(Segments, GammaExponents) {
  EXPECT_EQ(gamma_exponents(0, 3, 2, 2), (std::vector<long>{0, 2}));
  EXPECT_EQ(gamma_exponents(0, 3, 1, 2), (std::vector<long>{1, 1}));
  for (int a = 0; a < 4; ++a)
    for (int i = 1; i <= 4; ++i) EXPECT_EQ(gamma_exponents(a, i, i, 2), (std::vector<long>{0, 0}));
}

TEST(Characters, LabelsAndNormalization) {
  EXPECT_EQ(coordinate_character(0, 3, 2, 2).label(), "(2;0;2)");
  EXPECT_EQ(coordinate_character(0, 3, 1, 2).label(), "(4;1;1)");
  EXPECT_EQ(Character(2, -6, {0, 2}).normalized().label(), "(6;0;-2)");
  EXPECT_EQ(Character(2, 0, {-1, 3}).normalized(), Character(2, 0, {1, -3}));
  EXPECT_THROW(Character(2, 1, {1}), InvalidInput);
}

TEST(Characters, HatWeightGrading) {
  for (int n = 1; n <= 3; ++n)
    for (int i = 1; i <= 2 * n; ++i)
      for (int j = 1; j < i; ++j) EXPECT_EQ(hat_weight(i, n) - hat_weight(j, n), 2L * (i - j));
}

TEST(Graph, N2ShapeAndLabels) {
  const auto& G = graph2();
  EXPECT_EQ(G.size(), 13);
  EXPECT_EQ(G.edges().size(), 25u);
  EXPECT_EQ(G.dimension_spectrum(), (std::vector<int>{1, 3, 5, 4}));
  const auto ids = fixtures::reference_to_graph_ids(G);
  const auto dims = fixtures::reference_dims();
  for (int r = 1; r <= 13; ++r) EXPECT_EQ(G.vertex(ids.at(r)).dim, dims[r]);
  std::map<std::pair<int, int>, Character> got;
  for (const auto& e : G.edges()) got.emplace(std::pair{e.lo, e.hi}, e.character);
  for (const auto& re : fixtures::reference_edges()) {
    auto it = got.find({ids.at(re.a), ids.at(re.b)});
    ASSERT_NE(it, got.end()) << "missing edge " << re.a << "-" << re.b;
    EXPECT_EQ(it->second, fixtures::label_character(re.label).normalized()) << re.a << "-" << re.b;
  }
}

TEST(Graph, NamedLabels) {
  const auto& G = graph2();
  const auto ids = fixtures::reference_to_graph_ids(G);
  auto label = [&](int a, int b) {
    for (const auto& e : G.edges())
      if (e.lo == ids.at(a) && e.hi == ids.at(b)) return e.character.label();
    return std::string("none");
  };
  EXPECT_EQ(label(1, 2), "(2;0;2)");
  EXPECT_EQ(label(1, 10), "(4;1;1)");
  EXPECT_EQ(label(3, 8), "(6;0;-2)");
  EXPECT_EQ(label(4, 9), "(4;-1;-1)");
}

TEST(Graph, ReflectionCriterionAgrees) {
  for (int n = 1; n <= 3; ++n) {
    const auto G = build_moment_graph(n);
    const auto refl = reflection_edge_pairs(G);
    const std::set<std::pair<int, int>> from_reflections(refl.begin(), refl.end());
    EXPECT_EQ(from_reflections, edge_pairs(G)) << "n = " << n;
  }
}

TEST(Graph, N1) {
  const auto G = build_moment_graph(1);
  EXPECT_EQ(G.size(), 3);
  EXPECT_EQ(G.edges().size(), 2u);
  EXPECT_EQ(G.dimension_spectrum(), (std::vector<int>{1, 2}));
}

TEST(Graph, EdgeInvariants) {
  for (int n = 1; n <= 3; ++n) {
    const auto G = build_moment_graph(n);
    for (const auto& e : G.edges()) {
      EXPECT_TRUE(G.leq(e.lo, e.hi));
      EXPECT_LT(G.vertex(e.lo).dim, G.vertex(e.hi).dim);
      EXPECT_GT(e.character.z, 0);
      EXPECT_EQ(e.character.z % 2, 0);
      EXPECT_LE(e.character.z, 4L * n - 2);
      ASSERT_TRUE(e.witness.has_value());
      for (const auto& r : e.witness->runs())
        EXPECT_EQ(mutation_character(r, n), e.character);
    }
    for (const auto& v : G.vertices()) EXPECT_EQ(static_cast<int>(G.down_edges(v.id).size()), v.dim);
  }
}

TEST(Graph, TransitiveClosureIsPatternOrder) {
  for (int n = 2; n <= 3; ++n) {
    const auto G = build_moment_graph(n);
    const int m = G.size();
    std::vector<std::vector<bool>> reach(m + 1, std::vector<bool>(m + 1, false));
    for (int v = 1; v <= m; ++v) reach[v][v] = true;
    for (const auto& e : G.edges()) reach[e.lo][e.hi] = true;
    for (int k = 1; k <= m; ++k)
      for (int a = 1; a <= m; ++a)
        if (reach[a][k])
          for (int b = 1; b <= m; ++b)
            if (reach[k][b]) reach[a][b] = true;
    for (int a = 1; a <= m; ++a)
      for (int b = 1; b <= m; ++b) EXPECT_EQ(reach[a][b], G.leq(a, b));
  }
}

TEST(Graph, TopVerticesAreMaximalPatterns) {
  for (int n = 1; n <= 3; ++n) {
    const auto G = build_moment_graph(n);
    const int top = n * (n + 1) / 2;
    std::set<JugglingPattern> tops;
    for (const auto& v : G.vertices())
      if (v.dim == top) tops.insert(v.pattern);
    std::set<JugglingPattern> maximal;
    for (const auto& J : oracle::subsets_of_size(2 * n, n)) {
      std::vector<std::vector<int>> sets;
      for (int a = 0; a < 2 * n; ++a) {
        std::vector<int> s;
        for (int j : J) s.push_back(mod(j + a - 1, 2 * n) + 1);
        std::sort(s.begin(), s.end());
        sets.push_back(s);
      }
      JugglingPattern P(n, sets);
      if (is_symplectic(P)) maximal.insert(P);
    }
    EXPECT_EQ(tops, maximal);
    EXPECT_EQ(tops.size(), std::size_t{1} << n);
  }
}

TEST(Graph, CorrectionPairCharactersAgree) {
  for (int n = 2; n <= 3; ++n)
    for (const auto& J : oracle::all_patterns(n, true))
      for (const auto& [sm, lower] : down_neighbors(J))
        if (sm.second) {
          EXPECT_EQ(mutation_character(sm.first, n), mutation_character(*sm.second, n));
        }
}

TEST(Graph, EdgeCharacterRejectsMismatch) {
  const auto refs = fixtures::reference_vertices();
  auto sm = *symplectic_mutation_between(refs[2], refs[1]);
  EXPECT_THROW(edge_character(refs[3], refs[2], sm), InvalidInput);
}

TEST(Export, DotHasThirteenNodes) {
  const std::string dot = to_dot(graph2());
  const std::regex node(R"(^  v\d+ \[label)", std::regex::multiline);
  const std::regex edge(R"( -- )");
  auto count = [&](const std::regex& re) {
    return std::distance(std::sregex_iterator(dot.begin(), dot.end(), re), std::sregex_iterator());
  };
  EXPECT_EQ(count(node), 13);
  EXPECT_EQ(count(edge), 25);
  EXPECT_NE(dot.find("(2;0;2)"), std::string::npos);
}

TEST(Export, JsonRoundtrip) {
  for (int n = 1; n <= 3; ++n) {
    const auto G = build_moment_graph(n);
    const auto text = io::graph_to_json(G).dump();
    const auto back = io::graph_from_json(io::parse(text));
    EXPECT_TRUE(back.same_as(G));
    EXPECT_EQ(io::graph_to_json(back).dump(), text);
  }
}

TEST(Export, Deterministic) {
  EXPECT_EQ(to_dot(build_moment_graph(2)), to_dot(build_moment_graph(2)));
}
