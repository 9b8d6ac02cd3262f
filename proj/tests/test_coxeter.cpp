#include <gtest/gtest.h>

#include "support.hpp"

using namespace sympat;

namespace {

std::vector<AffinePermutation> symplectic_group_elements(int n) {
  std::vector<AffinePermutation> out;
  for (const auto& J : oracle::all_patterns(n, true)) out.push_back(to_group(from_pattern(J)));
  return out;
}

}  // namespace

TEST(R0Map, Examples) {
  EXPECT_EQ(r0_map(identity(2)), identity(2));
  EXPECT_EQ(r0_map(simple_reflection(2, 0)), simple_reflection(2, -2));
  EXPECT_EQ(simple_reflection(2, -2), simple_reflection(2, 2));
}

TEST(R0Map, InvolutionOnRandomWords) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    AffinePermutation g = identity(2);
    const int len = std::uniform_int_distribution<int>(0, 12)(rng);
    for (int k = 0; k < len; ++k)
      g = compose(g, simple_reflection(2, std::uniform_int_distribution<int>(0, 3)(rng)));
    EXPECT_EQ(r0_map(r0_map(g)), g);
  }
}

TEST(Generators, FixedAndInvolutive) {
  for (int n = 1; n <= 4; ++n)
    for (int a = -1; a <= n - 1; ++a) {
      const auto g = generator(n, a).realization;
      EXPECT_TRUE(is_fixed(g));
      EXPECT_EQ(compose(g, g), identity(n));
    }
  EXPECT_THROW(generator(2, 2), InvalidInput);
  EXPECT_THROW(generator(2, -2), InvalidInput);
}

TEST(Words, Evaluate) {
  EXPECT_EQ(evaluate_word({2, {}}), identity(2));
  EXPECT_EQ(element_order(compose(generator(2, -1).realization, generator(2, 0).realization)), 4);
  EXPECT_EQ(element_order(compose(generator(3, 0).realization, generator(3, 1).realization)), 3);
}

TEST(Relations, N2) {
  const auto rep = verify_relations(2);
  EXPECT_TRUE(rep.ok());
  std::map<std::pair<int, int>, int> want{{{-1, 0}, 4}, {{0, 1}, 4}, {{-1, 1}, 2}};
  for (const auto& c : rep.checks) {
    if (c.a == c.b) {
      EXPECT_EQ(c.actual, 1);
    }
    if (auto it = want.find({c.a, c.b}); it != want.end()) {
      EXPECT_EQ(c.actual, it->second);
    }
  }
}

TEST(Relations, N3HasInteriorOrderThree) {
  const auto rep = verify_relations(3);
  EXPECT_TRUE(rep.ok());
  bool three = false;
  for (const auto& c : rep.checks) three |= c.actual == 3;
  EXPECT_TRUE(three);
}

TEST(Relations, N4AndRejectN1) {
  EXPECT_TRUE(verify_relations(4).ok());
  EXPECT_THROW(verify_relations(1), InvalidInput);
}

TEST(GreedyWord, Examples) {
  EXPECT_TRUE(greedy_word(identity(2)).letters.empty());
  const auto g = to_group(AffinePermutation(2, fixtures::window_J()));
  const auto w = greedy_word(g);
  EXPECT_EQ(w.letters.size(), 1u);
  EXPECT_EQ(evaluate_word(w), g);
  EXPECT_THROW(greedy_word(simple_reflection(2, 0)), InvalidInput);
}

TEST(GreedyWord, LengthIsSymplecticLength) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& J : oracle::all_patterns(n, true)) {
      const auto f = from_pattern(J);
      const auto g = to_group(f);
      const auto w = greedy_word(g);
      EXPECT_EQ(evaluate_word(w), g);
      EXPECT_EQ(static_cast<long>(w.letters.size()), symplectic_length(f)) << J.str();
    }
}

TEST(GreedyWord, ReducedAgainstBreadthFirstSearch) {
  // Shortest words by BFS over the generators, n = 2, up to length 4.
  const int n = 2;
  std::map<std::vector<long>, int> dist{{identity(n).window(), 0}};
  std::vector<AffinePermutation> frontier{identity(n)};
  for (int d = 1; d <= 4; ++d) {
    std::vector<AffinePermutation> next;
    for (const auto& g : frontier)
      for (int a = -1; a <= n - 1; ++a) {
        auto h = compose(g, generator(n, a).realization);
        if (dist.emplace(h.window(), d).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  for (const auto& [w, d] : dist) EXPECT_EQ(type_c_length(AffinePermutation(n, w)), d);
}

TEST(GroupElements, AreFixed) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& g : symplectic_group_elements(n)) EXPECT_TRUE(is_fixed(g));
}

TEST(TypeCReflections, Shapes) {
  // (i, -i-1) kinds.
  EXPECT_TRUE(is_type_c_reflection(generator(2, -1).realization));
  EXPECT_TRUE(is_type_c_reflection(generator(2, 1).realization));
  // Paired kind.
  EXPECT_TRUE(is_type_c_reflection(generator(3, 0).realization));
  EXPECT_FALSE(is_type_c_reflection(simple_reflection(2, 0)));
  EXPECT_FALSE(is_type_c_reflection(identity(2)));
  EXPECT_FALSE(is_type_c_reflection(compose(generator(2, -1).realization, generator(2, 0).realization)));
}

TEST(TypeCReflections, ConjugatesOfGeneratorsAreReflections) {
  std::mt19937 rng(5);
  for (int n = 2; n <= 3; ++n)
    for (int trial = 0; trial < 60; ++trial) {
      AffinePermutation w = identity(n);
      const int len = std::uniform_int_distribution<int>(0, 6)(rng);
      for (int k = 0; k < len; ++k)
        w = compose(w, generator(n, std::uniform_int_distribution<int>(-1, n - 1)(rng)).realization);
      const auto r = generator(n, std::uniform_int_distribution<int>(-1, n - 1)(rng)).realization;
      EXPECT_TRUE(is_type_c_reflection(compose(compose(w, r), inverse(w))));
    }
}

TEST(WordJson, Roundtrip) {
  const TypeCWord w{3, {-1, 0, 2, 1}};
  EXPECT_EQ(io::word_from_json(io::word_to_json(w)), w);
  EXPECT_THROW(io::word_from_json(io::parse(R"({"n":2,"letters":[3]})")), InvalidInput);
}
