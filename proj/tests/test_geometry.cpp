#include <gtest/gtest.h>

#include "support.hpp"

using namespace sympat;

namespace {

std::vector<Rational> row_of(const Matrix& m, std::size_t r) { return m.row(r); }

bool isotropic(const SubspaceTuple& V) {
  const int n = V.n();
  for (int a = 0; a < 2 * n; ++a)
    for (std::size_t r = 0; r < V.at(a).rows(); ++r)
      for (std::size_t s = 0; s < V.at(-a).rows(); ++s)
        if (pairing(n, row_of(V.at(a), r), row_of(V.at(-a), s)) != 0) return false;
  return true;
}

std::vector<Matrix> raw_spaces(const JugglingPattern& J, const SpCoordinates& c) {
  return point_from_coordinates(J, c).spaces();
}

}  // namespace

TEST(Form, SelfTest) {
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(form_self_test(n).ok()) << "n = " << n;
}

TEST(Form, PairingMatchesGram) {
  const auto O = omega_form(2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      std::vector<Rational> e(4), f(4);
      e[i] = 1, f[j] = 1;
      EXPECT_EQ(pairing(2, e, f), O(i, j));
    }
}

TEST(CoordinatePoint, Examples) {
  for (const auto& J : oracle::all_patterns(2)) {
    const auto p = coordinate_point(J);
    EXPECT_TRUE(is_subrepresentation(p));
    SpCoordinates zero;
    if (is_symplectic(J)) {
      for (const auto& c : symplectic_triple_classes(J)) zero[c.representative()] = 0;
      EXPECT_EQ(point_from_coordinates(J, zero), p);
    }
  }
}

TEST(PointFromCoordinates, SingleClassExample) {
  const auto J = fixtures::pattern_J();
  const auto V = point_from_coordinates(J, {{{0, 3, 2}, Rational(1)}});
  Matrix want(2, 4);
  want(0, 1) = 1, want(0, 2) = 1, want(1, 3) = 1;
  EXPECT_EQ(V.at(0), row_space(want));
  for (int a = 1; a < 4; ++a) EXPECT_EQ(V.at(a), coordinate_point(J).at(a));
  EXPECT_TRUE(is_symplectic_point(V));
  EXPECT_THROW(point_from_coordinates(J, {}), InvalidInput);
}

TEST(PointFromCoordinates, MirrorSignAtVertexTen) {
  const auto J = fixtures::mutation_upper();
  const auto classes = symplectic_triple_classes(J);
  const TripleClass* cls = nullptr;
  for (const auto& c : classes)
    for (const auto& m : c.members)
      if (m == CoordinateTriple{0, 3, 1}) cls = &c;
  ASSERT_NE(cls, nullptr);
  int sign31 = 0, sign42 = 0;
  for (std::size_t k = 0; k < cls->members.size(); ++k) {
    if (cls->members[k] == CoordinateTriple{0, 3, 1}) sign31 = cls->signs[k];
    if (cls->members[k] == CoordinateTriple{0, 4, 2}) sign42 = cls->signs[k];
  }
  EXPECT_EQ(sign31 * sign42, -1);

  SpCoordinates c;
  for (const auto& k : classes) c[k.representative()] = 0;
  c[cls->representative()] = 5;
  const auto raw = raw_spaces(J, c);
  // Rows of V_0 have pivots e_1 and e_2.
  EXPECT_EQ(raw[0](0, 2), -raw[0](1, 3));
  EXPECT_NE(raw[0](0, 2), 0);
  EXPECT_TRUE(is_symplectic_point(point_from_coordinates(J, c)));
}

TEST(Subrepresentation, SampledN2Cells) {
  RationalSampler rng(2024);
  for (const auto& J : oracle::all_patterns(2, true))
    for (int s = 0; s < 50; ++s) {
      const auto V = point_from_coordinates(J, sample_coordinates(J, rng));
      ASSERT_TRUE(is_subrepresentation(V)) << J.str();
      ASSERT_TRUE(is_symplectic_point(V)) << J.str();
      ASSERT_TRUE(isotropic(V)) << J.str();
      ASSERT_EQ(tau_point(tau_point(V)), V);
    }
}

TEST(Subrepresentation, PerturbationBreaksIt) {
  RationalSampler rng(77);
  int broken = 0, tried = 0;
  for (const auto& J : oracle::all_patterns(2, true))
    for (int s = 0; s < 10; ++s) {
      auto spaces = raw_spaces(J, sample_coordinates(J, rng));
      const int a = rng.next_int(0, 3);
      const int r = rng.next_int(0, 1);
      const int c = rng.next_int(0, 3);
      spaces[a](r, c) += 1;
      try {
        SubspaceTuple V(2, spaces);
        ++tried;
        broken += !is_subrepresentation(V);
      } catch (const InvalidInput&) {
      }
    }
  ASSERT_GT(tried, 100);
  EXPECT_GT(broken * 2, tried) << broken << " of " << tried;
}

TEST(Tau, CoordinatePointsExhaustiveN2) {
  for (const auto& J : oracle::all_patterns(2)) {
    const auto p = coordinate_point(J);
    EXPECT_EQ(tau_point(p), coordinate_point(R_pattern(J))) << J.str();
    EXPECT_EQ(tau_point(tau_point(p)), p);
    EXPECT_EQ(is_symplectic_point(p), is_symplectic(J));
  }
}

TEST(Tau, InvolutionOnRandomTuples) {
  RationalSampler rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Matrix> spaces;
    for (int a = 0; a < 4; ++a) {
      Matrix m = random_matrix(2, 4, rng);
      while (rank(m) != 2) m = random_matrix(2, 4, rng);
      spaces.push_back(m);
    }
    const SubspaceTuple V(2, spaces);
    EXPECT_EQ(tau_point(tau_point(V)), V);
  }
}

TEST(Geometry, SampledN3LinearCells) {
  RationalSampler rng(31);
  int linear = 0, total = 0;
  for (const auto& J : oracle::all_patterns(3, true)) {
    ++total;
    EXPECT_TRUE(is_symplectic_point(coordinate_point(J)));
    if (!has_linear_coordinates(J)) continue;
    ++linear;
    for (int s = 0; s < 5; ++s) {
      const auto V = point_from_coordinates(J, sample_coordinates(J, rng));
      EXPECT_TRUE(is_subrepresentation(V)) << J.str();
      EXPECT_TRUE(is_symplectic_point(V)) << J.str();
    }
  }
  EXPECT_EQ(total, 79);
  EXPECT_EQ(linear, 62);
  for (const auto& J : oracle::all_patterns(2, true)) EXPECT_TRUE(has_linear_coordinates(J));
}

TEST(Geometry, NonlinearChartDetected) {
  // Where the chart is flagged nonlinear, some sample fails the shift test.
  RationalSampler rng(8);
  for (const auto& J : oracle::all_patterns(3, true)) {
    if (has_linear_coordinates(J)) continue;
    bool failed = false;
    for (int s = 0; s < 5 && !failed; ++s)
      failed = !is_subrepresentation(point_from_coordinates(J, sample_coordinates(J, rng)));
    EXPECT_TRUE(failed) << J.str();
  }
}

TEST(Dual, RandomMatrices) {
  RationalSampler rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 2;
    Matrix A = random_matrix(2 * n, 2 * n, rng);
    while (rank(A) != static_cast<std::size_t>(2 * n)) A = random_matrix(2 * n, 2 * n, rng);
    const Matrix V = random_matrix(n, 2 * n, rng);
    const auto d = dual_check(n, A, V);
    EXPECT_TRUE(d.invertible);
    EXPECT_TRUE(d.contained);
    EXPECT_TRUE(d.equal);
  }
}

TEST(Torus, PreservesForm) {
  RationalSampler rng(3);
  for (int n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      const Rational z = rng.next_nonzero();
      std::vector<Rational> gamma;
      for (int m = 0; m < n; ++m) gamma.push_back(rng.next_nonzero());
      const int a = rng.next_int(0, 2 * n - 1);
      const auto wa = torus_weights(n, a, z, gamma);
      const auto wb = torus_weights(n, -a, z, gamma);
      std::vector<Rational> v(2 * n), w(2 * n), tv(2 * n), tw(2 * n);
      for (int p = 0; p < 2 * n; ++p) {
        v[p] = rng.next(), w[p] = rng.next();
        tv[p] = wa[p] * v[p], tw[p] = wb[p] * w[p];
      }
      EXPECT_EQ(pairing(n, tv, tw), pairing(n, v, w));
    }
}

TEST(SubspaceTuple, RejectsBadInput) {
  EXPECT_THROW(SubspaceTuple(2, {Matrix(2, 4)}), InvalidInput);
  EXPECT_THROW(SubspaceTuple(2, {Matrix(2, 4), Matrix(2, 4), Matrix(2, 4), Matrix(2, 4)}), InvalidInput);
}
