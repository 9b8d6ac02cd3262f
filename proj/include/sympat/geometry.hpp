#pragma once

// Points of the quiver Grassmannian as tuples of subspaces of Q^{2n}, the
// symplectic form, the shift operator, the tau involution and cell
// coordinates.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "sympat/cells.hpp"
#include "sympat/error.hpp"
#include "sympat/linalg.hpp"
#include "sympat/pattern.hpp"

namespace sympat {

// Gram matrix: (e_i, e_j) = (-1)^(i+1) when j = tilde(i), else 0 (1-based).
inline Matrix omega_form(int n) {
  Matrix m(2 * n, 2 * n);
  for (int i = 1; i <= 2 * n; ++i) m(i - 1, tilde(i, n) - 1) = (i % 2 == 1) ? 1 : -1;
  return m;
}

// s(e_j) = e_{j+1}, s(e_{2n}) = 0, acting on column vectors.
inline Matrix shift_matrix(int n) {
  Matrix m(2 * n, 2 * n);
  for (int j = 1; j < 2 * n; ++j) m(j, j - 1) = 1;
  return m;
}

struct FormSelfTest {
  bool transpose_is_negative = false;
  bool square_is_minus_identity = false;
  bool shift_adjoint = false;
  bool shift_nilpotent = false;
  bool ok() const {
    return transpose_is_negative && square_is_minus_identity && shift_adjoint && shift_nilpotent;
  }
};

inline FormSelfTest form_self_test(int n) {
  const Matrix O = omega_form(n), S = shift_matrix(n);
  const Matrix I = Matrix::identity(2 * n);
  FormSelfTest t;
  t.transpose_is_negative = O.transpose() == -O;
  t.square_is_minus_identity = O * O == -I;
  t.shift_adjoint = S.transpose() == O * S * O;
  Matrix p = S;
  for (int k = 1; k < 2 * n; ++k) p = p * S;
  Matrix p_prev = Matrix::identity(2 * n);
  for (int k = 1; k < 2 * n; ++k) p_prev = p_prev * S;
  t.shift_nilpotent = p == Matrix(2 * n, 2 * n) && !(p_prev == Matrix(2 * n, 2 * n));
  return t;
}

inline Rational pairing(int n, const std::vector<Rational>& v, const std::vector<Rational>& w) {
  Rational s = 0;
  for (int i = 1; i <= 2 * n; ++i) {
    const int j = tilde(i, n);
    s += (i % 2 == 1 ? 1 : -1) * v[i - 1] * w[j - 1];
  }
  return s;
}

// Row space of `rows` in reduced echelon form.
inline Matrix row_space(const Matrix& rows) { return rref(rows).reduced; }

inline bool contains_rows(const Matrix& space, const Matrix& rows) {
  Matrix stacked = space;
  for (std::size_t r = 0; r < rows.rows(); ++r) stacked.append_row(rows.row(r));
  return rank(stacked) == rank(space);
}

// The Omega-orthogonal complement of the row space of V.
inline Matrix orthogonal_complement(const Matrix& V, int n) {
  if (V.rows() == 0) return Matrix::identity(2 * n);
  Matrix rows;
  for (auto& v : nullspace(V * omega_form(n))) rows.append_row(v);
  if (rows.rows() == 0) return Matrix(0, 2 * n);
  return row_space(rows);
}

// One subspace of Q^{2n} per vertex, each given by the reduced echelon basis
// of its row space.
class SubspaceTuple {
public:
  SubspaceTuple() = default;
  SubspaceTuple(int n, std::vector<Matrix> spaces) : n_(n) {
    if (static_cast<int>(spaces.size()) != 2 * n)
      throw InvalidInput("subspace tuple needs " + std::to_string(2 * n) + " spaces");
    for (std::size_t a = 0; a < spaces.size(); ++a) {
      if (static_cast<int>(spaces[a].cols()) != 2 * n)
        throw InvalidInput("space " + std::to_string(a) + " has the wrong ambient dimension");
      Matrix r = row_space(spaces[a]);
      if (static_cast<int>(r.rows()) != n)
        throw InvalidInput("space " + std::to_string(a) + " has rank " + std::to_string(r.rows()) +
                           ", expected " + std::to_string(n));
      spaces_.push_back(std::move(r));
    }
  }

  int n() const { return n_; }
  const std::vector<Matrix>& spaces() const { return spaces_; }
  const Matrix& at(int a) const { return spaces_[mod(a, 2 * n_)]; }

  bool operator==(const SubspaceTuple&) const = default;

private:
  int n_ = 1;
  std::vector<Matrix> spaces_;
};

inline SubspaceTuple coordinate_point(const JugglingPattern& J) {
  const int N = J.period();
  std::vector<Matrix> spaces;
  for (int a = 0; a < N; ++a) {
    Matrix m(J.n(), N);
    int r = 0;
    for (int j : J.at(a).elements()) m(r++, j - 1) = 1;
    spaces.push_back(std::move(m));
  }
  return SubspaceTuple(J.n(), std::move(spaces));
}

inline bool is_subrepresentation(const SubspaceTuple& V) {
  const Matrix St = shift_matrix(V.n()).transpose();
  for (int a = 0; a < 2 * V.n(); ++a)
    if (!contains_rows(V.at(a + 1), V.at(a) * St)) return false;
  return true;
}

// tau(V)_i = (V_{-i})^perp.
inline SubspaceTuple tau_point(const SubspaceTuple& V) {
  std::vector<Matrix> spaces;
  for (int i = 0; i < 2 * V.n(); ++i) spaces.push_back(orthogonal_complement(V.at(-i), V.n()));
  return SubspaceTuple(V.n(), std::move(spaces));
}

inline bool is_symplectic_point(const SubspaceTuple& V) { return tau_point(V) == V; }

// True when the shift relations make the cell coordinates a linear chart:
// no vertex a, j in J_a, i not in J_a with j < i, i + 1 in J_{a+1} and some
// t > i + 1 missing from J_{a+1}. Otherwise the subrepresentation condition
// has quadratic terms.
inline bool has_linear_coordinates(const JugglingPattern& J) {
  const int N = J.period();
  for (int a = 0; a < N; ++a) {
    const IndexSet& cur = J.at(a);
    const IndexSet& next = J.at(a + 1);
    for (int j : cur.elements())
      for (int i = j + 1; i < N; ++i) {
        if (cur.contains(i) || !next.contains(i + 1)) continue;
        for (int t = i + 2; t <= N; ++t)
          if (!next.contains(t)) return false;
      }
  }
  return true;
}

using SpCoordinates = std::map<CoordinateTriple, Rational>;

// Point of the symplectic cell of J with the given value on each class
// representative; v^{(a)}_j = e_j + sum_i u^{(a)}_{i,j} e_i.
inline SubspaceTuple point_from_coordinates(const JugglingPattern& J, const SpCoordinates& coords) {
  const auto classes = symplectic_triple_classes(J);
  if (coords.size() != classes.size())
    throw InvalidInput("expected " + std::to_string(classes.size()) + " coordinates, got " +
                       std::to_string(coords.size()));
  std::map<CoordinateTriple, Rational> u;
  for (const auto& c : classes) {
    auto it = coords.find(c.representative());
    if (it == coords.end())
      throw InvalidInput("missing coordinate for class " + c.representative().str());
    for (std::size_t k = 0; k < c.members.size(); ++k) u[c.members[k]] = c.signs[k] * it->second;
  }
  const int N = J.period();
  std::vector<Matrix> spaces;
  for (int a = 0; a < N; ++a) {
    Matrix m(J.n(), N);
    int r = 0;
    for (int j : J.at(a).elements()) {
      m(r, j - 1) = 1;
      for (int i = j + 1; i <= N; ++i)
        if (auto it = u.find({a, i, j}); it != u.end()) m(r, i - 1) = it->second;
      ++r;
    }
    spaces.push_back(std::move(m));
  }
  return SubspaceTuple(J.n(), std::move(spaces));
}

// Seeded source of small rationals p/q with |p| <= 9 and q in {1, 2, 3}.
class RationalSampler {
public:
  explicit RationalSampler(std::uint32_t seed) : rng_(seed) {}

  Rational next() {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 3);
    return Rational(num(rng_), den(rng_));
  }
  Rational next_nonzero() {
    Rational r = next();
    while (r == 0) r = next();
    return r;
  }
  int next_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

private:
  std::mt19937 rng_;
};

inline SpCoordinates sample_coordinates(const JugglingPattern& J, RationalSampler& rng) {
  SpCoordinates c;
  for (const auto& cls : symplectic_triple_classes(J)) c[cls.representative()] = rng.next();
  return c;
}

inline Matrix random_matrix(std::size_t rows, std::size_t cols, RationalSampler& rng) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.next_int(-3, 3);
  return m;
}

struct DualCheck {
  bool contained = false;
  bool equal = false;
  bool invertible = false;
};

// Omega A^t Omega (A V)^perp against V^perp.
inline DualCheck dual_check(int n, const Matrix& A, const Matrix& V) {
  const Matrix O = omega_form(n);
  const Matrix AV = V * A.transpose();
  const Matrix W = orthogonal_complement(row_space(AV), n);
  const Matrix M = O * A.transpose() * O;
  const Matrix image = W.rows() ? row_space(W * M.transpose()) : W;
  const Matrix Vperp = orthogonal_complement(row_space(V), n);
  DualCheck d;
  d.invertible = rank(A) == A.rows();
  d.contained = image.rows() == 0 || contains_rows(Vperp, image);
  d.equal = d.contained && image.rows() == Vperp.rows();
  return d;
}

// Diagonal action of (z, gamma_0, ..., gamma_{n-1}) on Q^{2n} at vertex a:
// e_p scales by z^{2p-2n-1} gamma_{(a-p) mod 2n}, gamma_{2n-1-m} = gamma_m^{-1}.
inline std::vector<Rational> torus_weights(int n, int a, const Rational& z,
                                           const std::vector<Rational>& gamma) {
  if (static_cast<int>(gamma.size()) != n) throw InvalidInput("torus_weights: need n gammas");
  std::vector<Rational> out;
  for (int p = 1; p <= 2 * n; ++p) {
    const int e = 2 * p - 2 * n - 1;
    Rational zp = 1;
    for (int k = 0; k < (e < 0 ? -e : e); ++k) zp *= z;
    if (e < 0) zp = 1 / zp;
    const int seg = mod(a - p, 2 * n);
    const Rational g = seg < n ? gamma[seg] : 1 / gamma[2 * n - 1 - seg];
    out.push_back(zp * g);
  }
  return out;
}

}  // namespace sympat
