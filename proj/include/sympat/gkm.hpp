#pragma once

// GKM classes on a moment graph: edge divisibility checks, flow-up bases,
// Poincare polynomials and graded rank checks.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sympat/error.hpp"
#include "sympat/linalg.hpp"
#include "sympat/moment_graph.hpp"
#include "sympat/poly.hpp"

namespace sympat {

// Components by vertex id; absent ids are zero.
struct GKMClass {
  int n = 1;
  int vertex = 0;  // leading vertex, 0 when not a basis class
  int degree = 0;
  std::map<int, MultiPoly> components;

  MultiPoly at(int v) const {
    auto it = components.find(v);
    return it == components.end() ? MultiPoly(n) : it->second;
  }
};

struct EdgeFailure {
  int lo = 0;
  int hi = 0;
  std::string label;
};

struct ClassReport {
  std::vector<EdgeFailure> failures;
  bool ok() const { return failures.empty(); }
};

inline ClassReport verify_class(const MomentGraph& G, const GKMClass& cls) {
  if (cls.n != G.n()) throw InvalidInput("verify_class: class and graph ranks differ");
  for (const auto& [v, p] : cls.components) {
    if (v < 1 || v > G.size()) throw InvalidInput("verify_class: unknown vertex id " + std::to_string(v));
    if (p.n() != G.n()) throw InvalidInput("verify_class: component rank mismatch at " + std::to_string(v));
  }
  ClassReport report;
  for (const auto& e : G.edges())
    if (!divisible_by_linear(cls.at(e.hi) - cls.at(e.lo), e.character))
      report.failures.push_back({e.lo, e.hi, e.character.label()});
  return report;
}

inline MultiPoly down_edge_product(const MomentGraph& G, int v) {
  MultiPoly p = MultiPoly::constant(G.n(), 1);
  for (const auto* e : G.down_edges(v)) p = p * MultiPoly::linear(e->character);
  return p;
}

namespace detail {

// Linear equations on the coefficients of degree-d components at a chosen set
// of vertices, one block per edge, expressing edge divisibility.
class CongruenceSystem {
public:
  CongruenceSystem(const MomentGraph& G, int d, std::vector<int> unknown_vertices)
      : G_(G), d_(d), monos_(monomials_of_degree(G.n() + 1, d)), unknowns_(std::move(unknown_vertices)) {
    for (std::size_t k = 0; k < unknowns_.size(); ++k) slot_[unknowns_[k]] = k;
    reductions_.resize(G.edges().size());
    for (std::size_t e = 0; e < G.edges().size(); ++e)
      for (const auto& m : monos_) {
        MultiPoly p(G.n());
        p.add_term(m, 1);
        reductions_[e].push_back(reduce_mod_linear(p, G.edges()[e].character));
      }
  }

  std::size_t columns() const { return unknowns_.size() * monos_.size(); }
  const std::vector<Monomial>& monomials() const { return monos_; }
  const std::vector<int>& unknown_vertices() const { return unknowns_; }

  // Builds A u = b, where `fixed` holds the known components.
  std::pair<Matrix, std::vector<Rational>> build(const std::map<int, MultiPoly>& fixed) const {
    std::vector<std::map<std::size_t, Rational>> rows;
    std::vector<Rational> rhs;
    for (std::size_t e = 0; e < G_.edges().size(); ++e) {
      const auto& edge = G_.edges()[e];
      std::map<Monomial, std::size_t> row_of;
      auto row_for = [&](const Monomial& m) {
        auto [it, inserted] = row_of.emplace(m, rows.size());
        if (inserted) {
          rows.emplace_back();
          rhs.emplace_back(0);
        }
        return it->second;
      };
      for (auto [v, sign] : {std::pair{edge.hi, 1}, std::pair{edge.lo, -1}}) {
        if (auto it = slot_.find(v); it != slot_.end()) {
          for (std::size_t k = 0; k < monos_.size(); ++k)
            for (const auto& [m, c] : reductions_[e][k].terms())
              rows[row_for(m)][it->second * monos_.size() + k] += c * sign;
        } else if (auto f = fixed.find(v); f != fixed.end()) {
          const MultiPoly reduced = reduce_mod_linear(f->second, edge.character);
          for (const auto& [m, c] : reduced.terms()) rhs[row_for(m)] -= c * sign;
        }
      }
    }
    Matrix A(rows.size(), columns());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [c, val] : rows[r]) A(r, c) = val;
    return {std::move(A), std::move(rhs)};
  }

  MultiPoly component(const std::vector<Rational>& u, std::size_t slot) const {
    MultiPoly p(G_.n());
    for (std::size_t k = 0; k < monos_.size(); ++k) p.add_term(monos_[k], u[slot * monos_.size() + k]);
    return p;
  }

private:
  const MomentGraph& G_;
  int d_;
  std::vector<Monomial> monos_;
  std::vector<int> unknowns_;
  std::map<int, std::size_t> slot_;
  std::vector<std::vector<MultiPoly>> reductions_;
};

// Independent rows of [A | b] as (A', b'), or nullopt when inconsistent.
inline std::optional<std::pair<Matrix, std::vector<Rational>>> compress(const Matrix& A,
                                                                        const std::vector<Rational>& b) {
  Matrix aug(A.rows(), A.cols() + 1);
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < A.cols(); ++c) aug(r, c) = A(r, c);
    aug(r, A.cols()) = b[r];
  }
  const auto e = rref(aug);
  Matrix out(e.pivots.size(), A.cols());
  std::vector<Rational> rhs(e.pivots.size());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == A.cols()) return std::nullopt;
    for (std::size_t c = 0; c < A.cols(); ++c) out(r, c) = e.reduced(r, c);
    rhs[r] = e.reduced(r, A.cols());
  }
  return std::pair{std::move(out), std::move(rhs)};
}

// Solves A u = b with the columns outside `keep` forced to zero.
inline std::optional<std::vector<Rational>> solve_on(const Matrix& A, const std::vector<Rational>& b,
                                                     const std::vector<std::size_t>& keep) {
  Matrix sub(A.rows(), keep.size());
  for (std::size_t r = 0; r < A.rows(); ++r)
    for (std::size_t k = 0; k < keep.size(); ++k) sub(r, k) = A(r, keep[k]);
  auto x = solve(sub, b);
  if (!x) return std::nullopt;
  std::vector<Rational> u(A.cols());
  for (std::size_t k = 0; k < keep.size(); ++k) u[keep[k]] = (*x)[k];
  return u;
}

}  // namespace detail

// The flow-up class at v: degree dim(v), supported on {w >= v}, equal at v to
// the product of its down-edge characters. Components are zeroed greedily in
// increasing vertex order while the system stays solvable.
inline GKMClass flow_up_class(const MomentGraph& G, int v) {
  const auto& vert = G.vertex(v);
  const int d = vert.dim;
  if (static_cast<int>(G.down_edges(v).size()) != d)
    throw InternalError("vertex " + std::to_string(v) + " has " +
                        std::to_string(G.down_edges(v).size()) + " down-edges but dimension " +
                        std::to_string(d));
  const MultiPoly diag = down_edge_product(G, v);
  std::vector<int> above;
  for (const auto& w : G.vertices())
    if (w.id != v && G.leq(v, w.id)) above.push_back(w.id);

  detail::CongruenceSystem sys(G, d, above);
  const auto [A_full, b_full] = sys.build({{v, diag}});
  const auto reduced = detail::compress(A_full, b_full);
  if (!reduced) throw InternalError("flow-up system at vertex " + std::to_string(v) + " is infeasible");
  const auto& [A, b] = *reduced;
  const std::size_t width = sys.monomials().size();
  std::vector<bool> zeroed(above.size(), false);
  auto keep_columns = [&](std::size_t skip) {
    std::vector<std::size_t> keep;
    for (std::size_t slot = 0; slot < above.size(); ++slot)
      if (!zeroed[slot] && slot != skip)
        for (std::size_t k = 0; k < width; ++k) keep.push_back(slot * width + k);
    return keep;
  };
  auto u = *detail::solve_on(A, b, keep_columns(above.size()));
  for (std::size_t slot = 0; slot < above.size(); ++slot) {
    bool already_zero = true;
    for (std::size_t k = 0; k < width && already_zero; ++k) already_zero = u[slot * width + k] == 0;
    if (!already_zero) {
      auto next = detail::solve_on(A, b, keep_columns(slot));
      if (!next) continue;
      u = std::move(*next);
    }
    zeroed[slot] = true;
  }
  u = *detail::solve_on(A, b, keep_columns(above.size()));
  GKMClass cls{G.n(), v, d, {{v, diag}}};
  for (std::size_t slot = 0; slot < above.size(); ++slot) {
    MultiPoly p = sys.component(u, slot);
    if (!p.is_zero()) cls.components.emplace(above[slot], std::move(p));
  }
  return cls;
}

struct BasisTable {
  int n = 1;
  std::vector<GKMClass> classes;
};

inline BasisTable flow_up_basis(const MomentGraph& G) {
  BasisTable t{G.n(), {}};
  for (const auto& v : G.vertices()) t.classes.push_back(flow_up_class(G, v.id));
  return t;
}

// Coefficient of q^d is the number of symplectic patterns of dimension d.
inline std::vector<long> poincare_polynomial(int n, int limit = configured_max_n()) {
  std::vector<long> out;
  for (const auto& v : symplectic_vertices(n, limit)) {
    if (v.dim >= static_cast<int>(out.size())) out.resize(v.dim + 1, 0);
    ++out[v.dim];
  }
  return out;
}

inline long binomial(long a, long b) {
  if (b < 0 || a < b) return 0;
  long r = 1;
  for (long k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

struct DegreeRank {
  int degree = 0;
  long solution_dim = 0;
  long predicted = 0;
  bool ok() const { return solution_dim == predicted; }
};

struct RankReport {
  std::vector<DegreeRank> degrees;
  bool ok() const {
    for (const auto& d : degrees)
      if (!d.ok()) return false;
    return true;
  }
};

// Dimension of the space of degree-d tuples satisfying every edge congruence,
// against the free-module count sum_v #monomials of degree d - dim(v).
inline RankReport graded_rank_check(const MomentGraph& G, int max_degree) {
  if (max_degree < 0) throw InvalidInput("graded_rank_check: negative degree");
  std::vector<int> all;
  for (const auto& v : G.vertices()) all.push_back(v.id);
  RankReport report;
  for (int d = 0; d <= max_degree; ++d) {
    detail::CongruenceSystem sys(G, d, all);
    auto [A, b] = sys.build({});
    const long dim = static_cast<long>(A.cols()) - static_cast<long>(rank(A));
    long predicted = 0;
    for (const auto& v : G.vertices()) predicted += binomial(d - v.dim + G.n(), G.n());
    report.degrees.push_back({d, dim, predicted});
  }
  return report;
}

// Rank of the degree-d span of the basis over the polynomial ring: all
// products m * xi with deg m + deg xi = d, flattened to coefficient vectors.
inline DegreeRank basis_degree_rank(const MomentGraph& G, const BasisTable& basis, int d) {
  const auto monos = monomials_of_degree(G.n() + 1, d);
  std::map<Monomial, std::size_t> index;
  for (std::size_t k = 0; k < monos.size(); ++k) index[monos[k]] = k;
  Matrix M;
  long count = 0;
  for (const auto& cls : basis.classes) {
    if (cls.degree > d) continue;
    for (const auto& m : monomials_of_degree(G.n() + 1, d - cls.degree)) {
      MultiPoly mono(G.n());
      mono.add_term(m, 1);
      std::vector<Rational> row(static_cast<std::size_t>(G.size()) * monos.size());
      for (const auto& [v, p] : cls.components)
      {
        const MultiPoly prod = mono * p;
        for (const auto& [mm, c] : prod.terms()) row[(v - 1) * monos.size() + index.at(mm)] = c;
      }
      M.append_row(row);
      ++count;
    }
  }
  return {d, count == 0 ? 0 : static_cast<long>(rank(M)), count};
}

}  // namespace sympat
