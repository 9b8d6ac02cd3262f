#pragma once

// Multivariate polynomials in x, y_0, ..., y_{n-1} with exact rational
// coefficients.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "sympat/error.hpp"
#include "sympat/linalg.hpp"
#include "sympat/moment_graph.hpp"

namespace sympat {

// Exponents of (x, y_0, ..., y_{n-1}).
using Monomial = std::vector<int>;

// All monomials of total degree d in `vars` variables, ordered with x^d first.
inline std::vector<Monomial> monomials_of_degree(int vars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur(vars, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == vars - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  if (vars == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, d);
  return out;
}

class MultiPoly {
public:
  MultiPoly() = default;
  explicit MultiPoly(int n) : n_(n) {
    if (n < 1) throw InvalidInput("polynomial rank must be positive");
  }

  static MultiPoly constant(int n, const Rational& c) {
    MultiPoly p(n);
    p.add_term(Monomial(n + 1, 0), c);
    return p;
  }
  // Variable 0 is x, variable m + 1 is y_m.
  static MultiPoly variable(int n, int var) {
    if (var < 0 || var > n) throw InvalidInput("variable index out of range");
    Monomial m(n + 1, 0);
    m[var] = 1;
    MultiPoly p(n);
    p.add_term(m, 1);
    return p;
  }
  static MultiPoly linear(const Character& c) {
    MultiPoly p(c.n);
    p.add_term(unit(c.n, 0), c.z);
    for (int m = 0; m < c.n; ++m) p.add_term(unit(c.n, m + 1), c.gamma[m]);
    return p;
  }

  int n() const { return n_; }
  int vars() const { return n_ + 1; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (static_cast<int>(m.size()) != vars()) throw InvalidInput("monomial has the wrong length");
    for (int e : m)
      if (e < 0) throw InvalidInput("negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Total degree, or -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, total(m));
    return d;
  }

  // The zero polynomial is homogeneous of every degree.
  bool is_homogeneous(int d) const {
    for (const auto& [m, c] : terms_)
      if (total(m) != d) return false;
    return true;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  MultiPoly scaled(const Rational& s) const {
    MultiPoly p(n_);
    if (s == 0) return p;
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, c * s);
    return p;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check(b);
    MultiPoly p(a.n_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(a.vars());
        for (int k = 0; k < a.vars(); ++k) m[k] = ma[k] + mb[k];
        p.add_term(m, ca * cb);
      }
    return p;
  }

  MultiPoly pow(int e) const {
    MultiPoly r = constant(n_, 1);
    for (int k = 0; k < e; ++k) r = r * *this;
    return r;
  }

  // Replaces variable `var` by the polynomial `value`.
  MultiPoly substitute(int var, const MultiPoly& value) const {
    check(value);
    if (var < 0 || var >= vars()) throw InvalidInput("substitute: variable index out of range");
    MultiPoly out(n_);
    std::map<int, MultiPoly> powers;
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      const int e = rest[var];
      rest[var] = 0;
      auto it = powers.find(e);
      if (it == powers.end()) it = powers.emplace(e, value.pow(e)).first;
      MultiPoly term(n_);
      term.add_term(rest, c);
      out += term * it->second;
    }
    return out;
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != vars()) throw InvalidInput("evaluate: wrong arity");
    Rational total_value = 0;
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (int k = 0; k < vars(); ++k)
        for (int e = 0; e < m[k]; ++e) t *= point[k];
      total_value += t;
    }
    return total_value;
  }

  bool operator==(const MultiPoly&) const = default;

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    // Highest x power first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      std::string coef = c.str();
      bool neg = c < 0;
      if (neg) coef = coef.substr(1);
      s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      std::string mono;
      for (int k = 0; k < vars(); ++k) {
        if (m[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += k == 0 ? "x" : "y" + std::to_string(k - 1);
        if (m[k] > 1) mono += "^" + std::to_string(m[k]);
      }
      if (mono.empty())
        s += coef;
      else if (coef == "1")
        s += mono;
      else
        s += coef + "*" + mono;
    }
    return s;
  }

private:
  static Monomial unit(int n, int var) {
    Monomial m(n + 1, 0);
    m[var] = 1;
    return m;
  }
  static int total(const Monomial& m) {
    int t = 0;
    for (int e : m) t += e;
    return t;
  }
  void check(const MultiPoly& o) const {
    if (o.n_ != n_) throw InvalidInput("polynomial variable-count mismatch");
  }

  int n_ = 1;
  std::map<Monomial, Rational> terms_;
};

// Leading variable of a character: x if its coefficient is nonzero, else the
// first y_m with nonzero coefficient.
inline int leading_variable(const Character& alpha) {
  if (alpha.z != 0) return 0;
  for (int m = 0; m < alpha.n; ++m)
    if (alpha.gamma[m] != 0) return m + 1;
  throw InvalidInput("zero character");
}

// Image of p in the quotient by alpha, obtained by solving alpha = 0 for its
// leading variable.
inline MultiPoly reduce_mod_linear(const MultiPoly& p, const Character& alpha) {
  if (alpha.n != p.n()) throw InvalidInput("character and polynomial ranks differ");
  const int lead = leading_variable(alpha);
  const MultiPoly form = MultiPoly::linear(alpha);
  const Rational a = form.coefficient([&] {
    Monomial m(alpha.n + 1, 0);
    m[lead] = 1;
    return m;
  }());
  MultiPoly rest = form - MultiPoly::variable(alpha.n, lead).scaled(a);
  return p.substitute(lead, rest.scaled(Rational(-1) / a));
}

inline bool divisible_by_linear(const MultiPoly& p, const Character& alpha) {
  return reduce_mod_linear(p, alpha).is_zero();
}

}  // namespace sympat
