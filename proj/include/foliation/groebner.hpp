#pragma once

#include <map>
#include <string>
#include <vector>

#include "foliation/field.hpp"

namespace fol {

/// Exponent vector with trailing zeros removed.
using Monomial = std::vector<int>;

enum class MonomialOrder { Lex, Grevlex };

/// Sparse polynomial over Q in any number of variables t0, t1, ...
class MPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  MPoly() = default;
  MPoly(const Rational& c);
  MPoly(long c) : MPoly(Rational(c)) {}
  static MPoly var(int i);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant() const;
  const Terms& terms() const { return terms_; }
  int total_degree() const;
  int degree_in(int var) const;
  /// One past the highest variable index in use.
  int num_vars() const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  MPoly operator-() const;

  MPoly substitute(int var, const MPoly& image) const;
  /// Leading monomial and coefficient for an order; the polynomial must be nonzero.
  std::pair<Monomial, Rational> leading(MonomialOrder ord) const;
  MPoly monic(MonomialOrder ord) const;
  /// Univariate coefficients in `var` when no other variable occurs.
  QPoly to_qpoly(int var) const;

  std::string to_string(const std::string& prefix = "t") const;

  void add_term(const Monomial& m, const Rational& c);

 private:
  Terms terms_;
};

/// a < b in the given order.
bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder ord);

/// Remainder of f by g (full reduction).
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& G, MonomialOrder ord);

/// Reduced Groebner basis (monic, sorted by leading monomial); {1} for the unit ideal.
std::vector<MPoly> groebner_basis(const std::vector<MPoly>& F, MonomialOrder ord);

struct RationalSolutions {
  std::vector<std::vector<Rational>> points;  // values of t0 .. t(n-1)
  bool positive_dimensional = false;          // some branch kept a free variable
  bool irrational_skipped = false;            // roots outside Q were dropped
};

/// Rational points of the variety of F in `num_vars` variables. Branches
/// with free variables are reported through the flag, not enumerated.
RationalSolutions rational_solutions(const std::vector<MPoly>& F, int num_vars);

}  // namespace fol
