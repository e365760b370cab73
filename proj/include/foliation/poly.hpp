#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "foliation/field.hpp"

namespace fol {

/// Exponent vector over at most three variables. Index 0 is the primary
/// variable (x), then y, then z.
using Exponent = std::array<int, 3>;

inline int total_degree(const Exponent& e) { return e[0] + e[1] + e[2]; }

/// Sparse polynomial in up to three variables over Q or a single extension.
class Poly {
 public:
  using Terms = std::map<Exponent, FElem>;
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  Poly(const FElem& c);
  Poly(long c) : Poly(FElem(c)) {}
  Poly(const Rational& c) : Poly(FElem(c)) {}

  static Poly var(int index);
  static Poly monomial(const Exponent& e, const FElem& c = FElem(1));
  /// Univariate polynomial in variable `index`.
  static Poly from_qpoly(const QPoly& p, int index);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Terms& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  FElem coeff(const Exponent& e) const;
  FElem constant_term() const { return coeff({0, 0, 0}); }

  /// Total degree; kZeroDegree for the zero polynomial.
  int degree() const;
  int degree_in(int var) const;
  /// Lowest total degree of a term; kZeroDegree for zero.
  int order() const;
  int order_in(int var) const;
  /// Variables with a positive exponent somewhere.
  std::vector<int> variables() const;
  Poly homogeneous_part(int k) const;
  /// Coefficients with respect to one variable, keyed by its exponent.
  std::map<int, Poly> coefficients_in(int var) const;
  Poly coefficient_in(int var, int power) const;
  /// Lex-leading term (x > y > z).
  std::pair<Exponent, FElem> leading_term() const;

  ExtensionPtr extension() const;
  /// Calls decide_zero on every stored coefficient.
  void check_coefficients() const;
  bool is_rational() const;
  /// Rational coefficients as a univariate QPoly in `var`.
  QPoly to_qpoly(int var) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const FElem& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const FElem& c) { return a *= c; }
  friend Poly operator*(const FElem& c, Poly a) { return a *= c; }
  friend Poly operator*(long c, Poly a) { return a *= FElem(c); }
  friend Poly operator*(Poly a, long c) { return a *= FElem(c); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(int k) const;
  Poly derivative(int var) const;
  /// Multiply by a monomial.
  Poly shift(const Exponent& e) const;
  /// Divides by a monomial that must divide every term.
  Poly unshift(const Exponent& e) const;
  /// Replaces each variable by a polynomial (missing entries keep the variable).
  Poly compose(const std::array<std::optional<Poly>, 3>& images) const;
  Poly substitute(int var, const Poly& image) const;
  Poly evaluate(int var, const FElem& value) const;
  /// p(x + dx, y + dy, z + dz).
  Poly translate(const std::array<FElem, 3>& delta) const;
  /// Swap two variables.
  Poly swap(int i, int j) const;
  /// Terms of total degree below k.
  Poly truncate(int k) const;
  /// Re-express all coefficients in the given extension.
  Poly in(const ExtensionPtr& ext) const;
  Poly map_coefficients(const std::function<FElem(const FElem&)>& f) const;

  std::string to_string(const std::vector<std::string>& names = {"x", "y", "z"}) const;

 private:
  void add_term(const Exponent& e, const FElem& c);
  Terms terms_;
};

}  // namespace fol
