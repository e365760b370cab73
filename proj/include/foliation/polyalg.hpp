#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "foliation/poly.hpp"

namespace fol {

/// Exact quotient p / d, or nullopt when d does not divide p.
std::optional<Poly> divide_exact(const Poly& p, const Poly& d);

/// Quotient and remainder of univariate division in `var` over the
/// coefficient field (both inputs must involve only `var`).
std::pair<Poly, Poly> divmod_univariate(const Poly& a, const Poly& b, int var);

/// Scales p so that its leading coefficient, taken with the highest power of
/// `primary` first and lex order after that, equals one.
Poly normalize_monic(const Poly& p, int primary = 0);

/// Greatest common divisor, primitive and monic-normalized in `primary`.
/// Over an extension with a composite modulus this may throw ZeroDivisor.
Poly poly_gcd(const Poly& p, const Poly& q, int primary = 0);

/// Determinant of the Sylvester matrix with the rows of q placed first:
/// lc(q)^deg(p) times the product of p over the roots of q.
Poly resultant(const Poly& p, const Poly& q, int var);

/// Fraction-free determinant of a square matrix of polynomials.
Poly determinant(std::vector<std::vector<Poly>> m);

/// Power of `var` dividing every term.
int common_power(const Poly& p, int var);

}  // namespace fol
