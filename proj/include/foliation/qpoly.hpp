#pragma once

#include <string>
#include <utility>
#include <vector>

#include "foliation/field.hpp"

namespace fol::qpoly {

void trim(QPoly& p);
int degree(const QPoly& p);  // -1 for zero
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rational& c);
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly rem(const QPoly& a, const QPoly& b);
QPoly monic(const QPoly& a);
QPoly gcd(const QPoly& a, const QPoly& b);
/// Returns (g, s) with g = gcd(a, m) monic and s*a = g mod m.
std::pair<QPoly, QPoly> gcd_cofactor(const QPoly& a, const QPoly& m);
QPoly derivative(const QPoly& p);
Rational eval(const QPoly& p, const Rational& x);
QPoly x_minus(const Rational& r);

/// Yun squarefree decomposition: pairs (factor, multiplicity), factors monic,
/// pairwise coprime, product equal to p up to a constant.
std::vector<std::pair<QPoly, int>> squarefree(const QPoly& p);

/// Rational roots of a nonzero polynomial, sorted ascending, without repetition.
std::vector<Rational> rational_roots(const QPoly& p);

/// Number of distinct real roots in the half-open interval (a, b].
int count_real_roots(const QPoly& p, const Rational& a, const Rational& b);

struct RootSplit {
  std::vector<std::pair<QPoly, int>> factors;
  std::vector<std::pair<Rational, int>> roots;  // root, multiplicity
  std::vector<std::pair<QPoly, int>> moduli;    // squarefree, no rational root
};

RootSplit squarefree_and_rational_roots(const QPoly& p);

std::string to_string(const QPoly& p, const std::string& var = "t");

}  // namespace fol::qpoly
