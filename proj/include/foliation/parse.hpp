#pragma once

#include <stdexcept>
#include <string>

#include "foliation/foliation.hpp"
#include "foliation/symmetry.hpp"

namespace fol {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, size_t position);
  size_t position() const { return position_; }

 private:
  size_t position_;
};

enum class ExprKind { Polynomial, Form, Derivation, Map, Line };
std::string to_string(ExprKind k);

struct InputExpression {
  std::string source;
  ExprKind kind = ExprKind::Polynomial;
  ExtensionPtr field;  // generator t, when declared
  Poly poly;           // Polynomial
  AffineOneForm form;  // Form, and the dual form of a Derivation (not normalized)
  Poly f, g;           // Derivation f d/dx + g d/dy
  PolynomialMap map;   // Map
  AffineLine line;     // Line
};

/// Grammar: rational literals, x, y, t (the generator of `field`), + - * /
/// (by constants only), ^ with a non-negative integer, parentheses.
///   form        P*dx + Q*dy  (any sum of products with one differential each)
///   derivation  dx: P, dy: Q
///   map         (P, Q)
///   line        a*x + b*y + c = 0
InputExpression parse(const std::string& text, ExprKind kind, ExtensionPtr field = nullptr);

/// Canonical text that parses back to the same object.
std::string print(const InputExpression& e);

/// Modulus polynomial in t, e.g. "t^2 + t + 1".
QPoly parse_modulus(const std::string& text);

}  // namespace fol
