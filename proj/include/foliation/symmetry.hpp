#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "foliation/foliation.hpp"

namespace fol {

/// (x, y) -> (X(x, y), Y(x, y)).
struct PolynomialMap {
  Poly X, Y;

  static PolynomialMap identity();
  Poly jacobian() const;
  int degree() const;
  bool is_identity() const;
  /// p(X, Y).
  Poly apply(const Poly& p) const;
  std::string to_string() const;
  friend bool operator==(const PolynomialMap& a, const PolynomialMap& b) { return a.X == b.X && a.Y == b.Y; }
};

/// outer o inner.
PolynomialMap compose(const PolynomialMap& outer, const PolynomialMap& inner);
PolynomialMap power(const PolynomialMap& R, int k);

/// R^* omega by substitution and the chain rule. With `normalize`, the
/// common factor of the two coefficients is removed.
AffineOneForm pullback_form(const PolynomialMap& R, const AffineOneForm& w, bool normalize = false);

struct SymmetryVerdict {
  bool preserves = false;
  std::optional<FElem> c;  // R^* omega = c omega
  Poly jacobian;
  bool jacobian_constant = false;
  bool isotropy = false;  // c equals the constant Jacobian
  std::string reason;
};

SymmetryVerdict check_symmetry(const PolynomialMap& R, const AffineOneForm& w);

struct EquivalenceVerdict {
  bool equivalent = false;
  std::optional<FElem> c;  // R^* w1 = c w2 after removing common factors
};

EquivalenceVerdict verify_equivalence(const PolynomialMap& R, const AffineOneForm& w1, const AffineOneForm& w2);

/// Smallest k <= cap with R^k the identity.
std::optional<int> map_order(const PolynomialMap& R, int cap);

class DegenerateGamma : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GammaConstruction {
  int n = 0;
  FElem xi;
  Poly tau;
  PolynomialMap phi;    // (x^n, y)
  PolynomialMap T;      // (xi x, y)
  PolynomialMap shear;  // (x, y + tau(x))
  PolynomialMap gamma;  // shear o T o shear^-1 = (xi x, y + tau(xi x) - tau(x))
  AffineOneForm pulled;       // phi^* omega
  AffineOneForm transformed;  // (shear^-1)^* phi^* omega
  int order = 0;
  int degree = 0;
  SymmetryVerdict T_on_pulled;
  SymmetryVerdict gamma_on_transformed;
};

/// Primitive n-th root of unity: 1, -1, or the class of t in Q[t]/(Phi_n).
FElem primitive_root_of_unity(int n);

/// Throws std::invalid_argument when xi^n != 1 or x = 0 is not completely
/// transverse, InvariantLine when x = 0 is invariant, DegenerateGamma when
/// tau(xi x) = tau(x).
GammaConstruction build_gamma(const FElem& xi, int n, const Poly& tau, const AffineOneForm& w);

/// Relations alpha^e beta^f = 1 for the diagonal maps (alpha x, beta y) that
/// send omega to a constant multiple of itself, in Hermite form.
struct DiagonalRelations {
  std::vector<std::pair<long, long>> rows;
  std::optional<long> group_order;  // index of the relation lattice when it has rank 2
};

DiagonalRelations diagonal_symmetry_relations(const AffineOneForm& w);

}  // namespace fol
