#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foliation/foliation.hpp"
#include "foliation/groebner.hpp"

namespace fol {

struct InvariantCurve {
  Poly curve;     // normalized: lex-leading coefficient 1
  Poly cofactor;  // v(curve) = cofactor * curve
};

/// One degree of the cofactor search.
struct DarbouxLevel {
  int degree = 0;
  int branches = 0;       // (top cofactor, normalization) pairs tried
  int unknowns = 0;       // coefficients of C and K
  int equations = 0;      // coefficient equations
  int parameters = 0;     // parameters left after the linear solve
  int conditions = 0;     // polynomial conditions on those parameters
  int solutions = 0;      // verified curves of this exact degree
  bool positive_dimensional = false;
  bool irrational_skipped = false;
  bool top_split_incomplete = false;  // a factor of degree >= 4 at infinity was not split
};

struct DarbouxResult {
  std::vector<InvariantCurve> curves;  // irreducible candidates, by degree
  std::vector<DarbouxLevel> transcript;
  /// No level reported a family, a skipped irrational solution or an unsplit factor.
  bool complete() const;
};

/// Polynomials C of degree 1..d with v(C) = K C, v = b d/dx - a d/dy and
/// deg K <= deg v - 1. Curves divisible by an earlier one are dropped.
DarbouxResult invariant_curves_up_to_degree(const AffineOneForm& w, int d);

struct SingularityFreeness {
  bool free = true;
  Poly resultant;  // Res_y(f, g)
  std::vector<std::string> witnesses;  // common zeros found, as text
  std::vector<std::string> checks;     // one line per root cluster of the resultant
};

/// No common zero of f and g in C^2. Throws std::invalid_argument when
/// gcd(f, g) is not constant.
SingularityFreeness affine_singularity_free(const Poly& f, const Poly& g);

struct SimplicityCertificate {
  Poly f, g;  // D = f d/dx + g d/dy
  int degree_bound = 0;
  SingularityFreeness zeros;
  DarbouxResult search;
  bool valid() const;
  std::string label() const;
};

SimplicityCertificate simplicity_certificate(const Poly& f, const Poly& g, int d);

/// The pullback of omega to the line has no affine zero. Throws
/// InvariantLine when the line is invariant.
bool complete_transversality(const AffineOneForm& w, const AffineLine& line);

}  // namespace fol
