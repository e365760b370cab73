#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "foliation/local.hpp"
#include "foliation/poly.hpp"

namespace fol {

/// omega = a dx + b dy in the variables x (index 0) and y (index 1). The
/// tangent vector field is b d/dx - a d/dy.
struct AffineOneForm {
  Poly a, b;
  Poly removed_content = Poly(1);

  Poly field_x() const { return b; }
  Poly field_y() const { return -a; }
  ExtensionPtr extension() const;
  std::string to_string() const;
};

/// Divides out gcd(a, b) and fixes the scalar so the result is canonical.
AffineOneForm make_form(const Poly& a, const Poly& b);
/// D = f d/dx + g d/dy gives omega = g dx - f dy.
AffineOneForm from_derivation(const Poly& f, const Poly& g);

/// Omega = A dz + B dx + C dy, homogeneous in (x, y, z) = indices (0, 1, 2).
struct ProjectiveFoliation {
  AffineOneForm affine;
  Poly A, B, C;
  int degree = 0;
  bool infinity_invariant = false;
};

ProjectiveFoliation extend_to_plane(const AffineOneForm& w);
bool line_at_infinity_invariant(const ProjectiveFoliation& F);
/// Tangency count with a pseudo-random projective line (deterministic seed).
int generic_line_tangency(const ProjectiveFoliation& F, unsigned seed = 12345);

/// Standard affine charts: Z is {z = 1} with coordinates (x, y); X is
/// {x = 1} with (u, w) = (z/x, y/x); Y is {y = 1} with (u, w) = (x/y, z/y).
/// In X the line at infinity is u = 0, in Y it is w = 0.
enum class Chart { Z, X, Y };
std::string to_string(Chart c);

/// Local 1-form P ds + Q dt of F in a chart, in variables (s, t) = (0, 1).
std::pair<Poly, Poly> chart_form(const ProjectiveFoliation& F, Chart c);

struct ProjectivePoint {
  std::array<FElem, 3> coords;  // (x : y : z)
  Chart chart = Chart::Z;
  std::array<FElem, 2> local;   // chart coordinates
  ExtensionPtr ext;             // set for conjugate clusters
  int conjugates() const { return ext ? ext->degree() : 1; }
  bool at_infinity() const { return coords[2].is_zero(); }
  std::string to_string() const;
};

struct SingularEntry {
  ProjectivePoint point;
  Poly P, Q;  // local form translated to the origin
  SingularityRecord record;
};

struct SingularLocus {
  std::vector<SingularEntry> entries;
  bool complete = true;
  std::vector<std::string> defects;
  /// Sum of Milnor numbers counting conjugate points separately.
  long total_milnor() const;
};

SingularLocus singular_points(const ProjectiveFoliation& F, const ClassifyOptions& opts = {});

/// Raised when affine_tangency is given an invariant line.
class InvariantLine : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// a x + b y + c = 0 with rational coefficients.
struct AffineLine {
  Rational a, b, c;
  std::string to_string() const;
};

struct TangencyReport {
  struct Zero {
    QPoly modulus;              // degree-one modulus s - r for rational parameters
    std::optional<Rational> parameter;
    int order = 0;
  };
  std::vector<Zero> zeros;
  int affine_total = 0;
  int projective_total = 0;
  int at_infinity = 0;
};

TangencyReport affine_tangency(const AffineOneForm& w, const AffineLine& line);

/// Coefficient of omega ^ dh relative to dx ^ dy: a h_y - b h_x.
Poly tangency_identity_check(const AffineOneForm& w, const Poly& h);

}  // namespace fol
