#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "foliation/matrix.hpp"
#include "foliation/poly.hpp"

namespace fol {

/// Raised when two local germs share a component through the origin.
class NonIsolatedSingularity : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SingularityType {
  Regular,
  NonDegenerate,       // reduced, det != 0, eigenvalue ratio not a positive rational
  MorseCandidate,      // reduced, eigenvalue ratio -1, formal first integral found to the jet order
  SaddleNode,          // reduced, exactly one zero eigenvalue
  Radial,              // linear part a nonzero multiple of the identity
  NonReducedRational,  // det != 0, eigenvalue ratio a positive rational (not radial)
  Nilpotent,           // nonzero nilpotent linear part
  Degenerate,          // vanishing linear part
};

enum class LambdaClass { Irrational, Rational, Undefined };

std::string to_string(SingularityType t);
std::string short_tag(SingularityType t);
bool is_reduced(SingularityType t);

struct MorseVerdict {
  bool candidate = false;
  int order = 0;                    // highest jet order solved
  std::optional<int> obstruction;   // degree where the jet equation failed
};

/// Local data of a singular point of the vector field (f, g) at the origin.
struct SingularityRecord {
  int ell = 0;
  Matrix linear_part{2, 2};
  FElem trace, det;
  std::optional<FElem> t_ratio;                      // trace^2 / det
  LambdaClass lambda_class = LambdaClass::Undefined;
  std::optional<std::pair<Rational, Rational>> lambda;  // (lambda, 1/lambda) when rational
  SingularityType type = SingularityType::Regular;
  long mu = 0;
  std::optional<std::array<FElem, 2>> strong_direction;  // saddle-nodes only
  std::optional<std::array<FElem, 2>> weak_direction;
  std::optional<MorseVerdict> morse;
  bool reduced() const { return is_reduced(type); }
};

struct ClassifyOptions {
  int morse_jet_order = 6;
};

/// Classifies the origin for the 1-form P ds + Q dt (vector field (Q, -P)).
/// Over a composite extension this may throw ZeroDivisor; callers split.
SingularityRecord classify_form(const Poly& P, const Poly& Q, const ClassifyOptions& opts = {});

/// Same, directly from the vector field components.
SingularityRecord classify_field(const Poly& f, const Poly& g, const ClassifyOptions& opts = {});

/// Lowest order of a nonzero jet of (f, g) at the origin; 0 at regular points.
int algebraic_multiplicity(const Poly& f, const Poly& g);

/// Local intersection multiplicity at the origin by the Fulton recursion.
long milnor_fulton(const Poly& f, const Poly& g);

struct OracleResult {
  long mu = 0;
  int cap = 0;
  bool stable = false;
};

/// dim of k[[s,t]] / (f, g) + m^N computed by elimination on monomials of
/// degree < N; stable when the values at N and N + 1 agree.
long truncated_colength(const Poly& f, const Poly& g, int N);
OracleResult milnor_truncated_oracle(const Poly& f, const Poly& g, int cap);
/// Ascends N from 1 to `cap` and stops at the first stable pair.
OracleResult milnor_oracle_ascending(const Poly& f, const Poly& g, int cap);

/// Formal first integral of Morse type for a non-degenerate point with zero
/// trace, solved homogeneous degree by degree up to `jet_order`.
MorseVerdict formal_first_integral_jet(const Poly& f, const Poly& g, int jet_order);

/// Rationality of an element of Q[t]/(m): returns its rational value, or
/// nullopt when no conjugate is rational. Throws ZeroDivisor when only some
/// conjugates are rational.
std::optional<Rational> rational_value(const FElem& e);

/// Rational square root if it exists.
std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace fol
