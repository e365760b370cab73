#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fol {

using Rational = mpq_class;

/// Dense univariate polynomial over Q, index = degree. The zero polynomial is
/// the empty vector; no trailing zero coefficients are stored.
using QPoly = std::vector<Rational>;

/// Thrown when a non-invertible nonzero residue is met in Q[t]/(m).
/// `factor` is a proper monic factor of the modulus witnessing the split.
class ZeroDivisor : public std::runtime_error {
 public:
  ZeroDivisor(QPoly factor, QPoly modulus);
  const QPoly& factor() const { return factor_; }
  const QPoly& modulus() const { return modulus_; }
  /// The cofactor modulus / factor.
  QPoly cofactor() const;

 private:
  QPoly factor_;
  QPoly modulus_;
};

/// Q[t]/(m) with m monic and squarefree.
class Extension {
 public:
  explicit Extension(QPoly modulus, std::string generator = "t");
  const QPoly& modulus() const { return modulus_; }
  const std::string& generator() const { return generator_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }

 private:
  QPoly modulus_;
  std::string generator_;
};

using ExtensionPtr = std::shared_ptr<const Extension>;

ExtensionPtr make_extension(const QPoly& modulus, const std::string& generator = "t");
bool same_extension(const ExtensionPtr& a, const ExtensionPtr& b);

/// Element of Q or of an Extension. Elements of Q mix freely with elements of
/// any single extension; mixing two different extensions is a logic error.
class FElem {
 public:
  FElem() = default;
  FElem(long v) : rep_{} { if (v != 0) rep_.push_back(Rational(v)); }
  FElem(const Rational& v);
  FElem(const Rational& v, ExtensionPtr ext);
  FElem(QPoly rep, ExtensionPtr ext);

  static FElem generator(const ExtensionPtr& ext);

  bool is_zero() const { return rep_.empty(); }
  bool is_one() const;
  bool is_rational() const { return rep_.size() <= 1; }
  Rational rational() const;
  const QPoly& rep() const { return rep_; }
  const ExtensionPtr& ext() const { return ext_; }

  /// Decides zero-ness soundly: returns true for zero, false for a unit, and
  /// throws ZeroDivisor for a nonzero zero-divisor.
  bool decide_zero() const;

  FElem inv() const;
  FElem operator-() const;
  FElem& operator+=(const FElem& o);
  FElem& operator-=(const FElem& o);
  FElem& operator*=(const FElem& o);
  FElem& operator/=(const FElem& o);

  friend FElem operator+(FElem a, const FElem& b) { return a += b; }
  friend FElem operator-(FElem a, const FElem& b) { return a -= b; }
  friend FElem operator*(FElem a, const FElem& b) { return a *= b; }
  friend FElem operator/(FElem a, const FElem& b) { return a /= b; }
  friend bool operator==(const FElem& a, const FElem& b) { return a.rep_ == b.rep_; }
  friend bool operator!=(const FElem& a, const FElem& b) { return !(a == b); }

  /// Same element re-expressed in `ext` (reducing the representative).
  FElem in(const ExtensionPtr& ext) const;

  std::string to_string() const;

 private:
  void adopt(const FElem& o);
  void reduce();

  QPoly rep_;
  ExtensionPtr ext_;
};

std::string rational_string(const Rational& q);

/// Where an element of Q[t]/(m) goes when m splits: the extension by a
/// factor, or the rational root of a linear factor.
struct SplitTarget {
  ExtensionPtr ext;
  std::optional<Rational> root;
};

SplitTarget split_target(const QPoly& factor, const std::string& generator = "t");
FElem specialize(const FElem& e, const SplitTarget& target);

}  // namespace fol
