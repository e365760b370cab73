#include "foliation/field.hpp"

#include <sstream>

#include "foliation/qpoly.hpp"

namespace fol {

ZeroDivisor::ZeroDivisor(QPoly factor, QPoly modulus)
    : std::runtime_error("zero divisor in Q[t]/(" + qpoly::to_string(modulus) +
                         "), factor " + qpoly::to_string(factor)),
      factor_(std::move(factor)),
      modulus_(std::move(modulus)) {}

QPoly ZeroDivisor::cofactor() const { return qpoly::monic(qpoly::divmod(modulus_, factor_).first); }

Extension::Extension(QPoly modulus, std::string generator)
    : modulus_(qpoly::monic(modulus)), generator_(std::move(generator)) {
  if (qpoly::degree(modulus_) < 1) throw std::invalid_argument("extension modulus must have positive degree");
  if (qpoly::degree(qpoly::gcd(modulus_, qpoly::derivative(modulus_))) > 0)
    throw std::invalid_argument("extension modulus must be squarefree");
}

ExtensionPtr make_extension(const QPoly& modulus, const std::string& generator) {
  return std::make_shared<const Extension>(modulus, generator);
}

bool same_extension(const ExtensionPtr& a, const ExtensionPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->modulus() == b->modulus();
}

FElem::FElem(const Rational& v) {
  if (v != 0) rep_.push_back(v);
}

FElem::FElem(const Rational& v, ExtensionPtr ext) : ext_(std::move(ext)) {
  if (v != 0) rep_.push_back(v);
}

FElem::FElem(QPoly rep, ExtensionPtr ext) : rep_(std::move(rep)), ext_(std::move(ext)) { reduce(); }

FElem FElem::generator(const ExtensionPtr& ext) { return FElem(QPoly{0, 1}, ext); }

bool FElem::is_one() const { return rep_.size() == 1 && rep_[0] == 1; }

Rational FElem::rational() const {
  if (!is_rational()) throw std::domain_error("field element is not rational: " + to_string());
  return rep_.empty() ? Rational(0) : rep_[0];
}

void FElem::reduce() {
  qpoly::trim(rep_);
  if (ext_ && qpoly::degree(rep_) >= ext_->degree()) rep_ = qpoly::rem(rep_, ext_->modulus());
}

void FElem::adopt(const FElem& o) {
  if (!o.ext_) return;
  if (!ext_) {
    ext_ = o.ext_;
    return;
  }
  if (ext_ != o.ext_ && !same_extension(ext_, o.ext_))
    throw std::logic_error("arithmetic across different extension fields");
}

bool FElem::decide_zero() const {
  if (rep_.empty()) return true;
  if (!ext_ || rep_.size() == 1) return false;
  QPoly g = qpoly::gcd(rep_, ext_->modulus());
  if (qpoly::degree(g) > 0) throw ZeroDivisor(g, ext_->modulus());
  return false;
}

FElem FElem::inv() const {
  if (rep_.empty()) throw std::domain_error("division by zero");
  if (rep_.size() == 1) return FElem(1 / rep_[0], ext_);
  auto [g, s] = qpoly::gcd_cofactor(rep_, ext_->modulus());
  if (qpoly::degree(g) > 0) throw ZeroDivisor(g, ext_->modulus());
  return FElem(s, ext_);
}

FElem FElem::operator-() const {
  FElem r(*this);
  for (auto& c : r.rep_) c = -c;
  return r;
}

FElem& FElem::operator+=(const FElem& o) {
  adopt(o);
  if (rep_.size() < o.rep_.size()) rep_.resize(o.rep_.size());
  for (size_t i = 0; i < o.rep_.size(); ++i) rep_[i] += o.rep_[i];
  qpoly::trim(rep_);
  return *this;
}

FElem& FElem::operator-=(const FElem& o) {
  adopt(o);
  if (rep_.size() < o.rep_.size()) rep_.resize(o.rep_.size());
  for (size_t i = 0; i < o.rep_.size(); ++i) rep_[i] -= o.rep_[i];
  qpoly::trim(rep_);
  return *this;
}

FElem& FElem::operator*=(const FElem& o) {
  adopt(o);
  if (rep_.size() <= 1 && o.rep_.size() <= 1) {
    if (rep_.empty() || o.rep_.empty()) rep_.clear();
    else rep_[0] *= o.rep_[0];
    if (!rep_.empty() && rep_[0] == 0) rep_.clear();
    return *this;
  }
  rep_ = qpoly::mul(rep_, o.rep_);
  reduce();
  return *this;
}

FElem& FElem::operator/=(const FElem& o) { return *this *= o.inv(); }

FElem FElem::in(const ExtensionPtr& ext) const {
  if (!ext) {
    if (!is_rational()) throw std::logic_error("cannot move an algebraic element to Q");
    return FElem(rational());
  }
  return FElem(rep_, ext);
}

std::string rational_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

SplitTarget split_target(const QPoly& factor, const std::string& generator) {
  SplitTarget t;
  if (qpoly::degree(factor) == 1) t.root = -factor[0] / factor[1];
  else t.ext = make_extension(factor, generator);
  return t;
}

FElem specialize(const FElem& e, const SplitTarget& target) {
  if (target.root) return FElem(qpoly::eval(e.rep(), *target.root));
  if (e.is_rational()) return FElem(e.rational(), target.ext);
  return e.in(target.ext);
}

std::string FElem::to_string() const {
  if (rep_.empty()) return "0";
  if (rep_.size() == 1) return rational_string(rep_[0]);
  return "(" + qpoly::to_string(rep_, ext_ ? ext_->generator() : "t") + ")";
}

}  // namespace fol
