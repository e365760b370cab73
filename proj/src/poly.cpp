#include "foliation/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "foliation/qpoly.hpp"

namespace fol {

Poly::Poly(const FElem& c) {
  if (!c.is_zero()) terms_.emplace(Exponent{0, 0, 0}, c);
}

Poly Poly::var(int index) {
  Exponent e{0, 0, 0};
  e.at(static_cast<size_t>(index)) = 1;
  return monomial(e);
}

Poly Poly::monomial(const Exponent& e, const FElem& c) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace(e, c);
  return p;
}

Poly Poly::from_qpoly(const QPoly& q, int index) {
  Poly p;
  for (size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    Exponent e{0, 0, 0};
    e[static_cast<size_t>(index)] = static_cast<int>(i);
    p.terms_.emplace(e, FElem(q[i]));
  }
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0, 0});
}

FElem Poly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? FElem() : it->second;
}

int Poly::degree() const {
  int d = kZeroDegree;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

int Poly::degree_in(int var) const {
  int d = kZeroDegree;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(var)]);
  return d;
}

int Poly::order() const {
  if (terms_.empty()) return kZeroDegree;
  int d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_) d = std::min(d, total_degree(e));
  return d;
}

int Poly::order_in(int var) const {
  if (terms_.empty()) return kZeroDegree;
  int d = terms_.begin()->first[static_cast<size_t>(var)];
  for (const auto& [e, c] : terms_) d = std::min(d, e[static_cast<size_t>(var)]);
  return d;
}

std::vector<int> Poly::variables() const {
  std::vector<int> out;
  for (int v = 0; v < 3; ++v)
    for (const auto& [e, c] : terms_)
      if (e[static_cast<size_t>(v)] > 0) {
        out.push_back(v);
        break;
      }
  return out;
}

Poly Poly::homogeneous_part(int k) const {
  Poly p;
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == k) p.terms_.emplace(e, c);
  return p;
}

std::map<int, Poly> Poly::coefficients_in(int var) const {
  std::map<int, Poly> out;
  auto v = static_cast<size_t>(var);
  for (const auto& [e, c] : terms_) {
    Exponent r = e;
    r[v] = 0;
    out[e[v]].terms_.emplace(r, c);
  }
  return out;
}

Poly Poly::coefficient_in(int var, int power) const {
  Poly p;
  auto v = static_cast<size_t>(var);
  for (const auto& [e, c] : terms_) {
    if (e[v] != power) continue;
    Exponent r = e;
    r[v] = 0;
    p.terms_.emplace(r, c);
  }
  return p;
}

std::pair<Exponent, FElem> Poly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return *terms_.rbegin();
}

ExtensionPtr Poly::extension() const {
  for (const auto& [e, c] : terms_)
    if (c.ext()) return c.ext();
  return nullptr;
}

void Poly::check_coefficients() const {
  for (const auto& [e, c] : terms_) c.decide_zero();
}

bool Poly::is_rational() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_rational(); });
}

QPoly Poly::to_qpoly(int var) const {
  QPoly q;
  auto v = static_cast<size_t>(var);
  for (const auto& [e, c] : terms_) {
    for (size_t i = 0; i < 3; ++i)
      if (i != v && e[i] != 0) throw std::domain_error("polynomial is not univariate: " + to_string());
    size_t k = static_cast<size_t>(e[v]);
    if (q.size() <= k) q.resize(k + 1);
    q[k] = c.rational();
  }
  qpoly::trim(q);
  return q;
}

void Poly::add_term(const Exponent& e, const FElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly p(*this);
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const FElem& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    if (it->second.is_zero()) it = terms_.erase(it);
    else ++it;
  }
  return *this;
}

Poly Poly::pow(int k) const {
  if (k < 0) throw std::domain_error("negative exponent");
  Poly result(1), base(*this);
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Poly Poly::derivative(int var) const {
  Poly p;
  auto v = static_cast<size_t>(var);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponent r = e;
    r[v] -= 1;
    p.add_term(r, c * FElem(static_cast<long>(e[v])));
  }
  return p;
}

Poly Poly::shift(const Exponent& s) const {
  Poly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(Exponent{e[0] + s[0], e[1] + s[1], e[2] + s[2]}, c);
  return p;
}

Poly Poly::unshift(const Exponent& s) const {
  Poly p;
  for (const auto& [e, c] : terms_) {
    Exponent r{e[0] - s[0], e[1] - s[1], e[2] - s[2]};
    if (r[0] < 0 || r[1] < 0 || r[2] < 0) throw std::domain_error("monomial does not divide polynomial");
    p.terms_.emplace(r, c);
  }
  return p;
}

Poly Poly::compose(const std::array<std::optional<Poly>, 3>& images) const {
  std::array<std::vector<Poly>, 3> powers;
  for (size_t v = 0; v < 3; ++v) {
    powers[v].push_back(Poly(1));
    powers[v].push_back(images[v] ? *images[v] : Poly::var(static_cast<int>(v)));
  }
  auto power = [&](size_t v, int k) -> const Poly& {
    auto& cache = powers[v];
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * cache[1]);
    return cache[static_cast<size_t>(k)];
  };
  Poly r;
  for (const auto& [e, c] : terms_) {
    Poly t(c);
    for (size_t v = 0; v < 3; ++v)
      if (e[v] > 0) t = t * power(v, e[v]);
    r += t;
  }
  return r;
}

Poly Poly::substitute(int var, const Poly& image) const {
  std::array<std::optional<Poly>, 3> images;
  images[static_cast<size_t>(var)] = image;
  return compose(images);
}

Poly Poly::evaluate(int var, const FElem& value) const {
  auto v = static_cast<size_t>(var);
  std::vector<FElem> pw{FElem(1)};
  Poly r;
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(pw.size()) <= e[v]) pw.push_back(pw.back() * value);
    Exponent ex = e;
    ex[v] = 0;
    r.add_term(ex, c * pw[static_cast<size_t>(e[v])]);
  }
  return r;
}

Poly Poly::translate(const std::array<FElem, 3>& delta) const {
  std::array<std::optional<Poly>, 3> images;
  for (size_t v = 0; v < 3; ++v)
    if (!delta[v].is_zero()) images[v] = Poly::var(static_cast<int>(v)) + Poly(delta[v]);
  return compose(images);
}

Poly Poly::swap(int i, int j) const {
  Poly p;
  for (const auto& [e, c] : terms_) {
    Exponent r = e;
    std::swap(r[static_cast<size_t>(i)], r[static_cast<size_t>(j)]);
    p.terms_.emplace(r, c);
  }
  return p;
}

Poly Poly::truncate(int k) const {
  Poly p;
  for (const auto& [e, c] : terms_)
    if (total_degree(e) < k) p.terms_.emplace(e, c);
  return p;
}

Poly Poly::in(const ExtensionPtr& ext) const {
  return map_coefficients([&](const FElem& c) { return c.in(ext); });
}

Poly Poly::map_coefficients(const std::function<FElem(const FElem&)>& f) const {
  Poly p;
  for (const auto& [e, c] : terms_) p.add_term(e, f(c));
  return p;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  // Highest total degree first, then lex descending.
  std::vector<std::pair<Exponent, FElem>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    int da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    bool monic_term = total_degree(e) > 0;
    std::string coeff;
    bool negative = false;
    if (c.is_rational()) {
      Rational q = c.rational();
      negative = q < 0;
      if (abs(q) != 1 || !monic_term) coeff = rational_string(abs(q));
    } else {
      coeff = c.to_string();
    }
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    bool need_star = false;
    if (!coeff.empty()) {
      os << coeff;
      need_star = true;
    }
    for (size_t v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      if (need_star) os << "*";
      os << names.at(v);
      if (e[v] > 1) os << "^" << e[v];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace fol
