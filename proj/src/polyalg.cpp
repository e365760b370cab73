#include "foliation/polyalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace fol {

namespace {

bool divides(const Exponent& a, const Exponent& b) {
  return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

Exponent minus(const Exponent& b, const Exponent& a) { return {b[0] - a[0], b[1] - a[1], b[2] - a[2]}; }

}  // namespace

std::optional<Poly> divide_exact(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (p.is_zero()) return Poly();
  auto [ld, cd] = d.leading_term();
  FElem inv = cd.inv();
  Poly r = p, q;
  while (!r.is_zero()) {
    auto [lr, cr] = r.leading_term();
    if (!divides(ld, lr)) return std::nullopt;
    Poly t = Poly::monomial(minus(lr, ld), cr * inv);
    q += t;
    r -= t * d;
  }
  return q;
}

std::pair<Poly, Poly> divmod_univariate(const Poly& a, const Poly& b, int var) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  int db = b.degree_in(var);
  FElem inv = b.coefficient_in(var, db).constant_term().inv();
  Poly q, r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    int dr = r.degree_in(var);
    Exponent e{0, 0, 0};
    e[static_cast<size_t>(var)] = dr - db;
    Poly t = Poly::monomial(e, r.coefficient_in(var, dr).constant_term() * inv);
    q += t;
    r -= t * b;
  }
  return {q, r};
}

Poly normalize_monic(const Poly& p, int primary) {
  if (p.is_zero()) return p;
  auto v = static_cast<size_t>(primary);
  const std::pair<const Exponent, FElem>* best = nullptr;
  for (const auto& t : p.terms()) {
    if (!best || t.first[v] > best->first[v] || (t.first[v] == best->first[v] && t.first > best->first))
      best = &t;
  }
  return p * best->second.inv();
}

int common_power(const Poly& p, int var) { return p.is_zero() ? 0 : p.order_in(var); }

namespace {

Poly gcd_rec(const Poly& p, const Poly& q, int primary);

Poly content_in(const Poly& p, int var, int primary) {
  Poly c;
  for (const auto& [k, coef] : p.coefficients_in(var)) {
    c = c.is_zero() ? coef : gcd_rec(c, coef, primary);
    if (c.is_constant() && !c.is_zero()) return Poly(1);
  }
  return c;
}

Poly primitive_in(const Poly& p, int var, int primary) {
  if (p.is_zero()) return p;
  Poly c = content_in(p, var, primary);
  if (c.is_constant()) return p;
  auto q = divide_exact(p, c);
  if (!q) throw std::logic_error("content does not divide polynomial");
  return *q;
}

Poly pseudo_rem(Poly a, const Poly& b, int var) {
  int db = b.degree_in(var);
  Poly lcb = b.coefficient_in(var, db);
  while (!a.is_zero() && a.degree_in(var) >= db) {
    int da = a.degree_in(var);
    Poly lca = a.coefficient_in(var, da);
    Exponent e{0, 0, 0};
    e[static_cast<size_t>(var)] = da - db;
    a = lcb * a - lca.shift(e) * b;
  }
  return a;
}

Poly gcd_rec(const Poly& p, const Poly& q, int primary) {
  if (p.is_zero()) return q.is_zero() ? q : normalize_monic(q, primary);
  if (q.is_zero()) return normalize_monic(p, primary);
  std::vector<int> vars = p.variables();
  for (int v : q.variables())
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  if (vars.empty()) return Poly(1);
  int main = std::find(vars.begin(), vars.end(), primary) != vars.end() ? primary : *std::min_element(vars.begin(), vars.end());
  bool univariate = vars.size() == 1;
  if (univariate) {
    Poly a = p, b = q;
    while (!b.is_zero()) {
      Poly r = divmod_univariate(a, b, main).second;
      a = std::move(b);
      b = std::move(r);
    }
    return normalize_monic(a, primary);
  }
  Poly cp = content_in(p, main, primary);
  Poly cq = content_in(q, main, primary);
  Poly c = gcd_rec(cp, cq, primary);
  Poly a = cp.is_constant() ? p : *divide_exact(p, cp);
  Poly b = cq.is_constant() ? q : *divide_exact(q, cq);
  if (a.degree_in(main) < b.degree_in(main)) std::swap(a, b);
  while (!b.is_zero() && b.degree_in(main) > 0) {
    Poly r = pseudo_rem(a, b, main);
    a = std::move(b);
    b = primitive_in(r, main, primary);
  }
  Poly g = b.is_zero() ? primitive_in(a, main, primary) : Poly(1);
  return normalize_monic(g * c, primary);
}

}  // namespace

Poly poly_gcd(const Poly& p, const Poly& q, int primary) { return gcd_rec(p, q, primary); }

Poly determinant(std::vector<std::vector<Poly>> m) {
  size_t n = m.size();
  if (n == 0) return Poly(1);
  bool negate = false;
  Poly prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return Poly();
    if (piv != k) {
      std::swap(m[piv], m[k]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = divide_exact(num, prev);
        if (!q) throw std::logic_error("Bareiss step not exact");
        m[i][j] = std::move(*q);
      }
      m[i][k] = Poly();
    }
    prev = m[k][k];
  }
  Poly d = m[n - 1][n - 1];
  return negate ? -d : d;
}

Poly resultant(const Poly& p, const Poly& q, int var) {
  if (p.is_zero() || q.is_zero()) throw std::domain_error("resultant of zero polynomial");
  int dp = p.degree_in(var), dq = q.degree_in(var);
  auto cp = p.coefficients_in(var);
  auto cq = q.coefficients_in(var);
  size_t n = static_cast<size_t>(dp + dq);
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  // Rows are indexed by descending powers.
  for (int r = 0; r < dp; ++r)
    for (const auto& [k, c] : cq) m[static_cast<size_t>(r)][static_cast<size_t>(r + dq - k)] = c;
  for (int r = 0; r < dq; ++r)
    for (const auto& [k, c] : cp) m[static_cast<size_t>(dp + r)][static_cast<size_t>(r + dp - k)] = c;
  return determinant(std::move(m));
}

}  // namespace fol
