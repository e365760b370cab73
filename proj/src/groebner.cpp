#include "foliation/groebner.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "foliation/qpoly.hpp"

namespace fol {

namespace {

void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

int at(const Monomial& m, size_t i) { return i < m.size() ? m[i] : 0; }

Monomial mul(const Monomial& a, const Monomial& b) {
  Monomial r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = at(a, i) + at(b, i);
  trim(r);
  return r;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > at(b, i)) return false;
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = at(b, i) - at(a, i);
  trim(r);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = std::max(at(a, i), at(b, i));
  trim(r);
  return r;
}

int degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

MPoly monomial_times(const MPoly& p, const Monomial& m, const Rational& c) {
  MPoly r;
  for (const auto& [e, v] : p.terms()) r.add_term(mul(e, m), v * c);
  return r;
}

}  // namespace

bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder ord) {
  size_t n = std::max(a.size(), b.size());
  if (ord == MonomialOrder::Grevlex) {
    int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    for (size_t i = n; i-- > 0;)
      if (at(a, i) != at(b, i)) return at(a, i) > at(b, i);
    return false;
  }
  for (size_t i = 0; i < n; ++i)
    if (at(a, i) != at(b, i)) return at(a, i) < at(b, i);
  return false;
}

MPoly::MPoly(const Rational& c) {
  if (c != 0) terms_[{}] = c;
}

MPoly MPoly::var(int i) {
  MPoly r;
  Monomial m(static_cast<size_t>(i) + 1, 0);
  m.back() = 1;
  r.terms_[m] = 1;
  return r;
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Rational MPoly::constant() const {
  auto it = terms_.find({});
  return it == terms_.end() ? Rational(0) : it->second;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, degree(m));
  return d;
}

int MPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, at(m, static_cast<size_t>(var)));
  return d;
}

int MPoly::num_vars() const {
  size_t n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, m.size());
  return static_cast<int>(n);
}

void MPoly::add_term(const Monomial& m0, const Rational& c) {
  if (c == 0) return;
  Monomial m = m0;
  trim(m);
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(mul(ma, mb), ca * cb);
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  return r *= Rational(-1);
}

MPoly MPoly::substitute(int var, const MPoly& image) const {
  MPoly r;
  std::vector<MPoly> powers{MPoly(1)};
  for (const auto& [m, c] : terms_) {
    int e = at(m, static_cast<size_t>(var));
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * image);
    Monomial rest = m;
    if (static_cast<size_t>(var) < rest.size()) rest[static_cast<size_t>(var)] = 0;
    trim(rest);
    r += monomial_times(powers[static_cast<size_t>(e)], rest, c);
  }
  return r;
}

std::pair<Monomial, Rational> MPoly::leading(MonomialOrder ord) const {
  auto best = terms_.begin();
  for (auto it = terms_.begin(); it != terms_.end(); ++it)
    if (monomial_less(best->first, it->first, ord)) best = it;
  return *best;
}

MPoly MPoly::monic(MonomialOrder ord) const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading(ord).second);
}

QPoly MPoly::to_qpoly(int var) const {
  QPoly q;
  for (const auto& [m, c] : terms_) {
    for (size_t i = 0; i < m.size(); ++i)
      if (static_cast<int>(i) != var && m[i] != 0) throw std::invalid_argument("not univariate");
    size_t e = static_cast<size_t>(at(m, static_cast<size_t>(var)));
    if (q.size() <= e) q.resize(e + 1);
    q[e] += c;
  }
  qpoly::trim(q);
  return q;
}

std::string MPoly::to_string(const std::string& prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    bool unit = a == 1 && !m.empty();
    if (!unit) os << rational_string(a);
    bool star = !unit;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      os << (star ? "*" : "") << prefix << i;
      if (m[i] > 1) os << "^" << m[i];
      star = true;
    }
  }
  return os.str();
}

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& G, MonomialOrder ord) {
  MPoly p = f, r;
  std::vector<std::pair<Monomial, Rational>> lead;
  for (const auto& g : G) lead.push_back(g.leading(ord));
  while (!p.is_zero()) {
    auto [m, c] = p.leading(ord);
    bool reduced = false;
    for (size_t i = 0; i < G.size(); ++i) {
      if (!divides(lead[i].first, m)) continue;
      p -= monomial_times(G[i], quotient(m, lead[i].first), c / lead[i].second);
      reduced = true;
      break;
    }
    if (!reduced) {
      r.add_term(m, c);
      MPoly t;
      t.add_term(m, c);
      p -= t;
    }
  }
  return r;
}

std::vector<MPoly> groebner_basis(const std::vector<MPoly>& F, MonomialOrder ord) {
  std::vector<MPoly> G;
  std::vector<Monomial> lead;
  for (const auto& f : F) {
    if (f.is_zero()) continue;
    if (f.is_constant()) return {MPoly(1)};
    G.push_back(f.monic(ord));
    lead.push_back(G.back().leading(ord).first);
  }
  struct Pair {
    size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  std::set<std::pair<size_t, size_t>> done;
  for (size_t j = 0; j < G.size(); ++j)
    for (size_t i = 0; i < j; ++i) pairs.push_back({i, j, lcm(lead[i], lead[j])});
  auto processed = [&](size_t a, size_t b) { return done.count({std::min(a, b), std::max(a, b)}) > 0; };
  while (!pairs.empty()) {
    auto pick = pairs.begin();
    for (auto it = pairs.begin(); it != pairs.end(); ++it)
      if (monomial_less(it->lcm, pick->lcm, ord)) pick = it;
    Pair p = *pick;
    pairs.erase(pick);
    done.insert({p.i, p.j});
    if (mul(lead[p.i], lead[p.j]) == p.lcm) continue;  // coprime leading monomials
    bool chain = false;  // some k with lead_k | lcm and both pairs already handled
    for (size_t k = 0; k < G.size() && !chain; ++k)
      if (k != p.i && k != p.j && divides(lead[k], p.lcm) && processed(p.i, k) && processed(p.j, k)) chain = true;
    if (chain) continue;
    MPoly s = monomial_times(G[p.i], quotient(p.lcm, lead[p.i]), Rational(1)) -
              monomial_times(G[p.j], quotient(p.lcm, lead[p.j]), Rational(1));
    MPoly r = normal_form(s, G, ord);
    if (r.is_zero()) continue;
    if (r.is_constant()) return {MPoly(1)};
    G.push_back(r.monic(ord));
    lead.push_back(G.back().leading(ord).first);
    for (size_t k = 0; k + 1 < G.size(); ++k) pairs.push_back({k, G.size() - 1, lcm(lead[k], lead.back())});
  }
  // minimal, then reduced
  std::vector<MPoly> M;
  for (size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(lead[j], lead[i]) && (lead[i] != lead[j] || j < i)) redundant = true;
    }
    if (!redundant) M.push_back(G[i]);
  }
  for (size_t i = 0; i < M.size(); ++i) {
    std::vector<MPoly> others;
    for (size_t j = 0; j < M.size(); ++j)
      if (j != i) others.push_back(M[j]);
    M[i] = normal_form(M[i], others, ord).monic(ord);
  }
  std::sort(M.begin(), M.end(), [&](const MPoly& a, const MPoly& b) {
    return monomial_less(a.leading(ord).first, b.leading(ord).first, ord);
  });
  return M;
}

namespace {

bool is_unit(const std::vector<MPoly>& B) { return B.size() == 1 && B[0].is_constant(); }

std::set<int> variables(const MPoly& f) {
  std::set<int> v;
  for (const auto& [m, c] : f.terms())
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) v.insert(static_cast<int>(i));
  return v;
}

// Variable of a univariate nonconstant polynomial, or -1.
int univariate_in(const MPoly& f) {
  auto v = variables(f);
  return v.size() == 1 ? *v.begin() : -1;
}

struct Solver {
  int n;
  RationalSolutions out;

  void run(std::vector<MPoly> F, std::vector<std::pair<int, MPoly>> subs) {
    std::vector<MPoly> G;
    for (auto& f : F) {
      for (const auto& [v, e] : subs) f = f.substitute(v, e);
      if (f.is_zero()) continue;
      if (f.is_constant()) return;
      if (std::find(G.begin(), G.end(), f) == G.end()) G.push_back(f);
    }
    if (G.empty()) {
      finish(subs);
      return;
    }
    if (split_monomial(G, subs) || eliminate_linear(G, subs)) return;
    // subsystems closed in a small set of variables, growing toward the whole system
    std::set<int> all, U;
    std::vector<std::set<int>> vs;
    for (const auto& f : G) {
      vs.push_back(variables(f));
      all.insert(vs.back().begin(), vs.back().end());
    }
    while (true) {
      if (U.size() < all.size()) {
        size_t best = G.size();
        size_t best_new = all.size() + 1;
        for (size_t i = 0; i < G.size(); ++i) {
          size_t fresh = 0;
          for (int v : vs[i]) fresh += U.count(v) ? 0 : 1;
          if (fresh > 0 && fresh < best_new) {
            best_new = fresh;
            best = i;
          }
        }
        U.insert(vs[best].begin(), vs[best].end());
      }
      std::vector<MPoly> S;
      for (size_t i = 0; i < G.size(); ++i)
        if (std::includes(U.begin(), U.end(), vs[i].begin(), vs[i].end())) S.push_back(G[i]);
      if (is_unit(groebner_basis(S, MonomialOrder::Grevlex))) return;
      auto B = groebner_basis(S, MonomialOrder::Lex);
      if (is_unit(B)) return;
      if (branch_univariate(B, G, subs)) return;
      if (U.size() == all.size()) break;
    }
    out.positive_dimensional = true;
  }

  bool split_monomial(const std::vector<MPoly>& G, const std::vector<std::pair<int, MPoly>>& subs) {
    // t f = 0 gives t = 0 or f = 0
    for (size_t i = 0; i < G.size(); ++i) {
      Monomial g;
      bool first = true;
      for (const auto& [m, c] : G[i].terms()) {
        if (first) {
          g = m;
          first = false;
        } else {
          Monomial h(std::min(g.size(), m.size()));
          for (size_t k = 0; k < h.size(); ++k) h[k] = std::min(g[k], m[k]);
          trim(h);
          g = h;
        }
      }
      if (g.empty()) continue;
      for (size_t v = 0; v < g.size(); ++v) {
        if (g[v] == 0) continue;
        auto s = subs;
        s.emplace_back(static_cast<int>(v), MPoly());
        run(G, s);
      }
      if (G[i].terms().size() > 1) {
        MPoly q;
        for (const auto& [m, c] : G[i].terms()) q.add_term(quotient(m, g), c);
        auto H = G;
        H[i] = q;
        run(H, subs);
      }
      return true;
    }
    return false;
  }

  bool eliminate_linear(const std::vector<MPoly>& G, std::vector<std::pair<int, MPoly>> subs) {
    // a variable that occurs linearly with a constant coefficient
    for (const auto& f : G) {
      for (int v = 0; v < f.num_vars(); ++v) {
        if (f.degree_in(v) != 1) continue;
        MPoly coeff, rest;
        for (const auto& [m, c] : f.terms()) {
          if (at(m, static_cast<size_t>(v)) == 1) {
            Monomial q = m;
            q[static_cast<size_t>(v)] = 0;
            coeff.add_term(q, c);
          } else {
            rest.add_term(m, c);
          }
        }
        if (!coeff.is_constant()) continue;
        subs.emplace_back(v, rest * (Rational(-1) / coeff.constant()));
        run(G, subs);
        return true;
      }
    }
    return false;
  }

  // Branches on the rational roots of a univariate element of B. Irrational
  // roots are only flagged when they are consistent with the whole system G.
  bool branch_univariate(const std::vector<MPoly>& B, const std::vector<MPoly>& G,
                         const std::vector<std::pair<int, MPoly>>& subs) {
    for (auto it = B.rbegin(); it != B.rend(); ++it) {
      int v = univariate_in(*it);
      if (v < 0) continue;
      auto split = qpoly::squarefree_and_rational_roots(it->to_qpoly(v));
      for (const auto& [mod, k] : split.moduli) {
        MPoly m;
        for (size_t e = 0; e < mod.size(); ++e) {
          Monomial mono(static_cast<size_t>(v) + 1, 0);
          mono.back() = static_cast<int>(e);
          m.add_term(mono, mod[e]);
        }
        auto H = G;
        H.push_back(m);
        if (!is_unit(groebner_basis(H, MonomialOrder::Grevlex))) out.irrational_skipped = true;
      }
      for (const auto& [r, k] : split.roots) {
        auto s = subs;
        s.emplace_back(v, MPoly(r));
        run(G, s);
      }
      return true;
    }
    return false;
  }

  void finish(const std::vector<std::pair<int, MPoly>>& subs) {
    std::vector<std::optional<Rational>> val(static_cast<size_t>(n));
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
      MPoly e = it->second;
      for (int v = 0; v < n; ++v)
        if (val[static_cast<size_t>(v)]) e = e.substitute(v, MPoly(*val[static_cast<size_t>(v)]));
      if (!e.is_constant()) {
        out.positive_dimensional = true;
        return;
      }
      val[static_cast<size_t>(it->first)] = e.constant();
    }
    std::vector<Rational> p;
    for (const auto& v : val) {
      if (!v) {
        out.positive_dimensional = true;
        return;
      }
      p.push_back(*v);
    }
    if (std::find(out.points.begin(), out.points.end(), p) == out.points.end()) out.points.push_back(p);
  }
};

}  // namespace

RationalSolutions rational_solutions(const std::vector<MPoly>& F, int num_vars) {
  Solver s{num_vars, {}};
  s.run(F, {});
  return s.out;
}

}  // namespace fol
