#include "foliation/qpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fol::qpoly {

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly scale(const QPoly& a, const Rational& c) {
  if (c == 0) return {};
  QPoly r(a);
  for (auto& v : r) v *= c;
  return r;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  QPoly r(a);
  trim(r);
  int db = degree(b);
  if (degree(r) < db) return {{}, r};
  QPoly q(r.size() - b.size() + 1);
  Rational lc_inv = 1 / b.back();
  for (int k = degree(r); k >= db; --k) {
    Rational c = r[k] * lc_inv;
    if (c == 0) continue;
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b[j];
  }
  trim(q);
  r.resize(db);
  trim(r);
  return {q, r};
}

QPoly rem(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

QPoly monic(const QPoly& a) {
  if (a.empty()) return a;
  return scale(a, 1 / a.back());
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x(a), y(b);
  trim(x);
  trim(y);
  while (!y.empty()) {
    QPoly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

std::pair<QPoly, QPoly> gcd_cofactor(const QPoly& a, const QPoly& m) {
  QPoly r0 = m, r1 = rem(a, m);
  QPoly s0, s1{Rational(1)};
  if (r1.empty()) return {monic(r0), {}};
  while (!r1.empty()) {
    auto [q, r2] = divmod(r0, r1);
    QPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  Rational lc = r0.back();
  return {scale(r0, 1 / lc), rem(scale(s0, 1 / lc), m)};
}

QPoly derivative(const QPoly& p) {
  if (p.size() <= 1) return {};
  QPoly r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * static_cast<long>(i);
  trim(r);
  return r;
}

Rational eval(const QPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly x_minus(const Rational& r) { return QPoly{-r, Rational(1)}; }

std::vector<std::pair<QPoly, int>> squarefree(const QPoly& p) {
  std::vector<std::pair<QPoly, int>> out;
  if (degree(p) < 1) return out;
  QPoly f = monic(p);
  QPoly df = derivative(f);
  QPoly a = gcd(f, df);
  QPoly b = divmod(f, a).first;
  QPoly c = divmod(df, a).first;
  QPoly d = sub(c, derivative(b));
  int i = 1;
  while (degree(b) > 0) {
    a = gcd(b, d);
    if (degree(a) > 0) out.emplace_back(a, i);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = sub(c, derivative(b));
    ++i;
  }
  return out;
}

namespace {

int sign(const Rational& q) { return sgn(q); }

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain{p, derivative(p)};
  while (!chain.back().empty()) {
    QPoly r = rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    chain.push_back(scale(r, -1));
  }
  return chain;
}

int variations(const std::vector<QPoly>& chain, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& s : chain) {
    int v = sign(eval(s, x));
    if (v == 0) continue;
    if (last != 0 && v != last) ++count;
    last = v;
  }
  return count;
}

Rational floor_q(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

// Rational with the least denominator in [a, b], a <= b.
Rational simplest_between(Rational a, Rational b) {
  if (b < 0) return -simplest_between(-b, -a);
  if (a <= 0) return 0;
  Rational fl = floor_q(a);
  if (fl == a) return a;
  if (fl + 1 <= b) return fl + 1;
  return fl + 1 / simplest_between(1 / (b - fl), 1 / (a - fl));
}

Rational cauchy_bound(const QPoly& p) {
  Rational m = 0;
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    Rational v = abs(p[i] / p.back());
    if (v > m) m = v;
  }
  return m + 1;
}

void isolate(const std::vector<QPoly>& chain, Rational a, Rational b, int va, int vb,
             std::vector<std::pair<Rational, Rational>>& out) {
  int n = va - vb;
  if (n == 0) return;
  if (n == 1) {
    out.emplace_back(a, b);
    return;
  }
  Rational mid = (a + b) / 2;
  int vm = variations(chain, mid);
  isolate(chain, a, mid, va, vm, out);
  isolate(chain, mid, b, vm, vb, out);
}

}  // namespace

int count_real_roots(const QPoly& p, const Rational& a, const Rational& b) {
  QPoly sf = p;
  trim(sf);
  if (degree(sf) < 1) return 0;
  sf = divmod(sf, gcd(sf, derivative(sf))).first;
  auto chain = sturm_chain(sf);
  return variations(chain, a) - variations(chain, b);
}

std::vector<Rational> rational_roots(const QPoly& p) {
  QPoly f = p;
  trim(f);
  if (f.empty()) throw std::domain_error("rational_roots of zero polynomial");
  std::vector<Rational> roots;
  if (degree(f) < 1) return roots;
  // Strip the root at zero.
  size_t low = 0;
  while (low < f.size() && f[low] == 0) ++low;
  if (low > 0) {
    roots.push_back(0);
    f.erase(f.begin(), f.begin() + static_cast<long>(low));
  }
  if (degree(f) >= 1) {
    f = divmod(f, gcd(f, derivative(f))).first;
    // Integer-primitive form for the denominator bound.
    mpz_class den = 1;
    for (const auto& c : f) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_class lc = abs(mpz_class(f.back() * den));
    Rational width(1, 2);
    width /= Rational(lc * lc);
    auto chain = sturm_chain(f);
    Rational bound = cauchy_bound(f);
    Rational lo = -bound, hi = bound;
    std::vector<std::pair<Rational, Rational>> intervals;
    isolate(chain, lo, hi, variations(chain, lo), variations(chain, hi), intervals);
    for (auto [a, b] : intervals) {
      if (eval(f, b) == 0) {
        roots.push_back(b);
        continue;
      }
      int sb = sign(eval(f, b));
      while (b - a >= width) {
        Rational mid = (a + b) / 2;
        int sm = sign(eval(f, mid));
        if (sm == 0) {
          a = b = mid;
          break;
        }
        if (sm == sb) b = mid; else a = mid;
      }
      Rational cand = simplest_between(a, b);
      if (eval(f, cand) == 0) roots.push_back(cand);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

RootSplit squarefree_and_rational_roots(const QPoly& p) {
  QPoly f = p;
  trim(f);
  if (f.empty()) throw std::domain_error("squarefree_and_rational_roots of zero polynomial");
  RootSplit out;
  out.factors = squarefree(f);
  for (const auto& [fac, mult] : out.factors) {
    QPoly rest = fac;
    for (const auto& r : rational_roots(fac)) {
      out.roots.emplace_back(r, mult);
      rest = divmod(rest, x_minus(r)).first;
    }
    if (degree(rest) > 0) out.moduli.emplace_back(monic(rest), mult);
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

std::string to_string(const QPoly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(p); k >= 0; --k) {
    const Rational& c = p[k];
    if (c == 0) continue;
    Rational a = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    bool unit = (a == 1);
    if (k == 0 || !unit) {
      os << rational_string(a);
      if (k > 0) os << "*";
    }
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

}  // namespace fol::qpoly
