#include "foliation/darboux.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "foliation/matrix.hpp"
#include "foliation/polyalg.hpp"
#include "foliation/qpoly.hpp"

namespace fol {

namespace {

// Bivariate polynomial with coefficients polynomial in the parameters.
using Key = std::pair<int, int>;
using SPoly = std::map<Key, MPoly>;

void add(SPoly& a, const Key& k, const MPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = a.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) a.erase(it);
  }
}

Rational rat(const FElem& c) {
  if (!c.is_rational()) throw std::invalid_argument("cofactor search needs rational coefficients");
  return c.rational();
}

SPoly lift(const Poly& p) {
  SPoly r;
  for (const auto& [e, c] : p.terms()) add(r, {e[0], e[1]}, MPoly(rat(c)));
  return r;
}

// P d/dx + Q d/dy applied to C, for numeric P, Q.
SPoly apply(const Poly& P, const Poly& Q, const SPoly& C) {
  SPoly r;
  for (const auto& [k, c] : C) {
    auto [i, j] = k;
    if (i > 0)
      for (const auto& [e, p] : P.terms()) add(r, {e[0] + i - 1, e[1] + j}, c * (rat(p) * i));
    if (j > 0)
      for (const auto& [e, q] : Q.terms()) add(r, {e[0] + i, e[1] + j - 1}, c * (rat(q) * j));
  }
  return r;
}

SPoly mul(const SPoly& a, const SPoly& b) {
  SPoly r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) add(r, {ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return r;
}

Poly evaluate(const SPoly& s, const std::vector<Rational>& point) {
  Poly r;
  for (const auto& [k, c] : s) {
    MPoly v = c;
    for (size_t i = 0; i < point.size(); ++i) v = v.substitute(static_cast<int>(i), MPoly(point[i]));
    if (!v.is_constant()) throw std::logic_error("parameter left after substitution");
    r += Poly::monomial({k.first, k.second, 0}, FElem(v.constant()));
  }
  return r;
}

// Monomials x^a y^(deg-a), a = 0..deg.
Key mono(int deg, int a) { return {a, deg - a}; }

struct Orbit {
  Poly factor;  // homogeneous, irreducible over Q when of degree <= 3
  Poly kappa;   // v_D(factor) / factor
};

struct TopCase {
  Poly K;                   // top cofactor part
  std::vector<Poly> basis;  // kernel of v_D - K on degree n
};

struct Search {
  std::vector<Poly> P, Q;  // homogeneous parts of the field, index 0..D
  int D = 1;

  Poly vD(const Poly& f) const { return P[D] * f.derivative(0) + Q[D] * f.derivative(1); }

  // Matrix of C -> v_D(C) - K C from degree n to degree n + D - 1.
  Matrix top_matrix(int n, const Poly& K) const {
    int m = n + D - 1;
    Matrix M(static_cast<size_t>(m + 1), static_cast<size_t>(n + 1));
    for (int a = 0; a <= n; ++a) {
      Poly b = Poly::monomial({a, n - a, 0});
      Poly img = vD(b) - K * b;
      for (const auto& [e, c] : img.terms()) M(static_cast<size_t>(e[0]), static_cast<size_t>(a)) = c;
    }
    return M;
  }

  std::vector<TopCase> top_cases(int n, DarbouxLevel& lvl) const {
    Poly x = Poly::var(0), y = Poly::var(1);
    Poly W = x * Q[D] - y * P[D];
    std::vector<Poly> Ks;
    if (W.is_zero()) {
      auto h = divide_exact(P[D], x);
      if (!h) throw std::logic_error("radial top part not divisible by x");
      Ks.push_back(*h * Poly(static_cast<long>(n)));
    } else {
      std::vector<Orbit> orbits;
      auto push = [&](const Poly& f) {
        auto k = divide_exact(vD(f), f);
        if (!k) throw std::logic_error("line at infinity factor is not invariant");
        orbits.push_back({f, *k});
      };
      QPoly q = W.evaluate(0, FElem(1)).to_qpoly(1);
      int dW = W.degree();
      if (qpoly::degree(q) < dW) push(x);
      auto split = qpoly::squarefree_and_rational_roots(q);
      for (const auto& [r, m] : split.roots) push(y - x * Poly(r));
      for (const auto& [mod, m] : split.moduli) {
        if (qpoly::degree(mod) >= 4) lvl.top_split_incomplete = true;
        Poly f;
        int e = qpoly::degree(mod);
        for (int i = 0; i <= e; ++i)
          if (mod[static_cast<size_t>(i)] != 0)
            f += Poly::monomial({e - i, i, 0}, FElem(mod[static_cast<size_t>(i)]));
        push(f);
      }
      std::vector<int> ex(orbits.size(), 0);
      std::function<void(size_t, int)> rec = [&](size_t i, int left) {
        if (i == orbits.size()) {
          if (left != 0) return;
          Poly K;
          for (size_t o = 0; o < orbits.size(); ++o) K += orbits[o].kappa * Poly(static_cast<long>(ex[o]));
          if (std::find(Ks.begin(), Ks.end(), K) == Ks.end()) Ks.push_back(K);
          return;
        }
        int deg = orbits[i].factor.degree();
        for (int e = 0; e * deg <= left; ++e) {
          ex[i] = e;
          rec(i + 1, left - e * deg);
        }
        ex[i] = 0;
      };
      rec(0, n);
    }
    std::vector<TopCase> out;
    for (const auto& K : Ks) {
      auto ns = top_matrix(n, K).nullspace();
      if (ns.empty()) continue;
      TopCase tc{K, {}};
      for (const auto& v : ns) {
        Poly b;
        for (int a = 0; a <= n; ++a) b += Poly::monomial({a, n - a, 0}, v[static_cast<size_t>(a)]);
        tc.basis.push_back(b);
      }
      out.push_back(tc);
    }
    return out;
  }

  // One branch: C_n and K_{D-1} fixed up to the listed parameters.
  struct Branch {
    int n = 0;
    std::vector<SPoly> C;   // index = homogeneous degree
    std::vector<SPoly> K;
    std::vector<bool> Cknown, Kknown;
    int params = 0;
    bool symbolic_top = false;
    std::vector<MPoly> conditions;
    bool impossible = false;
  };

  void solve_levels(Branch& br) const {
    int n = br.n;
    for (int j = 1; j <= n + D - 1 && !br.impossible; ++j) {
      int m = n + D - 1 - j;
      int cdeg = n - j, kdeg = D - 1 - j;
      if (br.symbolic_top && kdeg >= 0) {
        SPoly Kp;
        for (int a = 0; a <= kdeg; ++a) add(Kp, mono(kdeg, a), MPoly::var(br.params++));
        br.K[static_cast<size_t>(kdeg)] = Kp;
        br.Kknown[static_cast<size_t>(kdeg)] = true;
      }
      // known contributions at degree m
      SPoly R;
      for (int k = 1; k <= n; ++k) {
        if (!br.Cknown[static_cast<size_t>(k)]) continue;
        int i = m - k + 1;
        if (i >= 0 && i <= D)
          for (const auto& [key, c] : apply(P[static_cast<size_t>(i)], Q[static_cast<size_t>(i)], br.C[static_cast<size_t>(k)]))
            add(R, key, c);
      }
      for (int q = 0; q < D; ++q) {
        if (!br.Kknown[static_cast<size_t>(q)]) continue;
        int k = m - q;
        if (k < 0 || k > n || !br.Cknown[static_cast<size_t>(k)]) continue;
        for (const auto& [key, c] : mul(br.K[static_cast<size_t>(q)], br.C[static_cast<size_t>(k)])) add(R, key, -c);
      }
      // unknown columns
      size_t rows = static_cast<size_t>(m + 1);
      std::vector<std::pair<char, int>> cols;  // ('C' | 'K', monomial index)
      std::vector<std::vector<Rational>> colv;
      if (cdeg >= 0) {
        Poly Kt = evaluate(br.K[static_cast<size_t>(D - 1)], {});
        for (int a = 0; a <= cdeg; ++a) {
          Poly b = Poly::monomial({a, cdeg - a, 0});
          Poly img = vD(b) - Kt * b;
          std::vector<Rational> v(rows);
          for (const auto& [e, c] : img.terms()) v[static_cast<size_t>(e[0])] = rat(c);
          cols.push_back({'C', a});
          colv.push_back(v);
        }
      }
      bool kcols = kdeg >= 0 && !br.Kknown[static_cast<size_t>(kdeg)];
      if (kcols) {
        Poly Cn = evaluate(br.C[static_cast<size_t>(n)], {});
        for (int a = 0; a <= kdeg; ++a) {
          Poly img = -(Poly::monomial({a, kdeg - a, 0}) * Cn);
          std::vector<Rational> v(rows);
          for (const auto& [e, c] : img.terms()) v[static_cast<size_t>(e[0])] = rat(c);
          cols.push_back({'K', a});
          colv.push_back(v);
        }
      }
      size_t nc = cols.size();
      Matrix A(rows, nc + rows);
      for (size_t c = 0; c < nc; ++c)
        for (size_t r = 0; r < rows; ++r) A(r, c) = FElem(colv[c][r]);
      for (size_t r = 0; r < rows; ++r) A(r, nc + r) = FElem(1);
      auto pivots = A.rref();
      std::vector<MPoly> rhs(rows);
      for (size_t r = 0; r < rows; ++r) {
        auto it = R.find(mono(m, static_cast<int>(r)));
        if (it != R.end()) rhs[r] = -it->second;
      }
      auto transformed = [&](size_t r) {
        MPoly s;
        for (size_t k = 0; k < rows; ++k) {
          const FElem& e = A(r, nc + k);
          if (!e.is_zero()) s += rhs[k] * e.rational();
        }
        return s;
      };
      std::vector<MPoly> value(nc);
      std::vector<bool> is_pivot(nc, false);
      for (size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] < nc) is_pivot[pivots[r]] = true;
      for (size_t c = 0; c < nc; ++c)
        if (!is_pivot[c]) value[c] = MPoly::var(br.params++);
      for (size_t r = 0; r < rows; ++r) {
        bool pivot_row = r < pivots.size() && pivots[r] < nc;
        MPoly s = transformed(r);
        if (!pivot_row) {
          if (s.is_zero()) continue;
          if (s.is_constant()) {
            br.impossible = true;
            return;
          }
          br.conditions.push_back(s);
          continue;
        }
        size_t pc = pivots[r];
        for (size_t c = 0; c < nc; ++c)
          if (!is_pivot[c] && !A(r, c).is_zero()) s -= value[c] * A(r, c).rational();
        value[pc] = s;
      }
      if (cdeg >= 0) {
        SPoly Cp;
        for (size_t c = 0; c < nc; ++c)
          if (cols[c].first == 'C') add(Cp, mono(cdeg, cols[c].second), value[c]);
        br.C[static_cast<size_t>(cdeg)] = Cp;
        br.Cknown[static_cast<size_t>(cdeg)] = true;
      }
      if (kcols) {
        SPoly Kp;
        for (size_t c = 0; c < nc; ++c)
          if (cols[c].first == 'K') add(Kp, mono(kdeg, cols[c].second), value[c]);
        br.K[static_cast<size_t>(kdeg)] = Kp;
        br.Kknown[static_cast<size_t>(kdeg)] = true;
      }
    }
  }
};

Poly field_apply(const AffineOneForm& w, const Poly& C) {
  return w.field_x() * C.derivative(0) + w.field_y() * C.derivative(1);
}

}  // namespace

bool DarbouxResult::complete() const {
  for (const auto& l : transcript)
    if (l.positive_dimensional || l.irrational_skipped || l.top_split_incomplete) return false;
  return true;
}

DarbouxResult invariant_curves_up_to_degree(const AffineOneForm& w, int d) {
  if (d < 1) throw std::invalid_argument("degree bound must be at least 1");
  if (!w.a.is_rational() || !w.b.is_rational())
    throw std::invalid_argument("cofactor search needs rational coefficients");
  Search S;
  Poly fx = w.field_x(), fy = w.field_y();
  S.D = std::max({fx.degree(), fy.degree(), 1});
  for (int i = 0; i <= S.D; ++i) {
    S.P.push_back(fx.homogeneous_part(i));
    S.Q.push_back(fy.homogeneous_part(i));
  }
  DarbouxResult out;
  for (int n = 1; n <= d; ++n) {
    DarbouxLevel lvl;
    lvl.degree = n;
    lvl.unknowns = (n + 1) * (n + 2) / 2 + S.D * (S.D + 1) / 2;
    lvl.equations = (n + S.D) * (n + S.D + 1) / 2;
    std::vector<InvariantCurve> found;
    for (const auto& tc : S.top_cases(n, lvl)) {
      size_t dim = tc.basis.size();
      // normalization: first nonzero basis coefficient is 1
      for (size_t lead = 0; lead < dim; ++lead) {
        if (dim == 1 && lead > 0) break;
        Search::Branch br;
        br.n = n;
        br.C.assign(static_cast<size_t>(n + 1), {});
        br.K.assign(static_cast<size_t>(S.D), {});
        br.Cknown.assign(static_cast<size_t>(n + 1), false);
        br.Kknown.assign(static_cast<size_t>(S.D), false);
        br.symbolic_top = dim > 1;
        SPoly Cn = lift(tc.basis[lead]);
        for (size_t o = lead + 1; o < dim; ++o) {
          MPoly t = MPoly::var(br.params++);
          for (const auto& [k, c] : lift(tc.basis[o])) add(Cn, k, c * t);
        }
        br.C[static_cast<size_t>(n)] = Cn;
        br.Cknown[static_cast<size_t>(n)] = true;
        br.K[static_cast<size_t>(S.D - 1)] = lift(tc.K);
        br.Kknown[static_cast<size_t>(S.D - 1)] = true;
        ++lvl.branches;
        S.solve_levels(br);
        if (br.impossible) continue;
        lvl.parameters += br.params;
        lvl.conditions += static_cast<int>(br.conditions.size());
        auto sol = rational_solutions(br.conditions, br.params);
        lvl.positive_dimensional = lvl.positive_dimensional || sol.positive_dimensional;
        lvl.irrational_skipped = lvl.irrational_skipped || sol.irrational_skipped;
        for (const auto& pt : sol.points) {
          Poly C, K;
          for (const auto& part : br.C) C += evaluate(part, pt);
          for (const auto& part : br.K) K += evaluate(part, pt);
          if (C.degree() != n) continue;
          if (field_apply(w, C) != K * C) throw std::logic_error("invariant curve failed re-substitution");
          Poly c = normalize_monic(C, 0);
          K = *divide_exact(field_apply(w, c), c);
          bool dup = false;
          for (const auto& f : found) dup = dup || f.curve == c;
          if (!dup) found.push_back({c, K});
        }
      }
    }
    for (auto& f : found) {
      bool reducible = false;
      for (const auto& g : out.curves) reducible = reducible || divide_exact(f.curve, g.curve).has_value();
      if (reducible) continue;
      out.curves.push_back(f);
      ++lvl.solutions;
    }
    out.transcript.push_back(lvl);
  }
  return out;
}

SingularityFreeness affine_singularity_free(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("zero component");
  if (!f.is_rational() || !g.is_rational()) throw std::invalid_argument("rational coefficients required");
  SingularityFreeness out;
  if (f.is_constant() || g.is_constant()) {
    out.resultant = f.is_constant() ? f : g;
    out.checks.push_back("a component is a nonzero constant");
    return out;
  }
  Poly h = poly_gcd(f, g, 0);
  if (!h.is_constant()) throw std::invalid_argument("components share the factor " + h.to_string());
  out.resultant = resultant(f, g, 1);
  if (out.resultant.is_zero()) throw std::logic_error("resultant vanishes despite trivial gcd");
  QPoly R = out.resultant.to_qpoly(0);
  if (qpoly::degree(R) <= 0) {
    out.checks.push_back("Res_y is a nonzero constant");
    return out;
  }
  auto split = qpoly::squarefree_and_rational_roots(R);
  for (const auto& [x0, mult] : split.roots) {
    Poly gf = poly_gcd(f.evaluate(0, FElem(x0)), g.evaluate(0, FElem(x0)), 1);
    std::string xs = rational_string(x0);
    if (gf.degree_in(1) <= 0) {
      out.checks.push_back("x = " + xs + ": gcd in y is constant");
      continue;
    }
    out.free = false;
    QPoly gy = gf.to_qpoly(1);
    auto ys = qpoly::rational_roots(gy);
    if (!ys.empty()) {
      for (const auto& y0 : ys) out.witnesses.push_back("(" + xs + ", " + rational_string(y0) + ")");
    } else {
      out.witnesses.push_back("x = " + xs + ", y a root of " + qpoly::to_string(gy, "y"));
    }
    out.checks.push_back("x = " + xs + ": common factor " + gf.to_string());
  }
  std::vector<QPoly> work;
  for (const auto& [m, k] : split.moduli) work.push_back(m);
  while (!work.empty()) {
    QPoly m = work.back();
    work.pop_back();
    std::string ms = qpoly::to_string(m, "x");
    try {
      auto ext = make_extension(m, "x0");
      FElem t = FElem::generator(ext);
      Poly gf = poly_gcd(f.in(ext).evaluate(0, t), g.in(ext).evaluate(0, t), 1);
      if (gf.degree_in(1) <= 0) {
        out.checks.push_back("x a root of " + ms + ": gcd in y is constant");
        continue;
      }
      out.free = false;
      out.witnesses.push_back("x = x0 a root of " + ms + ", y a root of " + gf.to_string({"x", "y", "z"}));
      out.checks.push_back("x a root of " + ms + ": common factor of degree " + std::to_string(gf.degree_in(1)));
    } catch (const ZeroDivisor& z) {
      work.push_back(qpoly::monic(z.factor()));
      work.push_back(qpoly::monic(z.cofactor()));
    }
  }
  return out;
}

bool SimplicityCertificate::valid() const { return zeros.free && search.curves.empty() && search.complete(); }

std::string SimplicityCertificate::label() const {
  return "bounded-degree certificate (d = " + std::to_string(degree_bound) + ") - not a proof of simplicity";
}

SimplicityCertificate simplicity_certificate(const Poly& f, const Poly& g, int d) {
  if (d < 1) throw std::invalid_argument("degree bound must be at least 1");
  SimplicityCertificate c;
  c.f = f;
  c.g = g;
  c.degree_bound = d;
  c.zeros = affine_singularity_free(f, g);
  c.search = invariant_curves_up_to_degree(from_derivation(f, g), d);
  return c;
}

bool complete_transversality(const AffineOneForm& w, const AffineLine& line) {
  return affine_tangency(w, line).affine_total == 0;
}

}  // namespace fol
