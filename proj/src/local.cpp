#include "foliation/local.hpp"

#include <algorithm>
#include <map>

#include "foliation/polyalg.hpp"
#include "foliation/qpoly.hpp"

namespace fol {

std::string to_string(SingularityType t) {
  switch (t) {
    case SingularityType::Regular: return "regular";
    case SingularityType::NonDegenerate: return "non-degenerate";
    case SingularityType::MorseCandidate: return "Morse-candidate";
    case SingularityType::SaddleNode: return "saddle-node";
    case SingularityType::Radial: return "radial";
    case SingularityType::NonReducedRational: return "non-reduced (lambda in Q+)";
    case SingularityType::Nilpotent: return "nilpotent";
    case SingularityType::Degenerate: return "degenerate";
  }
  return "?";
}

std::string short_tag(SingularityType t) {
  switch (t) {
    case SingularityType::Regular: return "reg";
    case SingularityType::NonDegenerate: return "nd";
    case SingularityType::MorseCandidate: return "morse";
    case SingularityType::SaddleNode: return "sn";
    case SingularityType::Radial: return "radial";
    case SingularityType::NonReducedRational: return "q+";
    case SingularityType::Nilpotent: return "nilp";
    case SingularityType::Degenerate: return "deg";
  }
  return "?";
}

bool is_reduced(SingularityType t) {
  return t == SingularityType::NonDegenerate || t == SingularityType::MorseCandidate ||
         t == SingularityType::SaddleNode || t == SingularityType::Regular;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  Rational c = q;
  c.canonicalize();
  mpz_class n = c.get_num(), d = c.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return Rational(sn, sd);
}

std::optional<Rational> rational_value(const FElem& e) {
  if (e.is_rational()) return e.rational();
  const QPoly& m = e.ext()->modulus();
  // Characteristic polynomial of multiplication by e: Res_w(z - e(w), m(w)).
  Poly z = Poly::var(0);
  Poly ew = Poly::from_qpoly(e.rep(), 1);
  Poly mw = Poly::from_qpoly(m, 1);
  QPoly chi = resultant(z - ew, mw, 1).to_qpoly(0);
  for (const Rational& c : qpoly::rational_roots(chi)) {
    QPoly h = qpoly::gcd(m, qpoly::sub(e.rep(), QPoly{c}));
    if (qpoly::degree(h) > 0) throw ZeroDivisor(h, m);
  }
  return std::nullopt;
}

namespace {

int sure_degree(const Poly& univariate, int var) {
  if (univariate.is_zero()) return -1;
  int d = univariate.degree_in(var);
  univariate.coefficient_in(var, d).constant_term().decide_zero();
  return d;
}

int sure_order(const Poly& univariate, int var) {
  int o = univariate.order_in(var);
  univariate.coefficient_in(var, o).constant_term().decide_zero();
  return o;
}

bool vanishes_at_origin(const Poly& p) { return p.constant_term().decide_zero(); }

std::array<FElem, 2> kernel2(const FElem& a, const FElem& b, const FElem& c, const FElem& d) {
  if (!a.decide_zero() || !b.decide_zero()) return {-b, a};
  return {-d, c};
}

}  // namespace

int algebraic_multiplicity(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) throw NonIsolatedSingularity("zero vector field");
  if (!vanishes_at_origin(f) || !vanishes_at_origin(g)) return 0;
  int of = f.is_zero() ? g.order() : f.order();
  int og = g.is_zero() ? f.order() : g.order();
  return std::min(of, og);
}

long milnor_fulton(const Poly& f, const Poly& g) {
  Poly F = f, G = g;
  F.check_coefficients();
  G.check_coefficients();
  // An isolated local number is at most the Bezout bound B, and then
  // m^(B+1) lies in m (F, G): terms of degree > B never matter. Each
  // division by y costs one degree of precision and lowers the remaining
  // number by at least one, so the bound keeps holding. With a common
  // component the truncated count reaches B + 1 instead.
  const long bound = static_cast<long>(std::max(F.degree(), 0)) * std::max(G.degree(), 0);
  int precision = static_cast<int>(bound) + 1;
  F = F.truncate(precision);
  G = G.truncate(precision);
  long total = 0;
  for (int iter = 0; iter < 200000; ++iter) {
    if (total > bound) throw NonIsolatedSingularity("common component through the point");
    if ((!F.is_zero() && !vanishes_at_origin(F)) || (!G.is_zero() && !vanishes_at_origin(G))) return total;
    if (F.is_zero() || G.is_zero()) throw NonIsolatedSingularity("common component through the point");
    Poly F0 = F.evaluate(1, FElem(0)), G0 = G.evaluate(1, FElem(0));
    int r = sure_degree(F0, 0), s = sure_degree(G0, 0);
    if (r < 0 && s < 0) throw NonIsolatedSingularity("both germs divisible by the same axis");
    if (r > s) {
      std::swap(F, G);
      std::swap(F0, G0);
      std::swap(r, s);
    }
    if (r < 0) {
      total += sure_order(G0, 0);
      F = F.unshift({0, 1, 0});
      --precision;
      F = F.truncate(precision);
      G = G.truncate(precision);
      continue;
    }
    FElem ratio = G0.coefficient_in(0, s).constant_term() / F0.coefficient_in(0, r).constant_term();
    G -= F.shift({s - r, 0, 0}) * ratio;
    G = G.truncate(precision);
    G.check_coefficients();
  }
  throw std::runtime_error("intersection multiplicity did not terminate");
}

long truncated_colength(const Poly& f, const Poly& g, int N) {
  if (N <= 0) return 0;
  std::map<Exponent, int> index;
  std::vector<Exponent> monos;
  for (int d = 0; d < N; ++d)
    for (int i = d; i >= 0; --i) {
      Exponent e{i, d - i, 0};
      index[e] = static_cast<int>(monos.size());
      monos.push_back(e);
    }
  using Row = std::map<int, FElem>;
  std::map<int, Row> pivots;
  auto insert = [&](const Poly& p) {
    Row row;
    for (const auto& [e, c] : p.terms()) {
      if (total_degree(e) >= N) continue;
      row[index.at(e)] = c;
    }
    while (!row.empty()) {
      auto lead = row.begin();
      if (lead->second.decide_zero()) {
        row.erase(lead);
        continue;
      }
      auto pv = pivots.find(lead->first);
      if (pv == pivots.end()) {
        FElem inv = lead->second.inv();
        for (auto& [k, v] : row) v *= inv;
        pivots.emplace(lead->first, std::move(row));
        return;
      }
      FElem factor = lead->second;
      for (const auto& [k, v] : pv->second) {
        FElem nv = row[k] - factor * v;
        if (nv.is_zero()) row.erase(k);
        else row[k] = nv;
      }
    }
  };
  for (const auto& m : monos) {
    insert(f.shift(m).truncate(N));
    insert(g.shift(m).truncate(N));
  }
  return static_cast<long>(monos.size() - pivots.size());
}

OracleResult milnor_truncated_oracle(const Poly& f, const Poly& g, int cap) {
  long a = truncated_colength(f, g, cap);
  long b = truncated_colength(f, g, cap + 1);
  return {a, cap, a == b};
}

OracleResult milnor_oracle_ascending(const Poly& f, const Poly& g, int cap) {
  long prev = truncated_colength(f, g, 1);
  for (int N = 1; N <= cap; ++N) {
    long next = truncated_colength(f, g, N + 1);
    if (next == prev) return {prev, N, true};
    prev = next;
  }
  return {prev, cap, false};
}

namespace {

std::vector<FElem> coeff_vector(const Poly& h, int k) {
  std::vector<FElem> v(static_cast<size_t>(k + 1));
  for (const auto& [e, c] : h.terms()) {
    if (total_degree(e) != k) throw std::logic_error("jet term of unexpected degree");
    v[static_cast<size_t>(e[0])] = c;
  }
  return v;
}

Poly from_vector(const std::vector<FElem>& v, int k) {
  Poly h;
  for (int i = 0; i <= k; ++i)
    if (!v[static_cast<size_t>(i)].is_zero()) h += Poly::monomial({i, k - i, 0}, v[static_cast<size_t>(i)]);
  return h;
}

Poly apply_field(const Poly& fj, const Poly& gj, const Poly& h) {
  return fj * h.derivative(0) + gj * h.derivative(1);
}

}  // namespace

MorseVerdict formal_first_integral_jet(const Poly& f, const Poly& g, int jet_order) {
  MorseVerdict out;
  int top = std::max(f.degree(), g.degree());
  std::vector<Poly> fj(static_cast<size_t>(jet_order + 2)), gj(fj.size());
  for (int j = 1; j < static_cast<int>(fj.size()); ++j) {
    if (j <= top) {
      fj[static_cast<size_t>(j)] = f.homogeneous_part(j);
      gj[static_cast<size_t>(j)] = g.homogeneous_part(j);
    }
  }
  auto linear_operator = [&](int k) {
    Matrix L(static_cast<size_t>(k + 1), static_cast<size_t>(k + 1));
    for (int i = 0; i <= k; ++i) {
      Poly img = apply_field(fj[1], gj[1], Poly::monomial({i, k - i, 0}));
      auto col = coeff_vector(img, k);
      for (int r = 0; r <= k; ++r) L(static_cast<size_t>(r), static_cast<size_t>(i)) = col[static_cast<size_t>(r)];
    }
    return L;
  };
  auto ker = linear_operator(2).nullspace();
  if (ker.size() != 1) {
    out.obstruction = 2;
    return out;
  }
  std::vector<Poly> H(static_cast<size_t>(jet_order + 1));
  H[2] = from_vector(ker[0], 2);
  out.order = 2;
  for (int k = 3; k <= jet_order; ++k) {
    Poly rhs;
    for (int i = 2; i <= k - 1; ++i) {
      int j = k - i + 1;
      if (j > top) continue;
      rhs -= apply_field(fj[static_cast<size_t>(j)], gj[static_cast<size_t>(j)], H[static_cast<size_t>(i)]);
    }
    auto sol = linear_operator(k).solve(coeff_vector(rhs, k));
    if (!sol) {
      out.obstruction = k;
      return out;
    }
    H[static_cast<size_t>(k)] = from_vector(*sol, k);
    out.order = k;
  }
  out.candidate = true;
  return out;
}

SingularityRecord classify_field(const Poly& f, const Poly& g, const ClassifyOptions& opts) {
  f.check_coefficients();
  g.check_coefficients();
  SingularityRecord rec;
  if (!vanishes_at_origin(f) || !vanishes_at_origin(g)) return rec;
  rec.ell = algebraic_multiplicity(f, g);
  FElem a = f.coeff({1, 0, 0}), b = f.coeff({0, 1, 0});
  FElem c = g.coeff({1, 0, 0}), d = g.coeff({0, 1, 0});
  rec.linear_part = Matrix{{a, b}, {c, d}};
  rec.trace = a + d;
  rec.det = a * d - b * c;
  rec.mu = milnor_fulton(f, g);
  if (rec.ell >= 2) {
    rec.type = SingularityType::Degenerate;
    return rec;
  }
  if (b.decide_zero() && c.decide_zero() && (a - d).decide_zero()) {
    rec.type = SingularityType::Radial;
    rec.lambda_class = LambdaClass::Rational;
    rec.lambda = std::make_pair(Rational(1), Rational(1));
    return rec;
  }
  if (rec.det.decide_zero()) {
    if (rec.trace.decide_zero()) {
      rec.type = SingularityType::Nilpotent;
      return rec;
    }
    rec.type = SingularityType::SaddleNode;
    rec.strong_direction = kernel2(a - rec.trace, b, c, d - rec.trace);
    rec.weak_direction = kernel2(a, b, c, d);
    return rec;
  }
  FElem t = rec.trace * rec.trace / rec.det;
  rec.t_ratio = t;
  auto tv = rational_value(t);
  rec.type = SingularityType::NonDegenerate;
  rec.lambda_class = LambdaClass::Irrational;
  if (tv) {
    // lambda + 1/lambda = t - 2
    auto s = rational_sqrt(*tv * (*tv - 4));
    if (s) {
      Rational l1 = (*tv - 2 + *s) / 2, l2 = (*tv - 2 - *s) / 2;
      rec.lambda_class = LambdaClass::Rational;
      rec.lambda = std::make_pair(l1, l2);
      if (*tv >= 4) rec.type = SingularityType::NonReducedRational;
    }
  }
  if (rec.type == SingularityType::NonDegenerate && rec.trace.decide_zero()) {
    rec.morse = formal_first_integral_jet(f, g, opts.morse_jet_order);
    if (rec.morse->candidate) rec.type = SingularityType::MorseCandidate;
  }
  return rec;
}

SingularityRecord classify_form(const Poly& P, const Poly& Q, const ClassifyOptions& opts) {
  return classify_field(Q, -P, opts);
}

}  // namespace fol
