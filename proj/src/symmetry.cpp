#include "foliation/symmetry.hpp"

#include <cstdlib>
#include <numeric>

#include "foliation/darboux.hpp"
#include "foliation/qpoly.hpp"

namespace fol {

namespace {

const Poly& X0() {
  static const Poly x = Poly::var(0);
  return x;
}
const Poly& Y0() {
  static const Poly y = Poly::var(1);
  return y;
}

// c with p = c q when such a constant exists.
std::optional<FElem> constant_ratio(const AffineOneForm& p, const AffineOneForm& q) {
  const Poly& ref = q.a.is_zero() ? q.b : q.a;
  const Poly& num = q.a.is_zero() ? p.b : p.a;
  if (ref.is_zero()) return std::nullopt;
  auto [e, lc] = ref.leading_term();
  FElem c = num.coeff(e) / lc;
  if (c.is_zero()) return std::nullopt;
  if (p.a != q.a * c || p.b != q.b * c) return std::nullopt;
  return c;
}

}  // namespace

PolynomialMap PolynomialMap::identity() { return {X0(), Y0()}; }

Poly PolynomialMap::jacobian() const { return X.derivative(0) * Y.derivative(1) - X.derivative(1) * Y.derivative(0); }

int PolynomialMap::degree() const { return std::max(X.degree(), Y.degree()); }

bool PolynomialMap::is_identity() const { return X == X0() && Y == Y0(); }

Poly PolynomialMap::apply(const Poly& p) const { return p.compose({X, Y, std::nullopt}); }

std::string PolynomialMap::to_string() const { return "(" + X.to_string() + ", " + Y.to_string() + ")"; }

PolynomialMap compose(const PolynomialMap& outer, const PolynomialMap& inner) {
  return {inner.apply(outer.X), inner.apply(outer.Y)};
}

PolynomialMap power(const PolynomialMap& R, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  PolynomialMap r = PolynomialMap::identity();
  for (int i = 0; i < k; ++i) r = compose(R, r);
  return r;
}

AffineOneForm pullback_form(const PolynomialMap& R, const AffineOneForm& w, bool normalize) {
  Poly a = R.apply(w.a), b = R.apply(w.b);
  Poly na = a * R.X.derivative(0) + b * R.Y.derivative(0);
  Poly nb = a * R.X.derivative(1) + b * R.Y.derivative(1);
  if (normalize) return make_form(na, nb);
  AffineOneForm out;
  out.a = na;
  out.b = nb;
  return out;
}

SymmetryVerdict check_symmetry(const PolynomialMap& R, const AffineOneForm& w) {
  SymmetryVerdict v;
  v.jacobian = R.jacobian();
  v.jacobian_constant = v.jacobian.is_constant() && !v.jacobian.is_zero();
  AffineOneForm p = pullback_form(R, w);
  if (p.a * w.b - p.b * w.a != Poly()) {
    v.reason = "the pulled back form is not proportional to the form";
    return v;
  }
  v.c = constant_ratio(p, w);
  if (!v.c) {
    v.reason = "the pulled back form is a non-constant multiple of the form";
    return v;
  }
  v.preserves = true;
  v.isotropy = v.jacobian_constant && v.jacobian.constant_term() == *v.c;
  return v;
}

EquivalenceVerdict verify_equivalence(const PolynomialMap& R, const AffineOneForm& w1, const AffineOneForm& w2) {
  EquivalenceVerdict v;
  AffineOneForm p = pullback_form(R, w1, true);
  AffineOneForm q = make_form(w2.a, w2.b);
  v.c = constant_ratio(p, q);
  v.equivalent = v.c.has_value();
  return v;
}

std::optional<int> map_order(const PolynomialMap& R, int cap) {
  PolynomialMap r = PolynomialMap::identity();
  for (int k = 1; k <= cap; ++k) {
    r = compose(R, r);
    if (r.is_identity()) return k;
  }
  return std::nullopt;
}

FElem primitive_root_of_unity(int n) {
  if (n < 1) throw std::invalid_argument("root of unity order must be positive");
  if (n == 1) return FElem(1);
  if (n == 2) return FElem(-1);
  // Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<QPoly> phi(static_cast<size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    if (n % k != 0) continue;
    QPoly p(static_cast<size_t>(k) + 1, Rational(0));
    p[0] = -1;
    p[static_cast<size_t>(k)] = 1;
    for (int d = 1; d < k; ++d)
      if (k % d == 0) p = qpoly::divmod(p, phi[static_cast<size_t>(d)]).first;
    phi[static_cast<size_t>(k)] = p;
  }
  return FElem::generator(make_extension(phi[static_cast<size_t>(n)], "t"));
}

GammaConstruction build_gamma(const FElem& xi, int n, const Poly& tau, const AffineOneForm& w) {
  if (n < 2) throw std::invalid_argument("the covering degree must be at least 2");
  FElem p(1);
  for (int i = 0; i < n; ++i) p *= xi;
  if (p != FElem(1)) throw std::invalid_argument("xi is not an n-th root of unity");
  for (int v : tau.variables())
    if (v != 0) throw std::invalid_argument("tau must be a polynomial in x");
  if (!complete_transversality(w, AffineLine{1, 0, 0}))
    throw std::invalid_argument("the line x = 0 is not completely transverse");

  GammaConstruction g;
  g.n = n;
  g.xi = xi;
  g.tau = tau;
  const Poly& x = X0();
  const Poly& y = Y0();
  Poly tau_xi = tau.substitute(0, x * xi);
  Poly delta = tau_xi - tau;
  if (delta.is_zero()) throw DegenerateGamma("tau(xi x) = tau(x): the conjugated map is linear");
  g.phi = {x.pow(n), y};
  g.T = {x * xi, y};
  g.shear = {x, y + tau};
  PolynomialMap inverse_shear{x, y - tau};
  g.gamma = compose(g.shear, compose(g.T, inverse_shear));
  g.pulled = pullback_form(g.phi, w);
  g.transformed = pullback_form(inverse_shear, g.pulled);
  g.T_on_pulled = check_symmetry(g.T, g.pulled);
  g.gamma_on_transformed = check_symmetry(g.gamma, g.transformed);
  if (!g.gamma_on_transformed.preserves) throw std::logic_error("constructed map does not preserve the form");
  auto ord = map_order(g.gamma, n);
  if (!ord) throw std::logic_error("constructed map has order above n");
  g.order = *ord;
  g.degree = delta.degree();
  return g;
}

DiagonalRelations diagonal_symmetry_relations(const AffineOneForm& w) {
  // (alpha x, beta y)^* x^i y^j dx = alpha^(i+1) beta^j x^i y^j dx
  std::vector<std::pair<long, long>> weights;
  for (const auto& [e, c] : w.a.terms()) weights.emplace_back(e[0] + 1, e[1]);
  for (const auto& [e, c] : w.b.terms()) weights.emplace_back(e[0], e[1] + 1);
  std::vector<std::pair<long, long>> rel;
  for (size_t i = 1; i < weights.size(); ++i)
    rel.emplace_back(weights[i].first - weights[0].first, weights[i].second - weights[0].second);
  // Hermite form of the row lattice
  DiagonalRelations out;
  std::pair<long, long> first{0, 0};
  std::vector<long> second;
  for (auto r : rel) {
    // fold r into `first` by the Euclidean algorithm on the first column
    while (r.first != 0) {
      if (first.first == 0 || std::labs(r.first) < std::labs(first.first)) std::swap(first, r);
      long q = r.first / first.first;
      r.first -= q * first.first;
      r.second -= q * first.second;
    }
    if (r.second != 0) second.push_back(r.second);
  }
  long g2 = 0;
  for (long s : second) g2 = std::gcd(g2, s);
  if (first.first < 0) first = {-first.first, -first.second};
  if (g2 != 0 && first.first != 0) first.second = ((first.second % g2) + g2) % g2;
  if (first.first != 0) out.rows.push_back(first);
  if (g2 != 0) out.rows.emplace_back(0, g2);
  if (first.first != 0 && g2 != 0) out.group_order = first.first * g2;
  return out;
}

}  // namespace fol
