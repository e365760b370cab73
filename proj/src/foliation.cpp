#include "foliation/foliation.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "foliation/polyalg.hpp"
#include "foliation/qpoly.hpp"

namespace fol {

ExtensionPtr AffineOneForm::extension() const {
  if (auto e = a.extension()) return e;
  return b.extension();
}

std::string AffineOneForm::to_string() const {
  return "(" + a.to_string() + ")*dx + (" + b.to_string() + ")*dy";
}

AffineOneForm make_form(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("the zero 1-form defines no foliation");
  Poly g = poly_gcd(a, b);
  AffineOneForm w;
  if (g.is_constant()) {
    w.a = a;
    w.b = b;
    return w;
  }
  w.a = *divide_exact(a, g);
  w.b = *divide_exact(b, g);
  w.removed_content = g;
  return w;
}

AffineOneForm from_derivation(const Poly& f, const Poly& g) { return make_form(g, -f); }

namespace {

Poly homogenize(const Poly& p, int k) {
  Poly h;
  for (const auto& [e, c] : p.terms()) h += Poly::monomial({e[0], e[1], k - e[0] - e[1]}, c);
  return h;
}

}  // namespace

ProjectiveFoliation extend_to_plane(const AffineOneForm& w) {
  ProjectiveFoliation F;
  F.affine = w;
  int k = std::max(w.a.degree(), w.b.degree());
  Poly ah = homogenize(w.a, k), bh = homogenize(w.b, k);
  const Poly x = Poly::var(0), y = Poly::var(1), z = Poly::var(2);
  Poly top = x * w.a.homogeneous_part(k) + y * w.b.homogeneous_part(k);
  if (top.is_zero()) {
    F.B = ah;
    F.C = bh;
    F.A = (-(x * ah + y * bh)).unshift({0, 0, 1});
    F.degree = k - 1;
  } else {
    F.B = z * ah;
    F.C = z * bh;
    F.A = -(x * ah + y * bh);
    F.degree = k;
  }
  if (!(z * F.A + x * F.B + y * F.C).is_zero()) throw std::logic_error("Euler relation fails");
  F.infinity_invariant = line_at_infinity_invariant(F);
  int generic = generic_line_tangency(F);
  if (generic != F.degree)
    throw std::logic_error("degree " + std::to_string(F.degree) + " disagrees with generic tangency count " +
                           std::to_string(generic));
  return F;
}

bool line_at_infinity_invariant(const ProjectiveFoliation& F) {
  return F.B.evaluate(2, FElem(0)).is_zero() && F.C.evaluate(2, FElem(0)).is_zero();
}

int generic_line_tangency(const ProjectiveFoliation& F, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  const Poly s = Poly::var(0);
  int best = -1;
  for (int attempt = 0; attempt < 12; ++attempt) {
    std::array<long, 3> p1{}, p2{};
    for (auto& v : p1) v = dist(gen);
    for (auto& v : p2) v = dist(gen);
    std::array<std::optional<Poly>, 3> images;
    for (size_t i = 0; i < 3; ++i) images[i] = s * Poly(p1[i]) + Poly(p2[i]);
    Poly h = F.A.compose(images) * Poly(p1[2]) + F.B.compose(images) * Poly(p1[0]) +
             F.C.compose(images) * Poly(p1[1]);
    int d = h.is_zero() ? -1 : h.degree();
    best = std::max(best, d);
    if (best == F.degree) break;
  }
  return best;
}

std::string to_string(Chart c) {
  switch (c) {
    case Chart::Z: return "z=1";
    case Chart::X: return "x=1";
    case Chart::Y: return "y=1";
  }
  return "?";
}

std::pair<Poly, Poly> chart_form(const ProjectiveFoliation& F, Chart c) {
  const Poly s = Poly::var(0), t = Poly::var(1), one(1);
  std::array<std::optional<Poly>, 3> img;
  switch (c) {
    case Chart::Z:
      img = {s, t, one};
      return {F.B.compose(img), F.C.compose(img)};
    case Chart::X:
      img = {one, t, s};
      return {F.A.compose(img), F.C.compose(img)};
    case Chart::Y:
      img = {s, one, t};
      return {F.B.compose(img), F.A.compose(img)};
  }
  throw std::logic_error("unknown chart");
}

std::string ProjectivePoint::to_string() const {
  std::string r = "(" + coords[0].to_string() + ":" + coords[1].to_string() + ":" + coords[2].to_string() + ")";
  if (ext) r += " with " + qpoly::to_string(ext->modulus(), ext->generator()) + " = 0";
  return r;
}

long SingularLocus::total_milnor() const {
  long s = 0;
  for (const auto& e : entries) s += e.record.mu * e.point.conjugates();
  return s;
}

namespace {

ProjectivePoint specialize(const ProjectivePoint& p, const QPoly& factor) {
  ProjectivePoint q = p;
  auto target = split_target(factor, p.ext ? p.ext->generator() : "t");
  for (auto& c : q.coords) c = specialize(c, target);
  for (auto& c : q.local) c = specialize(c, target);
  q.ext = target.ext;
  return q;
}

class TowerNeeded : public std::runtime_error {
 public:
  TowerNeeded() : std::runtime_error("singular points need a tower of extensions") {}
};

QPoly as_qpoly(const Poly& p, int var) {
  if (!p.is_rational()) throw std::invalid_argument("expected rational coefficients");
  return p.to_qpoly(var);
}

Poly squarefree_part(const Poly& g, int var) {
  Poly d = g.derivative(var);
  if (d.is_zero()) return g;
  Poly h = poly_gcd(g, d, var);
  if (h.is_constant()) return g;
  return *divide_exact(g, h);
}

/// Affine common zeros of P and Q in (x, y), as clusters over Q or Q[t]/(m).
std::vector<ProjectivePoint> affine_zeros_sheared(const Poly& P0, const Poly& Q0, const Rational& c) {
  const Poly x = Poly::var(0), y = Poly::var(1);
  Poly P = P0, Q = Q0;
  if (c != 0) {
    Poly xs = x - Poly(c) * y;
    P = P0.substitute(0, xs);
    Q = Q0.substitute(0, xs);
  }
  std::vector<ProjectivePoint> out;
  auto push = [&](const FElem& X0, const FElem& y0, const ExtensionPtr& ext) {
    ProjectivePoint p;
    FElem x0 = X0 - FElem(c) * y0;
    p.coords = {x0, y0, FElem(1)};
    p.local = {x0, y0};
    p.chart = Chart::Z;
    p.ext = ext;
    out.push_back(p);
  };
  if (P.is_zero() || Q.is_zero()) throw NonIsolatedSingularity("one component of the form vanishes");
  if (P.degree_in(1) == 0 && Q.degree_in(1) == 0) return out;
  Poly R = resultant(P, Q, 1);
  if (R.is_zero()) throw NonIsolatedSingularity("components share a factor");
  auto split = qpoly::squarefree_and_rational_roots(as_qpoly(R, 0));
  for (const auto& [r, mult] : split.roots) {
    (void)mult;
    QPoly pr = as_qpoly(P.evaluate(0, FElem(r)), 1), qr = as_qpoly(Q.evaluate(0, FElem(r)), 1);
    QPoly g = qpoly::gcd(pr, qr);
    if (g.empty()) throw NonIsolatedSingularity("vertical line of zeros");
    auto ys = qpoly::squarefree_and_rational_roots(g);
    for (const auto& [y0, m2] : ys.roots) push(FElem(r), FElem(y0), nullptr);
    for (const auto& [mod, m2] : ys.moduli) {
      auto K = make_extension(mod);
      push(FElem(r, K), FElem::generator(K), K);
    }
  }
  std::vector<QPoly> work;
  for (const auto& [mod, mult] : split.moduli) work.push_back(mod);
  while (!work.empty()) {
    QPoly m = work.back();
    work.pop_back();
    if (qpoly::degree(m) == 1) {
      throw std::logic_error("linear modulus in the irrational part");
    }
    auto K = make_extension(m);
    FElem X0 = FElem::generator(K);
    try {
      Poly pk = P.in(K).evaluate(0, X0), qk = Q.in(K).evaluate(0, X0);
      pk.check_coefficients();
      qk.check_coefficients();
      Poly g = poly_gcd(pk, qk, 1);
      if (g.is_zero()) throw NonIsolatedSingularity("vertical line of zeros");
      if (g.is_constant()) continue;
      g = squarefree_part(g, 1);
      if (g.degree_in(1) >= 2) throw TowerNeeded();
      g.check_coefficients();
      FElem g1 = g.coeff({0, 1, 0}), g0 = g.coeff({0, 0, 0});
      push(X0, -g0 / g1, K);
    } catch (const ZeroDivisor& z) {
      work.push_back(z.factor());
      work.push_back(z.cofactor());
    }
  }
  return out;
}

std::vector<ProjectivePoint> affine_zeros(const Poly& P, const Poly& Q) {
  for (int c = 0; c <= 12; ++c) {
    try {
      return affine_zeros_sheared(P, Q, Rational(c));
    } catch (const TowerNeeded&) {
    }
  }
  throw std::runtime_error("no separating shear found for the affine singular points");
}

}  // namespace

SingularLocus singular_points(const ProjectiveFoliation& F, const ClassifyOptions& opts) {
  if (!F.A.is_rational() || !F.B.is_rational() || !F.C.is_rational())
    throw std::invalid_argument("singular locus computation needs rational coefficients");
  SingularLocus locus;
  std::vector<std::pair<ProjectivePoint, std::pair<Poly, Poly>>> candidates;

  auto [Pz, Qz] = chart_form(F, Chart::Z);
  try {
    for (auto& p : affine_zeros(Pz, Qz)) candidates.push_back({p, {Pz, Qz}});
  } catch (const NonIsolatedSingularity& e) {
    locus.complete = false;
    locus.defects.push_back(std::string("affine chart: ") + e.what());
  }

  auto [Px, Qx] = chart_form(F, Chart::X);
  QPoly p0 = as_qpoly(Px.evaluate(0, FElem(0)), 1), q0 = as_qpoly(Qx.evaluate(0, FElem(0)), 1);
  QPoly g = qpoly::gcd(p0, q0);
  if (g.empty()) {
    locus.complete = false;
    locus.defects.push_back("the line at infinity consists of singular points");
  } else {
    auto split = qpoly::squarefree_and_rational_roots(g);
    auto push = [&](const FElem& w0, const ExtensionPtr& ext) {
      ProjectivePoint p;
      p.chart = Chart::X;
      p.coords = {FElem(1), w0, FElem(0)};
      p.local = {FElem(0), w0};
      p.ext = ext;
      candidates.push_back({p, {Px, Qx}});
    };
    for (const auto& [r, m] : split.roots) push(FElem(r), nullptr);
    for (const auto& [mod, m] : split.moduli) {
      auto K = make_extension(mod);
      push(FElem::generator(K), K);
    }
  }

  auto [Py, Qy] = chart_form(F, Chart::Y);
  if (Py.constant_term().is_zero() && Qy.constant_term().is_zero()) {
    ProjectivePoint p;
    p.chart = Chart::Y;
    p.coords = {FElem(0), FElem(1), FElem(0)};
    p.local = {FElem(0), FElem(0)};
    candidates.push_back({p, {Py, Qy}});
  }

  std::vector<std::pair<ProjectivePoint, std::pair<Poly, Poly>>> work(candidates.rbegin(), candidates.rend());
  while (!work.empty()) {
    auto [pt, form] = work.back();
    work.pop_back();
    try {
      Poly P = form.first, Q = form.second;
      if (pt.ext) {
        P = P.in(pt.ext);
        Q = Q.in(pt.ext);
      }
      P = P.translate({pt.local[0], pt.local[1], FElem(0)});
      Q = Q.translate({pt.local[0], pt.local[1], FElem(0)});
      SingularEntry e{pt, P, Q, classify_form(P, Q, opts)};
      locus.entries.push_back(std::move(e));
    } catch (const ZeroDivisor& z) {
      work.push_back({specialize(pt, z.cofactor()), form});
      work.push_back({specialize(pt, z.factor()), form});
    } catch (const NonIsolatedSingularity& e) {
      locus.complete = false;
      locus.defects.push_back(pt.to_string() + ": " + e.what());
    }
  }
  return locus;
}

std::string AffineLine::to_string() const {
  return rational_string(a) + "*x + " + rational_string(b) + "*y + " + rational_string(c) + " = 0";
}

TangencyReport affine_tangency(const AffineOneForm& w, const AffineLine& line) {
  if (line.a == 0 && line.b == 0) throw std::invalid_argument("degenerate line");
  const Poly s = Poly::var(0);
  Poly gx, gy;
  FElem dx, dy;
  if (line.b != 0) {
    gx = s;
    gy = s * Poly(Rational(-line.a / line.b)) + Poly(Rational(-line.c / line.b));
    dx = FElem(1);
    dy = FElem(Rational(-line.a / line.b));
  } else {
    gx = Poly(Rational(-line.c / line.a));
    gy = s;
    dx = FElem(0);
    dy = FElem(1);
  }
  std::array<std::optional<Poly>, 3> img{gx, gy, std::nullopt};
  Poly h = w.a.compose(img) * dx + w.b.compose(img) * dy;
  if (h.is_zero()) throw InvariantLine("line " + line.to_string() + " is invariant: the pulled back form vanishes");
  TangencyReport rep;
  QPoly hq = as_qpoly(h, 0);
  rep.affine_total = qpoly::degree(hq);
  if (rep.affine_total > 0) {
    auto split = qpoly::squarefree_and_rational_roots(hq);
    for (const auto& [r, m] : split.roots) rep.zeros.push_back({qpoly::x_minus(r), r, m});
    for (const auto& [mod, m] : split.moduli) rep.zeros.push_back({mod, std::nullopt, m});
  }
  rep.projective_total = extend_to_plane(w).degree;
  rep.at_infinity = rep.projective_total - rep.affine_total;
  return rep;
}

Poly tangency_identity_check(const AffineOneForm& w, const Poly& h) {
  return w.a * h.derivative(1) - w.b * h.derivative(0);
}

}  // namespace fol
