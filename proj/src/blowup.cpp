#include "foliation/blowup.hpp"

#include <algorithm>
#include <sstream>

#include "foliation/polyalg.hpp"
#include "foliation/qpoly.hpp"

namespace fol {

Rational& DivisorClass::at(size_t i) {
  if (c.size() <= i) c.resize(i + 1);
  return c[i];
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  DivisorClass r;
  r.c.resize(std::max(c.size(), o.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = (*this)[i] + o[i];
  return r;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const { return *this + o * Rational(-1); }

DivisorClass DivisorClass::operator*(const Rational& k) const {
  DivisorClass r = *this;
  for (auto& v : r.c) v *= k;
  return r;
}

bool DivisorClass::operator==(const DivisorClass& o) const {
  size_t n = std::max(c.size(), o.c.size());
  for (size_t i = 0; i < n; ++i)
    if ((*this)[i] != o[i]) return false;
  return true;
}

bool DivisorClass::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rational& v) { return v == 0; });
}

std::string DivisorClass::to_string(const std::vector<std::string>& names) const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    std::string name = i < names.size() ? names[i] : (i == 0 ? "H" : "E" + std::to_string(i));
    Rational v = c[i];
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    Rational a = abs(v);
    if (a != 1) os << rational_string(a) << "*";
    os << name;
    first = false;
  }
  return first ? "0" : os.str();
}

DivisorClass Lattice::H() const {
  DivisorClass d;
  d.at(0) = 1;
  return d;
}

DivisorClass Lattice::E(size_t i) const {
  DivisorClass d;
  d.at(i) = 1;
  return d;
}

Rational Lattice::dot(const DivisorClass& a, const DivisorClass& b) const {
  Rational r = a[0] * b[0];
  for (size_t i = 1; i <= weights.size(); ++i) r -= a[i] * b[i] * weights[i - 1];
  return r;
}

namespace {

const Poly S = Poly::var(0), T = Poly::var(1);

/// Zero test that throws ZeroDivisor on an undecided coefficient.
bool surely_zero(const Poly& p) {
  for (const auto& [e, c] : p.terms())
    if (!c.decide_zero()) return false;
  return true;
}

Poly specialize(const Poly& p, const SplitTarget& t) {
  return p.map_coefficients([&](const FElem& c) { return specialize(c, t); });
}

Poly squarefree_part(const Poly& g, int var) {
  Poly d = g.derivative(var);
  if (d.is_zero()) return g;
  Poly h = poly_gcd(g, d, var);
  if (h.is_constant()) return g;
  return *divide_exact(g, h);
}

}  // namespace

std::pair<Poly, int> strict_transform_local(const Poly& h, int chart) {
  int m = h.order();
  if (m <= 0) throw std::invalid_argument("curve does not pass through the center");
  if (chart == 1) return {h.compose({S, S * T, std::nullopt}).unshift({m, 0, 0}), m};
  return {h.compose({S * T, T, std::nullopt}).unshift({0, m, 0}), m};
}

BlowupResult blowup_point(const Poly& P, const Poly& Q, const ClassifyOptions& opts) {
  P.check_coefficients();
  Q.check_coefficients();
  ExtensionPtr K = P.extension() ? P.extension() : Q.extension();
  BlowupResult r;
  r.ell = algebraic_multiplicity(Q, -P);
  Poly tangent = S * P.homogeneous_part(r.ell) + T * Q.homogeneous_part(r.ell);
  r.dicritical = surely_zero(tangent);
  r.cleared = r.dicritical ? r.ell + 1 : r.ell;
  int k = r.cleared;

  Poly Ps = P.compose({S, S * T, std::nullopt}), Qs = Q.compose({S, S * T, std::nullopt});
  r.P1 = (Ps + T * Qs).unshift({k, 0, 0});
  r.Q1 = (S * Qs).unshift({k, 0, 0});
  Poly Pu = P.compose({S * T, T, std::nullopt}), Qu = Q.compose({S * T, T, std::nullopt});
  r.P2 = (T * Pu).unshift({0, k, 0});
  r.Q2 = (S * Pu + Qu).unshift({0, k, 0});

  struct Candidate {
    int chart;
    FElem v0;
    ExtensionPtr ext;
  };
  std::vector<Candidate> work;
  if (surely_zero(r.P2.truncate(1)) && surely_zero(r.Q2.truncate(1))) work.push_back({2, FElem(0), K});
  Poly a0 = r.P1.evaluate(0, FElem(0)), b0 = r.Q1.evaluate(0, FElem(0));
  if (surely_zero(a0) && surely_zero(b0)) {
    r.defects.push_back("the exceptional curve consists of singular points");
  } else if (!K) {
    QPoly g = qpoly::gcd(a0.to_qpoly(1), b0.to_qpoly(1));
    if (qpoly::degree(g) > 0) {
      auto split = qpoly::squarefree_and_rational_roots(g);
      for (auto it = split.moduli.rbegin(); it != split.moduli.rend(); ++it) {
        auto E = make_extension(it->first);
        work.push_back({1, FElem::generator(E), E});
      }
      for (auto it = split.roots.rbegin(); it != split.roots.rend(); ++it) work.push_back({1, FElem(it->first), nullptr});
    }
  } else {
    Poly g = poly_gcd(a0, b0, 1);
    if (!g.is_constant()) {
      g = squarefree_part(g, 1);
      g.check_coefficients();
      if (g.degree_in(1) == 1) {
        work.push_back({1, -g.coeff({0, 0, 0}) / g.coeff({0, 1, 0}), K});
      } else {
        r.defects.push_back("points on the exceptional curve need a tower of extensions");
      }
    }
  }

  while (!work.empty()) {
    Candidate c = work.back();
    work.pop_back();
    Poly Pc = c.chart == 1 ? r.P1 : r.P2, Qc = c.chart == 1 ? r.Q1 : r.Q2;
    if (c.ext && c.ext != K) {
      Pc = Pc.in(c.ext);
      Qc = Qc.in(c.ext);
    }
    try {
      if (c.chart == 1) {
        Pc = Pc.translate({FElem(0), c.v0, FElem(0)});
        Qc = Qc.translate({FElem(0), c.v0, FElem(0)});
      }
      ExceptionalPoint pt;
      pt.chart = c.chart;
      pt.coordinate = c.v0;
      pt.ext = c.ext;
      pt.P = Pc;
      pt.Q = Qc;
      pt.record = classify_form(Pc, Qc, opts);
      r.points.push_back(std::move(pt));
    } catch (const ZeroDivisor& z) {
      if (!c.ext || c.ext == K) throw;
      for (const QPoly& f : {z.cofactor(), z.factor()}) {
        auto t = split_target(f, c.ext->generator());
        work.push_back({c.chart, specialize(c.v0, t), t.ext});
      }
    }
  }
  return r;
}

std::vector<int> ReductionTree::ell_sequence() const {
  std::vector<int> out;
  for (const auto& c : centers) out.push_back(c.ell);
  return out;
}

int ReductionTree::find_curve(const std::string& name) const {
  for (size_t i = 0; i < curves.size(); ++i)
    if (curves[i].name == name) return static_cast<int>(i);
  return -1;
}

const CurveRecord& ReductionTree::curve(const std::string& name) const {
  int i = find_curve(name);
  if (i < 0) throw std::out_of_range("no curve named " + name);
  return curves[static_cast<size_t>(i)];
}

Rational ReductionTree::self_intersection(int c) const {
  const auto& cls = curves.at(static_cast<size_t>(c)).cls;
  return lattice.dot(cls, cls);
}

Rational ReductionTree::intersection(int a, int b) const {
  return lattice.dot(curves.at(static_cast<size_t>(a)).cls, curves.at(static_cast<size_t>(b)).cls);
}

std::vector<const LeafPoint*> ReductionTree::points_on(int c) const {
  std::vector<const LeafPoint*> out;
  for (int i : curves.at(static_cast<size_t>(c)).singularities) out.push_back(&leaves.at(static_cast<size_t>(i)));
  return out;
}

bool ReductionTree::all_reduced() const {
  return std::all_of(leaves.begin(), leaves.end(), [](const LeafPoint& l) { return l.record.reduced(); });
}

std::string to_string(ReductionStatus s) {
  switch (s) {
    case ReductionStatus::Complete: return "complete";
    case ReductionStatus::DepthExceeded: return "depth-exceeded";
    case ReductionStatus::Unsupported: return "unsupported";
  }
  return "?";
}

namespace {

struct Active {
  LeafPoint leaf;
  int depth = 0;
};

Active specialize(const Active& a, const QPoly& factor) {
  auto t = split_target(factor, a.leaf.ext ? a.leaf.ext->generator() : "t");
  Active b = a;
  b.leaf.ext = t.ext;
  b.leaf.P = specialize(a.leaf.P, t);
  b.leaf.Q = specialize(a.leaf.Q, t);
  for (auto& c : b.leaf.curves) c.h = specialize(c.h, t);
  if (b.leaf.base) {
    for (auto& v : b.leaf.base->coords) v = specialize(v, t);
    for (auto& v : b.leaf.base->local) v = specialize(v, t);
    b.leaf.base->ext = t.ext;
  }
  return b;
}

std::string point_label(int center, const ExceptionalPoint& q) {
  std::string r = "E" + std::to_string(center) + (q.chart == 1 ? ":v=" + q.coordinate.to_string() : ":u=0");
  if (q.ext) r += " [" + qpoly::to_string(q.ext->modulus(), q.ext->generator()) + "]";
  return r;
}

/// Blows up `a`, registering the new curve and pushing the new points onto
/// `out` in order. Throws ZeroDivisor if the center itself must be split.
void expand(ReductionTree& tree, const Active& a, const ClassifyOptions& opts, std::vector<Active>& out) {
  BlowupResult res = blowup_point(a.leaf.P, a.leaf.Q, opts);
  int index = static_cast<int>(tree.centers.size()) + 1;
  tree.lattice.weights.push_back(a.leaf.conjugates());

  BlowupCenter center;
  center.index = index;
  center.label = a.leaf.label;
  center.parent = a.leaf.on_center;
  center.base = a.leaf.base;
  center.ext = a.leaf.ext;
  center.ell = res.ell;
  center.dicritical = res.dicritical;
  center.record = a.leaf.record;

  CurveRecord E;
  E.name = "E" + std::to_string(index);
  E.kind = CurveKind::Exceptional;
  E.exceptional_index = index;
  E.cls = tree.lattice.E(static_cast<size_t>(index));
  E.invariant = !res.dicritical;
  E.conjugates = a.leaf.conjugates();
  int e_id = static_cast<int>(tree.curves.size());
  tree.curves.push_back(E);

  std::vector<std::pair<Poly, Poly>> transforms;
  for (const auto& c : a.leaf.curves) {
    auto [h1, m] = strict_transform_local(c.h, 1);
    Poly h2 = strict_transform_local(c.h, 2).first;
    center.curves_through.push_back(c.curve);
    center.multiplicities.push_back(m);
    tree.curves[static_cast<size_t>(c.curve)].cls.at(static_cast<size_t>(index)) -= m;
    transforms.emplace_back(h1, h2);
  }

  long lhs = a.leaf.record.mu * a.leaf.conjugates();
  long rhs = 0;
  for (const auto& q : res.points) {
    Active child;
    child.depth = a.depth + 1;
    child.leaf.label = point_label(index, q);
    child.leaf.on_center = index;
    child.leaf.ext = q.ext;
    child.leaf.P = q.P;
    child.leaf.Q = q.Q;
    child.leaf.record = q.record;
    child.leaf.curves.push_back({e_id, q.chart == 1 ? S : T});
    for (size_t i = 0; i < a.leaf.curves.size(); ++i) {
      Poly h = q.chart == 1 ? transforms[i].first : transforms[i].second;
      if (q.ext && q.ext != a.leaf.ext) h = h.in(q.ext);
      if (q.chart == 1) h = h.translate({FElem(0), q.coordinate, FElem(0)});
      if (h.constant_term().decide_zero()) child.leaf.curves.push_back({a.leaf.curves[i].curve, h});
    }
    rhs += q.record.mu * q.conjugates();
    out.push_back(std::move(child));
  }
  long ell = res.ell;
  long correction = res.dicritical ? ell * ell + ell - 1 : ell * ell - ell - 1;
  center.mu_after = rhs / a.leaf.conjugates();
  center.bookkeeping_ok = lhs == rhs + correction * a.leaf.conjugates();
  if (!center.bookkeeping_ok)
    tree.defects.push_back("Milnor bookkeeping fails at " + center.label);
  for (const auto& d : res.defects) tree.defects.push_back(center.label + ": " + d);
  if (!res.defects.empty()) tree.status = ReductionStatus::Unsupported;
  tree.centers.push_back(std::move(center));
}

void rebuild_incidences(ReductionTree& tree) {
  for (auto& c : tree.curves) c.singularities.clear();
  for (size_t i = 0; i < tree.leaves.size(); ++i)
    for (const auto& c : tree.leaves[i].curves)
      tree.curves[static_cast<size_t>(c.curve)].singularities.push_back(static_cast<int>(i));
}

Poly homogenize(const Poly& p) {
  int k = p.degree();
  Poly h;
  for (const auto& [e, c] : p.terms()) h += Poly::monomial({e[0], e[1], k - e[0] - e[1]}, c);
  return h;
}

Poly curve_in_chart(const Poly& hh, Chart c) {
  const Poly one(1);
  switch (c) {
    case Chart::Z: return hh.compose({S, T, one});
    case Chart::X: return hh.compose({one, T, S});
    case Chart::Y: return hh.compose({S, one, T});
  }
  return hh;
}

void reduce_loop(ReductionTree& tree, std::vector<Active> stack, const ReductionOptions& opts) {
  while (!stack.empty()) {
    Active a = std::move(stack.back());
    stack.pop_back();
    if (a.leaf.record.reduced()) {
      tree.leaves.push_back(std::move(a.leaf));
      continue;
    }
    if (a.depth >= opts.max_depth || static_cast<int>(tree.centers.size()) >= opts.max_blowups) {
      tree.status = ReductionStatus::DepthExceeded;
      tree.defects.push_back("blow-up bound reached at " + a.leaf.label);
      tree.leaves.push_back(std::move(a.leaf));
      continue;
    }
    std::vector<Active> children;
    try {
      expand(tree, a, opts.classify, children);
    } catch (const ZeroDivisor& z) {
      stack.push_back(specialize(a, z.cofactor()));
      stack.push_back(specialize(a, z.factor()));
      continue;
    }
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
  }
}

}  // namespace

ReductionTree seidenberg_reduce(const ProjectiveFoliation& F, const ReductionOptions& opts) {
  ReductionTree tree;
  tree.foliation = F;
  CurveRecord linf;
  linf.name = "Linf";
  linf.kind = CurveKind::LineAtInfinity;
  linf.cls = tree.lattice.H();
  linf.invariant = F.infinity_invariant;
  tree.curves.push_back(linf);
  std::vector<Poly> user_hom;
  for (const auto& [name, h] : opts.curves) {
    CurveRecord c;
    c.name = name;
    c.kind = CurveKind::User;
    c.cls = tree.lattice.H() * Rational(h.degree());
    c.equation = h;
    Poly t = tangency_identity_check(F.affine, h);
    c.invariant = t.is_zero() || divide_exact(t, h).has_value();
    tree.curves.push_back(c);
    user_hom.push_back(homogenize(h));
  }

  SingularLocus locus = singular_points(F, opts.classify);
  if (!locus.complete) {
    tree.status = ReductionStatus::Unsupported;
    tree.defects = locus.defects;
  }
  std::vector<Active> stack;
  for (auto it = locus.entries.rbegin(); it != locus.entries.rend(); ++it) {
    Active a;
    a.leaf.label = it->point.to_string();
    a.leaf.base = it->point;
    a.leaf.ext = it->point.ext;
    a.leaf.P = it->P;
    a.leaf.Q = it->Q;
    a.leaf.record = it->record;
    if (it->point.chart == Chart::X) a.leaf.curves.push_back({0, S});
    if (it->point.chart == Chart::Y) a.leaf.curves.push_back({0, T});
    for (size_t u = 0; u < user_hom.size(); ++u) {
      Poly h = curve_in_chart(user_hom[u], it->point.chart);
      if (it->point.ext) h = h.in(it->point.ext);
      h = h.translate({it->point.local[0], it->point.local[1], FElem(0)});
      if (h.constant_term().decide_zero()) a.leaf.curves.push_back({static_cast<int>(u) + 1, h});
    }
    stack.push_back(std::move(a));
  }
  reduce_loop(tree, std::move(stack), opts);
  rebuild_incidences(tree);
  return tree;
}

void blowup_leaf(ReductionTree& tree, int leaf, const ClassifyOptions& opts) {
  Active a;
  a.leaf = tree.leaves.at(static_cast<size_t>(leaf));
  tree.leaves.erase(tree.leaves.begin() + leaf);
  std::vector<Active> children;
  expand(tree, a, opts, children);
  for (auto& c : children) tree.leaves.push_back(std::move(c.leaf));
  rebuild_incidences(tree);
}

const CurveRecord& strict_transform(const ReductionTree& tree, const std::string& name) { return tree.curve(name); }

}  // namespace fol
