#include "foliation/birational.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "foliation/matrix.hpp"
#include "foliation/qpoly.hpp"

namespace fol {

Configuration Configuration::from_tree(const ReductionTree& tree) {
  Configuration c;
  c.lattice = tree.lattice;
  c.curves = tree.curves;
  c.points = tree.leaves;
  c.contracted.assign(c.curves.size(), false);
  c.point_removed.assign(c.points.size(), false);
  c.cotangent = cotangent_class(tree);
  return c;
}

int Configuration::find_curve(const std::string& name) const {
  for (size_t i = 0; i < curves.size(); ++i)
    if (curves[i].name == name) return static_cast<int>(i);
  return -1;
}

Rational Configuration::self_intersection(int c) const { return intersection(c, c); }

Rational Configuration::intersection(int a, int b) const {
  return lattice.dot(curves.at(static_cast<size_t>(a)).cls, curves.at(static_cast<size_t>(b)).cls);
}

std::vector<int> Configuration::points_on(int c) const {
  std::vector<int> out;
  for (int p : curves.at(static_cast<size_t>(c)).singularities)
    if (!point_removed.at(static_cast<size_t>(p))) out.push_back(p);
  return out;
}

int Configuration::z_count(int c) const {
  int z = 0;
  for (int p : points_on(c)) z += points[static_cast<size_t>(p)].conjugates();
  return z;
}

std::vector<int> Configuration::curves_through(int p) const {
  std::vector<int> out;
  for (const auto& c : points.at(static_cast<size_t>(p)).curves)
    if (alive(c.curve)) out.push_back(c.curve);
  return out;
}

DivisorClass Configuration::push_forward(DivisorClass d) const {
  for (const auto& C : contracted_classes) d = d + C * lattice.dot(d, C);
  return d;
}

DivisorClass cotangent_class(const ReductionTree& tree) {
  DivisorClass t = tree.lattice.H() * Rational(tree.foliation.degree - 1);
  for (const auto& c : tree.centers)
    t.at(static_cast<size_t>(c.index)) = c.dicritical ? Rational(-c.ell) : Rational(1 - c.ell);
  return t;
}

namespace {

bool lambda_minus_one(const SingularityRecord& r) {
  if (r.type != SingularityType::MorseCandidate && r.type != SingularityType::NonDegenerate) return false;
  return r.lambda && r.lambda->first == -1;
}

}  // namespace

bool contractible(const Configuration& cfg, int c, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = cfg.curves.at(static_cast<size_t>(c)).name + ": " + m;
    return false;
  };
  const auto& C = cfg.curves.at(static_cast<size_t>(c));
  if (!cfg.alive(c)) return fail("already contracted");
  if (C.kind == CurveKind::User) return fail("only exceptional curves and the line at infinity are handled");
  if (!C.invariant) return fail("not invariant");
  if (C.conjugates != 1) return fail("conjugate cluster");
  if (cfg.self_intersection(c) != -1) return fail("self-intersection is not -1");
  auto pts = cfg.points_on(c);
  if (pts.size() != 1 || cfg.points[static_cast<size_t>(pts[0])].conjugates() != 1)
    return fail("needs exactly one singular point");
  const auto& r = cfg.points[static_cast<size_t>(pts[0])].record;
  if (!lambda_minus_one(r)) return fail("singular point is " + to_string(r.type) + ", not a point with eigenvalue ratio -1");
  return true;
}

Configuration contract_exceptional(const Configuration& cfg, int c) {
  std::string why;
  if (!contractible(cfg, c, &why)) throw ContractionRefused(why);
  Configuration out = cfg;
  DivisorClass C = cfg.curves[static_cast<size_t>(c)].cls;
  for (size_t i = 0; i < out.curves.size(); ++i) {
    if (out.contracted[i] || static_cast<int>(i) == c) continue;
    auto& D = out.curves[i].cls;
    D = D + C * out.lattice.dot(D, C);
  }
  out.cotangent = out.cotangent + C * out.lattice.dot(out.cotangent, C);
  out.contracted[static_cast<size_t>(c)] = true;
  out.contracted_classes.push_back(C);
  int p = cfg.points_on(c).front();
  out.point_removed[static_cast<size_t>(p)] = true;
  out.log.push_back("contract " + cfg.curves[static_cast<size_t>(c)].name + " through " +
                    cfg.points[static_cast<size_t>(p)].label);
  return out;
}

Configuration contract_all(Configuration cfg) {
  for (bool again = true; again;) {
    again = false;
    for (size_t i = 0; i < cfg.curves.size(); ++i) {
      if (contractible(cfg, static_cast<int>(i))) {
        cfg = contract_exceptional(cfg, static_cast<int>(i));
        again = true;
        break;
      }
    }
  }
  return cfg;
}

namespace {

bool chain_candidate(const Configuration& cfg, int c) {
  const auto& C = cfg.curves[static_cast<size_t>(c)];
  if (!cfg.alive(c) || !C.invariant || C.conjugates != 1 || C.kind == CurveKind::User) return false;
  if (cfg.self_intersection(c) > -2) return false;
  for (int p : cfg.points_on(c)) {
    auto t = cfg.points[static_cast<size_t>(p)].record.type;
    if (t != SingularityType::NonDegenerate && t != SingularityType::MorseCandidate) return false;
  }
  return true;
}

}  // namespace

std::vector<FChain> detect_f_chains(const Configuration& cfg) {
  std::vector<FChain> out;
  for (size_t i = 0; i < cfg.curves.size(); ++i) {
    int c = static_cast<int>(i);
    if (!chain_candidate(cfg, c) || cfg.z_count(c) != 1) continue;
    std::vector<int> chain{c};
    int cur = c, p = cfg.points_on(c).front();
    while (true) {
      std::vector<int> next;
      for (int d : cfg.curves_through(p))
        if (d != cur) next.push_back(d);
      if (next.size() != 1) break;
      int n = next.front();
      if (!chain_candidate(cfg, n) || cfg.z_count(n) != 2) break;
      if (std::find(chain.begin(), chain.end(), n) != chain.end()) break;
      auto pts = cfg.points_on(n);
      if (pts.size() != 2) break;
      chain.push_back(n);
      p = pts[0] == p ? pts[1] : pts[0];
      cur = n;
    }
    FChain f;
    f.curves = chain;
    for (int k : chain) f.self_intersections.push_back(cfg.self_intersection(k));
    out.push_back(std::move(f));
  }
  return out;
}

ZariskiDecomposition zariski_on_chains(const Configuration& cfg, const DivisorClass& T,
                                       const std::vector<FChain>& chains) {
  ZariskiDecomposition z;
  for (const auto& ch : chains)
    for (int c : ch.curves)
      if (std::find(z.support.begin(), z.support.end(), c) == z.support.end()) z.support.push_back(c);
  size_t n = z.support.size();
  z.TT = cfg.lattice.dot(T, T);
  z.P = T;
  if (n == 0) {
    z.PP = z.TT;
    return z;
  }
  Matrix M(n, n);
  std::vector<FElem> rhs(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) M(i, j) = FElem(cfg.intersection(z.support[i], z.support[j]));
    rhs[i] = FElem(cfg.lattice.dot(T, cfg.curves[static_cast<size_t>(z.support[i])].cls));
  }
  if (M.determinant().is_zero()) throw std::logic_error("chain intersection matrix is singular");
  auto sol = M.solve(rhs);
  if (!sol) throw std::logic_error("chain system has no solution");
  for (size_t i = 0; i < n; ++i) {
    Rational a = (*sol)[i].rational();
    z.alpha.push_back(a);
    z.N = z.N + cfg.curves[static_cast<size_t>(z.support[i])].cls * a;
    if (!(a > 0 && a < 1)) z.coefficients_in_range = false;
  }
  z.P = T - z.N;
  for (int c : z.support)
    if (cfg.lattice.dot(z.P, cfg.curves[static_cast<size_t>(c)].cls) != 0) z.orthogonal = false;
  z.NN = cfg.lattice.dot(z.N, z.N);
  z.PP = cfg.lattice.dot(z.P, z.P);
  return z;
}

std::string to_string(FiberType t) {
  switch (t) {
    case FiberType::Transverse: return "a-c";
    case FiberType::D: return "d";
    case FiberType::E: return "e";
    case FiberType::Unclassified: return "unclassified";
  }
  return "?";
}

Rational RiccatiFiber::contribution() const {
  switch (type) {
    case FiberType::Transverse: return 0;
    case FiberType::D: return Rational(m * conjugates);
    case FiberType::E: return Rational((m + 1) * conjugates, 2);
    case FiberType::Unclassified: break;
  }
  throw std::domain_error("fiber " + label + " is not classified");
}

std::string RiccatiStructure::orientation() const {
  std::ostringstream os;
  os << "pencil " << base.to_string() << " = c through (" << rational_string(base_point[0]) << ":"
     << rational_string(base_point[1]) << ":0)";
  return os.str();
}

namespace {

const Poly X = Poly::var(0), Y = Poly::var(1);

std::optional<RiccatiStructure> try_pencil(const AffineOneForm& w, const Rational& px, const Rational& py) {
  RiccatiStructure r;
  r.base_point = {px, py, Rational(0)};
  Poly A, B;
  if (py != 0) {
    Rational k = px / py;
    // u = x - k y, v = y, so x = u + k v
    Poly xs = X + FElem(k) * Y;
    Poly a = w.a.compose({xs, Y, std::nullopt}), b = w.b.compose({xs, Y, std::nullopt});
    A = a;
    B = FElem(k) * a + b;
    r.base = X - FElem(k) * Y;
    r.fiber_coordinate = Y;
  } else {
    // u = y, v = x
    A = w.b.swap(0, 1);
    B = w.a.swap(0, 1);
    r.base = Y;
    r.fiber_coordinate = X;
  }
  if (B.is_zero() || B.degree_in(1) > 0 || A.degree_in(1) > 2) return std::nullopt;
  r.normal_form = make_form(A, B);

  auto split = qpoly::squarefree_and_rational_roots(r.normal_form.b.to_qpoly(0));
  for (const auto& [c, k] : split.roots) {
    RiccatiFiber f;
    f.label = "u=" + rational_string(c);
    f.position = c;
    f.factor = qpoly::x_minus(c);
    f.local_multiplicity = k;
    r.fibers.push_back(std::move(f));
  }
  for (const auto& [g, k] : split.moduli) {
    RiccatiFiber f;
    f.label = qpoly::to_string(g, "u") + "=0";
    f.factor = g;
    f.conjugates = qpoly::degree(g);
    f.local_multiplicity = k;
    r.fibers.push_back(std::move(f));
  }
  // At u = infinity the chart (s, t) = (1/u, v/u) gives P ds + Q dt; the
  // fiber is s = 0 and its multiplicity is the s-adic order of Q.
  auto F = extend_to_plane(r.normal_form);
  auto [P, Q] = chart_form(F, Chart::X);
  if (!Q.is_zero() && Q.order_in(0) > 0) {
    RiccatiFiber f;
    f.label = "u=inf";
    f.local_multiplicity = Q.order_in(0);
    r.fibers.push_back(std::move(f));
  }
  return r;
}

}  // namespace

std::optional<RiccatiStructure> riccati_detect(const AffineOneForm& w) {
  if (!w.a.is_rational() || !w.b.is_rational()) return std::nullopt;
  if (auto r = try_pencil(w, 0, 1)) return r;
  if (auto r = try_pencil(w, 1, 0)) return r;
  auto F = extend_to_plane(w);
  SingularLocus L = singular_points(F);
  for (const auto& e : L.entries) {
    const auto& p = e.point;
    if (!p.at_infinity() || p.ext) continue;
    Rational px = p.coords[0].rational(), py = p.coords[1].rational();
    if (px == 0 || py == 0) continue;
    if (auto r = try_pencil(w, px, py)) return r;
  }
  return std::nullopt;
}

Rational riccati_cotangent_degree(const RiccatiStructure& r) {
  Rational d = -2;
  for (const auto& f : r.fibers) d += f.contribution();
  return d;
}

std::string to_string(KodairaValue k) {
  switch (k) {
    case KodairaValue::MinusInfinity: return "-inf";
    case KodairaValue::Zero: return "0";
    case KodairaValue::One: return "1";
    case KodairaValue::Two: return "2";
    case KodairaValue::Undetermined: return "undetermined";
  }
  return "?";
}

namespace {

std::string fiber_curve_name(const RiccatiFiber& f) { return "fiber " + f.label; }

int pencil_center(const ReductionTree& tree, const std::array<Rational, 3>& bp) {
  for (const auto& c : tree.centers) {
    if (c.parent != 0 || !c.base || c.base->ext || !c.base->at_infinity()) continue;
    Rational x = c.base->coords[0].rational(), y = c.base->coords[1].rational();
    if (x * bp[1] == y * bp[0]) return c.index;
  }
  return 0;
}

/// Curves of `reduced` in the fiber through `start`: connected through
/// positive intersections among curves meeting F trivially.
std::vector<int> fiber_support(const Configuration& reduced, const DivisorClass& F, int start) {
  std::vector<int> out{start}, todo{start};
  while (!todo.empty()) {
    int c = todo.back();
    todo.pop_back();
    for (size_t i = 0; i < reduced.curves.size(); ++i) {
      int d = static_cast<int>(i);
      if (std::find(out.begin(), out.end(), d) != out.end()) continue;
      if (reduced.lattice.dot(reduced.curves[i].cls, F) != 0) continue;
      if (reduced.intersection(c, d) <= 0) continue;
      out.push_back(d);
      todo.push_back(d);
    }
  }
  return out;
}

void classify_fiber(RiccatiFiber& f, const BirationalAnalysis& a, const DivisorClass& F_reduced, int start) {
  const auto& M = a.model;
  int main = -1;
  std::set<long> mus;
  for (int c : fiber_support(a.reduced, F_reduced, start)) {
    if (!M.alive(c)) continue;
    f.components.push_back(M.curves[static_cast<size_t>(c)].name);
    bool has_sn = false;
    for (int p : M.points_on(c)) {
      const auto& r = M.points[static_cast<size_t>(p)].record;
      if (r.type != SingularityType::SaddleNode) continue;
      has_sn = true;
      mus.insert(r.mu);
    }
    if (!has_sn) continue;
    if (main >= 0 && main != c) {
      f.type = FiberType::Unclassified;
      return;
    }
    main = c;
  }
  if (main < 0) {
    f.type = FiberType::Transverse;
    return;
  }
  if (mus.size() != 1) {
    f.type = FiberType::Unclassified;
    return;
  }
  f.m = static_cast<int>(*mus.begin());
  // Two chains meeting the saddle-node component become quotient points of
  // the nef model: type (e).
  int adjacent = 0;
  for (const auto& ch : a.chains) {
    bool meets = false;
    for (int p : M.points_on(main))
      for (int d : M.curves_through(p))
        if (std::find(ch.curves.begin(), ch.curves.end(), d) != ch.curves.end()) meets = true;
    if (meets) ++adjacent;
  }
  f.type = adjacent >= 2 ? FiberType::E : FiberType::D;
}

}  // namespace

BirationalAnalysis analyze_birational(const AffineOneForm& w, const ReductionOptions& opts) {
  BirationalAnalysis a;
  a.riccati = riccati_detect(w);
  ReductionOptions ro = opts;
  if (a.riccati) {
    for (const auto& f : a.riccati->fibers) {
      if (f.label == "u=inf") continue;
      Poly g = Poly::from_qpoly(f.factor, 0).compose({a.riccati->base, Y, std::nullopt});
      ro.curves.emplace_back(fiber_curve_name(f), g);
    }
  }
  a.tree = seidenberg_reduce(extend_to_plane(w), ro);
  a.reduced = Configuration::from_tree(a.tree);
  a.model = contract_all(a.reduced);
  for (size_t i = 0; i < a.model.curves.size(); ++i)
    if (a.model.contracted[i]) a.contracted.push_back(a.model.curves[i].name);
  a.chains = detect_f_chains(a.model);
  a.zariski = zariski_on_chains(a.model, a.model.cotangent, a.chains);

  if (a.riccati) {
    int j = pencil_center(a.tree, a.riccati->base_point);
    if (j > 0) {
      DivisorClass F = a.tree.lattice.H() - a.tree.lattice.E(static_cast<size_t>(j));
      a.fiber_class = a.model.push_forward(F);
      const DivisorClass& Fm = *a.fiber_class;
      for (size_t i = 0; i < Fm.c.size(); ++i) {
        if (Fm.c[i] == 0) continue;
        Rational k = a.zariski.P[i] / Fm.c[i];
        if (a.zariski.P == Fm * k) a.lattice_fiber_degree = k;
        break;
      }
      for (auto& f : a.riccati->fibers) {
        int start = f.label == "u=inf" ? 0 : a.reduced.find_curve(fiber_curve_name(f));
        if (start >= 0) classify_fiber(f, a, F, start);
      }
    }
    try {
      a.riccati_degree = riccati_cotangent_degree(*a.riccati);
    } catch (const std::domain_error&) {
    }
  }
  a.kodaira = kodaira_classify(a);
  return a;
}

KodairaVerdict kodaira_classify(const BirationalAnalysis& a) {
  KodairaVerdict v;
  int d = a.tree.foliation.degree;
  if (a.tree.status == ReductionStatus::Complete && a.tree.centers.empty() && a.tree.all_reduced() && d >= 2) {
    v.value = KodairaValue::Two;
    v.rule = "R1";
    v.certificates.push_back("reduced on P2, T* = O(" + std::to_string(d - 1) + ") is ample");
    return v;
  }
  if (a.riccati && a.riccati_degree) {
    Rational deg = *a.riccati_degree;
    v.certificates.push_back("Riccati " + a.riccati->orientation() + ", degree of the direct image " +
                             rational_string(deg));
    if (a.lattice_fiber_degree) {
      v.certificates.push_back("lattice: P = " + rational_string(*a.lattice_fiber_degree) + " F");
      if (*a.lattice_fiber_degree != deg) {
        v.rule = "R4";
        v.certificates.push_back("the two fiber degrees disagree");
        return v;
      }
    }
    v.rule = "R2";
    v.value = deg < 0 ? KodairaValue::MinusInfinity : deg == 0 ? KodairaValue::Zero : KodairaValue::One;
    return v;
  }
  const auto& z = a.zariski;
  v.certificates.push_back("T*.T* = " + rational_string(z.TT) + ", N.N = " + rational_string(z.NN) +
                           ", P.P = " + rational_string(z.PP));
  if (!z.valid()) {
    v.rule = "R4";
    v.certificates.push_back("Zariski invariants fail");
    return v;
  }
  if (a.tree.status == ReductionStatus::Complete && z.PP > 0) {
    v.value = KodairaValue::Two;
    v.rule = "R3";
    return v;
  }
  v.rule = "R4";
  return v;
}

}  // namespace fol
