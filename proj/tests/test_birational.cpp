#include "doctest.h"

#include "examples.hpp"
#include "foliation/birational.hpp"

using namespace fol;
using ex::x;
using ex::y;

namespace {

const RiccatiFiber& fiber_at_infinity(const BirationalAnalysis& a) {
  REQUIRE(a.riccati);
  for (const auto& f : a.riccati->fibers)
    if (f.label == "u=inf") return f;
  throw std::runtime_error("no fiber at infinity");
}

void check_zariski_identities(const Configuration& cfg, const ZariskiDecomposition& z) {
  CHECK(z.orthogonal);
  CHECK(z.coefficients_in_range);
  for (int c : z.support) CHECK(cfg.lattice.dot(z.P, cfg.curves[static_cast<size_t>(c)].cls) == 0);
  // P.N = 0 gives P.P = T.T - N.N
  CHECK(z.PP == z.TT - z.NN);
}

}  // namespace

TEST_CASE("cotangent class") {
  auto T = seidenberg_reduce(extend_to_plane(ex::ex61()));
  auto t = cotangent_class(T);
  CHECK(t == T.lattice.H() - T.lattice.E(1));
  CHECK(t == T.curve("Linf").cls);

  auto T8 = seidenberg_reduce(extend_to_plane(ex::ex68()));
  auto t8 = cotangent_class(T8);
  CHECK(T8.lattice.dot(t8, t8) == 0);
}

TEST_CASE("pencil of lines blown up at its base point") {
  // the radial field has degree 0; its cotangent class pairs to -2 with the fibre
  auto T = seidenberg_reduce(extend_to_plane(make_form(y, -x)));
  REQUIRE(T.centers.size() == 1);
  CHECK(T.centers[0].dicritical);
  auto t = cotangent_class(T);
  CHECK(T.lattice.dot(t, T.lattice.H() - T.lattice.E(1)) == -2);
}

TEST_CASE("Riccati pattern") {
  auto r1 = riccati_detect(ex::ex61());
  REQUIRE(r1);
  CHECK(r1->base == x);
  REQUIRE(r1->fibers.size() == 1);
  CHECK(r1->fibers[0].label == "u=inf");
  CHECK(r1->fibers[0].local_multiplicity == 3);

  auto r3 = riccati_detect(ex::ex63());
  REQUIRE(r3);
  CHECK(r3->fibers.back().local_multiplicity == 4);

  auto r6 = riccati_detect(ex::ex66());
  REQUIRE(r6);
  CHECK(r6->base == y);

  CHECK(!riccati_detect(ex::ex67()));

  // a finite invariant fibre x = 1 of multiplicity 2
  auto rf = riccati_detect(make_form(y * y + x, (x - 1).pow(2)));
  REQUIRE(rf);
  REQUIRE(!rf->fibers.empty());
  CHECK(rf->fibers[0].label == "u=1");
  CHECK(rf->fibers[0].local_multiplicity == 2);
}

TEST_CASE("Riccati cotangent degree") {
  RiccatiStructure r;
  RiccatiFiber f;
  f.type = FiberType::D;
  f.m = 2;
  r.fibers.push_back(f);
  CHECK(riccati_cotangent_degree(r) == 0);
  r.fibers[0].type = FiberType::E;
  r.fibers[0].m = 4;
  CHECK(riccati_cotangent_degree(r) == Rational(1, 2));
  r.fibers[0].type = FiberType::Unclassified;
  CHECK_THROWS_AS(riccati_cotangent_degree(r), std::domain_error);
}

TEST_CASE("Shamsuddin examples have kappa 1") {
  struct Case {
    AffineOneForm w;
    int m;
    int degree;
  };
  for (const auto& c : {Case{ex::ex61(), 3, 1}, Case{ex::ex62(), 3, 1}, Case{ex::ex63(), 4, 2},
                        Case{ex::ex64(), 5, 3}, Case{ex::ex65(), 5, 3}}) {
    auto a = analyze_birational(c.w);
    CAPTURE(c.w.to_string());
    const auto& f = fiber_at_infinity(a);
    CHECK(f.type == FiberType::D);
    CHECK(f.m == c.m);
    REQUIRE(a.riccati_degree);
    CHECK(*a.riccati_degree == c.degree);
    REQUIRE(a.lattice_fiber_degree);
    CHECK(*a.lattice_fiber_degree == *a.riccati_degree);
    CHECK(a.kodaira.value == KodairaValue::One);
    CHECK(a.kodaira.rule == "R2");
  }
}

TEST_CASE("contraction domino on the degree-8 example") {
  auto T = seidenberg_reduce(extend_to_plane(ex::ex65()));
  auto cfg = Configuration::from_tree(T);
  for (const char* name : {"Linf", "E2", "E3", "E4"}) {
    int c = cfg.find_curve(name);
    CAPTURE(name);
    REQUIRE(contractible(cfg, c));
    cfg = contract_exceptional(cfg, c);
  }
  int e5 = cfg.find_curve("E5");
  CHECK(cfg.self_intersection(e5) == 0);
  CHECK(cfg.self_intersection(cfg.find_curve("E1")) == -5);
  auto pts = cfg.points_on(e5);
  REQUIRE(pts.size() == 2);
  for (int p : pts) {
    CHECK(cfg.points[static_cast<size_t>(p)].record.type == SingularityType::SaddleNode);
    CHECK(cfg.points[static_cast<size_t>(p)].record.mu == 5);
  }
  // the automatic sequence agrees
  auto all = contract_all(Configuration::from_tree(T));
  REQUIRE(all.log.size() == 4);
  CHECK(all.log[0].rfind("contract Linf", 0) == 0);
  CHECK(all.log[3].rfind("contract E4", 0) == 0);
}

TEST_CASE("contraction refuses a saddle-node curve") {
  auto cfg = Configuration::from_tree(seidenberg_reduce(extend_to_plane(ex::ex61())));
  std::string why;
  CHECK(!contractible(cfg, cfg.find_curve("E1"), &why));
  CHECK(why.find("saddle-node") != std::string::npos);
  CHECK_THROWS_AS(contract_exceptional(cfg, cfg.find_curve("E1")), ContractionRefused);
}

TEST_CASE("blow-up of a regular point and its contraction") {
  auto T = seidenberg_reduce(extend_to_plane(ex::ex67()));
  LeafPoint regular;
  regular.label = "regular";
  regular.P = Poly();
  regular.Q = Poly(1);
  regular.record = classify_form(regular.P, regular.Q);
  T.leaves.push_back(regular);
  blowup_leaf(T, static_cast<int>(T.leaves.size()) - 1);
  auto cfg = Configuration::from_tree(T);
  int e = cfg.find_curve("E1");
  CHECK(cfg.cotangent == cfg.lattice.H() + cfg.lattice.E(1));
  REQUIRE(contractible(cfg, e));
  auto back = contract_exceptional(cfg, e);
  CHECK(back.cotangent == back.lattice.H());
  CHECK(back.self_intersection(back.find_curve("Linf")) == 1);
}

TEST_CASE("Zariski decomposition") {
  SUBCASE("single (-2)-curve") {
    Configuration cfg;
    cfg.lattice.weights = {1, 1};
    CurveRecord c;
    c.name = "C";
    c.cls = cfg.lattice.E(1) - cfg.lattice.E(2);
    cfg.curves.push_back(c);
    cfg.contracted = {false};
    FChain ch;
    ch.curves = {0};
    DivisorClass T = cfg.lattice.E(2) * Rational(-1);  // T.C = -1
    auto z = zariski_on_chains(cfg, T, {ch});
    REQUIRE(z.alpha.size() == 1);
    CHECK(z.alpha[0] == Rational(1, 2));
  }
  SUBCASE("no chains") {
    auto cfg = Configuration::from_tree(seidenberg_reduce(extend_to_plane(ex::ex61())));
    auto z = zariski_on_chains(cfg, cfg.cotangent, {});
    CHECK(z.N.is_zero());
    CHECK(z.P == cfg.cotangent);
  }
}

TEST_CASE("chains and kappa 2 for the Nowicki family, k = 3") {
  auto a = analyze_birational(ex::ex68());
  CHECK(a.tree.centers.size() == 4);
  CHECK(a.zariski.TT == 0);
  REQUIRE(a.chains.size() == 2);
  check_zariski_identities(a.model, a.zariski);
  CHECK(a.zariski.NN < 0);
  CHECK(a.zariski.PP > 0);
  CHECK(a.kodaira.value == KodairaValue::Two);
  CHECK(a.kodaira.rule == "R3");
}

TEST_CASE("radial and nilpotent example: fibre of type (e)") {
  auto a = analyze_birational(ex::ex66());
  const auto& f = fiber_at_infinity(a);
  CHECK(f.type == FiberType::E);
  CHECK(f.m == 4);
  REQUIRE(a.riccati_degree);
  CHECK(*a.riccati_degree == Rational(1, 2));
  REQUIRE(a.lattice_fiber_degree);
  CHECK(*a.lattice_fiber_degree == Rational(1, 2));
  CHECK(a.kodaira.value == KodairaValue::One);
}

TEST_CASE("reduced foliation of degree 2 has kappa 2") {
  auto a = analyze_birational(ex::ex67());
  CHECK(a.kodaira.value == KodairaValue::Two);
  CHECK(a.kodaira.rule == "R1");
}

TEST_CASE("Jouanolou-type example") {
  auto a = analyze_birational(ex::ex69());
  check_zariski_identities(a.model, a.zariski);
  CHECK(a.kodaira.value == KodairaValue::Two);
}
