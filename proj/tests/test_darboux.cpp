#include <doctest.h>

#include "examples.hpp"
#include "foliation/darboux.hpp"
#include "foliation/polyalg.hpp"

using namespace fol;
using ex::x;
using ex::y;

namespace {

MPoly t(int i) { return MPoly::var(i); }

bool has_curve(const DarbouxResult& r, const Poly& c) {
  Poly n = normalize_monic(c, 0);
  for (const auto& f : r.curves)
    if (f.curve == n) return true;
  return false;
}

}  // namespace

TEST_CASE("groebner: unit ideal and elimination") {
  auto B = groebner_basis({t(0) * t(1) - MPoly(1), t(0)}, MonomialOrder::Lex);
  REQUIRE(B.size() == 1);
  CHECK(B[0] == MPoly(1));
  // x^2 + y^2 - 5, x - y - 1 -> y^2 + y - 2 in the basis
  auto G = groebner_basis({t(0) * t(0) + t(1) * t(1) - MPoly(5), t(0) - t(1) - MPoly(1)}, MonomialOrder::Lex);
  MPoly tail = t(1) * t(1) + t(1) - MPoly(2);
  bool found = false;
  for (const auto& g : G) found = found || g == tail;
  CHECK(found);
  CHECK(normal_form(t(0) * t(0) + t(1) * t(1) - MPoly(5), G, MonomialOrder::Lex).is_zero());
}

TEST_CASE("groebner: rational solutions") {
  auto s = rational_solutions({t(0) * t(0) + t(1) * t(1) - MPoly(5), t(0) * t(1) - MPoly(2)}, 2);
  CHECK(s.points.size() == 4);
  CHECK_FALSE(s.positive_dimensional);
  auto irr = rational_solutions({t(0) * t(0) - MPoly(2)}, 1);
  CHECK(irr.points.empty());
  CHECK(irr.irrational_skipped);
  auto fam = rational_solutions({t(0) * t(1)}, 2);
  CHECK(fam.positive_dimensional);
  auto none = rational_solutions({t(0) * t(0) + MPoly(1), t(0) - t(1)}, 2);
  CHECK(none.points.empty());
  CHECK(none.irrational_skipped);
}

TEST_CASE("darboux: the two axes of a linear node") {
  auto r = invariant_curves_up_to_degree(ex::form(y, -2 * x), 1);
  CHECK(r.curves.size() == 2);
  CHECK(has_curve(r, x));
  CHECK(has_curve(r, y));
  for (const auto& c : r.curves) CHECK(c.cofactor.degree() == 0);
}

TEST_CASE("darboux: degree-one foliations have an invariant line with L_inf") {
  // each of these has L_inf invariant, so one affine line completes the pair
  std::vector<AffineOneForm> forms = {ex::form(y, -2 * x), ex::form(x + y, Poly(-1)), ex::form(1 + y, 2 * y - x),
                                      ex::form(Poly(1), x)};
  for (const auto& w : forms) {
    auto r = invariant_curves_up_to_degree(w, 1);
    CHECK(!r.curves.empty());
  }
}

TEST_CASE("darboux: the invariant cubic of the cuspidal example") {
  auto r = invariant_curves_up_to_degree(ex::ex54(), 3);
  REQUIRE(r.curves.size() == 1);
  CHECK(r.curves[0].curve == normalize_monic(y * y + x.pow(3), 0));
  CHECK(r.complete());
  REQUIRE(r.transcript.size() == 3);
  CHECK(r.transcript[2].solutions == 1);
}

TEST_CASE("darboux: Bergman example has no invariant curve up to degree 4") {
  auto r = invariant_curves_up_to_degree(ex::ex61(), 4);
  CHECK(r.curves.empty());
  CHECK(r.complete());
}

TEST_CASE("darboux: planted curve") {
  // v = H(C) + C (p, q) with H the Hamiltonian field of C has v(C) = C (p C_x + q C_y)
  std::vector<std::pair<Poly, std::pair<Poly, Poly>>> plants = {
      {y + x * x, {x - y, Poly(1)}},
      {x * y - 1, {Poly(2), y}},
      {y * y - x.pow(3) + x, {Poly(1), Poly(0)}},
  };
  for (const auto& [C, pq] : plants) {
    Poly fx = C.derivative(1) + C * pq.first;
    Poly fy = -C.derivative(0) + C * pq.second;
    AffineOneForm w = ex::form(-fy, fx);
    auto r = invariant_curves_up_to_degree(w, C.degree());
    CHECK(has_curve(r, C));
    for (const auto& c : r.curves)
      CHECK(w.field_x() * c.curve.derivative(0) + w.field_y() * c.curve.derivative(1) == c.cofactor * c.curve);
  }
}

TEST_CASE("darboux: affine zeros") {
  auto one = affine_singularity_free(Poly(1), x * y + 1);
  CHECK(one.free);
  auto origin = affine_singularity_free(x, y);
  CHECK_FALSE(origin.free);
  REQUIRE(origin.witnesses.size() == 1);
  CHECK(origin.witnesses[0] == "(0, 0)");
  auto w = ex::ex67();
  CHECK(affine_singularity_free(w.field_x(), w.field_y()).free);
  // x^2 - 2 = 0 = y: zeros over Q(sqrt 2) only
  auto irr = affine_singularity_free(x * x - 2, y);
  CHECK_FALSE(irr.free);
  // y = 1 / x and y = 0 never meet
  CHECK(affine_singularity_free(x * y - 1, y).free);
  CHECK_THROWS_AS(affine_singularity_free(x * y, x * (y + 1)), std::invalid_argument);
}

TEST_CASE("darboux: simplicity certificates") {
  auto bad = simplicity_certificate(Poly(1), y, 2);
  CHECK_FALSE(bad.valid());
  CHECK(has_curve(bad.search, y));
  CHECK(bad.label().find("not a proof of simplicity") != std::string::npos);

  auto w68 = ex::ex68();
  auto c68 = simplicity_certificate(w68.field_x(), w68.field_y(), 4);
  CHECK(c68.valid());
  auto w82 = ex::ex82();
  auto c82 = simplicity_certificate(w82.field_x(), w82.field_y(), 4);
  CHECK(c82.valid());
}

TEST_CASE("darboux: complete transversality") {
  CHECK(complete_transversality(ex::ex61(), AffineLine{1, 0, 0}));
  CHECK(complete_transversality(ex::ex69(), AffineLine{0, 1, 0}));
  CHECK_FALSE(complete_transversality(ex::ex67(), AffineLine{1, 0, -2}));
  CHECK_THROWS_AS(complete_transversality(ex::form(y, -2 * x), AffineLine{0, 1, 0}), InvariantLine);
}
