#include "doctest.h"

#include "examples.hpp"
#include "foliation/foliation.hpp"

using namespace fol;
using ex::x;
using ex::y;

namespace {

const SingularEntry* find_point(const SingularLocus& L, long px, long py, long pz) {
  for (const auto& e : L.entries)
    if (!e.point.ext && e.point.coords[0] == FElem(px) && e.point.coords[1] == FElem(py) &&
        e.point.coords[2] == FElem(pz))
      return &e;
  return nullptr;
}

}  // namespace

TEST_CASE("from_derivation") {
  auto w = from_derivation(Poly(1), x * y + 1);
  CHECK(w.a == x * y + 1);
  CHECK(w.b == Poly(-1));
  auto r = from_derivation(x, y);
  CHECK(r.a == y);
  CHECK(r.b == -x);
  auto c = from_derivation(x, x);
  CHECK(c.a == Poly(1));
  CHECK(c.b == Poly(-1));
  CHECK(c.removed_content == x);
  CHECK_THROWS(from_derivation(Poly(), Poly()));
}

TEST_CASE("degree and Euler relation") {
  CHECK(extend_to_plane(ex::ex61()).degree == 2);
  CHECK(extend_to_plane(ex::form(Poly(), Poly(1))).degree == 0);
  CHECK(extend_to_plane(ex::ex54()).degree == 4);
  CHECK(extend_to_plane(ex::ex610(1, 3, 1)).degree == 4);
  CHECK(extend_to_plane(ex::ex67()).degree == 2);
  auto F = extend_to_plane(ex::ex66());
  const Poly z = Poly::var(2);
  CHECK((z * F.A + x * F.B + y * F.C).is_zero());
}

TEST_CASE("line at infinity") {
  CHECK(line_at_infinity_invariant(extend_to_plane(ex::ex61())));
  CHECK(!line_at_infinity_invariant(extend_to_plane(ex::ex67())));
  CHECK(line_at_infinity_invariant(extend_to_plane(ex::ex611(x, Poly(1)))));
}

TEST_CASE("singular points of the examples") {
  auto F = extend_to_plane(ex::ex61());
  auto L = singular_points(F);
  CHECK(L.complete);
  REQUIRE(L.entries.size() == 2);
  for (const auto& e : L.entries) CHECK(e.point.at_infinity());
  REQUIRE(find_point(L, 1, 0, 0));
  REQUIRE(find_point(L, 0, 1, 0));
  CHECK(find_point(L, 1, 0, 0)->record.mu == 3);
  CHECK(find_point(L, 0, 1, 0)->record.mu == 4);
  CHECK(L.total_milnor() == 7);

  auto L7 = singular_points(extend_to_plane(ex::ex67()));
  REQUIRE(L7.entries.size() == 1);
  CHECK(L7.entries[0].point.at_infinity());
  CHECK(L7.entries[0].record.mu == 7);

  auto Lr = singular_points(extend_to_plane(ex::form(x, y)));
  int affine = 0;
  for (const auto& e : Lr.entries)
    if (!e.point.at_infinity()) {
      ++affine;
      CHECK(e.point.coords[0].is_zero());
      CHECK(e.point.coords[1].is_zero());
    }
  CHECK(affine == 1);
}

TEST_CASE("Darboux count on examples") {
  for (auto w : {ex::ex61(), ex::ex62(), ex::ex63(), ex::ex64(), ex::ex65(), ex::ex66(), ex::ex67(), ex::ex68(),
                 ex::ex69(), ex::ex54(), ex::ex82(), ex::form(x * x - 2, y * y * y + x)}) {
    auto F = extend_to_plane(w);
    auto L = singular_points(F);
    REQUIRE(L.complete);
    long d = F.degree;
    CHECK_MESSAGE(L.total_milnor() == d * d + d + 1, w.to_string());
  }
}

TEST_CASE("conjugate singular points") {
  // x^2 - 2 = 0, y = 0 : two conjugate affine points
  auto L = singular_points(extend_to_plane(ex::form(x * x - 2, y)));
  int conj = 0;
  for (const auto& e : L.entries)
    if (e.point.ext) conj += e.point.conjugates();
  CHECK(conj == 2);
}

TEST_CASE("affine tangency") {
  CHECK(affine_tangency(ex::ex67(), {1, 0, 0}).affine_total == 0);
  CHECK(affine_tangency(ex::ex67(), {1, 0, -1}).affine_total == 1);
  CHECK(affine_tangency(ex::ex69(), {0, 1, 0}).affine_total == 0);
  auto rep = affine_tangency(ex::ex61(), {3, -7, 2});
  CHECK(rep.projective_total == 2);
  CHECK(rep.affine_total + rep.at_infinity == 2);
  // y = 0 is invariant for y dx - x dy
  CHECK_THROWS_AS(affine_tangency(ex::form(y, -x), {0, 1, 0}), InvariantLine);
}

TEST_CASE("tangency identity") {
  Poly C = y * y + x.pow(3);
  CHECK(tangency_identity_check(ex::ex54(), C) == 6 * C * C);
  Poly h = x * x * y + y.pow(3) - 4;
  CHECK(tangency_identity_check(ex::form(h.derivative(0), h.derivative(1)), h).is_zero());
  // omega ^ dh = x dy ^ dx = -x dx ^ dy
  CHECK(tangency_identity_check(AffineOneForm{Poly(), x}, x) == -x);
}
