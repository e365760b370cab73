#include <doctest.h>

#include "examples.hpp"
#include "foliation/darboux.hpp"
#include "foliation/symmetry.hpp"

using namespace fol;
using ex::x;
using ex::y;

namespace {

FElem cube_root() { return FElem::generator(make_extension(QPoly{1, 1, 1}, "j")); }

PolynomialMap L(const FElem& j) { return {x * j, y * (j * j)}; }

}  // namespace

TEST_CASE("symmetry: pullbacks") {
  auto w = ex::ex61();
  auto id = pullback_form(PolynomialMap::identity(), w);
  CHECK(id.a == w.a);
  CHECK(id.b == w.b);
  auto phi2 = pullback_form({x * x, y}, w);
  CHECK(phi2.a == 2 * x.pow(3) * y + 2 * x);
  CHECK(phi2.b == Poly(-1));

  FElem j = cube_root();
  auto w67 = ex::ex67();
  auto p = pullback_form(L(j), w67);
  CHECK(p.a == w67.a * (j * j));
  CHECK(p.b == w67.b * (j * j));
}

TEST_CASE("symmetry: verdicts") {
  FElem j = cube_root();
  auto v = check_symmetry(L(j), ex::ex67());
  REQUIRE(v.preserves);
  CHECK(*v.c == j * j);
  CHECK(v.jacobian == Poly(1));
  CHECK_FALSE(v.isotropy);
  CHECK(map_order(L(j), 10) == 3);

  auto shift = check_symmetry({x + 1, y}, ex::ex61());
  CHECK_FALSE(shift.preserves);
  CHECK_FALSE(map_order({x, y + 1}, 10).has_value());

  // a rotation by -1 is isotropic for a radial form
  auto rad = check_symmetry({-1 * x, -1 * y}, ex::form(y, -1 * x));
  REQUIRE(rad.preserves);
  CHECK(*rad.c == FElem(1));
  CHECK(rad.isotropy);
}

TEST_CASE("symmetry: the involution of the pulled back Bergman form") {
  PolynomialMap gamma{-1 * x, y - 2 * x.pow(3)};
  auto v = check_symmetry(gamma, ex::ex82());
  REQUIRE(v.preserves);
  CHECK(*v.c == FElem(1));
  CHECK(map_order(gamma, 10) == 2);
  CHECK(gamma.degree() == 3);

  auto g = build_gamma(FElem(-1), 2, x.pow(3), ex::ex61());
  CHECK(g.gamma == gamma);
  CHECK(g.order == 2);
  CHECK(g.degree == 3);
  CHECK(g.pulled.a == 2 * x.pow(3) * y + 2 * x);
  CHECK(g.transformed.a == ex::ex82().a);
  CHECK(g.transformed.b == ex::ex82().b);
  CHECK(g.gamma_on_transformed.preserves);
  // T on the pulled back form: c computed exactly, Jacobian -1
  REQUIRE(g.T_on_pulled.preserves);
  CHECK(*g.T_on_pulled.c == FElem(1));
  CHECK_FALSE(g.T_on_pulled.isotropy);
}

TEST_CASE("symmetry: build_gamma with a cube root and coprime degree") {
  FElem j = cube_root();
  for (int d : {1, 2, 4, 5}) {
    auto g = build_gamma(j, 3, x.pow(d), ex::ex61());
    CHECK(g.order == 3);
    CHECK(g.degree == d);
    CHECK(check_symmetry(g.gamma, g.transformed).preserves);
  }
  CHECK_THROWS_AS(build_gamma(j, 3, x.pow(3), ex::ex61()), DegenerateGamma);
  CHECK_THROWS_AS(build_gamma(FElem(-1), 2, x * x, ex::ex61()), DegenerateGamma);
  CHECK_THROWS_AS(build_gamma(FElem(2), 2, x.pow(3), ex::ex61()), std::invalid_argument);
  // x = 0 has a movable tangency for this form
  CHECK_THROWS_AS(build_gamma(FElem(-1), 2, x.pow(3), ex::form(Poly(1), x * x - y)), std::invalid_argument);
}

TEST_CASE("symmetry: equivalences between examples") {
  // (x, y) = (v, u - 2v) in the variables (u, v)
  PolynomialMap lin{y, x - 2 * y};
  AffineOneForm eta = ex::form(-(1 + x * y), Poly(2));
  auto e1 = verify_equivalence(lin, ex::ex62(), eta);
  CHECK(e1.equivalent);
  CHECK(*e1.c == FElem(-1));

  PolynomialMap R{x, y + x.pow(5) + 2 * x * x + 1};
  auto e2 = verify_equivalence(R, ex::ex64(), ex::ex65());
  CHECK(e2.equivalent);

  auto e3 = verify_equivalence(PolynomialMap::identity(), ex::ex66(), ex::ex66());
  CHECK(e3.equivalent);
  CHECK(*e3.c == FElem(1));
  CHECK_FALSE(verify_equivalence(PolynomialMap::identity(), ex::ex61(), ex::ex63()).equivalent);
}

TEST_CASE("symmetry: functoriality and multiplicativity") {
  PolynomialMap R{x + y * y, y}, S{x, y + x.pow(3) - 1};
  auto w = ex::ex69();
  auto lhs = pullback_form(compose(R, S), w);
  auto rhs = pullback_form(S, pullback_form(R, w));
  CHECK(lhs.a == rhs.a);
  CHECK(lhs.b == rhs.b);

  FElem j = cube_root();
  auto a = check_symmetry(L(j), ex::ex67());
  auto b = check_symmetry(power(L(j), 2), ex::ex67());
  REQUIRE(b.preserves);
  CHECK(*b.c == *a.c * *a.c);
}

TEST_CASE("symmetry: diagonal relations") {
  auto r = diagonal_symmetry_relations(ex::ex67());
  REQUIRE(r.group_order.has_value());
  CHECK(*r.group_order == 3);
  // Bergman form: alpha beta = 1 and alpha^2 = 1, so only (-x, -y)
  auto r61 = diagonal_symmetry_relations(ex::ex61());
  REQUIRE(r61.group_order.has_value());
  CHECK(*r61.group_order == 2);
  CHECK(check_symmetry({-1 * x, -1 * y}, ex::ex61()).preserves);
}
