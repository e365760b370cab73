#include <doctest.h>

#include <algorithm>

#include "examples.hpp"
#include "foliation/corpus.hpp"
#include "foliation/report.hpp"

using namespace fol;
using ex::x;
using ex::y;

namespace {

size_t count(const std::string& s, const std::string& needle) {
  size_t n = 0;
  for (size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("parse: forms, derivations, maps, lines") {
  auto e = parse("(x*y+1)*dx - dy", ExprKind::Form);
  CHECK(e.form.a == ex::ex61().a);
  CHECK(e.form.b == ex::ex61().b);

  auto like = parse("x*dx + dx", ExprKind::Form);
  CHECK(like.form.a == x + 1);
  CHECK(like.form.b.is_zero());
  CHECK(print(like) == "(x + 1)*dx");

  auto d = parse("dx: 1, dy: x*y + 1", ExprKind::Derivation);
  CHECK(d.f == Poly(1));
  CHECK(d.g == x * y + 1);
  auto w = make_form(d.form.a, d.form.b);
  CHECK(w.a == ex::ex61().a);
  CHECK(w.b == ex::ex61().b);

  auto m = parse("(-x, y - 2*x^3)", ExprKind::Map);
  CHECK(m.map == PolynomialMap{-1 * x, y - 2 * x.pow(3)});

  auto l = parse("2*x + y = 3", ExprKind::Line);
  CHECK(l.line.a == 2);
  CHECK(l.line.b == 1);
  CHECK(l.line.c == -3);

  // differentials distribute over products with scalars
  auto p = parse("(x + 1)*(y*dx - x*dy)/2", ExprKind::Form);
  CHECK(p.form.a == (x + 1) * y * Poly(Rational(1, 2)));

  auto K = make_extension(QPoly{1, 1, 1});
  auto t = parse("(t*x, t^2*y)", ExprKind::Map, K);
  CHECK(t.map.Y == y * (FElem::generator(K) * FElem::generator(K)));
}

TEST_CASE("parse: errors carry positions") {
  CHECK_THROWS_AS(parse("x*dx +", ExprKind::Form), ParseError);
  CHECK_THROWS_AS(parse("z*dx", ExprKind::Form), ParseError);
  CHECK_THROWS_AS(parse("x^-2*dx", ExprKind::Form), ParseError);
  CHECK_THROWS_AS(parse("dx*dy", ExprKind::Form), ParseError);
  CHECK_THROWS_AS(parse("x + dx", ExprKind::Form), ParseError);
  CHECK_THROWS_AS(parse("t*dx", ExprKind::Form), ParseError);
  CHECK_THROWS_AS(parse("x/y*dx", ExprKind::Form), ParseError);
  CHECK_THROWS_AS(parse("x^2 + y = 0", ExprKind::Line), ParseError);
  try {
    parse("x + q", ExprKind::Polynomial);
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_modulus("t + 1"), ParseError);
}

TEST_CASE("parse: print round trip on the corpus") {
  for (const auto& entry : load_corpus()) {
    CAPTURE(entry.id);
    ExtensionPtr K;
    if (entry.data.contains("field")) K = make_extension(parse_modulus(entry.data["field"]), "t");
    auto a = parse(entry.data["form"], ExprKind::Form, K);
    auto b = parse(print(a), ExprKind::Form, K);
    CHECK(a.form.a == b.form.a);
    CHECK(a.form.b == b.form.b);
    CHECK(print(a) == print(b));
    if (entry.data["expect"].contains("symmetries"))
      for (const auto& s : entry.data["expect"]["symmetries"]) {
        auto m = parse(s["map"], ExprKind::Map, K);
        CHECK(parse(print(m), ExprKind::Map, K).map == m.map);
      }
  }
  auto d = parse("dx: x^2 - 1/3, dy: -y", ExprKind::Derivation);
  auto d2 = parse(print(d), ExprKind::Derivation);
  CHECK(d2.f == d.f);
  CHECK(d2.g == d.g);
  auto l = parse("x = -1/2", ExprKind::Line);
  CHECK(parse(print(l), ExprKind::Line).poly == l.poly);
}

TEST_CASE("report: schema, rationals as strings, byte stability") {
  auto in = parse("(x*y + 1)*dx - dy", ExprKind::Form);
  Json a = analysis_report(in);
  CHECK(a["schema"] == 1);
  CHECK(a["degree"] == 2);
  CHECK(a["line_at_infinity_invariant"] == true);
  CHECK(a["singular_locus"]["total_milnor"] == 7);
  CHECK(a["reduction"]["blowups"] == 1);
  CHECK(a["kodaira"]["kappa"] == "1");
  CHECK(a["zariski"]["TT"].is_string());
  CHECK(a["simplicity"]["valid"] == true);
  CHECK(!a.contains("timing"));
  std::string s1 = a.dump(), s2 = analysis_report(in).dump();
  CHECK(s1 == s2);
  // no floating point anywhere
  std::function<void(const Json&)> walk = [&](const Json& j) {
    CHECK_FALSE(j.is_number_float());
    if (j.is_structured())
      for (const auto& c : j) walk(c);
  };
  walk(a);

  ReportOptions o;
  o.timing = true;
  o.certificate_degree = 0;
  Json t = analysis_report(in, o);
  CHECK(t.contains("timing"));
  CHECK(!t.contains("simplicity"));

  CHECK(rational_json(Rational(-17, 24)) == "-17/24");
  CHECK(rational_json(Rational(3)) == "3");
}

TEST_CASE("report: DOT export") {
  auto t61 = seidenberg_reduce(extend_to_plane(ex::ex61()));
  std::string d61 = export_dot(t61);
  CHECK(count(d61, "[label=\"{") == 2);
  CHECK(count(d61, " -- ") == 1);
  CHECK(d61.find("Linf (0) [inv]") != std::string::npos);
  CHECK(d61.find("E1 (-1) [inv]") != std::string::npos);
  CHECK(d61 == export_dot(seidenberg_reduce(extend_to_plane(ex::ex61()))));

  auto t65 = seidenberg_reduce(extend_to_plane(ex::ex65()));
  std::string d65 = export_dot(t65);
  CHECK(count(d65, "[label=\"{") == 6);
  CHECK(count(d65, "(-2) [inv]") == 3);

  // reduced on the plane: a single node for the invariant line at infinity
  auto t0 = seidenberg_reduce(extend_to_plane(ex::form(x - y, x + 2 * y)));
  REQUIRE(t0.centers.empty());
  std::string d0 = export_dot(t0);
  CHECK(count(d0, "[label=\"{") == 1);
  CHECK(d0.find("Linf (1) [inv]") != std::string::npos);
}
