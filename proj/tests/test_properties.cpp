#include <doctest.h>

#include <algorithm>
#include <random>
#include <tuple>

#include "examples.hpp"
#include "foliation/corpus.hpp"
#include "foliation/polyalg.hpp"

using namespace fol;
using ex::x;
using ex::y;

// Identities checked on the corpus and on 100 random small forms.

namespace {

constexpr unsigned kSeed = 20261016;

Poly random_poly(std::mt19937& rng, int degree, int density_percent) {
  std::uniform_int_distribution<int> coeff(-2, 2), pct(0, 99);
  Poly p;
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; i + j <= degree; ++j)
      if (pct(rng) < density_percent) p += x.pow(i) * y.pow(j) * coeff(rng);
  return p;
}

std::vector<AffineOneForm> random_forms(int n) {
  std::mt19937 rng(kSeed);
  std::vector<AffineOneForm> out;
  while (static_cast<int>(out.size()) < n) {
    Poly a = random_poly(rng, 2, 45), b = random_poly(rng, 2, 45);
    if (a.is_zero() || b.is_zero()) continue;
    out.push_back(make_form(a, b));
  }
  return out;
}

std::vector<AffineOneForm> corpus_forms() {
  std::vector<AffineOneForm> out;
  for (const auto& e : load_corpus()) {
    auto in = parse(e.data["form"], ExprKind::Form);
    out.push_back(make_form(in.form.a, in.form.b));
  }
  return out;
}

using Signature = std::vector<std::tuple<std::string, long, int>>;

Signature signature(const SingularLocus& s) {
  Signature r;
  for (const auto& e : s.entries)
    for (int k = 0; k < e.point.conjugates(); ++k) r.emplace_back(to_string(e.record.type), e.record.mu, e.record.ell);
  std::sort(r.begin(), r.end());
  return r;
}

std::optional<SingularLocus> locus_or_skip(const ProjectiveFoliation& F) {
  try {
    auto s = singular_points(F);
    if (!s.complete) return std::nullopt;
    return s;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

TEST_CASE("property: Euler relation and Darboux total") {
  auto forms = corpus_forms();
  auto rnd = random_forms(100);
  forms.insert(forms.end(), rnd.begin(), rnd.end());
  int checked = 0;
  for (const auto& w : forms) {
    CAPTURE(w.to_string());
    auto F = extend_to_plane(w);
    Poly Z = Poly::var(2);
    CHECK((x * F.B + y * F.C + Z * F.A).is_zero());
    auto s = locus_or_skip(F);
    if (!s) continue;
    ++checked;
    long d = F.degree;
    CHECK(s->total_milnor() == d * d + d + 1);
  }
  // the random sample must not be mostly skipped
  CHECK(checked >= 90);
}

TEST_CASE("property: Fulton's algorithm agrees with the truncated colength") {
  auto forms = corpus_forms();
  auto rnd = random_forms(100);
  forms.insert(forms.end(), rnd.begin(), rnd.end());
  int points = 0;
  for (const auto& w : forms) {
    auto F = extend_to_plane(w);
    auto s = locus_or_skip(F);
    if (!s) continue;
    for (const auto& e : s->entries) {
      if (e.point.conjugates() != 1 || e.record.mu > 14) continue;
      auto [P, Q] = chart_form(F, e.point.chart);
      P = P.translate({e.point.local[0], e.point.local[1], FElem(0)});
      Q = Q.translate({e.point.local[0], e.point.local[1], FElem(0)});
      CAPTURE(w.to_string());
      CAPTURE(e.point.to_string());
      long mu = milnor_fulton(P, Q);
      CHECK(mu == e.record.mu);
      auto o = milnor_truncated_oracle(P, Q, static_cast<int>(mu) + 2);
      CHECK(o.stable);
      CHECK(o.mu == mu);
      ++points;
    }
  }
  CHECK(points >= 100);
}

TEST_CASE("property: blow-up bookkeeping and Zariski invariants") {
  auto forms = corpus_forms();
  auto rnd = random_forms(100);
  forms.insert(forms.end(), rnd.begin(), rnd.end());
  ReductionOptions opts;
  opts.max_blowups = 60;
  int trees = 0, zariski = 0;
  for (const auto& w : forms) {
    CAPTURE(w.to_string());
    BirationalAnalysis a;
    try {
      a = analyze_birational(w, opts);
    } catch (const std::exception&) {
      continue;  // non-isolated or unsupported input
    }
    if (a.tree.status != ReductionStatus::Complete) continue;
    ++trees;
    for (const auto& c : a.tree.centers) {
      CAPTURE(c.label);
      CHECK(c.bookkeeping_ok);
    }
    CHECK(a.tree.all_reduced());
    if (a.zariski.support.empty()) continue;
    ++zariski;
    CHECK(a.zariski.orthogonal);
    CHECK(a.zariski.coefficients_in_range);
    CHECK(a.zariski.TT == a.zariski.PP + a.zariski.NN);
  }
  CHECK(trees >= 90);
  CHECK(zariski >= 5);
}

TEST_CASE("property: pullback functoriality") {
  std::mt19937 rng(kSeed + 1);
  std::uniform_int_distribution<int> c(-2, 2);
  auto forms = random_forms(100);
  for (const auto& w : forms) {
    PolynomialMap R{x + random_poly(rng, 2, 40) * y * y, y + c(rng)};
    PolynomialMap S{x * (c(rng) == 0 ? 1 : 2) + c(rng), y + random_poly(rng, 2, 40).evaluate(1, FElem(0))};
    auto lhs = pullback_form(compose(R, S), w);
    auto rhs = pullback_form(S, pullback_form(R, w));
    CHECK(lhs.a == rhs.a);
    CHECK(lhs.b == rhs.b);
  }
}

TEST_CASE("property: classification is invariant under affine changes of coordinates") {
  std::mt19937 rng(kSeed + 2);
  std::uniform_int_distribution<int> c(-3, 3);
  auto forms = corpus_forms();
  auto rnd = random_forms(100);
  forms.insert(forms.end(), rnd.begin(), rnd.end());
  int compared = 0;
  for (const auto& w : forms) {
    int a11, a12, a21, a22;
    do {
      a11 = c(rng), a12 = c(rng), a21 = c(rng), a22 = c(rng);
    } while (a11 * a22 - a12 * a21 == 0);
    PolynomialMap A{a11 * x + a12 * y + c(rng), a21 * x + a22 * y + c(rng)};
    auto w2 = pullback_form(A, w, true);
    auto s1 = locus_or_skip(extend_to_plane(w));
    auto s2 = locus_or_skip(extend_to_plane(make_form(w2.a, w2.b)));
    if (!s1 || !s2) continue;
    CAPTURE(w.to_string());
    CAPTURE(A.to_string());
    CHECK(signature(*s1) == signature(*s2));
    ++compared;
  }
  CHECK(compared >= 90);
}

TEST_CASE("property: planted invariant curves are recovered") {
  std::mt19937 rng(kSeed + 3);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    Poly C;
    if (trial % 2 == 0) {
      C = y + random_poly(rng, 3, 60).evaluate(1, FElem(0));  // y + f(x)
    } else {
      int k = c(rng);
      C = x * y + (k == 0 ? 1 : k) + c(rng) * x;  // x y + c1 x + c0, c0 != 0
    }
    Poly p = random_poly(rng, 1, 70), q = random_poly(rng, 1, 70);
    // v = Hamiltonian field of C plus C (p, q): v(C) = C (p C_x + q C_y)
    Poly f = C.derivative(1) + C * p, g = -C.derivative(0) + C * q;
    if (f.is_zero() && g.is_zero()) continue;
    AffineOneForm w = from_derivation(f, g);
    // the planted curve stays invariant unless it divides both components
    if (divide_exact(f, C) && divide_exact(g, C)) continue;
    CAPTURE(C.to_string());
    CAPTURE(w.to_string());
    auto r = invariant_curves_up_to_degree(w, C.degree());
    Poly target = normalize_monic(C);
    bool found = std::any_of(r.curves.begin(), r.curves.end(),
                             [&](const InvariantCurve& ic) { return normalize_monic(ic.curve) == target; });
    // a positive-dimensional family may hide the curve inside a pencil
    CHECK((found || !r.complete()));
    for (const auto& ic : r.curves) {
      Poly vC = w.field_x() * ic.curve.derivative(0) + w.field_y() * ic.curve.derivative(1);
      CHECK(vC == ic.cofactor * ic.curve);
    }
  }
}
