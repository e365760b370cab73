#include "doctest.h"

#include "examples.hpp"
#include "foliation/blowup.hpp"

using namespace fol;
using ex::x;
using ex::y;

namespace {

std::vector<const LeafPoint*> of_type(const ReductionTree& T, const std::string& curve, SingularityType t) {
  std::vector<const LeafPoint*> out;
  for (const auto* p : T.points_on(T.find_curve(curve)))
    if (p->record.type == t) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("blowing up a regular point") {
  // dt pulls back to v ds + s dv in the first chart.
  auto r = blowup_point(Poly(), Poly(1));
  CHECK(r.ell == 0);
  CHECK(!r.dicritical);
  REQUIRE(r.points.size() == 1);
  CHECK(r.points[0].chart == 1);
  CHECK(r.points[0].coordinate.is_zero());
  REQUIRE(r.points[0].record.lambda);
  CHECK(r.points[0].record.lambda->first == -1);
}

TEST_CASE("radial point is dicritical") {
  auto r = blowup_point(y, -x);
  CHECK(r.ell == 1);
  CHECK(r.dicritical);
  CHECK(r.cleared == 2);
  CHECK(r.points.empty());
}

TEST_CASE("strict transform of a cusp") {
  auto [h, m] = strict_transform_local(y * y - x.pow(3), 1);
  CHECK(m == 2);
  CHECK(h == y * y - x);
}

TEST_CASE("lattice") {
  Lattice L{{1, 2}};
  CHECK(L.dot(L.H(), L.H()) == 1);
  CHECK(L.dot(L.E(1), L.E(1)) == -1);
  CHECK(L.dot(L.E(2), L.E(2)) == -2);
  CHECK(L.dot(L.H() - L.E(1), L.E(1)) == 1);
}

TEST_CASE("reduction of the quadratic Shamsuddin example") {
  auto T = seidenberg_reduce(extend_to_plane(ex::ex61()));
  CHECK(T.status == ReductionStatus::Complete);
  REQUIRE(T.centers.size() == 1);
  CHECK(T.centers[0].ell == 2);
  CHECK(!T.centers[0].dicritical);
  CHECK(T.centers[0].base->coords[0].is_zero());
  CHECK(T.curve("E1").invariant);
  auto sn = of_type(T, "E1", SingularityType::SaddleNode);
  REQUIRE(sn.size() == 1);
  CHECK(sn[0]->record.mu == 3);
  CHECK(T.curve("Linf").invariant);
  CHECK(T.self_intersection(T.find_curve("Linf")) == 0);
  CHECK(T.self_intersection(T.find_curve("E1")) == -1);
  CHECK(T.all_reduced());
}

TEST_CASE("reduction of the degree-8 Shamsuddin example") {
  auto T = seidenberg_reduce(extend_to_plane(ex::ex65()));
  CHECK(T.ell_sequence() == std::vector<int>{8, 2, 2, 2, 2});
  CHECK(T.self_intersection(T.find_curve("Linf")) == -1);
  CHECK(T.self_intersection(T.find_curve("E1")) == -5);
  for (const char* e : {"E2", "E3", "E4"}) CHECK(T.self_intersection(T.find_curve(e)) == -2);
  CHECK(T.self_intersection(T.find_curve("E5")) == -1);
  auto sn = of_type(T, "E5", SingularityType::SaddleNode);
  REQUIRE(sn.size() == 2);
  for (const auto* p : sn) CHECK(p->record.mu == 5);
  CHECK(of_type(T, "E5", SingularityType::MorseCandidate).size() == 1);
}

TEST_CASE("reduction with a radial and a nilpotent point") {
  auto T = seidenberg_reduce(extend_to_plane(ex::ex66()));
  REQUIRE(T.centers.size() == 3);
  CHECK(T.centers[0].dicritical);
  CHECK(T.centers[0].record.type == SingularityType::Radial);
  CHECK(!T.curve("E1").invariant);
  CHECK(T.centers[1].record.type == SingularityType::Nilpotent);
  auto sn = of_type(T, "E3", SingularityType::SaddleNode);
  REQUIRE(sn.size() == 1);
  CHECK(sn[0]->record.mu == 4);
  REQUIRE(sn[0]->record.strong_direction);
  // E3 is {s = 0} in the first chart: the strong direction is along t.
  CHECK((*sn[0]->record.strong_direction)[0].is_zero());
  CHECK(of_type(T, "E3", SingularityType::NonDegenerate).size() == 2);
}

TEST_CASE("Milnor bookkeeping at every center") {
  for (const auto& w : {ex::ex61(), ex::ex62(), ex::ex63(), ex::ex64(), ex::ex65(), ex::ex66(), ex::ex67(),
                        ex::ex68(), ex::ex69(), ex::ex54()}) {
    auto T = seidenberg_reduce(extend_to_plane(w));
    CAPTURE(w.to_string());
    CHECK(T.status == ReductionStatus::Complete);
    CHECK(T.all_reduced());
    for (const auto& c : T.centers) CHECK(c.bookkeeping_ok);
  }
}

TEST_CASE("reduction is deterministic and terminal") {
  auto F = extend_to_plane(ex::ex54());
  auto a = seidenberg_reduce(F), b = seidenberg_reduce(F);
  CHECK(a.ell_sequence() == b.ell_sequence());
  REQUIRE(a.curves.size() == b.curves.size());
  for (size_t i = 0; i < a.curves.size(); ++i) CHECK(a.curves[i].cls == b.curves[i].cls);
  for (const auto& l : a.leaves) CHECK(l.record.reduced());
}

TEST_CASE("user curves are carried through the reduction") {
  ReductionOptions opts;
  opts.curves = {{"line", y - 2 * x - 3}, {"cusp", y * y + x.pow(3)}};
  auto T = seidenberg_reduce(extend_to_plane(ex::ex61()), opts);
  CHECK(!T.curve("line").invariant);
  CHECK(T.self_intersection(T.find_curve("line")) == 1);

  auto C = seidenberg_reduce(extend_to_plane(ex::ex54()), opts);
  const auto& cusp = C.curve("cusp");
  CHECK(cusp.invariant);
  // three blow-ups at the cusp point with multiplicities 2, 1, 1
  CHECK(cusp.cls[1] == -2);
  CHECK(cusp.cls[2] == -1);
  CHECK(cusp.cls[3] == -1);
}

TEST_CASE("blowing up a reduced leaf") {
  auto T = seidenberg_reduce(extend_to_plane(ex::ex61()));
  size_t n = T.leaves.size();
  int leaf = 0;
  while (T.leaves[static_cast<size_t>(leaf)].on_center != 1) ++leaf;
  blowup_leaf(T, leaf);
  CHECK(T.centers.size() == 2);
  CHECK(T.self_intersection(T.find_curve("E1")) == -2);
  CHECK(T.leaves.size() >= n);
  CHECK(T.centers.back().bookkeeping_ok);
}
