// One PASS/FAIL line per acceptance criterion. Criteria 1-10 are the golden
// corpus rows grouped by example; criterion 11 runs the property test cases
// in-process. Red criteria print the failing rows and what was computed
// instead. Exit status is nonzero when any criterion is red.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <iostream>
#include <map>
#include <sstream>

#include "foliation/corpus.hpp"
#include "foliation/report.hpp"

using namespace fol;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> ids;
};

const std::vector<Criterion> kCriteria = {
    {1, "saddle-node, l=2 point, one blow-up, Riccati m=3, kappa 1", {"ex6_1"}},
    {2, "transverse pencil 2x+y=c, m=3, kappa 1, linear equivalence", {"ex6_2"}},
    {3, "saddle-node mu=4, l=3, m=4, kappa 1", {"ex6_3"}},
    {4, "saddle-node mu=5, l-sequence (8,2,2,2,2), contraction, degree 3", {"ex6_4", "ex6_5"}},
    {5, "radial + nilpotent, E3 saddle-node mu=4, degree 1/2", {"ex6_6"}},
    {6, "single saddle-node mu=7, kappa 2 (R1), order-3 symmetry over Q[t]", {"ex6_7"}},
    {7, "four l=2 blow-ups, T.T=0, two F-chains, Zariski, kappa 2", {"ex6_8"}},
    {8, "l=2 point, 3 blow-ups, y=0 transverse, kappa 2", {"ex6_9"}},
    {9, "cusp curve y^2+x^3, tangency identity, two (-2)-chains", {"ex5_4"}},
    {10, "covering construction: Gamma, literal Omega, certificate d=4", {"ex8_2"}},
};

std::string join(const std::vector<std::string>& ids) {
  std::string s;
  for (const auto& id : ids) s += (s.empty() ? "" : "+") + id;
  return s;
}

std::string chain_names(const BirationalAnalysis& a) {
  std::ostringstream o;
  for (const auto& ch : a.chains) {
    o << " (";
    for (size_t i = 0; i < ch.curves.size(); ++i)
      o << (i ? ", " : "") << a.reduced.curves[static_cast<size_t>(ch.curves[i])].name << "["
        << ch.self_intersections[i] << "]";
    o << ")";
  }
  return o.str();
}

AffineOneForm form_of(const std::string& text) {
  auto in = parse(text, ExprKind::Form);
  return make_form(in.form.a, in.form.b);
}

// ex6_8: the golden coefficients, placed on our curves, do not satisfy the
// orthogonality that defines the Zariski decomposition.
void analyze_ex68() {
  auto a = analyze_birational(form_of("(y^3 + x)*dx - dy"));
  const auto& cfg = a.reduced;
  std::cout << "    computed l-sequence:";
  for (int l : a.tree.ell_sequence()) std::cout << " " << l;
  std::cout << " (the last center is the radial point, blown up dicritically)\n";
  std::cout << "    computed F-chains:" << chain_names(a) << "\n";
  std::cout << "    computed N.N = " << a.zariski.NN << ", P.P = " << a.zariski.PP << ", T.T = " << a.zariski.TT
            << ", kappa = " << to_string(a.kodaira.value) << "\n";
  std::vector<std::pair<std::string, Rational>> golden = {
      {"E2", Rational(1, 4)}, {"Linf", Rational(1, 2)}, {"E1", Rational(1, 3)}};
  DivisorClass N;
  for (const auto& [name, alpha] : golden) N = N + cfg.curves[static_cast<size_t>(cfg.find_curve(name))].cls * alpha;
  DivisorClass P = cfg.cotangent - N;
  std::cout << "    golden alpha placed on (E2, Linf, E1): N.N = " << cfg.lattice.dot(N, N);
  for (const auto& [name, alpha] : golden)
    std::cout << ", P." << name << " = " << cfg.lattice.dot(P, cfg.curves[static_cast<size_t>(cfg.find_curve(name))].cls);
  std::cout << "\n    (P.N_j must vanish, so the golden alpha is not a Zariski decomposition of this configuration)\n";
}

void analyze_ex69() {
  auto w = form_of("-(1 - x*y)*dx + y^3*dy");
  auto a = analyze_birational(w);
  int quadratic = 0;
  std::cout << "    computed l-sequence:";
  for (int l : a.tree.ell_sequence()) {
    std::cout << " " << l;
    quadratic += l >= 2;
  }
  std::cout << "\n    centers with l >= 2: " << quadratic << " (the later l=1 centers resolve a node with lambda in Q+)\n";
  auto s = singular_points(extend_to_plane(w));
  for (const auto& e : s.entries)
    std::cout << "    singular point " << e.point.to_string() << ": l=" << e.record.ell << " mu=" << e.record.mu << "\n";
  std::cout << "    (with points written (x:y:z), the l=2 point sits on the x-direction at infinity)\n";
}

void analyze_ex54() {
  auto a = analyze_birational(form_of("(3*x^2 + 3*y*(y^2 + x^3))*dx + (2*y - 2*x*(y^2 + x^3))*dy"));
  const auto& cfg = a.reduced;
  std::cout << "    computed F-chains:" << chain_names(a) << "\n";
  int L = cfg.find_curve("Linf");
  for (const char* n : {"E4", "E5", "E6"}) {
    int c = cfg.find_curve(n);
    std::cout << "    Linf." << n << " = " << cfg.intersection(L, c) << (cfg.curves[static_cast<size_t>(c)].invariant ? "" : " (non-invariant)") << "\n";
  }
  std::cout << "    (Linf does not meet E4 or E5, so no three-curve chain through Linf exists on this model)\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::map<std::string, std::vector<CorpusRow>> rows;
  for (auto& r : run_corpus()) rows[r.id].push_back(r);

  int red = 0;
  for (const auto& c : kCriteria) {
    std::vector<const CorpusRow*> failed;
    size_t total = 0;
    for (const auto& id : c.ids) {
      if (!rows.count(id)) throw std::runtime_error("corpus entry missing: " + id);
      for (const auto& r : rows[id]) {
        ++total;
        if (!r.pass) failed.push_back(&r);
      }
    }
    bool ok = failed.empty();
    red += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << join(c.ids) << ": " << c.title << " ["
              << total - failed.size() << "/" << total << " checks]\n";
    for (const auto* r : failed)
      std::cout << "    " << r->id << " " << r->check << ": expected " << r->expected << ", got " << r->actual << "\n";
    if (!ok && c.number == 7) analyze_ex68();
    if (!ok && c.number == 8) analyze_ex69();
    if (!ok && c.number == 9) analyze_ex54();
  }

  doctest::Context ctx(argc, argv);
  ctx.setOption("test-case", "property:*");
  std::ostringstream log;
  ctx.setCout(&log);
  int rc = ctx.run();
  bool props = rc == 0;
  red += !props;
  std::cout << (props ? "PASS" : "FAIL")
            << " criterion 11: property suites on the corpus and 100 random inputs (Darboux total, Fulton vs "
               "truncated colength, blow-up bookkeeping, Euler relation, Zariski invariants, pullback "
               "functoriality, affine invariance, planted curves)\n";
  if (!props) std::cout << log.str();

  std::cout << (red == 0 ? "all criteria green" : std::to_string(red) + " criteria red") << "\n";
  return red == 0 ? 0 : 1;
}
