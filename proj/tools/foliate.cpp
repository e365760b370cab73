#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "foliation/corpus.hpp"
#include "foliation/report.hpp"

using namespace fol;

namespace {

constexpr int kOk = 0, kDefect = 1, kInputError = 2, kCorpusMismatch = 3;

// A report was produced but the analysis could not finish.
class AnalysisDefect : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Shared {
  std::string form, derivation, field, json_path, dot_path;
  int max_blowups = 200;
};

void add_shared(CLI::App* c, Shared& s) {
  c->add_option("--form", s.form, "1-form P*dx + Q*dy");
  c->add_option("--derivation", s.derivation, "derivation 'dx: P, dy: Q'");
  c->add_option("--field", s.field, "modulus of Q[t], e.g. 't^2 + t + 1'");
  c->add_option("--json", s.json_path, "write the JSON report here instead of stdout");
  c->add_option("--dot", s.dot_path, "write the reduction graph in DOT format");
  c->add_option("--max-blowups", s.max_blowups, "cap on blow-ups")->check(CLI::PositiveNumber);
}

ExtensionPtr field_of(const Shared& s) {
  return s.field.empty() ? nullptr : make_extension(parse_modulus(s.field), "t");
}

InputExpression input_of(const Shared& s) {
  if (s.form.empty() == s.derivation.empty()) throw std::invalid_argument("give exactly one of --form or --derivation");
  auto K = field_of(s);
  return s.form.empty() ? parse(s.derivation, ExprKind::Derivation, K) : parse(s.form, ExprKind::Form, K);
}

AffineOneForm form_of(const InputExpression& in) { return make_form(in.form.a, in.form.b); }

ReductionOptions reduction_of(const Shared& s) {
  ReductionOptions o;
  o.max_blowups = s.max_blowups;
  return o;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

void emit(const Shared& s, const Json& j) {
  if (s.json_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_text(s.json_path, j.dump(2) + "\n");
}

void emit_dot(const Shared& s, const ReductionTree& t) {
  if (!s.dot_path.empty()) write_text(s.dot_path, export_dot(t));
}

void require_complete(const ReductionTree& t) {
  if (t.status != ReductionStatus::Complete)
    throw AnalysisDefect("reduction " + to_string(t.status) + (t.defects.empty() ? "" : ": " + t.defects.front()));
}

ProjectivePoint point_of(const std::string& text, const ExtensionPtr& K) {
  std::string s = text;
  std::erase_if(s, [](char c) { return c == '(' || c == ')'; });
  std::array<FElem, 3> q;
  size_t start = 0;
  for (size_t i = 0; i < 3; ++i) {
    size_t end = i < 2 ? s.find(':', start) : s.size();
    if (end == std::string::npos) throw std::invalid_argument("point must look like (x:y:z)");
    Poly p = parse(s.substr(start, end - start), ExprKind::Polynomial, K).poly;
    if (!p.is_constant()) throw std::invalid_argument("point coordinates must be constants");
    q[i] = p.constant_term();
    start = end + 1;
  }
  ProjectivePoint p;
  p.coords = q;
  if (!q[2].is_zero()) {
    p.chart = Chart::Z;
    p.local = {q[0] / q[2], q[1] / q[2]};
  } else if (!q[0].is_zero()) {
    p.chart = Chart::X;  // (s, t) = (z, y) / x
    p.local = {FElem(0), q[1] / q[0]};
  } else if (!q[1].is_zero()) {
    p.chart = Chart::Y;  // (s, t) = (x, z) / y
    p.local = {FElem(0), FElem(0)};
  } else {
    throw std::invalid_argument("(0:0:0) is not a point");
  }
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Birational analysis of plane polynomial foliations"};
  app.require_subcommand(1);
  Shared s;

  auto* analyze = app.add_subcommand("analyze", "full report: singularities, reduction, models, Kodaira dimension");
  add_shared(analyze, s);
  int cert_degree = -1;
  bool timing = false;
  analyze->add_option("--certificate-degree", cert_degree, "degree bound of the simplicity certificate (0 skips)");
  analyze->add_flag("--timing", timing, "include wall-clock timings");

  auto* reduce = app.add_subcommand("reduce", "reduction of singularities");
  add_shared(reduce, s);

  auto* classify = app.add_subcommand("classify-point", "classify one point");
  add_shared(classify, s);
  std::string at;
  classify->add_option("--at", at, "projective point (x:y:z)")->required();

  auto* darboux = app.add_subcommand("darboux", "invariant algebraic curves up to a degree");
  add_shared(darboux, s);
  int max_degree = 3;
  darboux->add_option("--max-degree", max_degree)->check(CLI::Range(1, 12));

  auto* kodaira = app.add_subcommand("kodaira", "Kodaira dimension with the deciding rule");
  add_shared(kodaira, s);

  auto* symmetry = app.add_subcommand("symmetry", "check that a polynomial map preserves the foliation");
  add_shared(symmetry, s);
  std::string map_text;
  symmetry->add_option("--map", map_text, "map (X, Y)")->required();

  auto* gamma = app.add_subcommand("construct-gamma", "build the finite-order symmetry of a pulled back foliation");
  add_shared(gamma, s);
  int xi_order = 2;
  std::string tau_text;
  gamma->add_option("--xi-order", xi_order, "order n of the root of unity")->check(CLI::Range(1, 64));
  gamma->add_option("--tau", tau_text, "polynomial tau(x)")->required();

  auto* corpus = app.add_subcommand("corpus", "run the golden examples");
  std::string run_id, corpus_dir = default_corpus_dir();
  corpus->add_option("--run", run_id, "single example id");
  corpus->add_option("--dir", corpus_dir, "corpus directory");
  corpus->add_option("--json", s.json_path, "write the rows as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (analyze->parsed()) {
      auto in = input_of(s);
      ReportOptions o;
      o.reduction = reduction_of(s);
      o.certificate_degree = cert_degree;
      o.timing = timing;
      Json j = analysis_report(in, o);
      emit(s, j);
      if (!s.dot_path.empty()) emit_dot(s, analyze_birational(form_of(in), o.reduction).tree);
      if (j["reduction"]["status"] != "complete" || !j["singular_locus"]["complete"].get<bool>()) return kDefect;
      return kOk;
    }
    if (reduce->parsed()) {
      auto w = form_of(input_of(s));
      auto tree = seidenberg_reduce(extend_to_plane(w), reduction_of(s));
      Json j = to_json(tree);
      j["schema"] = kReportSchema;
      emit(s, j);
      emit_dot(s, tree);
      require_complete(tree);
      return kOk;
    }
    if (classify->parsed()) {
      auto in = input_of(s);
      auto F = extend_to_plane(form_of(in));
      auto p = point_of(at, in.field);
      auto [P, Q] = chart_form(F, p.chart);
      P = P.translate({p.local[0], p.local[1], FElem(0)});
      Q = Q.translate({p.local[0], p.local[1], FElem(0)});
      Json j;
      j["schema"] = kReportSchema;
      j["point"] = p.to_string();
      j["chart"] = to_string(p.chart);
      if (!P.constant_term().is_zero() || !Q.constant_term().is_zero()) {
        j["singular"] = false;
      } else {
        j["singular"] = true;
        j["record"] = to_json(classify_form(P, Q));
      }
      emit(s, j);
      return kOk;
    }
    if (darboux->parsed()) {
      auto r = invariant_curves_up_to_degree(form_of(input_of(s)), max_degree);
      Json j = to_json(r);
      j["schema"] = kReportSchema;
      j["max_degree"] = max_degree;
      emit(s, j);
      return kOk;
    }
    if (kodaira->parsed()) {
      auto a = analyze_birational(form_of(input_of(s)), reduction_of(s));
      Json j = to_json(a.kodaira);
      j["schema"] = kReportSchema;
      emit(s, j);
      emit_dot(s, a.tree);
      require_complete(a.tree);
      return kOk;
    }
    if (symmetry->parsed()) {
      auto in = input_of(s);
      auto R = parse(map_text, ExprKind::Map, in.field).map;
      auto v = check_symmetry(R, form_of(in));
      Json j = to_json(v);
      j["schema"] = kReportSchema;
      j["map"] = R.to_string();
      auto o = map_order(R, 64);
      j["order"] = o ? Json(*o) : Json("exceeds 64");
      emit(s, j);
      return kOk;
    }
    if (gamma->parsed()) {
      auto in = input_of(s);
      FElem xi = primitive_root_of_unity(xi_order);
      Poly tau = parse(tau_text, ExprKind::Polynomial, in.field).poly;
      auto g = build_gamma(xi, xi_order, tau, form_of(in));
      Json j = {{"schema", kReportSchema},
                {"xi", xi.to_string()},
                {"n", g.n},
                {"tau", g.tau.to_string()},
                {"gamma", g.gamma.to_string()},
                {"order", g.order},
                {"degree", g.degree},
                {"pulled", g.pulled.to_string()},
                {"transformed", g.transformed.to_string()},
                {"T_on_pulled", to_json(g.T_on_pulled)},
                {"gamma_on_transformed", to_json(g.gamma_on_transformed)}};
      emit(s, j);
      return kOk;
    }
    if (corpus->parsed()) {
      auto rows = run_corpus(run_id, corpus_dir);
      Json j = Json::array();
      bool ok = true;
      for (const auto& r : rows) {
        ok = ok && r.pass;
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << "  " << r.check;
        if (!r.pass) std::cout << "  expected " << r.expected << "  got " << r.actual;
        std::cout << "\n";
        j.push_back({{"id", r.id}, {"check", r.check}, {"expected", r.expected}, {"actual", r.actual}, {"pass", r.pass}});
      }
      if (!s.json_path.empty()) write_text(s.json_path, j.dump(2) + "\n");
      return ok ? kOk : kCorpusMismatch;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const AnalysisDefect& e) {
    std::cerr << "analysis defect: " << e.what() << "\n";
    return kDefect;
  } catch (const std::exception& e) {
    std::cerr << "analysis defect: " << e.what() << "\n";
    return kDefect;
  }
  return kOk;
}
