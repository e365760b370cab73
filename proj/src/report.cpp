#include "foliation/report.hpp"

#include <chrono>
#include <sstream>

#include "foliation/qpoly.hpp"

namespace fol {

namespace {

std::string elem(const FElem& e) { return e.to_string(); }

Json direction(const std::optional<std::array<FElem, 2>>& d) {
  if (!d) return nullptr;
  return Json::array({elem((*d)[0]), elem((*d)[1])});
}

std::vector<std::string> class_names(const Lattice& L) {
  std::vector<std::string> n{"H"};
  for (size_t i = 1; i < L.rank(); ++i) n.push_back("E" + std::to_string(i));
  return n;
}

std::string class_string(const DivisorClass& d, const Lattice& L) {
  std::string s = d.to_string(class_names(L));
  return s.empty() ? "0" : s;
}

class Stopwatch {
 public:
  explicit Stopwatch(bool on) : on_(on), t0_(std::chrono::steady_clock::now()) {}
  void lap(Json& j, const std::string& key) {
    if (!on_) return;
    auto t = std::chrono::steady_clock::now();
    j[key] = std::chrono::duration_cast<std::chrono::microseconds>(t - t0_).count();
    t0_ = t;
  }

 private:
  bool on_;
  std::chrono::steady_clock::time_point t0_;
};

std::string dot_escape(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '"' || c == '{' || c == '}' || c == '|' || c == '<' || c == '>') r += '\\';
    r += c;
  }
  return r;
}

}  // namespace

std::string rational_json(const Rational& q) { return rational_string(q); }

Json to_json(const SingularityRecord& r) {
  Json j;
  j["ell"] = r.ell;
  j["type"] = to_string(r.type);
  j["mu"] = r.mu;
  j["reduced"] = r.reduced();
  j["trace"] = elem(r.trace);
  j["det"] = elem(r.det);
  if (r.lambda) j["lambda"] = rational_json(r.lambda->first);
  j["strong_direction"] = direction(r.strong_direction);
  j["weak_direction"] = direction(r.weak_direction);
  if (r.morse) {
    j["morse"] = {{"candidate", r.morse->candidate}, {"order", r.morse->order}};
    if (r.morse->obstruction) j["morse"]["obstruction"] = *r.morse->obstruction;
  }
  return j;
}

Json to_json(const SingularLocus& s) {
  Json pts = Json::array();
  for (const auto& e : s.entries) {
    Json p = to_json(e.record);
    p["point"] = e.point.to_string();
    p["chart"] = to_string(e.point.chart);
    p["conjugates"] = e.point.conjugates();
    p["at_infinity"] = e.point.at_infinity();
    pts.push_back(p);
  }
  return {{"points", pts}, {"total_milnor", s.total_milnor()}, {"complete", s.complete}, {"defects", s.defects}};
}

Json to_json(const ReductionTree& t) {
  Json centers = Json::array();
  for (const auto& c : t.centers) {
    Json j = to_json(c.record);
    j["index"] = c.index;
    j["label"] = c.label;
    j["parent"] = c.parent;
    j["dicritical"] = c.dicritical;
    j["conjugates"] = c.conjugates();
    j["mu_after"] = c.mu_after;
    j["bookkeeping_ok"] = c.bookkeeping_ok;
    if (c.base) j["base"] = c.base->to_string();
    centers.push_back(j);
  }
  Json curves = Json::array();
  for (size_t i = 0; i < t.curves.size(); ++i) {
    const auto& c = t.curves[i];
    curves.push_back({{"name", c.name},
                      {"class", class_string(c.cls, t.lattice)},
                      {"self_intersection", rational_json(t.self_intersection(static_cast<int>(i)))},
                      {"invariant", c.invariant},
                      {"conjugates", c.conjugates},
                      {"singularities", c.singularities.size()}});
  }
  Json leaves = Json::array();
  for (const auto& l : t.leaves) {
    Json j = to_json(l.record);
    j["label"] = l.label;
    j["on_center"] = l.on_center;
    j["conjugates"] = l.conjugates();
    leaves.push_back(j);
  }
  return {{"status", to_string(t.status)},
          {"blowups", t.centers.size()},
          {"ell_sequence", t.ell_sequence()},
          {"centers", centers},
          {"curves", curves},
          {"leaves", leaves},
          {"all_reduced", t.all_reduced()},
          {"defects", t.defects}};
}

Json to_json(const Configuration& c) {
  Json curves = Json::array();
  for (size_t i = 0; i < c.curves.size(); ++i) {
    int id = static_cast<int>(i);
    if (!c.alive(id)) continue;
    curves.push_back({{"name", c.curves[i].name},
                      {"self_intersection", rational_json(c.self_intersection(id))},
                      {"invariant", c.curves[i].invariant},
                      {"singularities", c.z_count(id)}});
  }
  return {{"curves", curves}, {"cotangent", class_string(c.cotangent, c.lattice)}, {"log", c.log}};
}

Json to_json(const ZariskiDecomposition& z, const Configuration& c) {
  Json alpha = Json::object();
  for (size_t i = 0; i < z.support.size(); ++i) alpha[c.curves[static_cast<size_t>(z.support[i])].name] = rational_json(z.alpha[i]);
  return {{"alpha", alpha},
          {"N", class_string(z.N, c.lattice)},
          {"P", class_string(z.P, c.lattice)},
          {"PP", rational_json(z.PP)},
          {"NN", rational_json(z.NN)},
          {"TT", rational_json(z.TT)},
          {"orthogonal", z.orthogonal},
          {"coefficients_in_range", z.coefficients_in_range}};
}

Json to_json(const RiccatiStructure& r) {
  Json fibers = Json::array();
  for (const auto& f : r.fibers)
    fibers.push_back({{"label", f.label},
                      {"conjugates", f.conjugates},
                      {"local_multiplicity", f.local_multiplicity},
                      {"type", to_string(f.type)},
                      {"m", f.m},
                      {"components", f.components}});
  return {{"base_point", "(" + rational_string(r.base_point[0]) + ":" + rational_string(r.base_point[1]) + ":" +
                             rational_string(r.base_point[2]) + ")"},
          {"base", r.base.to_string()},
          {"fiber_coordinate", r.fiber_coordinate.to_string()},
          {"normal_form", r.normal_form.to_string()},
          {"fibers", fibers}};
}

Json to_json(const KodairaVerdict& k) {
  return {{"kappa", to_string(k.value)}, {"rule", k.rule}, {"certificates", k.certificates}};
}

Json to_json(const DarbouxResult& r) {
  Json curves = Json::array();
  for (const auto& c : r.curves) curves.push_back({{"curve", c.curve.to_string()}, {"cofactor", c.cofactor.to_string()}});
  Json levels = Json::array();
  for (const auto& l : r.transcript)
    levels.push_back({{"degree", l.degree},
                      {"branches", l.branches},
                      {"unknowns", l.unknowns},
                      {"equations", l.equations},
                      {"parameters", l.parameters},
                      {"conditions", l.conditions},
                      {"solutions", l.solutions},
                      {"positive_dimensional", l.positive_dimensional},
                      {"irrational_skipped", l.irrational_skipped},
                      {"top_split_incomplete", l.top_split_incomplete}});
  return {{"curves", curves}, {"transcript", levels}, {"complete", r.complete()}};
}

Json to_json(const SimplicityCertificate& c) {
  return {{"label", c.label()},
          {"degree_bound", c.degree_bound},
          {"valid", c.valid()},
          {"affine_zero_free", c.zeros.free},
          {"resultant", c.zeros.resultant.to_string()},
          {"zero_checks", c.zeros.checks},
          {"witnesses", c.zeros.witnesses},
          {"search", to_json(c.search)}};
}

Json to_json(const SymmetryVerdict& v) {
  Json j = {{"preserves", v.preserves},
            {"jacobian", v.jacobian.to_string()},
            {"jacobian_constant", v.jacobian_constant},
            {"isotropy", v.isotropy}};
  if (v.c) j["c"] = elem(*v.c);
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

Json analysis_report(const InputExpression& in, const ReportOptions& opts) {
  if (in.kind != ExprKind::Form && in.kind != ExprKind::Derivation)
    throw std::invalid_argument("analysis needs a form or a derivation");
  Json j;
  Json timing;
  Stopwatch sw(opts.timing);
  AffineOneForm w = make_form(in.form.a, in.form.b);
  ProjectiveFoliation F = extend_to_plane(w);
  j["schema"] = kReportSchema;
  j["input"] = {{"kind", to_string(in.kind)}, {"source", in.source}, {"canonical", print(in)}};
  if (in.field) j["input"]["field"] = qpoly::to_string(in.field->modulus(), "t");
  j["form"] = w.to_string();
  if (!w.removed_content.is_constant()) j["removed_content"] = w.removed_content.to_string();
  j["degree"] = F.degree;
  j["line_at_infinity_invariant"] = line_at_infinity_invariant(F);
  j["singular_locus"] = to_json(singular_points(F, opts.reduction.classify));
  sw.lap(timing, "singular_locus_us");
  BirationalAnalysis a = analyze_birational(w, opts.reduction);
  sw.lap(timing, "reduction_us");
  j["reduction"] = to_json(a.tree);
  j["model"] = to_json(a.model);
  j["contracted"] = a.contracted;
  Json chains = Json::array();
  for (const auto& ch : a.chains) {
    Json names = Json::array();
    for (int c : ch.curves) names.push_back(a.model.curves[static_cast<size_t>(c)].name);
    chains.push_back(names);
  }
  j["f_chains"] = chains;
  j["zariski"] = to_json(a.zariski, a.model);
  if (a.riccati) {
    j["riccati"] = to_json(*a.riccati);
    if (a.riccati_degree) j["riccati"]["degree"] = rational_json(*a.riccati_degree);
    if (a.lattice_fiber_degree) j["riccati"]["lattice_degree"] = rational_json(*a.lattice_fiber_degree);
  } else {
    j["riccati"] = nullptr;
  }
  j["kodaira"] = to_json(a.kodaira);
  int d = opts.certificate_degree < 0 ? F.degree + 2 : opts.certificate_degree;
  if (d > 0 && w.a.is_rational() && w.b.is_rational()) {
    Poly f = in.kind == ExprKind::Derivation ? in.f : w.field_x();
    Poly g = in.kind == ExprKind::Derivation ? in.g : w.field_y();
    try {
      j["simplicity"] = to_json(simplicity_certificate(f, g, d));
    } catch (const std::invalid_argument& e) {
      j["simplicity"] = {{"error", e.what()}};
    }
    sw.lap(timing, "certificate_us");
  }
  if (opts.timing) j["timing"] = timing;
  return j;
}

std::string export_dot(const ReductionTree& t) {
  std::ostringstream os;
  os << "graph reduction {\n  node [shape=record];\n";
  for (size_t i = 0; i < t.curves.size(); ++i) {
    const auto& c = t.curves[i];
    int id = static_cast<int>(i);
    os << "  c" << i << " [label=\"{" << dot_escape(c.name) << " (" << rational_string(t.self_intersection(id)) << ") ["
       << (c.invariant ? "inv" : "noninv") << "]";
    auto pts = t.points_on(id);
    for (size_t k = 0; k < pts.size(); ++k) {
      os << "|<p" << k << "> " << short_tag(pts[k]->record.type) << " mu=" << pts[k]->record.mu;
      if (pts[k]->conjugates() > 1) os << " x" << pts[k]->conjugates();
    }
    os << "}\"];\n";
  }
  for (size_t i = 0; i < t.curves.size(); ++i)
    for (size_t k = i + 1; k < t.curves.size(); ++k) {
      Rational m = t.intersection(static_cast<int>(i), static_cast<int>(k));
      if (m <= 0) continue;
      os << "  c" << i << " -- c" << k;
      if (m != 1) os << " [label=\"" << rational_string(m) << "\"]";
      os << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace fol
