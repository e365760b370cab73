#include "foliation/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <map>

#include "foliation/polyalg.hpp"

namespace fol {

std::string default_corpus_dir() {
  if (const char* env = std::getenv("FOLIATION_CORPUS")) return env;
  return FOLIATION_CORPUS_DIR;
}

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw std::invalid_argument("corpus directory not found: " + dir);
  std::vector<CorpusEntry> out;
  for (const auto& f : fs::directory_iterator(dir)) {
    if (f.path().extension() != ".json") continue;
    std::ifstream in(f.path());
    CorpusEntry e;
    e.data = Json::parse(in);
    e.id = e.data.value("id", f.path().stem().string());
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

namespace {

bool type_matches(const std::string& want, SingularityType t) {
  if (want == "reduced-non-degenerate") return t == SingularityType::NonDegenerate || t == SingularityType::MorseCandidate;
  return want == to_string(t);
}

bool record_matches(const Json& spec, const SingularityRecord& r) {
  if (spec.contains("type") && !type_matches(spec["type"], r.type)) return false;
  if (spec.contains("mu") && spec["mu"].get<long>() != r.mu) return false;
  if (spec.contains("ell") && spec["ell"].get<int>() != r.ell) return false;
  return true;
}

std::string spec_label(const std::string& what, const Json& spec) {
  std::string s = what + "[";
  bool first = true;
  for (const auto& [k, v] : spec.items()) {
    if (k == "count") continue;
    s += (first ? "" : ",") + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    first = false;
  }
  return s + "]";
}

class Runner {
 public:
  explicit Runner(const CorpusEntry& e) : e_(e), d_(e.data) {
    if (d_.contains("field")) field_ = make_extension(parse_modulus(d_["field"]), "t");
    if (d_.contains("curve_names")) names_ = d_["curve_names"].get<std::map<std::string, std::string>>();
  }

  std::vector<CorpusRow> run() {
    const Json& x = d_.at("expect");
    for (const auto& [key, value] : x.items()) {
      try {
        check(key, value);
      } catch (const std::exception& err) {
        add(key, value.dump(), std::string("error: ") + err.what(), false);
      }
    }
    return std::move(rows_);
  }

 private:
  void add(const std::string& check, const std::string& expected, const std::string& actual, bool pass) {
    rows_.push_back({e_.id, check, expected, actual, pass});
  }
  void add(const std::string& check, const Json& expected, const Json& actual) {
    add(check, expected.dump(), actual.dump(), expected == actual);
  }

  AffineOneForm form_of(const std::string& text) const {
    auto in = parse(text, ExprKind::Form, field_);
    return make_form(in.form.a, in.form.b);
  }
  const AffineOneForm& w() {
    if (!w_) w_ = form_of(d_.at("form"));
    return *w_;
  }
  const ProjectiveFoliation& F() {
    if (!F_) F_ = extend_to_plane(w());
    return *F_;
  }
  const SingularLocus& locus() {
    if (!locus_) locus_ = singular_points(F());
    return *locus_;
  }
  const BirationalAnalysis& analysis() {
    if (!analysis_) analysis_ = analyze_birational(w());
    return *analysis_;
  }
  Poly poly(const std::string& text) const { return parse(text, ExprKind::Polynomial, field_).poly; }
  AffineLine line(const std::string& text) const { return parse(text, ExprKind::Line).line; }
  PolynomialMap map(const std::string& text) const { return parse(text, ExprKind::Map, field_).map; }

  bool same_point(const std::string& text, const ProjectivePoint& p) const {
    if (p.conjugates() != 1) return false;
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '(' || c == ')'; }), s.end());
    std::array<FElem, 3> q;
    size_t start = 0;
    for (int i = 0; i < 3; ++i) {
      size_t end = i < 2 ? s.find(':', start) : s.size();
      if (end == std::string::npos) throw std::invalid_argument("bad point " + text);
      q[static_cast<size_t>(i)] = poly(s.substr(start, end - start)).constant_term();
      start = end + 1;
    }
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = i + 1; j < 3; ++j)
        if (!(p.coords[i] * q[j] == p.coords[j] * q[i])) return false;
    return true;
  }

  static bool strong_along(const LeafPoint& l, int curve) {
    if (!l.record.strong_direction) return false;
    for (const auto& ct : l.curves) {
      if (ct.curve != curve) continue;
      FElem hx = ct.h.derivative(0).constant_term(), hy = ct.h.derivative(1).constant_term();
      return (hx * (*l.record.strong_direction)[0] + hy * (*l.record.strong_direction)[1]).is_zero();
    }
    return false;
  }

  // golden label -> label in our blow-up order
  std::string ours(const std::string& name) const {
    auto it = names_.find(name);
    return it == names_.end() ? name : it->second;
  }
  std::vector<std::string> ours(const Json& names) const {
    std::vector<std::string> r;
    for (const auto& n : names) r.push_back(ours(n.get<std::string>()));
    return r;
  }

  int curve_id(const std::string& golden_name) {
    std::string name = ours(golden_name);
    int c = analysis().tree.find_curve(name);
    if (c < 0) throw std::invalid_argument("no curve " + name);
    return c;
  }

  void check(const std::string& key, const Json& v) {
    if (key == "degree") return add(key, v, F().degree);
    if (key == "line_at_infinity_invariant") return add(key, v, line_at_infinity_invariant(F()));
    if (key == "singular_count" || key == "singular_at_infinity" || key == "mu") {
      int n = 0, inf = 0;
      std::vector<long> mus;
      for (const auto& s : locus().entries) {
        n += s.point.conjugates();
        if (s.point.at_infinity()) inf += s.point.conjugates();
        for (int k = 0; k < s.point.conjugates(); ++k) mus.push_back(s.record.mu);
      }
      std::sort(mus.begin(), mus.end());
      if (key == "mu") {
        std::vector<long> want = v.get<std::vector<long>>();
        std::sort(want.begin(), want.end());
        return add(key, Json(want), Json(mus));
      }
      return add(key, v, key == "singular_count" ? n : inf);
    }
    if (key == "singular") {
      for (const auto& spec : v) {
        int n = 0;
        for (const auto& s : locus().entries)
          if (record_matches(spec, s.record) && (!spec.contains("at") || same_point(spec["at"], s.point)))
            n += s.point.conjugates();
        add(spec_label("singular", spec), spec.value("count", 1), n);
      }
      return;
    }
    if (key == "leaves") {
      const auto& t = analysis().tree;
      for (const auto& spec : v) {
        int on = spec.contains("curve") ? curve_id(spec["curve"]) : -1;
        int strong = spec.contains("strong") ? curve_id(spec["strong"]) : -1;
        int n = 0;
        for (const auto& l : t.leaves) {
          if (!record_matches(spec, l.record)) continue;
          if (on >= 0 && std::none_of(l.curves.begin(), l.curves.end(), [&](const auto& c) { return c.curve == on; }))
            continue;
          if (strong >= 0 && !strong_along(l, strong)) continue;
          if (spec.contains("at") && !(l.base && same_point(spec["at"], *l.base))) continue;
          n += l.conjugates();
        }
        add(spec_label("leaves", spec), spec.value("count", 1), n);
      }
      return;
    }
    if (key == "curve_invariant") {
      for (const auto& [name, inv] : v.items())
        add("curve_invariant[" + name + "]", inv, analysis().tree.curves[static_cast<size_t>(curve_id(name))].invariant);
      return;
    }
    if (key == "blowups") {
      int n = 0;
      for (const auto& c : analysis().tree.centers) n += c.conjugates();
      return add(key, v, n);
    }
    if (key == "ell_sequence") return add(key, v, analysis().tree.ell_sequence());
    if (key == "dicritical") {
      const auto& cs = analysis().tree.centers;
      return add(key, v, std::any_of(cs.begin(), cs.end(), [](const auto& c) { return c.dicritical; }));
    }
    if (key == "contracted") {
      auto want = ours(v);
      auto got = analysis().contracted;
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      return add(key, Json(want), Json(got));
    }
    if (key == "model_saddle_nodes_on") {
      const auto& m = analysis().model;
      for (const auto& [name, want] : v.items()) {
        int c = m.find_curve(ours(name)), n = 0;
        if (c < 0) throw std::invalid_argument("no curve " + name);
        for (int p : m.points_on(c))
          if (m.points[static_cast<size_t>(p)].record.type == SingularityType::SaddleNode)
            n += m.points[static_cast<size_t>(p)].conjugates();
        add("model_saddle_nodes_on[" + name + "]", want, n);
      }
      return;
    }
    if (key == "f_chain_count") return add(key, v, analysis().chains.size());
    if (key == "f_chains") {
      // each chain up to reversal, the list up to order
      auto canon = [](std::vector<std::string> c) {
        std::vector<std::string> r(c.rbegin(), c.rend());
        return std::min(c, r);
      };
      std::vector<std::vector<std::string>> want, got;
      for (const auto& c : v) want.push_back(canon(ours(c)));
      const auto& a = analysis();
      for (const auto& ch : a.chains) {
        std::vector<std::string> names;
        for (int c : ch.curves) names.push_back(a.model.curves[static_cast<size_t>(c)].name);
        got.push_back(canon(names));
      }
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      return add(key, Json(want), Json(got));
    }
    if (key == "alpha") {
      const auto& a = analysis();
      Json got = Json::object();
      for (size_t i = 0; i < a.zariski.support.size(); ++i)
        got[a.model.curves[static_cast<size_t>(a.zariski.support[i])].name] = rational_json(a.zariski.alpha[i]);
      Json want = Json::object();
      for (const auto& [name, a] : v.items()) want[ours(name)] = a;
      return add(key, want, got);
    }
    if (key == "TT") return add(key, v, rational_json(analysis().zariski.TT));
    if (key == "NN") return add(key, v, rational_json(analysis().zariski.NN));
    if (key == "PP") return add(key, v, rational_json(analysis().zariski.PP));
    if (key == "riccati_m") {
      std::vector<int> got;
      if (analysis().riccati)
        for (const auto& f : analysis().riccati->fibers)
          if (f.type != FiberType::Transverse) got.push_back(f.m);
      std::sort(got.begin(), got.end());
      return add(key, v, got);
    }
    if (key == "riccati_degree") {
      const auto& d = analysis().riccati_degree;
      return add(key, v, d ? Json(rational_json(*d)) : Json(nullptr));
    }
    if (key == "kappa") return add(key, v, to_string(analysis().kodaira.value));
    if (key == "kodaira_rule") return add(key, v, analysis().kodaira.rule);
    if (key == "tangency_identity") {
      Poly got = tangency_identity_check(w(), poly(v.at("curve")));
      Poly want = poly(v.at("value"));
      return add(key, want.to_string(), got.to_string(), got == want);
    }
    if (key == "transversal_lines") {
      for (const auto& s : v)
        add("complete_transversality[" + s["line"].get<std::string>() + "]", s["complete"],
            complete_transversality(w(), line(s["line"])));
      return;
    }
    if (key == "affine_tangency") {
      for (const auto& s : v)
        add("affine_tangency[" + s["line"].get<std::string>() + "]", s["total"],
            affine_tangency(w(), line(s["line"])).affine_total);
      return;
    }
    if (key == "darboux") {
      auto r = invariant_curves_up_to_degree(w(), v.at("max_degree").get<int>());
      std::vector<std::string> want, got;
      for (const auto& c : v.at("curves")) want.push_back(normalize_monic(poly(c)).to_string());
      for (const auto& c : r.curves) got.push_back(normalize_monic(c.curve).to_string());
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      add("darboux[d=" + v["max_degree"].dump() + "]", Json(want), Json(got));
      if (v.contains("complete")) add("darboux_complete", v["complete"], r.complete());
      return;
    }
    if (key == "certificate") {
      auto c = simplicity_certificate(w().field_x(), w().field_y(), v.at("degree").get<int>());
      return add("certificate[d=" + v["degree"].dump() + "]", v.at("valid"), c.valid());
    }
    if (key == "symmetries") {
      for (const auto& s : v) {
        PolynomialMap R = map(s.at("map"));
        AffineOneForm target = s.contains("form") ? form_of(s["form"]) : w();
        auto sv = check_symmetry(R, target);
        std::string tag = "symmetry[" + s["map"].get<std::string>() + "]";
        add(tag + ".preserves", s.value("preserves", true), sv.preserves);
        if (s.contains("c")) {
          FElem want = poly(s["c"]).constant_term();
          add(tag + ".c", want.to_string(), sv.c ? sv.c->to_string() : "none", sv.c && *sv.c == want);
        }
        if (s.contains("isotropy")) add(tag + ".isotropy", s["isotropy"], sv.isotropy);
        if (s.contains("order")) {
          auto o = map_order(R, 64);
          add(tag + ".order", s["order"], o ? Json(*o) : Json("exceeds cap"));
        }
      }
      return;
    }
    if (key == "equivalences") {
      for (const auto& s : v) {
        AffineOneForm src = s.contains("source") ? form_of(s["source"]) : w();
        AffineOneForm dst = s.contains("target") ? form_of(s["target"]) : w();
        auto ev = verify_equivalence(map(s.at("map")), src, dst);
        add("equivalence[" + s["map"].get<std::string>() + "]", s.value("equivalent", true), ev.equivalent);
      }
      return;
    }
    if (key == "gamma") {
      FElem xi = poly(v.at("xi")).constant_term();
      auto g = build_gamma(xi, v.at("n").get<int>(), poly(v.at("tau")), form_of(v.at("base")));
      PolynomialMap want = map(v.at("gamma"));
      add("gamma.map", want.to_string(), g.gamma.to_string(), g.gamma == want);
      if (v.contains("order")) add("gamma.order", v["order"], g.order);
      if (v.contains("degree")) add("gamma.degree", v["degree"], g.degree);
      if (v.value("transformed_is_entry", false))
        add("gamma.transformed", "entry form", g.transformed.to_string(),
            verify_equivalence(PolynomialMap::identity(), g.transformed, w()).equivalent);
      return;
    }
    throw std::invalid_argument("unknown corpus key '" + key + "'");
  }

  const CorpusEntry& e_;
  const Json& d_;
  ExtensionPtr field_;
  std::map<std::string, std::string> names_;
  std::optional<AffineOneForm> w_;
  std::optional<ProjectiveFoliation> F_;
  std::optional<SingularLocus> locus_;
  std::optional<BirationalAnalysis> analysis_;
  std::vector<CorpusRow> rows_;
};

}  // namespace

std::vector<CorpusRow> run_corpus_entry(const CorpusEntry& e) {
  try {
    return Runner(e).run();
  } catch (const std::exception& err) {
    return {{e.id, "load", "valid entry", std::string("error: ") + err.what(), false}};
  }
}

std::vector<CorpusRow> run_corpus(const std::string& id, const std::string& dir) {
  auto entries = load_corpus(dir);
  if (!id.empty()) {
    auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.id == id; });
    if (it == entries.end()) throw std::invalid_argument("unknown corpus id '" + id + "'");
    entries = {*it};
  }
  std::vector<std::future<std::vector<CorpusRow>>> jobs;
  for (const auto& e : entries) jobs.push_back(std::async(std::launch::async, run_corpus_entry, std::cref(e)));
  std::vector<CorpusRow> rows;
  for (auto& j : jobs) {
    auto r = j.get();
    rows.insert(rows.end(), r.begin(), r.end());
  }
  return rows;
}

}  // namespace fol
