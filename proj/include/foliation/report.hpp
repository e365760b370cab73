#pragma once

#include <json.hpp>
#include <string>

#include "foliation/birational.hpp"
#include "foliation/darboux.hpp"
#include "foliation/parse.hpp"

namespace fol {

using Json = nlohmann::json;

inline constexpr int kReportSchema = 1;

struct ReportOptions {
  ReductionOptions reduction;
  /// Degree bound of the simplicity certificate; 0 skips it, -1 uses deg + 2.
  int certificate_degree = -1;
  bool timing = false;  // wall-clock timings break byte stability
};

std::string rational_json(const Rational& q);
Json to_json(const SingularityRecord& r);
Json to_json(const SingularLocus& s);
Json to_json(const ReductionTree& t);
Json to_json(const Configuration& c);
Json to_json(const ZariskiDecomposition& z, const Configuration& c);
Json to_json(const RiccatiStructure& r);
Json to_json(const KodairaVerdict& k);
Json to_json(const DarbouxResult& r);
Json to_json(const SimplicityCertificate& c);
Json to_json(const SymmetryVerdict& v);

/// Full pipeline on a form or derivation.
Json analysis_report(const InputExpression& in, const ReportOptions& opts = {});

/// Graphviz text: one record node per curve, "name (self-int) [inv|noninv]",
/// with one port per singular point; an edge per intersecting pair.
std::string export_dot(const ReductionTree& tree);

}  // namespace fol
