#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "foliation/blowup.hpp"

namespace fol {

/// Raised by contract_exceptional when a curve does not fit a supported rule.
class ContractionRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Curves and singular points on a blown-up plane, possibly after some
/// contractions. Contracted curves stay in the registry, flagged.
struct Configuration {
  Lattice lattice;
  std::vector<CurveRecord> curves;
  std::vector<LeafPoint> points;
  std::vector<bool> contracted;     // per curve
  std::vector<bool> point_removed;  // per point
  DivisorClass cotangent;
  std::vector<DivisorClass> contracted_classes;  // class of each contracted curve when it went
  std::vector<std::string> log;

  static Configuration from_tree(const ReductionTree& tree);

  bool alive(int curve) const { return !contracted.at(static_cast<size_t>(curve)); }
  int find_curve(const std::string& name) const;
  Rational self_intersection(int curve) const;
  Rational intersection(int a, int b) const;
  /// Live singular points on a curve, by index into `points`.
  std::vector<int> points_on(int curve) const;
  /// Number of singular points on a curve, counting conjugates.
  int z_count(int curve) const;
  /// Live curves through a point.
  std::vector<int> curves_through(int point) const;
  /// Image of a class of the original surface after the recorded contractions.
  DivisorClass push_forward(DivisorClass d) const;
};

/// (d - 1) H + sum c_i E_i, with c_i = 1 - l_i at non-dicritical centers and
/// -l_i at dicritical ones.
DivisorClass cotangent_class(const ReductionTree& tree);

/// Contracts an invariant rational (-1)-curve whose only singularity is a
/// non-degenerate point with eigenvalue ratio -1. Classes are pushed forward
/// by D -> D + (D.C) C; the point disappears from every curve.
Configuration contract_exceptional(const Configuration& cfg, int curve);
/// Whether contract_exceptional would accept the curve; fills `why` otherwise.
bool contractible(const Configuration& cfg, int curve, std::string* why = nullptr);
/// Contracts accepted curves, lowest index first, until none is left.
Configuration contract_all(Configuration cfg);

struct FChain {
  std::vector<int> curves;  // ordered from the curve with one singularity
  std::vector<Rational> self_intersections;
};

std::vector<FChain> detect_f_chains(const Configuration& cfg);

struct ZariskiDecomposition {
  std::vector<int> support;      // curve ids, chain after chain
  std::vector<Rational> alpha;   // coefficients on `support`
  DivisorClass N, P;
  Rational PP, NN, TT;
  bool orthogonal = true;        // P . N_j = 0 for all j
  bool coefficients_in_range = true;  // 0 < alpha_j < 1
  bool valid() const { return orthogonal && coefficients_in_range; }
};

/// Solves M alpha = (T . N_j) on the union of the chains.
ZariskiDecomposition zariski_on_chains(const Configuration& cfg, const DivisorClass& T,
                                       const std::vector<FChain>& chains);

enum class FiberType { Transverse, D, E, Unclassified };
std::string to_string(FiberType t);

struct RiccatiFiber {
  std::string label;              // "u=c", "u=inf", or the factor of the base polynomial
  std::optional<Rational> position;  // rational base coordinate; nullopt at infinity or for factors
  QPoly factor;                   // irreducible factor of the base polynomial for finite fibers
  int conjugates = 1;
  int local_multiplicity = 0;     // m read from z^m dw + ... dz on the plane model
  FiberType type = FiberType::Unclassified;
  int m = 0;                      // multiplicity on the nef model
  std::vector<std::string> components;
  Rational contribution() const;
};

struct RiccatiStructure {
  std::array<Rational, 3> base_point;  // (x : y : z) of the pencil's base point
  Poly base;                           // affine base coordinate u (linear)
  Poly fiber_coordinate;               // complementary coordinate v
  AffineOneForm normal_form;           // the form in (u, v) as variables (x, y)
  std::vector<RiccatiFiber> fibers;
  std::string orientation() const;
};

/// Looks for a pencil of parallel lines u = c such that, in coordinates
/// (u, v), the dv coefficient depends on u alone and the du coefficient has
/// degree at most 2 in v. Pencils through (0:1:0), (1:0:0) and then the other
/// rational singular points at infinity are tried in this order.
std::optional<RiccatiStructure> riccati_detect(const AffineOneForm& w);

/// -2 + sum over fibers: m for type (d), (m + 1)/2 for type (e), 0 for
/// transverse types. Throws std::domain_error on an unclassified fiber.
Rational riccati_cotangent_degree(const RiccatiStructure& r);

enum class KodairaValue { MinusInfinity, Zero, One, Two, Undetermined };
std::string to_string(KodairaValue k);

struct KodairaVerdict {
  KodairaValue value = KodairaValue::Undetermined;
  std::string rule;  // R1 .. R4
  std::vector<std::string> certificates;
};

struct BirationalAnalysis {
  ReductionTree tree;
  Configuration reduced;     // straight from the tree
  Configuration model;       // after rule (a) contractions
  std::vector<std::string> contracted;
  std::vector<FChain> chains;
  ZariskiDecomposition zariski;
  std::optional<RiccatiStructure> riccati;
  std::optional<Rational> riccati_degree;
  std::optional<DivisorClass> fiber_class;       // on `model`
  std::optional<Rational> lattice_fiber_degree;  // P = k F on `model`
  KodairaVerdict kodaira;
};

BirationalAnalysis analyze_birational(const AffineOneForm& w, const ReductionOptions& opts = {});

/// Rules: R1 reduced on the plane with d >= 2; R2 Riccati sign; R3 P.P > 0;
/// R4 undetermined.
KodairaVerdict kodaira_classify(const BirationalAnalysis& a);

}  // namespace fol
