#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foliation/foliation.hpp"
#include "foliation/local.hpp"

namespace fol {

/// Coefficients on the basis H, E_1, ..., E_k (index 0 is H).
struct DivisorClass {
  std::vector<Rational> c;

  Rational operator[](size_t i) const { return i < c.size() ? c[i] : Rational(0); }
  Rational& at(size_t i);
  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass operator-(const DivisorClass& o) const;
  DivisorClass operator*(const Rational& k) const;
  bool operator==(const DivisorClass& o) const;
  bool is_zero() const;
  std::string to_string(const std::vector<std::string>& names = {}) const;
};

/// Intersection form of the blown-up plane: H^2 = 1, E_i^2 = -w_i, where w_i
/// is the number of conjugate points blown up at once.
struct Lattice {
  std::vector<int> weights;  // weights[i - 1] for E_i

  size_t rank() const { return weights.size() + 1; }
  DivisorClass H() const;
  DivisorClass E(size_t i) const;
  Rational dot(const DivisorClass& a, const DivisorClass& b) const;
};

struct ExceptionalPoint {
  int chart = 1;   // 1: coordinates (s, v) with E = {s = 0}; 2: (u, t) with E = {t = 0}
  FElem coordinate;  // v0 in chart 1, 0 for the origin of chart 2
  ExtensionPtr ext;
  Poly P, Q;  // form translated to the point
  SingularityRecord record;
  int conjugates() const { return ext ? ext->degree() : 1; }
};

/// Local blow-up of the origin for P ds + Q dt.
struct BlowupResult {
  int ell = 0;
  bool dicritical = false;
  int cleared = 0;  // power of the exceptional factor removed
  Poly P1, Q1;      // chart 1 (s, v): s = s, t = s v
  Poly P2, Q2;      // chart 2 (u, t): s = u t, t = t
  std::vector<ExceptionalPoint> points;
  std::vector<std::string> defects;
};

BlowupResult blowup_point(const Poly& P, const Poly& Q, const ClassifyOptions& opts = {});

/// Strict transform of a local curve h through the origin in chart 1 or 2,
/// together with the multiplicity that was divided out.
std::pair<Poly, int> strict_transform_local(const Poly& h, int chart);

enum class CurveKind { Exceptional, LineAtInfinity, User };

struct CurveRecord {
  std::string name;
  CurveKind kind = CurveKind::User;
  int exceptional_index = 0;  // i for E_i
  DivisorClass cls;
  bool invariant = false;
  int conjugates = 1;
  Poly equation;  // affine equation for user curves
  std::vector<int> singularities;  // indices into ReductionTree::leaves
};

struct CurveThrough {
  int curve = -1;
  Poly h;  // local equation at the point
};

struct BlowupCenter {
  int index = 0;             // the new curve is E_index
  std::string label;
  int parent = 0;            // index of the center whose exceptional curve carries this one, 0 on the plane
  std::optional<ProjectivePoint> base;
  ExtensionPtr ext;
  int ell = 0;
  bool dicritical = false;
  SingularityRecord record;
  std::vector<int> curves_through;  // curve ids through the center
  std::vector<int> multiplicities;  // multiplicity of each curve at the center
  long mu_after = 0;                // sum of mu over the new points (per conjugate)
  bool bookkeeping_ok = true;
  int conjugates() const { return ext ? ext->degree() : 1; }
};

struct LeafPoint {
  std::string label;
  int on_center = 0;  // exceptional curve it was found on (0 for points of the plane)
  std::optional<ProjectivePoint> base;
  ExtensionPtr ext;
  Poly P, Q;
  SingularityRecord record;
  std::vector<CurveThrough> curves;
  int conjugates() const { return ext ? ext->degree() : 1; }
};

enum class ReductionStatus { Complete, DepthExceeded, Unsupported };

struct ReductionOptions {
  int max_depth = 30;
  int max_blowups = 200;
  ClassifyOptions classify;
  /// Extra affine curves to follow through the reduction.
  std::vector<std::pair<std::string, Poly>> curves;
};

struct ReductionTree {
  ProjectiveFoliation foliation;
  Lattice lattice;
  std::vector<BlowupCenter> centers;
  std::vector<CurveRecord> curves;
  std::vector<LeafPoint> leaves;
  ReductionStatus status = ReductionStatus::Complete;
  std::vector<std::string> defects;

  std::vector<int> ell_sequence() const;
  int find_curve(const std::string& name) const;
  const CurveRecord& curve(const std::string& name) const;
  Rational self_intersection(int curve) const;
  Rational intersection(int a, int b) const;
  /// Leaves lying on a curve.
  std::vector<const LeafPoint*> points_on(int curve) const;
  bool all_reduced() const;
};

ReductionTree seidenberg_reduce(const ProjectiveFoliation& F, const ReductionOptions& opts = {});

/// Blows up one more leaf of an existing tree (reduced or not) and updates
/// the registry and the lattice.
void blowup_leaf(ReductionTree& tree, int leaf, const ClassifyOptions& opts = {});

/// Record of a curve on the final surface.
const CurveRecord& strict_transform(const ReductionTree& tree, const std::string& name);

std::string to_string(ReductionStatus s);

}  // namespace fol
