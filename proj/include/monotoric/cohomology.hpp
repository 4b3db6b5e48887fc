#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "monotoric/face_lattice.hpp"
#include "monotoric/fan.hpp"
#include "monotoric/sections.hpp"
#include "monotoric/types.hpp"

namespace monotoric {

// Candidate weights for nonvanishing cohomology of O(D): lattice points of
// conv{m_sigma} with every facet offset relaxed by one lattice unit. The
// shell (the relaxation layer) must compute to zero downstream; a nonzero
// shell weight is raised as a bound violation, never silently dropped.
struct WeightSupport {
  std::vector<IntVec> candidates;  // includes the shell
  std::vector<IntVec> shell;
};

WeightSupport weightSupport(const Fan& F, const ToricDivisor& D);

// Facets of the reference polytope whose pairing is strictly negative:
// F_alpha selected iff <m, alpha> + n_alpha < 0 (ties excluded).
struct PositiveBoundary {
  std::vector<int> facetRays;
};

PositiveBoundary positiveBoundary(const Fan& F, const ToricDivisor& D, const IntVec& m);

using BettiVec = std::vector<long>;  // index = degree, 0..n

enum class Model { cech, polytope, points, all };

// The underlying cochain complex of one weight in one model, with labeled
// basis (cone tuples resp. face chains) and its Betti numbers.
struct WeightComplex {
  IntVec weight;
  Model model = Model::cech;
  CochainComplex complex;
  BettiVec betti;
};

Model modelFromString(const std::string& s);
std::string modelName(Model m);

// Graded dimensions of a morphism space, weight by weight. Only weights
// with some nonzero Betti number are stored.
struct GradedHom {
  int degreeRange = 0;  // degrees run 0..degreeRange
  std::map<std::vector<long>, BettiVec> dims;

  long total(int degree) const;
  long totalAll() const;
  bool operator==(const GradedHom& o) const { return dims == o.dims; }
};

struct ModelMismatch {
  IntVec weight;
  BettiVec cech;
  BettiVec polytope;
};

// Per-fan cohomology engine. Both cochain models factor through the bitmask
// of satisfied ray conditions <m,alpha> >= -n_alpha, so Betti vectors are
// cached per mask; per-weight work is mask assembly plus a lookup. Weight
// lists are evaluated concurrently with deterministic aggregation order.
class CohomologyEngine {
 public:
  explicit CohomologyEngine(const Fan& F);

  const Fan& fan() const { return fan_; }

  BettiVec weightBetti(const ToricDivisor& D, const IntVec& m, Model model);

  // The labeled cochain complex behind a single weight (cech or polytope).
  WeightComplex weightComplex(const ToricDivisor& D, const IntVec& m, Model model);

  // Assembles Betti data over weightSupport(D) with the shell check.
  // Model::all runs Cech and polytope models and demands exact agreement,
  // throwing ComputationError with offender details otherwise.
  GradedHom divisorCohomology(const ToricDivisor& D, Model model);

  GradedHom hom(const SectionClass& from, const SectionClass& to, Model model);

  // The auto-selected ample reference divisor backing the polytope model.
  const ToricDivisor& referenceAmple();

  // Overrides the small-coefficient search with a known ample divisor;
  // must be called before the first polytope-model computation.
  void setReferenceAmple(const ToricDivisor& D);

 private:
  using Mask = std::uint64_t;
  Mask rayMask(const ToricDivisor& D, const IntVec& m) const;

  BettiVec cechBettiForMask(Mask mask);
  BettiVec polytopeBettiForMask(Mask mask);
  CochainComplex buildPolytopeComplex(Mask mask, bool withLabels);
  BettiVec pointsBetti(const ToricDivisor& D, const IntVec& m) const;

  void buildReference();

  const Fan& fan_;
  std::map<Mask, BettiVec> cechCache_;
  std::map<Mask, BettiVec> polyCache_;

  bool refBuilt_ = false;
  std::optional<ToricDivisor> refOverride_;
  ToricDivisor refAmple_;
  SimplicialComplex refComplex_;                  // order complex incl. the top face
  std::vector<std::vector<Mask>> simplexFacetBits_;  // per level, facet-membership bits of max face
};

bool monodromyInvarianceCheck(CohomologyEngine& eng, const ToricDivisor& twist,
                              const SectionClass& nu0, const SectionClass& nu1, Model model);

// Graded pieces R_k = kP ∩ Z^n for an ample divisor, with the weight-sum
// product (every structure constant +1). Closure is asserted on
// construction and associativity on deterministic random triples.
struct SectionRing {
  ToricDivisor divisor;
  int kmax = 0;
  std::vector<std::vector<IntVec>> graded;

  std::vector<long> dims() const;
  // index of p+q inside graded[kp + kq]; throws on closure failure
  long productIndex(int kp, long ip, int kq, long iq) const;
  long indexOf(int k, const IntVec& w) const;  // -1 when absent
};

SectionRing sectionRing(const Fan& F, const ToricDivisor& D, int kmax);

// The degree-0 action of multiplication by the defining section of s.divisor:
// weight-preserving inclusion P(D_diff) ∩ Z^n into P(D_diff + D) ∩ Z^n.
struct SectionActionReport {
  std::vector<IntVec> sourceWeights;
  std::vector<IntVec> targetWeights;
  bool injective = false;
  bool weightsPreserved = false;
};

SectionActionReport applyDefiningSection(const Fan& F, const DefiningSection& s,
                                         const SectionClass& nu0, const SectionClass& nu1);

// Localization along an effective cut: per weight in the box, the colimit of
// H^0(O(bundle + k cut)) under multiplication by the cut's defining section,
// its stabilization index, and the Cech H^0 of the bundle on the subfan of
// cones avoiding the cut's support.
struct LocalizationResult {
  std::vector<IntVec> weights;
  std::vector<int> stabilizedDim;       // 0 or 1
  std::vector<long> stabilizationIndex; // smallest k after which the dimension is constant
  std::vector<int> subfanCech;          // cross-check values
  bool crossCheckOk = false;
};

LocalizationResult localize(const Fan& F, const ToricDivisor& cut, const ToricDivisor& bundle,
                            const std::vector<std::pair<long, long>>& box);

}  // namespace monotoric
