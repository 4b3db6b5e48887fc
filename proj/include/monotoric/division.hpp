#pragma once

#include <optional>
#include <vector>

#include "monotoric/fan.hpp"
#include "monotoric/polyhedron.hpp"
#include "monotoric/types.hpp"

namespace monotoric {

// A monomial division: per-monomial exponent k_alpha > 0, log-coefficient
// lc_alpha (standing for log|c_alpha|) and a nonnegative additive slack s on
// the log scale. The region of alpha is
//   C_alpha = { u : k_a(<u,a> + lc_a) >= k_b(<u,b> + lc_b) - s  for all b }.
struct MonomialDivision {
  std::vector<IntVec> rays;  // the monomial exponent set A
  std::vector<Rational> k;
  std::vector<Rational> logc;
  Rational slack;

  int dim() const { return rays.empty() ? 0 : static_cast<int>(rays[0].size()); }
  int numRays() const { return static_cast<int>(rays.size()); }
  void validate() const;

  static MonomialDivision tropical(const std::vector<IntVec>& rays, Rational slack = Rational(0));
};

// The region C_alpha as a rational polyhedron (a cone when all lc = 0, s = 0).
Polyhedron region(const MonomialDivision& div, int alphaIdx);

struct AdaptednessWitness {
  int rayIdx;        // monomial alpha whose region escapes
  int coneIdx;       // maximal cone of the fan not containing alpha
  IntVec direction;  // a recession direction of C_alpha inside the cone
};

struct AdaptednessReport {
  bool adapted = false;
  std::vector<AdaptednessWitness> witnesses;
};

// Decision procedure: adapted iff for every monomial alpha and every maximal
// cone sigma with alpha not in sigma, C_alpha ∩ sigma is bounded. See
// docs/adaptedness.md for why this matches the open-star formulation on
// complete fans. The division's monomial set may differ from the fan's rays
// (membership of alpha in sigma is tested as a point).
AdaptednessReport isAdapted(const MonomialDivision& div, const Fan& F);

// 2D construction with k_alpha ~ 1/|alpha| rationalized at precision 2^-20,
// refined to 2^-60 when the first rung fails adaptedness; a failure at the
// second rung is a hard construction error.
MonomialDivision exponents2d(const Fan& F);

// k_alpha = 1/h_alpha from the facet offsets of an ample polytope shifted so
// the vertex barycenter sits at the origin. Callers still need isAdapted:
// the construction is only automatic in the PL moment model.
MonomialDivision exponentsFromAmple(const Fan& F, const ToricDivisor& D);

// Rescales exponents so all log-coefficients vanish while adaptedness is
// preserved (asserted): K_alpha = 1 / (B/k_alpha - lc_alpha).
MonomialDivision normalizeCoefficients(const MonomialDivision& div, const Fan& F,
                                       std::optional<Rational> B = std::nullopt);

// Per-ray union of cones nudged slightly inside the star: in the cone
// spanned by sigma's rays, every generator rho != alpha moves to
// (1-t)rho + t*alpha. Supports containment queries only.
class CombinatorialDivision {
 public:
  CombinatorialDivision(const Fan& F, Rational t);
  bool contains(int rayIdx, const RatVec& v) const;
  const std::vector<RatMat>& pieces(int rayIdx) const {
    return pieces_[static_cast<size_t>(rayIdx)];
  }
  Rational t() const { return t_; }

 private:
  Rational t_;
  int dim_;
  std::vector<std::vector<RatMat>> pieces_;       // per ray, generator matrices
  std::vector<std::vector<RatMat>> pieceCoords_;  // barycentric functionals
};

// PL certificate that an ample polytope realizes an adapted division in the
// radial/moment model: verified normal fan, facet heights, exponents 1/h.
struct MetricCertificate {
  ToricDivisor divisor;
  RatVec interiorShift;            // vertex barycenter of the polytope
  std::vector<Rational> heights;   // h_alpha > 0 per ray
  std::vector<Rational> exponents; // 1/h_alpha
  bool normalFanIsFan = false;
};

MetricCertificate certifyAdaptedMetric(const Fan& F, const ToricDivisor& D);

}  // namespace monotoric
