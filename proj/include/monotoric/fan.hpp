#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monotoric/polyhedron.hpp"
#include "monotoric/types.hpp"

namespace monotoric {

struct FanFlags {
  bool complete = false;
  bool simplicial = false;
  bool smooth = false;
};

// A rational fan given by primitive ray generators and maximal cones (ray
// index sets). Construction validates the fan axioms; geometric queries are
// exact. Immutable after construction.
class Fan {
 public:
  static Fan create(std::vector<IntVec> rays, std::vector<std::vector<int>> maxCones);

  int dim() const { return dim_; }
  int numRays() const { return static_cast<int>(rays_.size()); }
  const IntVec& ray(int i) const { return rays_[static_cast<size_t>(i)]; }
  const std::vector<IntVec>& rays() const { return rays_; }
  const std::vector<std::vector<int>>& maxCones() const { return cones_; }
  const FanFlags& flags() const { return flags_; }

  int rayIndex(const IntVec& a) const;  // -1 when absent
  bool coneHasRay(int cone, int rayIdx) const;

  // H-representation of a maximal cone (simplicial; full-dimensional cones
  // get the barycentric-coordinate rows, lower-dimensional ones also carry
  // the spanning equations).
  const Polyhedron& conePolyhedron(int cone) const { return conePoly_[static_cast<size_t>(cone)]; }
  bool coneContains(int cone, const RatVec& v) const;

  // Ray indices of the minimal cone containing v, or nullopt when v lies
  // outside the support of the fan.
  std::optional<std::vector<int>> minimalConeRays(const RatVec& v) const;

  // Maximal cones containing the given ray.
  std::vector<int> star(int rayIdx) const;

  enum class StarMembership { interior, boundary, outside };
  StarMembership starMembership(int rayIdx, const RatVec& v) const;

 private:
  Fan() = default;
  int dim_ = 0;
  std::vector<IntVec> rays_;
  std::vector<std::vector<int>> cones_;
  std::vector<Polyhedron> conePoly_;
  std::vector<RatMat> coneCoords_;  // barycentric coordinate functionals per cone
  FanFlags flags_;

  void buildGeometry();
  void validateStructure();
  void computeFlags();
};

// Integer coefficients n_alpha per ray of an associated fan.
struct ToricDivisor {
  std::vector<long> coeffs;

  long coeff(int i) const { return coeffs[static_cast<size_t>(i)]; }
  ToricDivisor operator+(const ToricDivisor& o) const;
  ToricDivisor operator-(const ToricDivisor& o) const;
  ToricDivisor operator-() const;
  ToricDivisor operator*(long k) const;
  bool operator==(const ToricDivisor& o) const { return coeffs == o.coeffs; }
  bool isEffective() const;
  static ToricDivisor zero(int numRays) { return ToricDivisor{std::vector<long>(static_cast<size_t>(numRays), 0)}; }
  static ToricDivisor ray(int numRays, int i, long n = 1);
};

// Per-maximal-cone linear parts m_sigma with m_sigma . alpha = -n_alpha.
struct SupportFunction {
  std::vector<RatVec> linearParts;

  Rational eval(const Fan& F, const RatVec& v) const;  // on the cone containing v
};

FanFlags validateFan(const Fan& F);  // flags are computed at creation; re-exposed for reports

SupportFunction supportFunction(const Fan& F, const ToricDivisor& D);

// {u : <u, alpha> >= -n_alpha for all rays}; may be empty or lower-dimensional.
Polyhedron divisorPolytope(const Fan& F, const ToricDivisor& D);

// Strict concavity of the support function across every wall.
bool isAmple(const Fan& F, const ToricDivisor& D);

// conv{ m_sigma }; equals divisorPolytope(D) for ample D.
Polyhedron gradientHull(const Fan& F, const ToricDivisor& D);

// Is delta(alpha) = <m, alpha> for some integral m? (difference of divisors
// is principal). Used for Pic equality and section isotopy.
bool characterEquivalent(const Fan& F, const std::vector<long>& delta);

bool picClassEq(const Fan& F, const ToricDivisor& D0, const ToricDivisor& D1);
int picRank(const Fan& F);

}  // namespace monotoric
