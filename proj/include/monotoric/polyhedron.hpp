#pragma once

#include <optional>
#include <vector>

#include "monotoric/linalg.hpp"
#include "monotoric/types.hpp"

namespace monotoric {

// One linear condition normal·u >= offset (or > when strict).
struct HalfSpace {
  RatVec normal;
  Rational offset;
  bool strict = false;
};

// A rational polyhedron in H-representation. All decision procedures are
// exact (Fourier-Motzkin elimination with strictness flags); nothing here
// touches floating point.
class Polyhedron {
 public:
  Polyhedron() : dim_(0) {}
  explicit Polyhedron(int dim) : dim_(dim) {}
  Polyhedron(int dim, std::vector<HalfSpace> ineqs);

  static Polyhedron wholeSpace(int dim) { return Polyhedron(dim); }
  // {u : normal·u >= offset} rows from matrix data.
  static Polyhedron fromRows(const RatMat& normals, const RatVec& offsets);

  int dim() const { return dim_; }
  const std::vector<HalfSpace>& inequalities() const { return ineqs_; }
  Index numInequalities() const { return static_cast<Index>(ineqs_.size()); }

  Polyhedron intersect(const Polyhedron& other) const;
  Polyhedron withConstraint(const HalfSpace& h) const;

  bool contains(const RatVec& u) const;
  bool containsStrictly(const RatVec& u) const;  // every inequality strict

  bool isEmpty() const;
  // Some rational point satisfying all constraints (strict ones strictly).
  std::optional<RatVec> feasiblePoint() const;

  // {u : normal·u >= 0 for every inequality}; strictness is dropped.
  Polyhedron recessionCone() const;
  // For cones (all offsets zero): is the cone exactly {0}?
  bool coneIsTrivial() const;
  std::optional<RatVec> coneNonzeroPoint() const;

  // Nonempty and recession cone = {0}. The empty set counts as bounded.
  bool isBounded() const;

  // Drops inequalities implied by the rest; exact, order-stable.
  Polyhedron withoutRedundancies() const;

  // Exact vertex set of a bounded polyhedron (lower-dimensional allowed),
  // sorted lexicographically. Throws ComputationError when unbounded.
  std::vector<RatVec> vertices() const;

  // All lattice points (strict = topological-interior points, i.e. every
  // inequality strict). Requires boundedness.
  std::vector<IntVec> latticePoints(bool strict = false) const;

  // Affine dimension (-1 for empty).
  int affineDim() const;

 private:
  int dim_;
  std::vector<HalfSpace> ineqs_;
};

// H-representation of the convex hull of finitely many rational points
// (dim <= 4 at the scales this library targets; brute-force facet search).
// Lower-dimensional hulls are cut out by paired inequalities.
Polyhedron hullOfPoints(const std::vector<RatVec>& points, int dim);

}  // namespace monotoric
