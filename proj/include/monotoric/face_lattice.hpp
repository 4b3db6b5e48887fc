#pragma once

#include <vector>

#include "monotoric/cochain.hpp"
#include "monotoric/polyhedron.hpp"
#include "monotoric/types.hpp"

namespace monotoric {

// The face poset of a bounded full-dimensional polytope, faces recorded as
// sorted vertex-index sets. Faces are ordered by (dimension, lexicographic
// vertex set); the top face (the polytope itself) is last.
struct FaceLattice {
  std::vector<RatVec> vertices;
  std::vector<HalfSpace> facetInequalities;    // irredundant, one per facet
  std::vector<std::vector<int>> faces;  // vertex-index sets, sorted
  std::vector<int> faceDims;
  std::vector<int> facetFaceIdx;  // facet i -> face index
  int top = -1;

  int numProperFaces() const { return static_cast<int>(faces.size()) - 1; }
  bool faceLeq(int a, int b) const;  // face a contained in face b
};

// Builds the face lattice; requires bounded and full-dimensional, dim <= 4.
FaceLattice faceLattice(const Polyhedron& P);

// An abstract simplicial complex: simplices grouped by dimension, each a
// sorted tuple of vertex ids; tuples sorted lexicographically per dimension.
struct SimplicialComplex {
  int numVertices = 0;
  std::vector<std::vector<std::vector<int>>> simplices;

  long eulerCharacteristic() const;
  // Simplicial cochain complex over Q with the standard coboundary signs.
  CochainComplex cochain() const;
  // Relative cochain complex C(K, A) where A = simplices with keepSimplex
  // false; keepSimplex must be closed under taking cofaces' faces being
  // dropped (i.e. dropped simplices form a subcomplex).
  CochainComplex relativeCochain(const std::vector<std::vector<char>>& keep) const;
};

// Order complex of a collection of poset elements: vertices are face ids,
// simplices are chains under strict containment.
SimplicialComplex orderComplex(const FaceLattice& L, bool includeTop);

// Triangulated boundary of P: order complex of the proper faces.
SimplicialComplex barycentricBoundary(const Polyhedron& P);

}  // namespace monotoric
