#include "monotoric/face_lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace monotoric {

namespace {

std::vector<int> intersectSorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

int affineDimOfVertexSet(const std::vector<RatVec>& verts, const std::vector<int>& vs) {
  if (vs.empty()) return -1;
  if (vs.size() == 1) return 0;
  RatMat diff(static_cast<Index>(vs.size()) - 1, verts[0].size());
  for (size_t i = 1; i < vs.size(); ++i) {
    diff.row(static_cast<Index>(i - 1)) =
        (verts[static_cast<size_t>(vs[i])] - verts[static_cast<size_t>(vs[0])]).transpose();
  }
  return static_cast<int>(rank(diff));
}

}  // namespace

bool FaceLattice::faceLeq(int a, int b) const {
  return std::includes(faces[static_cast<size_t>(b)].begin(), faces[static_cast<size_t>(b)].end(),
                       faces[static_cast<size_t>(a)].begin(), faces[static_cast<size_t>(a)].end());
}

FaceLattice faceLattice(const Polyhedron& P) {
  FaceLattice L;
  L.vertices = P.vertices();  // throws when unbounded
  const int n = P.dim();
  if (L.vertices.empty()) throw InputError("faceLattice: empty polytope");
  if (n > 4) throw UnsupportedError("faceLattice: dimension > 4 not supported");
  std::vector<int> all(L.vertices.size());
  for (size_t i = 0; i < L.vertices.size(); ++i) all[i] = static_cast<int>(i);
  if (affineDimOfVertexSet(L.vertices, all) != n) {
    throw InputError("faceLattice: polytope must be full-dimensional");
  }

  Polyhedron irr = P.withoutRedundancies();
  L.facetInequalities = irr.inequalities();

  // facet vertex sets
  std::set<std::vector<int>> faceSet;
  std::vector<std::vector<int>> facetVerts;
  for (const auto& h : L.facetInequalities) {
    std::vector<int> vs;
    for (size_t i = 0; i < L.vertices.size(); ++i) {
      if (h.normal.dot(L.vertices[i]) == h.offset) vs.push_back(static_cast<int>(i));
    }
    facetVerts.push_back(vs);
    faceSet.insert(vs);
  }
  // close under intersection
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur(faceSet.begin(), faceSet.end());
    for (size_t i = 0; i < cur.size(); ++i) {
      for (size_t j = i + 1; j < cur.size(); ++j) {
        std::vector<int> is = intersectSorted(cur[i], cur[j]);
        if (!is.empty() && faceSet.insert(is).second) grew = true;
      }
    }
  }
  faceSet.insert(all);

  L.faces.assign(faceSet.begin(), faceSet.end());
  std::stable_sort(L.faces.begin(), L.faces.end(), [&](const auto& a, const auto& b) {
    int da = affineDimOfVertexSet(L.vertices, a);
    int db = affineDimOfVertexSet(L.vertices, b);
    if (da != db) return da < db;
    return a < b;
  });
  L.faceDims.resize(L.faces.size());
  for (size_t i = 0; i < L.faces.size(); ++i) {
    L.faceDims[i] = affineDimOfVertexSet(L.vertices, L.faces[i]);
  }
  L.top = static_cast<int>(L.faces.size()) - 1;

  std::map<std::vector<int>, int> faceIdx;
  for (size_t i = 0; i < L.faces.size(); ++i) faceIdx[L.faces[i]] = static_cast<int>(i);
  L.facetFaceIdx.resize(facetVerts.size());
  for (size_t i = 0; i < facetVerts.size(); ++i) {
    L.facetFaceIdx[i] = faceIdx.at(facetVerts[i]);
  }
  return L;
}

long SimplicialComplex::eulerCharacteristic() const {
  long chi = 0;
  long sign = 1;
  for (const auto& level : simplices) {
    chi += sign * static_cast<long>(level.size());
    sign = -sign;
  }
  return chi;
}

CochainComplex SimplicialComplex::cochain() const {
  std::vector<std::vector<char>> keep(simplices.size());
  for (size_t k = 0; k < simplices.size(); ++k) keep[k].assign(simplices[k].size(), 1);
  return relativeCochain(keep);
}

CochainComplex SimplicialComplex::relativeCochain(const std::vector<std::vector<char>>& keep) const {
  CochainComplex C;
  C.minDegree = 0;
  const size_t levels = simplices.size();
  std::vector<std::map<std::vector<int>, Index>> index(levels);
  C.dims.assign(levels, 0);
  for (size_t k = 0; k < levels; ++k) {
    Index d = 0;
    for (size_t s = 0; s < simplices[k].size(); ++s) {
      if (keep[k][s]) index[k][simplices[k][s]] = d++;
    }
    C.dims[k] = d;
  }
  if (levels == 0) {
    C.dims = {0};
    return C;
  }
  for (size_t k = 0; k + 1 < levels; ++k) {
    RatMat m = RatMat::Constant(C.dims[k + 1], C.dims[k], Rational(0));
    for (size_t s = 0; s < simplices[k + 1].size(); ++s) {
      if (!keep[k + 1][s]) continue;
      const auto& simp = simplices[k + 1][s];
      Index row = index[k + 1].at(simp);
      int sign = 1;
      for (size_t drop = 0; drop < simp.size(); ++drop) {
        std::vector<int> sub;
        sub.reserve(simp.size() - 1);
        for (size_t t = 0; t < simp.size(); ++t) {
          if (t != drop) sub.push_back(simp[t]);
        }
        auto it = index[k].find(sub);
        if (it != index[k].end()) m(row, it->second) += Rational(sign);
        sign = -sign;
      }
    }
    C.d.push_back(std::move(m));
  }
  return C;
}

SimplicialComplex orderComplex(const FaceLattice& L, bool includeTop) {
  SimplicialComplex K;
  int nf = includeTop ? static_cast<int>(L.faces.size()) : L.numProperFaces();
  K.numVertices = nf;
  // containment DAG (strict)
  std::vector<std::vector<int>> above(static_cast<size_t>(nf));
  for (int a = 0; a < nf; ++a) {
    for (int b = 0; b < nf; ++b) {
      if (a != b && L.faceDims[static_cast<size_t>(a)] < L.faceDims[static_cast<size_t>(b)] &&
          L.faceLeq(a, b)) {
        above[static_cast<size_t>(a)].push_back(b);
      }
    }
  }
  std::vector<int> chain;
  std::function<void(int)> extend = [&](int last) {
    size_t len = chain.size();
    if (K.simplices.size() < len) K.simplices.resize(len);
    K.simplices[len - 1].push_back(chain);
    for (int nxt : above[static_cast<size_t>(last)]) {
      chain.push_back(nxt);
      extend(nxt);
      chain.pop_back();
    }
  };
  for (int f = 0; f < nf; ++f) {
    chain = {f};
    extend(f);
  }
  for (auto& level : K.simplices) std::sort(level.begin(), level.end());
  return K;
}

SimplicialComplex barycentricBoundary(const Polyhedron& P) {
  return orderComplex(faceLattice(P), /*includeTop=*/false);
}

}  // namespace monotoric
