#include "monotoric/fan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace monotoric {

namespace {

mpz_class gcdOf(const IntVec& v) {
  mpz_class g = 0;
  for (Index i = 0; i < v.size(); ++i) g = gcd(g, mpz_class(v[i]));
  return g;
}

}  // namespace

Fan Fan::create(std::vector<IntVec> rays, std::vector<std::vector<int>> maxCones) {
  Fan F;
  if (rays.empty()) throw InputError("fan: no rays");
  F.dim_ = static_cast<int>(rays[0].size());
  F.rays_ = std::move(rays);
  F.cones_ = std::move(maxCones);
  for (const auto& r : F.rays_) {
    if (r.size() != F.dim_) throw InputError("fan: ray dimension mismatch");
    mpz_class g = gcdOf(r);
    if (g == 0) throw InputError("fan: zero ray");
    if (g != 1) throw InputError("fan: ray " + repr(r) + " is not primitive");
  }
  std::set<std::vector<long>> seen;
  for (const auto& r : F.rays_) {
    if (!seen.insert(toStd(r)).second) throw InputError("fan: duplicate ray " + repr(r));
  }
  for (auto& c : F.cones_) {
    std::sort(c.begin(), c.end());
    if (std::unique(c.begin(), c.end()) != c.end()) throw InputError("fan: repeated ray in cone");
    for (int i : c) {
      if (i < 0 || i >= F.numRays()) throw InputError("fan: cone ray index out of range");
    }
    if (c.empty()) throw InputError("fan: empty maximal cone");
  }
  F.buildGeometry();
  F.validateStructure();
  F.computeFlags();
  return F;
}

void Fan::buildGeometry() {
  conePoly_.reserve(cones_.size());
  coneCoords_.reserve(cones_.size());
  for (const auto& c : cones_) {
    RatMat R = raysAsColumns(rays_, c);  // dim x k
    Index k = R.cols();
    // Simplicial check happens later; here we only need independent columns
    // to produce barycentric coordinate functionals via a left inverse.
    RatMat Rt = R.transpose();
    Mat<Rational> gram = Rt * R;  // k x k
    // coordinates lambda(v) = gram^{ -1} R^T v when columns independent
    RatMat coords(k, dim_);
    bool independent = true;
    {
      RatMat aug(k, k + dim_);
      aug.leftCols(k) = gram;
      aug.rightCols(dim_) = Rt;
      std::vector<Index> piv = rowEchelon(aug);
      if (static_cast<Index>(piv.size()) < k) {
        independent = false;
      } else {
        coords = aug.rightCols(dim_);
      }
    }
    if (!independent) {
      // Non-simplicial cone: record an empty coordinate block; flags will
      // report simplicial = false and the geometric queries reject it.
      coneCoords_.push_back(RatMat(0, dim_));
      conePoly_.push_back(Polyhedron(dim_));
      continue;
    }
    coneCoords_.push_back(coords);
    std::vector<HalfSpace> hs;
    for (Index i = 0; i < k; ++i) {
      hs.push_back({RatVec(coords.row(i).transpose()), Rational(0), false});
    }
    // lower-dimensional cones also satisfy v = R lambda(v)
    if (k < dim_) {
      RatMat proj = RatMat::Identity(dim_, dim_) - R * coords;
      for (Index r = 0; r < dim_; ++r) {
        RatVec row = proj.row(r).transpose();
        bool nonzero = false;
        for (Index j = 0; j < dim_; ++j) nonzero = nonzero || !row[j].isZero();
        if (!nonzero) continue;
        hs.push_back({row, Rational(0), false});
        hs.push_back({(-row).eval(), Rational(0), false});
      }
    }
    conePoly_.push_back(Polyhedron(dim_, std::move(hs)));
  }
}

bool Fan::coneContains(int cone, const RatVec& v) const {
  const RatMat& coords = coneCoords_[static_cast<size_t>(cone)];
  if (coords.rows() == 0 && !cones_[static_cast<size_t>(cone)].empty()) {
    throw UnsupportedError("fan: geometric query on a non-simplicial cone");
  }
  return conePoly_[static_cast<size_t>(cone)].contains(v);
}

int Fan::rayIndex(const IntVec& a) const {
  for (int i = 0; i < numRays(); ++i) {
    if (rays_[static_cast<size_t>(i)] == a) return i;
  }
  return -1;
}

bool Fan::coneHasRay(int cone, int rayIdx) const {
  const auto& c = cones_[static_cast<size_t>(cone)];
  return std::binary_search(c.begin(), c.end(), rayIdx);
}

std::optional<std::vector<int>> Fan::minimalConeRays(const RatVec& v) const {
  for (size_t c = 0; c < cones_.size(); ++c) {
    if (!coneContains(static_cast<int>(c), v)) continue;
    const RatMat& coords = coneCoords_[c];
    RatVec lambda = coords * v;
    std::vector<int> rays;
    for (Index i = 0; i < lambda.size(); ++i) {
      if (lambda[i].sign() > 0) rays.push_back(cones_[c][static_cast<size_t>(i)]);
    }
    return rays;
  }
  return std::nullopt;
}

std::vector<int> Fan::star(int rayIdx) const {
  if (rayIdx < 0 || rayIdx >= numRays()) throw InputError("fan: ray index out of range");
  std::vector<int> out;
  for (size_t c = 0; c < cones_.size(); ++c) {
    if (coneHasRay(static_cast<int>(c), rayIdx)) out.push_back(static_cast<int>(c));
  }
  return out;
}

Fan::StarMembership Fan::starMembership(int rayIdx, const RatVec& v) const {
  if (rayIdx < 0 || rayIdx >= numRays()) throw InputError("fan: ray index out of range");
  bool inStar = false;
  for (size_t c = 0; c < cones_.size(); ++c) {
    if (coneHasRay(static_cast<int>(c), rayIdx) && coneContains(static_cast<int>(c), v)) {
      inStar = true;
      break;
    }
  }
  if (!inStar) return StarMembership::outside;
  auto minimal = minimalConeRays(v);
  // v lies in the open star exactly when every cone containing v contains
  // the ray, i.e. when the minimal cone of v does.
  if (minimal && std::binary_search(minimal->begin(), minimal->end(), rayIdx)) {
    return StarMembership::interior;
  }
  return StarMembership::boundary;
}

void Fan::validateStructure() {
  // pairwise intersections must be the cone spanned by the common rays
  for (size_t a = 0; a < cones_.size(); ++a) {
    if (coneCoords_[a].rows() == 0) continue;  // non-simplicial: flagged, not validated further
    for (size_t b = a + 1; b < cones_.size(); ++b) {
      if (coneCoords_[b].rows() == 0) continue;
      std::vector<int> common;
      std::set_intersection(cones_[a].begin(), cones_[a].end(), cones_[b].begin(), cones_[b].end(),
                            std::back_inserter(common));
      // Is there a point of cone_a ∩ cone_b with a positive coordinate on a
      // ray of cone_a outside the common set? If so the intersection is not
      // the common face.
      Polyhedron inter = conePoly_[a].intersect(conePoly_[b]);
      for (size_t i = 0; i < cones_[a].size(); ++i) {
        int r = cones_[a][i];
        if (std::binary_search(common.begin(), common.end(), r)) continue;
        HalfSpace pos{RatVec(coneCoords_[a].row(static_cast<Index>(i)).transpose()), Rational(0), true};
        if (!inter.withConstraint(pos).isEmpty()) {
          throw InputError("fan: cones " + std::to_string(a) + " and " + std::to_string(b) +
                           " do not intersect in a common face");
        }
      }
    }
  }
}

void Fan::computeFlags() {
  flags_.simplicial = true;
  for (size_t c = 0; c < cones_.size(); ++c) {
    if (coneCoords_[c].rows() == 0) flags_.simplicial = false;
  }

  // smooth: every maximal cone's rays extend to a lattice basis
  flags_.smooth = flags_.simplicial;
  if (flags_.smooth) {
    for (const auto& c : cones_) {
      RatMat R = raysAsColumns(rays_, c);
      if (R.cols() == dim_) {
        // |det| must be 1
        RatMat m = R;
        Rational det(1);
        Index nr = m.rows();
        for (Index col = 0; col < nr; ++col) {
          Index p = -1;
          for (Index r = col; r < nr; ++r) {
            if (!m(r, col).isZero()) { p = r; break; }
          }
          if (p < 0) { det = Rational(0); break; }
          if (p != col) { m.row(p).swap(m.row(col)); det = -det; }
          det *= m(col, col);
          for (Index r = col + 1; r < nr; ++r) {
            Rational f = m(r, col) / m(col, col);
            for (Index cc = col; cc < nr; ++cc) m(r, cc) -= f * m(col, cc);
          }
        }
        if (!(det == Rational(1) || det == Rational(-1))) flags_.smooth = false;
      } else {
        // gcd of maximal minors must be 1 for the rays to extend to a basis
        Index k = R.cols();
        std::vector<Index> sel(static_cast<size_t>(k));
        mpz_class g = 0;
        std::function<void(Index, Index)> rec = [&](Index start, Index depth) {
          if (depth == k) {
            RatMat sub(k, k);
            for (Index i = 0; i < k; ++i) sub.row(i) = R.row(sel[static_cast<size_t>(i)]);
            // integer determinant via rational elimination
            Rational det(1);
            RatMat m = sub;
            for (Index col = 0; col < k; ++col) {
              Index p = -1;
              for (Index r = col; r < k; ++r) {
                if (!m(r, col).isZero()) { p = r; break; }
              }
              if (p < 0) { det = Rational(0); break; }
              if (p != col) { m.row(p).swap(m.row(col)); det = -det; }
              det *= m(col, col);
              for (Index r = col + 1; r < k; ++r) {
                Rational f = m(r, col) / m(col, col);
                for (Index cc = col; cc < k; ++cc) m(r, cc) -= f * m(col, cc);
              }
            }
            g = gcd(g, det.num());
            return;
          }
          for (Index i = start; i < dim_; ++i) {
            sel[static_cast<size_t>(depth)] = i;
            rec(i + 1, depth + 1);
          }
        };
        rec(0, 0);
        if (g != 1) flags_.smooth = false;
      }
    }
  }

  // complete: every facet of every maximal cone is shared by exactly two
  // maximal cones, and all maximal cones are full-dimensional
  flags_.complete = flags_.simplicial && !cones_.empty();
  for (const auto& c : cones_) {
    if (static_cast<int>(c.size()) != dim_) flags_.complete = false;
  }
  if (flags_.complete) {
    std::map<std::vector<int>, int> facetCount;
    for (const auto& c : cones_) {
      for (size_t drop = 0; drop < c.size(); ++drop) {
        std::vector<int> facet;
        for (size_t i = 0; i < c.size(); ++i) {
          if (i != drop) facet.push_back(c[i]);
        }
        facetCount[facet]++;
      }
    }
    for (const auto& [facet, count] : facetCount) {
      if (count != 2) flags_.complete = false;
    }
  }
}

FanFlags validateFan(const Fan& F) { return F.flags(); }

ToricDivisor ToricDivisor::operator+(const ToricDivisor& o) const {
  if (coeffs.size() != o.coeffs.size()) throw InputError("divisor: ray count mismatch");
  ToricDivisor r = *this;
  for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
  return r;
}

ToricDivisor ToricDivisor::operator-(const ToricDivisor& o) const { return *this + (-o); }

ToricDivisor ToricDivisor::operator-() const {
  ToricDivisor r = *this;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

ToricDivisor ToricDivisor::operator*(long k) const {
  ToricDivisor r = *this;
  for (auto& c : r.coeffs) c *= k;
  return r;
}

bool ToricDivisor::isEffective() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](long c) { return c >= 0; });
}

ToricDivisor ToricDivisor::ray(int numRays, int i, long n) {
  ToricDivisor d = zero(numRays);
  d.coeffs[static_cast<size_t>(i)] = n;
  return d;
}

Rational SupportFunction::eval(const Fan& F, const RatVec& v) const {
  for (size_t c = 0; c < F.maxCones().size(); ++c) {
    if (F.coneContains(static_cast<int>(c), v)) return linearParts[c].dot(v);
  }
  throw InputError("support function: point outside the fan support");
}

SupportFunction supportFunction(const Fan& F, const ToricDivisor& D) {
  if (!F.flags().simplicial) throw UnsupportedError("support function: fan must be simplicial");
  if (!F.flags().complete) throw UnsupportedError("support function: fan must be complete");
  if (D.coeffs.size() != static_cast<size_t>(F.numRays())) {
    throw InputError("support function: divisor/fan ray mismatch");
  }
  SupportFunction S;
  S.linearParts.reserve(F.maxCones().size());
  for (const auto& cone : F.maxCones()) {
    RatMat A(static_cast<Index>(cone.size()), F.dim());
    RatVec b(static_cast<Index>(cone.size()));
    for (size_t i = 0; i < cone.size(); ++i) {
      A.row(static_cast<Index>(i)) = toRat(F.ray(cone[i])).transpose();
      b[static_cast<Index>(i)] = Rational(-D.coeff(cone[i]));
    }
    auto m = solveSquare(A, b);
    if (!m) throw ComputationError("support function: singular cone system");
    S.linearParts.push_back(*m);
  }
  // consistency on shared rays (automatic from the defining equations)
  for (size_t c = 0; c < F.maxCones().size(); ++c) {
    for (int r : F.maxCones()[c]) {
      if (S.linearParts[c].dot(toRat(F.ray(r))) != Rational(-D.coeff(r))) {
        throw ComputationError("support function: face consistency violated");
      }
    }
  }
  return S;
}

Polyhedron divisorPolytope(const Fan& F, const ToricDivisor& D) {
  if (D.coeffs.size() != static_cast<size_t>(F.numRays())) {
    throw InputError("divisor polytope: divisor/fan ray mismatch");
  }
  std::vector<HalfSpace> hs;
  hs.reserve(static_cast<size_t>(F.numRays()));
  for (int i = 0; i < F.numRays(); ++i) {
    hs.push_back({toRat(F.ray(i)), Rational(-D.coeff(i)), false});
  }
  return Polyhedron(F.dim(), std::move(hs));
}

bool isAmple(const Fan& F, const ToricDivisor& D) {
  if (!F.flags().simplicial || !F.flags().complete) {
    throw UnsupportedError("is_ample: fan must be simplicial and complete");
  }
  SupportFunction S = supportFunction(F, D);
  // walls: facets shared by exactly two maximal cones
  std::map<std::vector<int>, std::vector<int>> wall;
  const auto& cones = F.maxCones();
  for (size_t c = 0; c < cones.size(); ++c) {
    for (size_t drop = 0; drop < cones[c].size(); ++drop) {
      std::vector<int> facet;
      for (size_t i = 0; i < cones[c].size(); ++i) {
        if (i != drop) facet.push_back(cones[c][i]);
      }
      wall[facet].push_back(static_cast<int>(c));
    }
  }
  for (const auto& [facet, cs] : wall) {
    if (cs.size() != 2) continue;
    int a = cs[0], b = cs[1];
    // v: the ray of cone a missing from cone b. Strict concavity across the
    // wall: the neighbor's linear part overestimates the support function,
    // m_b(v) > m_a(v) = F_D(v).
    for (int r : cones[static_cast<size_t>(a)]) {
      if (std::binary_search(cones[static_cast<size_t>(b)].begin(), cones[static_cast<size_t>(b)].end(), r)) continue;
      RatVec v = toRat(F.ray(r));
      if (!(S.linearParts[static_cast<size_t>(b)].dot(v) > S.linearParts[static_cast<size_t>(a)].dot(v))) {
        return false;
      }
    }
  }
  return true;
}

Polyhedron gradientHull(const Fan& F, const ToricDivisor& D) {
  SupportFunction S = supportFunction(F, D);
  return hullOfPoints(S.linearParts, F.dim());
}

bool characterEquivalent(const Fan& F, const std::vector<long>& delta) {
  if (delta.size() != static_cast<size_t>(F.numRays())) {
    throw InputError("character test: coefficient/ray mismatch");
  }
  RatMat A(F.numRays(), F.dim());
  RatVec b(F.numRays());
  for (int i = 0; i < F.numRays(); ++i) {
    A.row(i) = toRat(F.ray(i)).transpose();
    b[i] = Rational(delta[static_cast<size_t>(i)]);
  }
  auto m = solve(A, b);
  if (!m) return false;
  RatVec resid = A * (*m) - b;
  for (Index i = 0; i < resid.size(); ++i) {
    if (!resid[i].isZero()) return false;
  }
  for (Index i = 0; i < m->size(); ++i) {
    if (!(*m)[i].isInteger()) return false;
  }
  return true;
}

bool picClassEq(const Fan& F, const ToricDivisor& D0, const ToricDivisor& D1) {
  if (!F.flags().smooth || !F.flags().complete) {
    throw UnsupportedError("pic_class_eq: fan must be smooth and complete");
  }
  if (D0.coeffs.size() != D1.coeffs.size() ||
      D0.coeffs.size() != static_cast<size_t>(F.numRays())) {
    throw InputError("pic_class_eq: inconsistent ray sets");
  }
  std::vector<long> delta(D0.coeffs.size());
  for (size_t i = 0; i < delta.size(); ++i) delta[i] = D0.coeffs[i] - D1.coeffs[i];
  return characterEquivalent(F, delta);
}

int picRank(const Fan& F) {
  if (!F.flags().smooth || !F.flags().complete) {
    throw UnsupportedError("pic_rank: fan must be smooth and complete");
  }
  return F.numRays() - F.dim();
}

}  // namespace monotoric
