#include "monotoric/polyhedron.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace monotoric {

namespace {

// Internal row form for elimination: a·u >= c / a·u > c.
struct Row {
  RatVec a;
  Rational c;
  bool strict;
};

// (0,...,0) >= c that cannot hold.
bool isContradiction(const Row& r) {
  for (Index i = 0; i < r.a.size(); ++i) {
    if (!r.a[i].isZero()) return false;
  }
  return r.strict ? r.c.sign() >= 0 : r.c.sign() > 0;
}

bool isTrivial(const Row& r) {
  for (Index i = 0; i < r.a.size(); ++i) {
    if (!r.a[i].isZero()) return false;
  }
  return r.strict ? r.c.sign() < 0 : r.c.sign() <= 0;
}

// Scale by a positive rational so the normal is a coprime integer vector.
void normalizeRow(Row& r) {
  mpz_class den(1), num(0);
  for (Index i = 0; i < r.a.size(); ++i) {
    den = lcm(den, r.a[i].den());
    num = gcd(num, r.a[i].num());
  }
  if (num == 0) return;  // zero normal, keep as-is
  mpq_class f(den, num);  // positive since gcd >= 0 and num != 0 after abs
  if (f < 0) f = -f;
  f.canonicalize();
  Rational factor{mpq_class(f)};
  for (Index i = 0; i < r.a.size(); ++i) r.a[i] *= factor;
  r.c *= factor;
}

// Keeps, per normal, only the dominating constraint (max offset; strict
// beats non-strict at equal offset). Detects contradictions cheaply.
void dedupeRows(std::vector<Row>& rows) {
  std::map<std::vector<std::pair<std::string, std::string>>, size_t> seen;
  std::vector<Row> out;
  out.reserve(rows.size());
  for (auto& r : rows) {
    if (isTrivial(r)) continue;
    std::vector<std::pair<std::string, std::string>> key;
    key.reserve(static_cast<size_t>(r.a.size()));
    for (Index i = 0; i < r.a.size(); ++i) {
      key.emplace_back(r.a[i].num().get_str(), r.a[i].den().get_str());
    }
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(std::move(key), out.size());
      out.push_back(r);
    } else {
      Row& prev = out[it->second];
      if (r.c > prev.c || (r.c == prev.c && r.strict && !prev.strict)) prev = r;
    }
  }
  rows.swap(out);
}

constexpr size_t kEliminationCap = 200000;

// One Fourier-Motzkin elimination step on variable `var`.
std::vector<Row> eliminate(const std::vector<Row>& rows, Index var) {
  std::vector<Row> out;
  std::vector<const Row*> lower, upper;
  for (const auto& r : rows) {
    int s = r.a[var].sign();
    if (s == 0) {
      out.push_back(r);
    } else if (s > 0) {
      lower.push_back(&r);
    } else {
      upper.push_back(&r);
    }
  }
  for (const Row* lo : lower) {
    for (const Row* up : upper) {
      Row combo;
      Rational cl = lo->a[var];
      Rational cu = -up->a[var];
      combo.a = (lo->a * cu + up->a * cl).eval();
      combo.c = lo->c * cu + up->c * cl;
      combo.strict = lo->strict || up->strict;
      normalizeRow(combo);
      if (isTrivial(combo)) continue;
      out.push_back(std::move(combo));
      if (out.size() > kEliminationCap) {
        throw ComputationError("polyhedron: Fourier-Motzkin blow-up past cap");
      }
    }
  }
  dedupeRows(out);
  return out;
}

std::vector<Row> toRows(const std::vector<HalfSpace>& hs) {
  std::vector<Row> rows;
  rows.reserve(hs.size());
  for (const auto& h : hs) {
    Row r{h.normal, h.offset, h.strict};
    normalizeRow(r);
    rows.push_back(std::move(r));
  }
  dedupeRows(rows);
  return rows;
}

// Successive eliminations; stage[k] constrains variables 0..k-1.
// Returns nullopt (infeasible) or all intermediate stages.
std::optional<std::vector<std::vector<Row>>> eliminationTower(std::vector<Row> rows, Index dim) {
  std::vector<std::vector<Row>> stages(static_cast<size_t>(dim) + 1);
  for (Index v = dim; v > 0; --v) {
    for (const auto& r : rows) {
      if (isContradiction(r)) return std::nullopt;
    }
    stages[static_cast<size_t>(v)] = rows;
    rows = eliminate(rows, v - 1);
  }
  for (const auto& r : rows) {
    if (isContradiction(r)) return std::nullopt;
  }
  stages[0] = rows;
  return stages;
}

}  // namespace

IntVec primitiveDirection(const RatVec& v) {
  mpz_class den(1), num(0);
  for (Index i = 0; i < v.size(); ++i) {
    den = lcm(den, v[i].den());
    num = gcd(num, v[i].num());
  }
  IntVec out(v.size());
  if (num == 0) {
    out.setZero();
    return out;
  }
  mpq_class f(den, num);
  if (f < 0) f = -f;
  f.canonicalize();
  Rational factor{f};
  for (Index i = 0; i < v.size(); ++i) out[i] = (v[i] * factor).toLongExact();
  return out;
}

Polyhedron::Polyhedron(int dim, std::vector<HalfSpace> ineqs) : dim_(dim), ineqs_(std::move(ineqs)) {
  for (const auto& h : ineqs_) {
    if (h.normal.size() != dim_) {
      throw InputError("polyhedron: inequality dimension mismatch");
    }
  }
}

Polyhedron Polyhedron::fromRows(const RatMat& normals, const RatVec& offsets) {
  if (normals.rows() != offsets.size()) throw InputError("polyhedron: rows/offsets mismatch");
  std::vector<HalfSpace> hs;
  hs.reserve(static_cast<size_t>(normals.rows()));
  for (Index r = 0; r < normals.rows(); ++r) {
    hs.push_back({RatVec(normals.row(r).transpose()), offsets[r], false});
  }
  return Polyhedron(static_cast<int>(normals.cols()), std::move(hs));
}

Polyhedron Polyhedron::intersect(const Polyhedron& other) const {
  if (other.dim_ != dim_) throw InputError("polyhedron: intersect dimension mismatch");
  std::vector<HalfSpace> hs = ineqs_;
  hs.insert(hs.end(), other.ineqs_.begin(), other.ineqs_.end());
  return Polyhedron(dim_, std::move(hs));
}

Polyhedron Polyhedron::withConstraint(const HalfSpace& h) const {
  std::vector<HalfSpace> hs = ineqs_;
  hs.push_back(h);
  return Polyhedron(dim_, std::move(hs));
}

bool Polyhedron::contains(const RatVec& u) const {
  if (u.size() != dim_) throw InputError("polyhedron: point dimension mismatch");
  for (const auto& h : ineqs_) {
    Rational v = h.normal.dot(u);
    if (h.strict ? !(v > h.offset) : !(v >= h.offset)) return false;
  }
  return true;
}

bool Polyhedron::containsStrictly(const RatVec& u) const {
  if (u.size() != dim_) throw InputError("polyhedron: point dimension mismatch");
  for (const auto& h : ineqs_) {
    if (!(h.normal.dot(u) > h.offset)) return false;
  }
  return true;
}

bool Polyhedron::isEmpty() const {
  return !eliminationTower(toRows(ineqs_), dim_).has_value();
}

std::optional<RatVec> Polyhedron::feasiblePoint() const {
  auto stages = eliminationTower(toRows(ineqs_), dim_);
  if (!stages) return std::nullopt;
  RatVec x = RatVec::Constant(dim_, Rational(0));
  // Back-substitute: stage k constrains x_0..x_{k-1}, bounds for x_{k-1}
  // come from rows with nonzero coefficient there.
  for (Index k = 1; k <= dim_; ++k) {
    Index var = k - 1;
    bool hasLo = false, hasHi = false, loStrict = false, hiStrict = false;
    Rational lo(0), hi(0);
    for (const auto& r : (*stages)[static_cast<size_t>(k)]) {
      int s = r.a[var].sign();
      if (s == 0) continue;
      Rational rest = r.c;
      for (Index j = 0; j < var; ++j) rest -= r.a[j] * x[j];
      Rational bound = rest / r.a[var];
      if (s > 0) {
        if (!hasLo || bound > lo) {
          lo = bound;
          loStrict = r.strict;
          hasLo = true;
        } else if (bound == lo) {
          loStrict = loStrict || r.strict;
        }
      } else {
        if (!hasHi || bound < hi) {
          hi = bound;
          hiStrict = r.strict;
          hasHi = true;
        } else if (bound == hi) {
          hiStrict = hiStrict || r.strict;
        }
      }
    }
    if (hasLo && hasHi) {
      if (lo > hi || (lo == hi && (loStrict || hiStrict))) {
        throw ComputationError("polyhedron: inconsistent back-substitution");
      }
      x[var] = (lo == hi) ? lo : (lo + hi) / Rational(2);
    } else if (hasLo) {
      x[var] = loStrict ? lo + Rational(1) : lo;
    } else if (hasHi) {
      x[var] = hiStrict ? hi - Rational(1) : hi;
    } else {
      x[var] = Rational(0);
    }
  }
  return x;
}

Polyhedron Polyhedron::recessionCone() const {
  if (isEmpty()) throw InputError("recession cone: polyhedron must be nonempty");
  std::vector<HalfSpace> hs;
  hs.reserve(ineqs_.size());
  for (const auto& h : ineqs_) hs.push_back({h.normal, Rational(0), false});
  return Polyhedron(dim_, std::move(hs));
}

bool Polyhedron::coneIsTrivial() const { return !coneNonzeroPoint().has_value(); }

std::optional<RatVec> Polyhedron::coneNonzeroPoint() const {
  // A nonzero point scales into the unit box with some coordinate = +-1.
  for (Index i = 0; i < dim_; ++i) {
    for (int sign : {+1, -1}) {
      std::vector<HalfSpace> hs = ineqs_;
      RatVec e = RatVec::Constant(dim_, Rational(0));
      e[i] = Rational(sign);
      hs.push_back({e, Rational(1), false});   // sign * u_i >= 1
      for (Index j = 0; j < dim_; ++j) {
        RatVec lo = RatVec::Constant(dim_, Rational(0));
        lo[j] = Rational(1);
        hs.push_back({lo, Rational(-1), false});
        RatVec up = RatVec::Constant(dim_, Rational(0));
        up[j] = Rational(-1);
        hs.push_back({up, Rational(-1), false});
      }
      auto p = Polyhedron(dim_, std::move(hs)).feasiblePoint();
      if (p) return p;
    }
  }
  return std::nullopt;
}

bool Polyhedron::isBounded() const {
  if (isEmpty()) return true;
  return recessionCone().coneIsTrivial();
}

Polyhedron Polyhedron::withoutRedundancies() const {
  std::vector<Row> rows = toRows(ineqs_);
  std::vector<bool> keep(rows.size(), true);
  for (size_t i = 0; i < rows.size(); ++i) {
    // i redundant iff the others plus the negation of i are infeasible
    std::vector<Row> test;
    for (size_t j = 0; j < rows.size(); ++j) {
      if (j == i || !keep[j]) continue;
      test.push_back(rows[j]);
    }
    Row neg;
    neg.a = (-rows[i].a).eval();
    neg.c = -rows[i].c;
    neg.strict = !rows[i].strict;
    test.push_back(neg);
    if (!eliminationTower(std::move(test), dim_).has_value()) keep[i] = false;
  }
  std::vector<HalfSpace> hs;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (keep[i]) hs.push_back({rows[i].a, rows[i].c, rows[i].strict});
  }
  return Polyhedron(dim_, std::move(hs));
}

std::vector<RatVec> Polyhedron::vertices() const {
  if (isEmpty()) return {};
  if (!recessionCone().coneIsTrivial()) {
    throw ComputationError("polyhedron: vertex enumeration needs a bounded polyhedron");
  }
  Polyhedron irr = withoutRedundancies();
  const auto& hs = irr.ineqs_;
  const Index n = dim_;
  const Index m = static_cast<Index>(hs.size());
  std::set<RatVec, LexLess> found;
  // brute force over n-subsets of irredundant inequalities
  std::vector<Index> idx(static_cast<size_t>(n));
  std::function<void(Index, Index)> rec = [&](Index start, Index depth) {
    if (depth == n) {
      RatMat A(n, n);
      RatVec b(n);
      for (Index k = 0; k < n; ++k) {
        A.row(k) = hs[static_cast<size_t>(idx[static_cast<size_t>(k)])].normal.transpose();
        b[k] = hs[static_cast<size_t>(idx[static_cast<size_t>(k)])].offset;
      }
      auto sol = solveSquare(A, b);
      if (sol && contains(*sol)) found.insert(*sol);
      return;
    }
    for (Index i = start; i < m; ++i) {
      idx[static_cast<size_t>(depth)] = i;
      rec(i + 1, depth + 1);
    }
  };
  if (m >= n && n > 0) rec(0, 0);
  if (n == 0) found.insert(RatVec(0));
  return std::vector<RatVec>(found.begin(), found.end());
}

std::vector<IntVec> Polyhedron::latticePoints(bool strict) const {
  if (isEmpty()) return {};
  if (!recessionCone().coneIsTrivial()) {
    throw ComputationError("polyhedron: lattice enumeration needs a bounded polyhedron");
  }
  std::vector<RatVec> verts = vertices();
  if (verts.empty()) return {};
  std::vector<long> lo(static_cast<size_t>(dim_)), hi(static_cast<size_t>(dim_));
  for (Index i = 0; i < dim_; ++i) {
    Rational mn = verts[0][i], mx = verts[0][i];
    for (const auto& v : verts) {
      mn = min(mn, v[i]);
      mx = max(mx, v[i]);
    }
    lo[static_cast<size_t>(i)] = mn.ceilLong();
    hi[static_cast<size_t>(i)] = mx.floorLong();
  }
  std::vector<IntVec> out;
  IntVec p(dim_);
  std::function<void(Index)> scan = [&](Index i) {
    if (i == dim_) {
      RatVec q = toRat(p);
      if (strict ? containsStrictly(q) : contains(q)) out.push_back(p);
      return;
    }
    for (long v = lo[static_cast<size_t>(i)]; v <= hi[static_cast<size_t>(i)]; ++v) {
      p[i] = v;
      scan(i + 1);
    }
  };
  scan(0);
  return out;
}

int Polyhedron::affineDim() const {
  auto p0 = feasiblePoint();
  if (!p0) return -1;
  // The affine hull directions are the recession directions of P - P; probe
  // by collecting vertices when bounded, else by LP along coordinate axes.
  // For our uses (bounded polytopes) the vertex route is exact and cheap.
  if (isBounded()) {
    std::vector<RatVec> verts = vertices();
    if (verts.size() <= 1) return 0;
    RatMat diff(static_cast<Index>(verts.size()) - 1, dim_);
    for (size_t i = 1; i < verts.size(); ++i) {
      diff.row(static_cast<Index>(i - 1)) = (verts[i] - verts[0]).transpose();
    }
    return static_cast<int>(rank(diff));
  }
  // Unbounded: dimension of the lineality-free hull is not needed at the
  // scales this library targets; report full dimension if an interior point
  // exists, otherwise fall back to the rank of tight constraints.
  std::vector<HalfSpace> hs = ineqs_;
  for (auto& h : hs) h.strict = true;
  if (!Polyhedron(dim_, hs).isEmpty()) return dim_;
  RatMat tight(0, dim_);
  Index r = 0;
  for (const auto& h : ineqs_) {
    if (h.normal.dot(*p0) == h.offset) {
      tight.conservativeResize(r + 1, dim_);
      tight.row(r++) = h.normal.transpose();
    }
  }
  return dim_ - static_cast<int>(rank(tight));
}

Polyhedron hullOfPoints(const std::vector<RatVec>& pointsIn, int dim) {
  if (pointsIn.empty()) throw InputError("hullOfPoints: no points");
  std::set<RatVec, LexLess> uniq(pointsIn.begin(), pointsIn.end());
  std::vector<RatVec> pts(uniq.begin(), uniq.end());
  const RatVec& p0 = pts[0];

  // Affine hull: rank of differences; equalities from the left nullspace.
  RatMat diff(static_cast<Index>(pts.size()) - 1, dim);
  for (size_t i = 1; i < pts.size(); ++i) diff.row(static_cast<Index>(i - 1)) = (pts[i] - p0).transpose();
  RatMat ker = nullspaceBasis(diff);  // directions w with <w, p - p0> = 0 for all p

  std::vector<HalfSpace> hs;
  for (Index c = 0; c < ker.cols(); ++c) {
    RatVec w = ker.col(c);
    IntVec wi = primitiveDirection(w);
    RatVec wr = toRat(wi);
    Rational off = wr.dot(p0);
    hs.push_back({wr, off, false});
    hs.push_back({(-wr).eval(), -off, false});
  }
  int k = dim - static_cast<int>(ker.cols());  // affine dimension
  if (k == 0) return Polyhedron(dim, std::move(hs));

  // Facets: hyperplanes through k affinely independent hull points with all
  // points on one side. Brute force over k-subsets (desk scale).
  const size_t np = pts.size();
  std::vector<size_t> idx(static_cast<size_t>(k));
  std::set<std::pair<std::vector<std::string>, std::string>> emitted;
  std::function<void(size_t, size_t)> rec = [&](size_t start, size_t depth) {
    if (depth == static_cast<size_t>(k)) {
      // normal orthogonal to in-plane differences and to affine-hull normals
      RatMat sys(static_cast<Index>(k - 1) + ker.cols(), dim);
      for (size_t i = 1; i < static_cast<size_t>(k); ++i) {
        sys.row(static_cast<Index>(i - 1)) = (pts[idx[i]] - pts[idx[0]]).transpose();
      }
      for (Index c = 0; c < ker.cols(); ++c) {
        sys.row(static_cast<Index>(k - 1) + c) = ker.col(c).transpose();
      }
      RatMat nb = nullspaceBasis(sys);
      if (nb.cols() != 1) return;  // chosen points not affinely independent
      RatVec w = nb.col(0);
      Rational off = w.dot(pts[idx[0]]);
      int side = 0;
      for (const auto& p : pts) {
        Rational v = w.dot(p);
        if (v == off) continue;
        int s = (v > off) ? +1 : -1;
        if (side == 0) {
          side = s;
        } else if (side != s) {
          return;  // points on both sides: not a facet hyperplane
        }
      }
      if (side == 0) return;  // all points on the hyperplane (shouldn't happen)
      RatVec inward = (side > 0) ? w : RatVec(-w);
      IntVec wi = primitiveDirection(inward);
      RatVec wr = toRat(wi);
      Rational o = wr.dot(pts[idx[0]]);
      std::vector<std::string> key;
      for (Index i = 0; i < wr.size(); ++i) key.push_back(wr[i].str());
      if (emitted.insert({key, o.str()}).second) hs.push_back({wr, o, false});
      return;
    }
    for (size_t i = start; i < np; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return Polyhedron(dim, std::move(hs));
}

}  // namespace monotoric
