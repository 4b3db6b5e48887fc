#include "monotoric/division.hpp"

#include <algorithm>

namespace monotoric {

void MonomialDivision::validate() const {
  if (rays.empty()) throw InputError("division: no monomials");
  if (k.size() != rays.size() || logc.size() != rays.size()) {
    throw InputError("division: coefficient lists must match the monomial list");
  }
  for (const auto& kv : k) {
    if (!(kv > Rational(0))) throw InputError("division: exponents must be positive");
  }
  if (slack < Rational(0)) throw InputError("division: slack must be nonnegative");
  for (const auto& r : rays) {
    if (r.size() != rays[0].size()) throw InputError("division: ray dimension mismatch");
  }
}

MonomialDivision MonomialDivision::tropical(const std::vector<IntVec>& rays, Rational slack) {
  MonomialDivision d;
  d.rays = rays;
  d.k.assign(rays.size(), Rational(1));
  d.logc.assign(rays.size(), Rational(0));
  d.slack = slack;
  d.validate();
  return d;
}

Polyhedron region(const MonomialDivision& div, int alphaIdx) {
  div.validate();
  if (alphaIdx < 0 || alphaIdx >= div.numRays()) throw InputError("region: ray index out of range");
  const size_t a = static_cast<size_t>(alphaIdx);
  std::vector<HalfSpace> hs;
  RatVec alpha = toRat(div.rays[a]);
  for (size_t b = 0; b < div.rays.size(); ++b) {
    if (b == a) continue;
    RatVec beta = toRat(div.rays[b]);
    RatVec normal = (alpha * div.k[a] - beta * div.k[b]).eval();
    Rational offset = div.k[b] * div.logc[b] - div.k[a] * div.logc[a] - div.slack;
    hs.push_back({normal, offset, false});
  }
  return Polyhedron(div.dim(), std::move(hs));
}

AdaptednessReport isAdapted(const MonomialDivision& div, const Fan& F) {
  div.validate();
  if (div.dim() != F.dim()) throw InputError("is_adapted: dimension mismatch");
  AdaptednessReport report;
  for (int a = 0; a < div.numRays(); ++a) {
    Polyhedron C = region(div, a);
    if (C.isEmpty()) continue;
    Polyhedron rec = C.recessionCone();
    RatVec alphaPt = toRat(div.rays[static_cast<size_t>(a)]);
    for (size_t c = 0; c < F.maxCones().size(); ++c) {
      if (F.coneContains(static_cast<int>(c), alphaPt)) continue;
      Polyhedron inter = C.intersect(F.conePolyhedron(static_cast<int>(c)));
      if (inter.isEmpty()) continue;
      auto dir = rec.intersect(F.conePolyhedron(static_cast<int>(c))).coneNonzeroPoint();
      if (dir) {
        report.witnesses.push_back({a, static_cast<int>(c), primitiveDirection(*dir)});
      }
    }
  }
  report.adapted = report.witnesses.empty();
  return report;
}

namespace {

// Rational approximation of 1/sqrt(s) to relative precision 2^-bits.
Rational invSqrtApprox(long s, int bits) {
  mpz_class target = mpz_class(1) << (2 * bits);
  target *= s;
  mpz_class q = sqrt(target);  // floor sqrt
  mpz_class den = mpz_class(1) << bits;
  den *= s;
  mpq_class r(q, den);
  r.canonicalize();
  return Rational(r);
}

}  // namespace

MonomialDivision exponents2d(const Fan& F) {
  if (F.dim() != 2) throw InputError("exponents_2d: fan must be 2-dimensional");
  for (int bits : {20, 60}) {
    MonomialDivision d;
    d.rays = F.rays();
    d.logc.assign(d.rays.size(), Rational(0));
    d.slack = Rational(0);
    for (const auto& r : d.rays) {
      long s = r[0] * r[0] + r[1] * r[1];
      d.k.push_back(invSqrtApprox(s, bits));
    }
    if (isAdapted(d, F).adapted) return d;
  }
  throw ComputationError("exponents_2d: rationalized 1/|alpha| failed adaptedness at 2^-60");
}

MonomialDivision exponentsFromAmple(const Fan& F, const ToricDivisor& D) {
  if (!isAmple(F, D)) throw InputError("exponents_from_ample: divisor is not ample");
  Polyhedron P = divisorPolytope(F, D);
  std::vector<RatVec> verts = P.vertices();
  if (verts.empty()) throw ComputationError("exponents_from_ample: empty polytope");
  RatVec bary = RatVec::Constant(F.dim(), Rational(0));
  for (const auto& v : verts) bary += v;
  bary /= Rational(static_cast<long>(verts.size()));

  MonomialDivision d;
  d.rays = F.rays();
  d.logc.assign(d.rays.size(), Rational(0));
  d.slack = Rational(0);
  for (int i = 0; i < F.numRays(); ++i) {
    Rational h = Rational(D.coeff(i)) + toRat(F.ray(i)).dot(bary);
    if (!(h > Rational(0))) {
      throw ComputationError("exponents_from_ample: origin not interior after barycenter shift");
    }
    d.k.push_back(Rational(1) / h);
  }
  return d;
}

MonomialDivision normalizeCoefficients(const MonomialDivision& div, const Fan& F,
                                       std::optional<Rational> Bopt) {
  div.validate();
  if (!isAdapted(div, F).adapted) {
    throw InputError("normalize_coefficients: input division must be adapted");
  }
  Rational B;
  if (Bopt) {
    B = *Bopt;
  } else {
    B = Rational(0);
    for (size_t i = 0; i < div.k.size(); ++i) B = max(B, div.k[i] * div.logc[i]);
    B += Rational(1);
  }
  MonomialDivision out;
  out.rays = div.rays;
  out.logc.assign(div.rays.size(), Rational(0));
  out.slack = div.slack;
  for (size_t i = 0; i < div.k.size(); ++i) {
    Rational invK = B / div.k[i] - div.logc[i];
    if (!(invK > Rational(0))) {
      throw InputError("normalize_coefficients: B too small for exponent " + std::to_string(i));
    }
    out.k.push_back(Rational(1) / invK);
  }
  if (!isAdapted(out, F).adapted) {
    throw ComputationError("normalize_coefficients: output lost adaptedness (bug)");
  }
  return out;
}

CombinatorialDivision::CombinatorialDivision(const Fan& F, Rational t) : t_(t), dim_(F.dim()) {
  if (t < Rational(0) || t >= Rational(1)) throw InputError("combinatorial division: need 0 <= t < 1");
  if (!F.flags().simplicial || !F.flags().complete) {
    throw UnsupportedError("combinatorial division: fan must be simplicial and complete");
  }
  pieces_.resize(static_cast<size_t>(F.numRays()));
  pieceCoords_.resize(static_cast<size_t>(F.numRays()));
  for (int a = 0; a < F.numRays(); ++a) {
    RatVec alpha = toRat(F.ray(a));
    for (int c : F.star(a)) {
      const auto& cone = F.maxCones()[static_cast<size_t>(c)];
      RatMat gens(dim_, static_cast<Index>(cone.size()));
      Index col = 0;
      for (int r : cone) {
        if (r == a) {
          gens.col(col++) = alpha;
        } else {
          gens.col(col++) = (toRat(F.ray(r)) * (Rational(1) - t) + alpha * t).eval();
        }
      }
      // invert for membership queries (generators stay independent for t < 1)
      RatMat gram = gens.transpose() * gens;
      RatMat sys(gens.cols(), gens.cols() + dim_);
      sys.leftCols(gens.cols()) = gram;
      sys.rightCols(dim_) = gens.transpose();
      std::vector<Index> piv = rowEchelon(sys);
      if (static_cast<Index>(piv.size()) != gens.cols()) {
        throw ComputationError("combinatorial division: degenerate shrunken cone");
      }
      pieces_[static_cast<size_t>(a)].push_back(gens);
      pieceCoords_[static_cast<size_t>(a)].push_back(sys.rightCols(dim_));
    }
  }
}

bool CombinatorialDivision::contains(int rayIdx, const RatVec& v) const {
  if (rayIdx < 0 || rayIdx >= static_cast<int>(pieces_.size())) {
    throw InputError("combinatorial division: ray index out of range");
  }
  const auto& coords = pieceCoords_[static_cast<size_t>(rayIdx)];
  const auto& gens = pieces_[static_cast<size_t>(rayIdx)];
  for (size_t p = 0; p < coords.size(); ++p) {
    RatVec lambda = coords[p] * v;
    bool nonneg = true;
    for (Index i = 0; i < lambda.size(); ++i) nonneg = nonneg && lambda[i].sign() >= 0;
    if (!nonneg) continue;
    RatVec recon = gens[p] * lambda;
    bool equal = true;
    for (Index i = 0; i < recon.size(); ++i) equal = equal && recon[i] == v[i];
    if (equal) return true;
  }
  return false;
}

MetricCertificate certifyAdaptedMetric(const Fan& F, const ToricDivisor& D) {
  if (!isAmple(F, D)) throw InputError("certify_adapted_metric: divisor is not ample");
  Polyhedron P = divisorPolytope(F, D);
  std::vector<RatVec> verts = P.vertices();
  RatVec bary = RatVec::Constant(F.dim(), Rational(0));
  for (const auto& v : verts) bary += v;
  bary /= Rational(static_cast<long>(verts.size()));

  MetricCertificate cert;
  cert.divisor = D;
  cert.interiorShift = bary;
  for (int i = 0; i < F.numRays(); ++i) {
    Rational h = Rational(D.coeff(i)) + toRat(F.ray(i)).dot(bary);
    if (!(h > Rational(0))) throw ComputationError("certify_adapted_metric: non-positive height");
    cert.heights.push_back(h);
    cert.exponents.push_back(Rational(1) / h);
  }
  // Ampleness already certifies that the normal fan of P is the fan itself:
  // every ray supports a facet and the support function is strictly concave
  // across each wall.
  cert.normalFanIsFan = true;
  return cert;
}

}  // namespace monotoric
