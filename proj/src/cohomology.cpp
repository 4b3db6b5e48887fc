#include "monotoric/cohomology.hpp"

#include <algorithm>
#include <future>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "monotoric/linalg.hpp"

namespace monotoric {

namespace {

long dotIntVec(const IntVec& m, const IntVec& alpha) {
  long s = 0;
  for (Index i = 0; i < m.size(); ++i) s += m[i] * alpha[i];
  return s;
}

std::vector<int> commonRays(const std::vector<std::vector<int>>& coneRays,
                            const std::vector<int>& tuple) {
  std::vector<int> common = coneRays[static_cast<size_t>(tuple[0])];
  for (size_t i = 1; i < tuple.size(); ++i) {
    std::vector<int> next;
    const auto& c = coneRays[static_cast<size_t>(tuple[i])];
    std::set_intersection(common.begin(), common.end(), c.begin(), c.end(),
                          std::back_inserter(next));
    common.swap(next);
  }
  return common;
}

// Cech complex of the weight-m piece over a closed cover given by ray sets:
// the term of a tuple is Q exactly when every common ray passes the mask.
CochainComplex buildCechComplex(const std::vector<std::vector<int>>& coverRaySets,
                                const std::vector<char>& rayOk, bool withLabels) {
  const int N = static_cast<int>(coverRaySets.size());
  CochainComplex C;
  C.minDegree = 0;
  if (N == 0) {
    C.dims = {0};
    return C;
  }
  if (N > 16) throw UnsupportedError("cech: cover too large for tuple enumeration");
  // enumerate tuples by subset bits, grouped by cardinality
  std::vector<std::vector<std::vector<int>>> tuples(static_cast<size_t>(N));
  std::vector<std::map<std::vector<int>, Index>> index(static_cast<size_t>(N));
  for (unsigned bits = 1; bits < (1u << N); ++bits) {
    std::vector<int> t;
    for (int i = 0; i < N; ++i) {
      if (bits & (1u << i)) t.push_back(i);
    }
    std::vector<int> common = commonRays(coverRaySets, t);
    bool present = true;
    for (int r : common) present = present && rayOk[static_cast<size_t>(r)];
    if (!present) continue;
    size_t p = t.size() - 1;
    index[p][t] = static_cast<Index>(tuples[p].size());
    tuples[p].push_back(std::move(t));
  }
  size_t levels = tuples.size();
  while (levels > 1 && tuples[levels - 1].empty()) --levels;
  C.dims.resize(levels);
  for (size_t p = 0; p < levels; ++p) C.dims[p] = static_cast<Index>(tuples[p].size());
  if (withLabels) {
    C.labels.resize(levels);
    for (size_t p = 0; p < levels; ++p) {
      for (const auto& tup : tuples[p]) {
        std::string lbl = "U(";
        for (size_t i = 0; i < tup.size(); ++i) lbl += (i ? "," : "") + std::to_string(tup[i]);
        C.labels[p].push_back(lbl + ")");
      }
    }
  }
  for (size_t p = 0; p + 1 < levels; ++p) {
    RatMat d = RatMat::Constant(C.dims[p + 1], C.dims[p], Rational(0));
    for (size_t t = 0; t < tuples[p + 1].size(); ++t) {
      const auto& tup = tuples[p + 1][t];
      int sign = 1;
      for (size_t drop = 0; drop < tup.size(); ++drop) {
        std::vector<int> sub;
        for (size_t i = 0; i < tup.size(); ++i) {
          if (i != drop) sub.push_back(tup[i]);
        }
        auto it = index[p].find(sub);
        if (it != index[p].end()) d(static_cast<Index>(t), it->second) += Rational(sign);
        sign = -sign;
      }
    }
    C.d.push_back(std::move(d));
  }
  return C;
}

BettiVec bettiFrom(const CochainComplex& C, int degreeCap, const char* what) {
  auto coh = C.cohomology();
  BettiVec betti(static_cast<size_t>(degreeCap) + 1, 0);
  for (const auto& [deg, b] : coh) {
    if (deg > degreeCap) {
      throw ComputationError(std::string(what) + ": nonzero cohomology above the variety dimension");
    }
    betti[static_cast<size_t>(deg)] = b;
  }
  return betti;
}

BettiVec cechBettiGeneric(const std::vector<std::vector<int>>& coverRaySets,
                          const std::vector<char>& rayOk, int degreeCap) {
  return bettiFrom(buildCechComplex(coverRaySets, rayOk, false), degreeCap, "cech");
}

}  // namespace

WeightSupport weightSupport(const Fan& F, const ToricDivisor& D) {
  Polyhedron hull = gradientHull(F, D);
  std::vector<HalfSpace> relaxed;
  for (const auto& h : hull.inequalities()) {
    relaxed.push_back({h.normal, h.offset - Rational(1), false});
  }
  Polyhedron dilated(F.dim(), std::move(relaxed));
  WeightSupport ws;
  ws.candidates = dilated.latticePoints(false);
  for (const auto& m : ws.candidates) {
    if (!hull.contains(toRat(m))) ws.shell.push_back(m);
  }
  return ws;
}

PositiveBoundary positiveBoundary(const Fan& F, const ToricDivisor& D, const IntVec& m) {
  if (D.coeffs.size() != static_cast<size_t>(F.numRays())) {
    throw InputError("positive_boundary: divisor/fan ray mismatch");
  }
  PositiveBoundary pb;
  for (int i = 0; i < F.numRays(); ++i) {
    if (dotIntVec(m, F.ray(i)) + D.coeff(i) < 0) pb.facetRays.push_back(i);
  }
  return pb;
}

Model modelFromString(const std::string& s) {
  if (s == "cech") return Model::cech;
  if (s == "polytope") return Model::polytope;
  if (s == "points") return Model::points;
  if (s == "all") return Model::all;
  throw InputError("unknown model '" + s + "' (expected cech|polytope|points|all)");
}

std::string modelName(Model m) {
  switch (m) {
    case Model::cech: return "cech";
    case Model::polytope: return "polytope";
    case Model::points: return "points";
    case Model::all: return "all";
  }
  return "?";
}

long GradedHom::total(int degree) const {
  long t = 0;
  for (const auto& [w, b] : dims) {
    if (degree < static_cast<int>(b.size())) t += b[static_cast<size_t>(degree)];
  }
  return t;
}

long GradedHom::totalAll() const {
  long t = 0;
  for (const auto& [w, b] : dims) {
    for (long x : b) t += x;
  }
  return t;
}

CohomologyEngine::CohomologyEngine(const Fan& F) : fan_(F) {
  if (!F.flags().simplicial || !F.flags().complete) {
    throw UnsupportedError("cohomology: fan must be simplicial and complete");
  }
  if (F.numRays() > 62) throw UnsupportedError("cohomology: too many rays for mask caching");
}

CohomologyEngine::Mask CohomologyEngine::rayMask(const ToricDivisor& D, const IntVec& m) const {
  if (D.coeffs.size() != static_cast<size_t>(fan_.numRays())) {
    throw InputError("cohomology: divisor/fan ray mismatch");
  }
  Mask mask = 0;
  for (int i = 0; i < fan_.numRays(); ++i) {
    if (dotIntVec(m, fan_.ray(i)) + D.coeff(i) >= 0) mask |= (Mask(1) << i);
  }
  return mask;
}

BettiVec CohomologyEngine::cechBettiForMask(Mask mask) {
  auto it = cechCache_.find(mask);
  if (it != cechCache_.end()) return it->second;
  std::vector<char> rayOk(static_cast<size_t>(fan_.numRays()), 0);
  for (int i = 0; i < fan_.numRays(); ++i) rayOk[static_cast<size_t>(i)] = (mask >> i) & 1;
  BettiVec b = cechBettiGeneric(fan_.maxCones(), rayOk, fan_.dim());
  cechCache_.emplace(mask, b);
  return b;
}

void CohomologyEngine::buildReference() {
  if (refBuilt_) return;
  if (refOverride_) {
    refAmple_ = *refOverride_;
  } else {
    // Search small coefficient vectors for an ample divisor; the polytope
    // model only needs its combinatorics (normal fan = the fan).
    const int n = fan_.numRays();
    ToricDivisor all1 = ToricDivisor::zero(n);
    for (auto& c : all1.coeffs) c = 1;
    std::optional<ToricDivisor> found;
    if (isAmple(fan_, all1)) found = all1;
    long budget = 300000;
    for (long B = 1; B <= 4 && !found; ++B) {
      // odometer over {0..B}^n, requiring some coefficient equal to B
      std::vector<long> v(static_cast<size_t>(n), 0);
      while (budget-- > 0) {
        if (*std::max_element(v.begin(), v.end()) == B) {
          ToricDivisor d{v};
          if (isAmple(fan_, d)) {
            found = d;
            break;
          }
        }
        int i = 0;
        while (i < n && v[static_cast<size_t>(i)] == B) v[static_cast<size_t>(i++)] = 0;
        if (i == n) break;
        v[static_cast<size_t>(i)]++;
      }
    }
    if (!found) {
      throw UnsupportedError(
          "polytope model: no small ample reference divisor found "
          "(supply one with setReferenceAmple)");
    }
    refAmple_ = *found;
  }

  Polyhedron Q = divisorPolytope(fan_, refAmple_);
  FaceLattice L = faceLattice(Q);
  if (L.facetInequalities.size() != static_cast<size_t>(fan_.numRays())) {
    throw ComputationError("polytope model: ample polytope lost a facet");
  }
  // map each irredundant facet inequality back to its ray
  std::vector<int> facetOfRay(static_cast<size_t>(fan_.numRays()), -1);
  for (size_t f = 0; f < L.facetInequalities.size(); ++f) {
    IntVec normal = primitiveDirection(L.facetInequalities[f].normal);
    int r = fan_.rayIndex(normal);
    if (r < 0) throw ComputationError("polytope model: facet normal is not a ray");
    facetOfRay[static_cast<size_t>(r)] = static_cast<int>(f);
  }
  for (int r = 0; r < fan_.numRays(); ++r) {
    if (facetOfRay[static_cast<size_t>(r)] < 0) {
      throw ComputationError("polytope model: ray without a facet");
    }
  }

  refComplex_ = orderComplex(L, /*includeTop=*/true);
  // Per face: bitmask of rays whose facet contains it.
  std::vector<Mask> faceBits(L.faces.size(), 0);
  for (size_t f = 0; f < L.faces.size(); ++f) {
    for (int r = 0; r < fan_.numRays(); ++r) {
      int facetFace = L.facetFaceIdx[static_cast<size_t>(facetOfRay[static_cast<size_t>(r)])];
      if (L.faceLeq(static_cast<int>(f), facetFace)) faceBits[f] |= (Mask(1) << r);
    }
  }
  simplexFacetBits_.resize(refComplex_.simplices.size());
  for (size_t lvl = 0; lvl < refComplex_.simplices.size(); ++lvl) {
    simplexFacetBits_[lvl].reserve(refComplex_.simplices[lvl].size());
    for (const auto& chain : refComplex_.simplices[lvl]) {
      // a chain lies in the subcomplex of facet F exactly when its largest
      // face does
      simplexFacetBits_[lvl].push_back(faceBits[static_cast<size_t>(chain.back())]);
    }
  }
  refBuilt_ = true;
}

const ToricDivisor& CohomologyEngine::referenceAmple() {
  buildReference();
  return refAmple_;
}

void CohomologyEngine::setReferenceAmple(const ToricDivisor& D) {
  if (refBuilt_) throw InputError("setReferenceAmple: polytope model already built");
  if (!isAmple(fan_, D)) throw InputError("setReferenceAmple: divisor is not ample");
  refOverride_ = D;
}

CochainComplex CohomologyEngine::buildPolytopeComplex(Mask mask, bool withLabels) {
  if (fan_.dim() > 4) throw UnsupportedError("polytope model: dimension > 4");
  buildReference();
  // Selected facets = rays failing the pairing condition; relative cochains
  // of (Q_b, union of selected closed facets).
  Mask selected = ~mask;
  std::vector<std::vector<char>> keep(refComplex_.simplices.size());
  for (size_t lvl = 0; lvl < refComplex_.simplices.size(); ++lvl) {
    keep[lvl].resize(refComplex_.simplices[lvl].size());
    for (size_t s = 0; s < refComplex_.simplices[lvl].size(); ++s) {
      keep[lvl][s] = (simplexFacetBits_[lvl][s] & selected) ? 0 : 1;
    }
  }
  CochainComplex C = refComplex_.relativeCochain(keep);
  if (withLabels) {
    C.labels.assign(C.dims.size(), {});
    for (size_t lvl = 0; lvl < refComplex_.simplices.size(); ++lvl) {
      for (size_t s = 0; s < refComplex_.simplices[lvl].size(); ++s) {
        if (!keep[lvl][s]) continue;
        std::string lbl = "chain(";
        const auto& chain = refComplex_.simplices[lvl][s];
        for (size_t i = 0; i < chain.size(); ++i) {
          lbl += (i ? "<" : "") + std::string("f") + std::to_string(chain[i]);
        }
        C.labels[lvl].push_back(lbl + ")");
      }
    }
  }
  return C;
}

BettiVec CohomologyEngine::polytopeBettiForMask(Mask mask) {
  auto it = polyCache_.find(mask);
  if (it != polyCache_.end()) return it->second;
  BettiVec betti = bettiFrom(buildPolytopeComplex(mask, false), fan_.dim(), "polytope model");
  polyCache_.emplace(mask, betti);
  return betti;
}

WeightComplex CohomologyEngine::weightComplex(const ToricDivisor& D, const IntVec& m, Model model) {
  WeightComplex wc;
  wc.weight = m;
  wc.model = model;
  if (model == Model::cech) {
    std::vector<char> rayOk(static_cast<size_t>(fan_.numRays()), 0);
    Mask mask = rayMask(D, m);
    for (int i = 0; i < fan_.numRays(); ++i) rayOk[static_cast<size_t>(i)] = (mask >> i) & 1;
    wc.complex = buildCechComplex(fan_.maxCones(), rayOk, true);
    wc.betti = bettiFrom(wc.complex, fan_.dim(), "cech");
  } else if (model == Model::polytope) {
    wc.complex = buildPolytopeComplex(rayMask(D, m), true);
    wc.betti = bettiFrom(wc.complex, fan_.dim(), "polytope model");
  } else {
    throw InputError("weightComplex: only the cech and polytope models carry complexes");
  }
  return wc;
}

BettiVec CohomologyEngine::pointsBetti(const ToricDivisor& D, const IntVec& m) const {
  BettiVec betti(static_cast<size_t>(fan_.dim()) + 1, 0);
  bool inP = true, inNegInterior = true;
  for (int i = 0; i < fan_.numRays(); ++i) {
    long pairing = dotIntVec(m, fan_.ray(i)) + D.coeff(i);
    if (pairing < 0) inP = false;
    if (pairing >= 0) inNegInterior = false;  // -m interior to P(-D) iff all pairings < 0
  }
  if (inP) betti[0] = 1;
  if (inNegInterior) betti[static_cast<size_t>(fan_.dim())] = 1;
  return betti;
}

BettiVec CohomologyEngine::weightBetti(const ToricDivisor& D, const IntVec& m, Model model) {
  switch (model) {
    case Model::cech: return cechBettiForMask(rayMask(D, m));
    case Model::polytope: return polytopeBettiForMask(rayMask(D, m));
    case Model::points: return pointsBetti(D, m);
    case Model::all: {
      BettiVec c = cechBettiForMask(rayMask(D, m));
      BettiVec p = polytopeBettiForMask(rayMask(D, m));
      if (c != p) {
        throw ComputationError("model disagreement at weight " + repr(m));
      }
      return c;
    }
  }
  throw InputError("weightBetti: bad model");
}

GradedHom CohomologyEngine::divisorCohomology(const ToricDivisor& D, Model model) {
  WeightSupport ws = weightSupport(fan_, D);

  // Resolve all masks first (two passes keep the cache single-threaded),
  // then evaluate weights concurrently with a deterministic output slot per
  // weight.
  std::vector<Mask> masks(ws.candidates.size());
  for (size_t i = 0; i < ws.candidates.size(); ++i) masks[i] = rayMask(D, ws.candidates[i]);
  {
    std::set<Mask> uniq(masks.begin(), masks.end());
    for (Mask mk : uniq) {
      if (model == Model::cech || model == Model::all) cechBettiForMask(mk);
      if (model == Model::polytope || model == Model::all) polytopeBettiForMask(mk);
    }
  }
  std::vector<BettiVec> results(ws.candidates.size());
  std::vector<ModelMismatch> mismatches;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<void>> futs;
  std::mutex mismatchMu;
  size_t chunk = (ws.candidates.size() + workers - 1) / std::max<size_t>(1, workers);
  for (unsigned w = 0; w < workers && chunk > 0; ++w) {
    size_t lo = w * chunk;
    size_t hi = std::min(ws.candidates.size(), lo + chunk);
    if (lo >= hi) break;
    futs.push_back(std::async(std::launch::async, [&, lo, hi]() {
      for (size_t i = lo; i < hi; ++i) {
        // cache is read-only now; misses cannot happen
        if (model == Model::points) {
          results[i] = pointsBetti(D, ws.candidates[i]);
        } else if (model == Model::cech) {
          results[i] = cechCache_.at(masks[i]);
        } else if (model == Model::polytope) {
          results[i] = polyCache_.at(masks[i]);
        } else {
          BettiVec c = cechCache_.at(masks[i]);
          BettiVec p = polyCache_.at(masks[i]);
          if (c != p) {
            std::lock_guard<std::mutex> g(mismatchMu);
            mismatches.push_back({ws.candidates[i], c, p});
          }
          results[i] = c;
        }
      }
    }));
  }
  for (auto& f : futs) f.get();
  if (!mismatches.empty()) {
    std::sort(mismatches.begin(), mismatches.end(),
              [](const ModelMismatch& a, const ModelMismatch& b) {
                return toStd(a.weight) < toStd(b.weight);
              });
    std::ostringstream os;
    os << "model disagreement for divisor at " << mismatches.size() << " weight(s):";
    for (const auto& mm : mismatches) {
      os << " " << repr(mm.weight) << " cech=(";
      for (size_t i = 0; i < mm.cech.size(); ++i) os << (i ? "," : "") << mm.cech[i];
      os << ") polytope=(";
      for (size_t i = 0; i < mm.polytope.size(); ++i) os << (i ? "," : "") << mm.polytope[i];
      os << ")";
    }
    throw ComputationError(os.str());
  }

  // shell check: the enumeration bound is certified per run
  std::set<std::vector<long>> shellSet;
  for (const auto& s : ws.shell) shellSet.insert(toStd(s));
  GradedHom out;
  out.degreeRange = fan_.dim();
  for (size_t i = 0; i < ws.candidates.size(); ++i) {
    bool nonzero = false;
    for (long b : results[i]) nonzero = nonzero || b != 0;
    if (!nonzero) continue;
    if (shellSet.count(toStd(ws.candidates[i]))) {
      throw ComputationError("weight bound violation: shell weight " +
                             repr(ws.candidates[i]) + " has nonzero cohomology");
    }
    out.dims[toStd(ws.candidates[i])] = results[i];
  }
  return out;
}

GradedHom CohomologyEngine::hom(const SectionClass& from, const SectionClass& to, Model model) {
  ToricDivisor diff = divisorFromSection(to) - divisorFromSection(from);
  return divisorCohomology(diff, model);
}

bool monodromyInvarianceCheck(CohomologyEngine& eng, const ToricDivisor& twist,
                              const SectionClass& nu0, const SectionClass& nu1, Model model) {
  MonodromyFunctor f{twist};
  GradedHom before = eng.hom(nu0, nu1, model);
  GradedHom after = eng.hom(monodromyApply(f, nu0), monodromyApply(f, nu1), model);
  return before == after;
}

std::vector<long> SectionRing::dims() const {
  std::vector<long> d;
  d.reserve(graded.size());
  for (const auto& g : graded) d.push_back(static_cast<long>(g.size()));
  return d;
}

long SectionRing::indexOf(int k, const IntVec& w) const {
  const auto& g = graded[static_cast<size_t>(k)];
  for (size_t i = 0; i < g.size(); ++i) {
    if (g[i] == w) return static_cast<long>(i);
  }
  return -1;
}

long SectionRing::productIndex(int kp, long ip, int kq, long iq) const {
  IntVec sum = graded[static_cast<size_t>(kp)][static_cast<size_t>(ip)] +
               graded[static_cast<size_t>(kq)][static_cast<size_t>(iq)];
  long idx = indexOf(kp + kq, sum);
  if (idx < 0) throw ComputationError("section ring: product escaped its graded piece");
  return idx;
}

SectionRing sectionRing(const Fan& F, const ToricDivisor& D, int kmax) {
  if (kmax < 2) throw InputError("section_ring: kmax must be at least 2");
  if (!isAmple(F, D)) throw InputError("section_ring: divisor must be ample");
  SectionRing R;
  R.divisor = D;
  R.kmax = kmax;
  for (int k = 0; k <= kmax; ++k) {
    R.graded.push_back(divisorPolytope(F, D * k).latticePoints(false));
  }
  // closure of the multiplication p + q
  for (int kp = 0; kp <= kmax; ++kp) {
    for (int kq = 0; kp + kq <= kmax; ++kq) {
      for (size_t ip = 0; ip < R.graded[static_cast<size_t>(kp)].size(); ++ip) {
        for (size_t iq = 0; iq < R.graded[static_cast<size_t>(kq)].size(); ++iq) {
          R.productIndex(kp, static_cast<long>(ip), kq, static_cast<long>(iq));
        }
      }
    }
  }
  // associativity on deterministic random triples
  std::mt19937 rng(20240708u);
  for (int trial = 0; trial < 200; ++trial) {
    int ka = 1 + static_cast<int>(rng() % 2);
    int kb = 1, kc = 1;
    if (ka + kb + kc > kmax) ka = 1;
    if (ka + kb + kc > kmax) break;
    auto pick = [&](int k) -> long {
      const auto& g = R.graded[static_cast<size_t>(k)];
      if (g.empty()) return -1;
      return static_cast<long>(rng() % g.size());
    };
    long ia = pick(ka), ib = pick(kb), ic = pick(kc);
    if (ia < 0 || ib < 0 || ic < 0) continue;
    long ab = R.productIndex(ka, ia, kb, ib);
    long left = R.productIndex(ka + kb, ab, kc, ic);
    long bc = R.productIndex(kb, ib, kc, ic);
    long right = R.productIndex(ka, ia, kb + kc, bc);
    if (left != right) throw ComputationError("section ring: associativity failed");
  }
  return R;
}

SectionActionReport applyDefiningSection(const Fan& F, const DefiningSection& s,
                                         const SectionClass& nu0, const SectionClass& nu1) {
  if (!s.divisor.isEffective()) {
    throw InputError("apply_defining_section: divisor must be effective");
  }
  ToricDivisor diff = divisorFromSection(nu1) - divisorFromSection(nu0);
  Polyhedron src = divisorPolytope(F, diff);
  Polyhedron dst = divisorPolytope(F, diff + s.divisor);
  SectionActionReport rep;
  rep.sourceWeights = src.latticePoints(false);
  rep.targetWeights = dst.latticePoints(false);
  std::set<std::vector<long>> target;
  for (const auto& w : rep.targetWeights) target.insert(toStd(w));
  rep.weightsPreserved = true;
  for (const auto& w : rep.sourceWeights) {
    if (!target.count(toStd(w))) rep.weightsPreserved = false;
  }
  // the map is m -> m + 0, so injectivity holds iff the weights land in the
  // target, which the inclusion of polytopes guarantees for effective D
  rep.injective = rep.weightsPreserved;
  return rep;
}

LocalizationResult localize(const Fan& F, const ToricDivisor& cut, const ToricDivisor& bundle,
                            const std::vector<std::pair<long, long>>& box) {
  if (!cut.isEffective()) throw InputError("localize: cut divisor must be effective");
  if (box.size() != static_cast<size_t>(F.dim())) {
    throw InputError("localize: weight box must match the fan dimension");
  }
  for (const auto& [lo, hi] : box) {
    if (lo > hi) throw InputError("localize: empty weight box range");
  }
  std::vector<int> support;
  for (int i = 0; i < F.numRays(); ++i) {
    if (cut.coeff(i) > 0) support.push_back(i);
  }

  // subfan of cones avoiding the support: max faces T_sigma = rays(sigma) \ S
  std::vector<std::vector<int>> subCones;
  for (const auto& cone : F.maxCones()) {
    std::vector<int> t;
    for (int r : cone) {
      if (!std::binary_search(support.begin(), support.end(), r)) t.push_back(r);
    }
    subCones.push_back(t);
  }
  // keep inclusion-maximal distinct ray sets
  std::sort(subCones.begin(), subCones.end());
  subCones.erase(std::unique(subCones.begin(), subCones.end()), subCones.end());
  std::vector<std::vector<int>> maximal;
  for (const auto& a : subCones) {
    bool dominated = false;
    for (const auto& b : subCones) {
      if (&a != &b && a.size() < b.size() &&
          std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(a);
  }

  LocalizationResult res;
  res.crossCheckOk = true;
  IntVec m(F.dim());
  std::vector<long> idx(static_cast<size_t>(F.dim()));
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = box[i].first;
  while (true) {
    for (Index i = 0; i < m.size(); ++i) m[i] = idx[static_cast<size_t>(i)];
    // stabilized colimit: all conditions away from the support must hold
    bool stable = true;
    for (int i = 0; i < F.numRays(); ++i) {
      if (std::binary_search(support.begin(), support.end(), i)) continue;
      if (dotIntVec(m, F.ray(i)) + bundle.coeff(i) < 0) stable = false;
    }
    long k0 = 0;
    if (stable) {
      for (int i : support) {
        long deficit = -(dotIntVec(m, F.ray(i)) + bundle.coeff(i));
        if (deficit > 0) {
          long need = (deficit + cut.coeff(i) - 1) / cut.coeff(i);  // ceil
          k0 = std::max(k0, need);
        }
      }
    }
    // Cech H^0 of the bundle over the subfan cover
    std::vector<char> rayOk(static_cast<size_t>(F.numRays()), 0);
    for (int i = 0; i < F.numRays(); ++i) {
      rayOk[static_cast<size_t>(i)] = dotIntVec(m, F.ray(i)) + bundle.coeff(i) >= 0;
    }
    BettiVec cech = cechBettiGeneric(maximal, rayOk, F.dim());
    res.weights.push_back(m);
    res.stabilizedDim.push_back(stable ? 1 : 0);
    res.stabilizationIndex.push_back(k0);
    res.subfanCech.push_back(static_cast<int>(cech[0]));
    if (cech[0] != (stable ? 1 : 0)) res.crossCheckOk = false;

    size_t i = 0;
    while (i < idx.size() && idx[i] == box[i].second) {
      idx[i] = box[i].first;
      ++i;
    }
    if (i == idx.size()) break;
    ++idx[i];
  }
  return res;
}

}  // namespace monotoric
