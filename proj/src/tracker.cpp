#include "monotoric/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace monotoric {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Cvec = Eigen::VectorXcd;
using Cmat = Eigen::MatrixXcd;
using Cplx = std::complex<double>;

Cplx monomial(const IntVec& a, const Cvec& w) {
  Cplx e = 0.0;
  for (Index i = 0; i < a.size(); ++i) e += static_cast<double>(a[i]) * w[i];
  return std::exp(e);
}

struct System {
  const SuperpotentialConfig& cfg;
  double theta;

  Cplx coeff(size_t a) const {
    double ang = static_cast<double>(cfg.twist[a]) * theta;
    return cfg.coeffs[a] * Cplx(std::cos(ang), std::sin(ang));
  }

  Cplx value(const Cvec& w) const {
    Cplx v = 0.0;
    for (size_t a = 0; a < cfg.rays.size(); ++a) v += coeff(a) * monomial(cfg.rays[a], w);
    return v;
  }

  // gradient components F_j = sum_a c_a a_j exp(<a,w>)
  Cvec grad(const Cvec& w) const {
    Cvec F = Cvec::Zero(cfg.dim());
    for (size_t a = 0; a < cfg.rays.size(); ++a) {
      Cplx t = coeff(a) * monomial(cfg.rays[a], w);
      for (Index j = 0; j < F.size(); ++j) F[j] += static_cast<double>(cfg.rays[a][j]) * t;
    }
    return F;
  }

  Cmat jacobian(const Cvec& w) const {
    Cmat J = Cmat::Zero(cfg.dim(), cfg.dim());
    for (size_t a = 0; a < cfg.rays.size(); ++a) {
      Cplx t = coeff(a) * monomial(cfg.rays[a], w);
      for (Index j = 0; j < J.rows(); ++j) {
        for (Index k = 0; k < J.cols(); ++k) {
          J(j, k) += static_cast<double>(cfg.rays[a][j]) * static_cast<double>(cfg.rays[a][k]) * t;
        }
      }
    }
    return J;
  }
};

// Newton iteration; returns true on convergence below tol.
bool newton(const System& sys, Cvec& w, double tol, int maxIter = 80) {
  for (int it = 0; it < maxIter; ++it) {
    Cvec F = sys.grad(w);
    double res = F.cwiseAbs().maxCoeff();
    if (res < tol) return true;
    Eigen::FullPivLU<Cmat> lu(sys.jacobian(w));
    if (!lu.isInvertible()) return false;
    Cvec step = lu.solve(F);
    if (!step.allFinite()) return false;
    if (step.cwiseAbs().maxCoeff() > 50.0) return false;  // runaway start
    w -= step;
  }
  return false;
}

void normalizeImag(Cvec& w) {
  for (Index i = 0; i < w.size(); ++i) {
    double im = std::fmod(w[i].imag(), kTwoPi);
    if (im < 0) im += kTwoPi;
    w[i] = Cplx(w[i].real(), im);
  }
}

double torusDistance(const Cvec& a, const Cvec& b) {
  double d = 0.0;
  for (Index i = 0; i < a.size(); ++i) {
    d = std::max(d, std::abs(a[i].real() - b[i].real()));
    double di = std::abs(std::fmod(a[i].imag() - b[i].imag(), kTwoPi));
    di = std::min(di, kTwoPi - di);
    d = std::max(d, di);
  }
  return d;
}

}  // namespace

void SuperpotentialConfig::validate() const {
  if (rays.empty()) throw InputError("tracker: no monomials");
  if (coeffs.size() != rays.size() || twist.size() != rays.size()) {
    throw InputError("tracker: coefficient/twist lists must match the monomials");
  }
  for (const auto& c : coeffs) {
    if (std::abs(c) == 0.0) throw InputError("tracker: coefficients must be nonzero");
  }
  for (const auto& r : rays) {
    if (r.size() != rays[0].size()) throw InputError("tracker: ray dimension mismatch");
  }
  if (steps < 8) throw InputError("tracker: need at least 8 steps");
  if (expectedCriticalPoints > 0 && steps < 8 * expectedCriticalPoints) {
    throw InputError("tracker: steps must be at least 8 x expected critical points");
  }
}

std::vector<CriticalPoint> criticalPoints(const SuperpotentialConfig& cfg, double theta) {
  cfg.validate();
  System sys{cfg, theta};
  const int n = cfg.dim();
  std::vector<Cvec> roots;

  std::vector<double> reGrid, imGrid;
  for (int i = 0; i < cfg.realGridPerAxis; ++i) {
    double t = cfg.realGridPerAxis == 1
                   ? 0.0
                   : -cfg.realGridRadius + 2.0 * cfg.realGridRadius * i / (cfg.realGridPerAxis - 1);
    reGrid.push_back(t);
  }
  for (int i = 0; i < cfg.argGridPerAxis; ++i) {
    imGrid.push_back(kTwoPi * i / cfg.argGridPerAxis);
  }

  std::vector<int> odo(static_cast<size_t>(2 * n), 0);
  const int reN = static_cast<int>(reGrid.size());
  const int imN = static_cast<int>(imGrid.size());
  while (true) {
    Cvec w(n);
    for (int i = 0; i < n; ++i) {
      w[i] = Cplx(reGrid[static_cast<size_t>(odo[static_cast<size_t>(i)])],
                  imGrid[static_cast<size_t>(odo[static_cast<size_t>(n + i)])]);
    }
    if (newton(sys, w, cfg.newtonTol)) {
      normalizeImag(w);
      bool dup = false;
      for (const auto& r : roots) {
        if (torusDistance(r, w) < 1e-7) {
          dup = true;
          break;
        }
      }
      if (!dup) roots.push_back(w);
    }
    size_t i = 0;
    while (i < odo.size()) {
      int cap = (i < static_cast<size_t>(n)) ? reN : imN;
      if (odo[i] + 1 < cap) {
        ++odo[i];
        break;
      }
      odo[i] = 0;
      ++i;
    }
    if (i == odo.size()) break;
  }

  std::vector<CriticalPoint> out;
  for (const auto& w : roots) {
    Eigen::FullPivLU<Cmat> lu(sys.jacobian(w));
    if (!lu.isInvertible()) {
      throw ComputationError("tracker: degenerate critical point (singular Jacobian)");
    }
    double res = sys.grad(w).cwiseAbs().maxCoeff();
    if (res > cfg.residualTol) continue;
    out.push_back({w, sys.value(w)});
  }
  std::sort(out.begin(), out.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    double aa = std::arg(a.value), ab = std::arg(b.value);
    if (std::abs(aa - ab) > 1e-9) return aa < ab;
    return std::abs(a.value) < std::abs(b.value);
  });
  if (cfg.expectedCriticalPoints > 0 &&
      static_cast<int>(out.size()) < cfg.expectedCriticalPoints) {
    throw ComputationError("tracker: incomplete root set, found " + std::to_string(out.size()) +
                           " of " + std::to_string(cfg.expectedCriticalPoints));
  }
  return out;
}

MonodromyTrace trackMonodromy(const SuperpotentialConfig& cfg) {
  cfg.validate();
  std::vector<CriticalPoint> start = criticalPoints(cfg, 0.0);
  if (start.empty()) throw ComputationError("tracker: no critical points at theta = 0");
  const size_t np = start.size();

  MonodromyTrace trace;
  trace.thetas.resize(np);
  trace.points.resize(np);
  trace.values.resize(np);
  trace.windings.assign(np, 0.0);

  std::vector<Cvec> cur(np);
  std::vector<Cplx> curVal(np);
  for (size_t p = 0; p < np; ++p) {
    cur[p] = start[p].w;
    curVal[p] = start[p].value;
    trace.thetas[p].push_back(0.0);
    trace.points[p].push_back(cur[p]);
    trace.values[p].push_back(curVal[p]);
  }

  const double base = kTwoPi / cfg.steps;
  // advance one path from thetaFrom by dt, halving adaptively
  std::function<void(size_t, double, double, int)> advance = [&](size_t p, double thetaFrom,
                                                                 double dt, int depth) {
    if (depth > 24) throw ComputationError("tracker: continuation failed to converge");
    double thetaTo = thetaFrom + dt;
    System sys{cfg, thetaTo};
    Cvec w = cur[p];
    bool ok = newton(sys, w, cfg.newtonTol, 40);
    if (ok && (w - cur[p]).cwiseAbs().maxCoeff() > 0.45) ok = false;  // path jump
    if (!ok) {
      advance(p, thetaFrom, dt / 2, depth + 1);
      advance(p, thetaFrom + dt / 2, dt / 2, depth + 1);
      return;
    }
    Cplx v = sys.value(w);
    double res = sys.grad(w).cwiseAbs().maxCoeff();
    trace.maxResidual = std::max(trace.maxResidual, res);
    double darg = std::arg(v / curVal[p]);
    trace.windings[p] += darg / kTwoPi;
    cur[p] = w;
    curVal[p] = v;
    trace.thetas[p].push_back(thetaTo);
    trace.points[p].push_back(w);
    trace.values[p].push_back(v);
  };

  for (int s = 0; s < cfg.steps; ++s) {
    double theta = s * base;
    for (size_t p = 0; p < np; ++p) advance(p, theta, base, 0);
    // collision watch
    for (size_t p = 0; p < np; ++p) {
      for (size_t q = p + 1; q < np; ++q) {
        if (std::abs(curVal[p] - curVal[q]) < 1e-6 && torusDistance(cur[p], cur[q]) < 1e-6) {
          throw ComputationError("tracker: path collision, refine steps");
        }
      }
    }
  }

  // endpoint matching: the theta = 2pi configuration equals the start
  trace.permutation.assign(np, -1);
  std::vector<bool> used(np, false);
  for (size_t p = 0; p < np; ++p) {
    double best = 1e9;
    int bestIdx = -1;
    for (size_t q = 0; q < np; ++q) {
      if (used[q]) continue;
      double d = torusDistance(cur[p], start[q].w);
      if (d < best) {
        best = d;
        bestIdx = static_cast<int>(q);
      }
    }
    if (bestIdx < 0 || best > 1e-5) {
      throw ComputationError("tracker: endpoint matching failed (distance " +
                             std::to_string(best) + ")");
    }
    used[static_cast<size_t>(bestIdx)] = true;
    trace.permutation[p] = bestIdx;
  }
  return trace;
}

}  // namespace monotoric
