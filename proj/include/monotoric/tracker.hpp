#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "monotoric/types.hpp"

namespace monotoric {

// Coefficient-rotation family  W^theta(z) = sum_a c_a e^{i n_a theta} z^a
// studied in logarithmic coordinates w = log z, where the critical-point
// equations become exponential sums. Double precision throughout; this
// module never feeds the exact-arithmetic ones.
struct SuperpotentialConfig {
  std::vector<IntVec> rays;
  std::vector<std::complex<double>> coeffs;  // all nonzero
  std::vector<long> twist;                   // n_alpha per ray
  int steps = 256;
  int expectedCriticalPoints = 0;  // 0 = unknown; enables the full-count precondition
  double realGridRadius = 1.5;     // multistart grid extent in Re(w)
  int realGridPerAxis = 3;
  int argGridPerAxis = 6;
  double newtonTol = 1e-12;
  double residualTol = 1e-10;

  int dim() const { return rays.empty() ? 0 : static_cast<int>(rays[0].size()); }
  void validate() const;
};

struct CriticalPoint {
  Eigen::VectorXcd w;          // log coordinates, Im normalized to [0, 2pi)
  std::complex<double> value;  // W(exp w)
};

// One tracked path and the induced permutation of the starting points.
struct MonodromyTrace {
  std::vector<std::vector<double>> thetas;                    // per path
  std::vector<std::vector<Eigen::VectorXcd>> points;          // per path, per step
  std::vector<std::vector<std::complex<double>>> values;      // per path, per step
  std::vector<int> permutation;                               // start index -> end index
  std::vector<double> windings;  // total argument increment of the value / 2pi
  double maxResidual = 0.0;
};

// Newton from a multistart grid, deduplicated modulo 2*pi*i Z^n.
// Throws ComputationError on singular Jacobians at found roots; a short
// count (when expectedCriticalPoints > 0) is reported in the error text.
std::vector<CriticalPoint> criticalPoints(const SuperpotentialConfig& cfg, double theta);

// Predictor-corrector continuation of every critical point over
// theta in [0, 2pi] with adaptive step halving, endpoint matching and
// winding bookkeeping.
MonodromyTrace trackMonodromy(const SuperpotentialConfig& cfg);

}  // namespace monotoric
