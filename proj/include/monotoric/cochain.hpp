#pragma once

#include <map>
#include <string>
#include <vector>

#include "monotoric/linalg.hpp"
#include "monotoric/types.hpp"

namespace monotoric {

// A finite cochain complex of Q-vector spaces on a contiguous degree range.
// terms[k] lives in degree minDegree + k; d[k] maps terms[k] -> terms[k+1].
struct CochainComplex {
  int minDegree = 0;
  std::vector<Index> dims;
  std::vector<RatMat> d;  // d.size() == dims.size() - 1 (or 0 for a single term)
  std::vector<std::vector<std::string>> labels;  // optional basis labels per degree

  int maxDegree() const { return minDegree + static_cast<int>(dims.size()) - 1; }

  bool differentialSquaresToZero() const;

  // Betti numbers by exact rank; throws ComputationError when d*d != 0.
  std::map<int, long> cohomology() const;
};

}  // namespace monotoric
