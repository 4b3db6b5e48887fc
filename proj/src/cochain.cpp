#include "monotoric/cochain.hpp"

namespace monotoric {

bool CochainComplex::differentialSquaresToZero() const {
  for (size_t k = 0; k + 1 < d.size(); ++k) {
    if (d[k].rows() == 0 || d[k].cols() == 0 || d[k + 1].rows() == 0) continue;
    RatMat prod = d[k + 1] * d[k];
    for (Index i = 0; i < prod.rows(); ++i) {
      for (Index j = 0; j < prod.cols(); ++j) {
        if (!prod(i, j).isZero()) return false;
      }
    }
  }
  return true;
}

std::map<int, long> CochainComplex::cohomology() const {
  if (d.size() + 1 != dims.size() && !(dims.size() == 1 && d.empty())) {
    throw InputError("cochain: differential count must be one less than term count");
  }
  for (size_t k = 0; k < d.size(); ++k) {
    if (d[k].cols() != dims[k] || d[k].rows() != dims[k + 1]) {
      throw InputError("cochain: differential shape mismatch");
    }
  }
  if (!differentialSquaresToZero()) {
    throw ComputationError("cochain: d composed with d is nonzero");
  }
  std::vector<Index> ranks(d.size(), 0);
  for (size_t k = 0; k < d.size(); ++k) ranks[k] = rank(d[k]);
  std::map<int, long> betti;
  for (size_t k = 0; k < dims.size(); ++k) {
    Index out = (k < d.size()) ? ranks[k] : 0;
    Index in = (k > 0) ? ranks[k - 1] : 0;
    long b = static_cast<long>(dims[k] - out - in);
    if (b < 0) throw ComputationError("cochain: negative Betti number (rank inconsistency)");
    if (b > 0) betti[minDegree + static_cast<int>(k)] = b;
  }
  return betti;
}

}  // namespace monotoric
