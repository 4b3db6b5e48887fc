#pragma once

#include <optional>
#include <vector>

#include "monotoric/types.hpp"

namespace monotoric {

// Exact Gaussian elimination helpers over any field scalar (used with
// Rational). Pivoting only needs nonzero tests, so no ordering of the
// scalar type is assumed.

// Reduces m to row echelon form in place; returns the pivot columns.
template <typename S>
std::vector<Index> rowEchelon(Mat<S>& m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index p = -1;
    for (Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != S(0)) { p = r; break; }
    }
    if (p < 0) continue;
    if (p != row) m.row(p).swap(m.row(row));
    S inv = S(1) / m(row, col);
    for (Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      S f = m(r, col);
      if (f == S(0)) continue;
      for (Index c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename S>
Index rank(Mat<S> m) {
  return static_cast<Index>(rowEchelon(m).size());
}

// Any solution of Ax = b, or nullopt when inconsistent.
template <typename S>
std::optional<Vec<S>> solve(const Mat<S>& A, const Vec<S>& b) {
  Mat<S> aug(A.rows(), A.cols() + 1);
  aug.leftCols(A.cols()) = A;
  aug.col(A.cols()) = b;
  std::vector<Index> pivots = rowEchelon(aug);
  if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;
  Vec<S> x = Vec<S>::Constant(A.cols(), S(0));
  for (size_t i = 0; i < pivots.size(); ++i) {
    // free variables stay 0, so the pivot value is the augmented column entry
    x[pivots[i]] = aug(static_cast<Index>(i), A.cols());
  }
  return x;
}

// Unique solution of a square nonsingular system, or nullopt if singular.
template <typename S>
std::optional<Vec<S>> solveSquare(const Mat<S>& A, const Vec<S>& b) {
  if (A.rows() != A.cols()) return std::nullopt;
  Mat<S> aug(A.rows(), A.cols() + 1);
  aug.leftCols(A.cols()) = A;
  aug.col(A.cols()) = b;
  std::vector<Index> pivots = rowEchelon(aug);
  if (static_cast<Index>(pivots.size()) != A.cols()) return std::nullopt;
  if (pivots.back() == A.cols()) return std::nullopt;
  return Vec<S>(aug.col(A.cols()));
}

// Columns form a basis of ker(A).
template <typename S>
Mat<S> nullspaceBasis(const Mat<S>& A) {
  Mat<S> m = A;
  std::vector<Index> pivots = rowEchelon(m);
  std::vector<bool> isPivot(static_cast<size_t>(A.cols()), false);
  for (Index c : pivots) isPivot[static_cast<size_t>(c)] = true;
  Index nfree = A.cols() - static_cast<Index>(pivots.size());
  Mat<S> basis = Mat<S>::Constant(A.cols(), nfree, S(0));
  Index k = 0;
  for (Index c = 0; c < A.cols(); ++c) {
    if (isPivot[static_cast<size_t>(c)]) continue;
    basis(c, k) = S(1);
    for (size_t i = 0; i < pivots.size(); ++i) {
      basis(pivots[i], k) = -m(static_cast<Index>(i), c);
    }
    ++k;
  }
  return basis;
}

// Scales a rational vector by a positive factor so entries become coprime
// integers; the zero vector stays zero.
IntVec primitiveDirection(const RatVec& v);

inline RatMat raysAsColumns(const std::vector<IntVec>& rays, const std::vector<int>& idx) {
  if (idx.empty()) return RatMat(0, 0);
  RatMat m(rays[static_cast<size_t>(idx[0])].size(), static_cast<Index>(idx.size()));
  for (size_t j = 0; j < idx.size(); ++j) m.col(static_cast<Index>(j)) = toRat(rays[static_cast<size_t>(idx[j])]);
  return m;
}

}  // namespace monotoric
