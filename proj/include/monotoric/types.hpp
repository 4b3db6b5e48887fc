#pragma once

#include <Eigen/Core>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "monotoric/rational.hpp"

namespace monotoric {

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RatVec = Vec<Rational>;
using RatMat = Mat<Rational>;
using IntVec = Vec<long>;
using Index = Eigen::Index;

// Bad user input: malformed files, ray mismatches, violated preconditions.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& m) : std::runtime_error(m) {}
};

// A computation that ran but could not produce a trustworthy result:
// construction failures, internal consistency violations, tracker degeneracies.
struct ComputationError : std::runtime_error {
  explicit ComputationError(const std::string& m) : std::runtime_error(m) {}
};

// Outside the supported regime (dimension caps, non-simplicial input, ...).
struct UnsupportedError : std::runtime_error {
  explicit UnsupportedError(const std::string& m) : std::runtime_error(m) {}
};

inline RatVec ratVec(std::initializer_list<Rational> xs) {
  RatVec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (const auto& x : xs) v[i++] = x;
  return v;
}

inline IntVec intVec(std::initializer_list<long> xs) {
  IntVec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (const auto& x : xs) v[i++] = x;
  return v;
}

inline RatVec toRat(const IntVec& v) {
  RatVec r(v.size());
  for (Index i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

// Exact integer recovery; throws unless every entry is an integer.
inline IntVec toIntExact(const RatVec& v) {
  IntVec r(v.size());
  for (Index i = 0; i < v.size(); ++i) r[i] = v[i].toLongExact();
  return r;
}

inline std::vector<long> toStd(const IntVec& v) {
  return std::vector<long>(v.data(), v.data() + v.size());
}

inline IntVec fromStd(const std::vector<long>& v) {
  IntVec r(static_cast<Index>(v.size()));
  for (Index i = 0; i < r.size(); ++i) r[i] = v[static_cast<size_t>(i)];
  return r;
}

inline std::string repr(const IntVec& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

inline std::string repr(const RatVec& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

struct LexLess {
  bool operator()(const RatVec& a, const RatVec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Index i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

}  // namespace monotoric
