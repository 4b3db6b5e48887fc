#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "monotoric/cohomology.hpp"
#include "monotoric/division.hpp"
#include "monotoric/fan.hpp"

namespace monotoric {

// Parsed fan file: structured plain text with "rays", "max_cones" and an
// optional "divisors" section of named coefficient lists.
//
//   rays:
//     1 0
//     0 1
//     -1 -1
//   max_cones:
//     0 1
//     0 2
//     1 2
//   divisors:
//     H: 1 0 0
struct FanDocument {
  Fan fan;
  std::map<std::string, ToricDivisor> divisors;

  const ToricDivisor& divisor(const std::string& name) const;
};

FanDocument parseFanDocument(std::istream& in);
FanDocument loadFanFile(const std::string& path);

// Division file: "k", "logc" (lists of p/q), "slack" (p/q). The monomial
// set is taken from the accompanying fan.
MonomialDivision parseDivisionDocument(std::istream& in, const std::vector<IntVec>& rays);
MonomialDivision loadDivisionFile(const std::string& path, const std::vector<IntVec>& rays);

// Resolves an output path against the directory override environment
// variable MONOTORIC_OUTDIR (absolute paths are kept as-is).
std::string resolveOutputPath(const std::string& path);

// Machine-readable report: JSON with sorted keys, so byte-identical for
// identical inputs and round-trip stable. "verified" lists the cross-checks
// that ran during the computation; "entries" carries the computed
// (weight, degree, dim) triples.
std::string gradedHomReportJson(const GradedHom& h, const std::vector<std::string>& verified);
void writeGradedHomTable(std::ostream& os, const GradedHom& h);

}  // namespace monotoric
