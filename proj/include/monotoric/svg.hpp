#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "monotoric/division.hpp"
#include "monotoric/fan.hpp"

namespace monotoric {

// Deterministic SVG rendering of a 2D fan with the regions of a monomial
// division clipped to a square view box; regions get per-ray colors with
// opacity blending on overlaps. Without a division only the fan is drawn.
std::string renderDivisionSvg(const Fan& F, const std::optional<MonomialDivision>& div,
                              const Rational& viewRadius);

void writeDivisionSvg(const std::string& path, const Fan& F,
                      const std::optional<MonomialDivision>& div, const Rational& viewRadius);

// Paths of tracked critical values in the value plane, one polyline per
// path, endpoints marked.
std::string renderValuePathsSvg(const std::vector<std::vector<std::complex<double>>>& values);
void writeValuePathsSvg(const std::string& path,
                        const std::vector<std::vector<std::complex<double>>>& values);

}  // namespace monotoric
