#pragma once

#include <vector>

#include "monotoric/fan.hpp"
#include "monotoric/types.hpp"

namespace monotoric {

// Isotopy class of a monomially admissible Lagrangian section: an integer
// value per ray of the fan. The class of the zero section is nu = 0; the
// section of a divisor D has nu(alpha) = -n_alpha, and two classes agree in
// Pic exactly when they differ by an integral character alpha -> <m, alpha>.
struct SectionClass {
  std::vector<long> nu;

  bool operator==(const SectionClass& o) const { return nu == o.nu; }
  SectionClass operator+(const SectionClass& o) const;
  SectionClass operator-() const;
  static SectionClass zero(int numRays) {
    return SectionClass{std::vector<long>(static_cast<size_t>(numRays), 0)};
  }
};

SectionClass sectionFromDivisor(const Fan& F, const ToricDivisor& D);
ToricDivisor divisorFromSection(const SectionClass& nu);

// On smooth complete fans this is Pic equality; on simplicial fans it is raw
// equality up to characters (the stacky reading).
bool sectionsIsotopic(const Fan& F, const SectionClass& a, const SectionClass& b);

// Monodromy of rotating the coefficients of the rays in D: acts on classes
// by nu -> nu - n. Functors compose additively in the divisor.
struct MonodromyFunctor {
  ToricDivisor divisor;
};

SectionClass monodromyApply(const MonodromyFunctor& f, const SectionClass& nu);
MonodromyFunctor composeFunctors(const MonodromyFunctor& a, const MonodromyFunctor& b);

// Tensor on objects: addition of classes, unit nu = 0.
SectionClass tensorSections(const SectionClass& a, const SectionClass& b);

// The weight-0 global section of O(D) for effective D.
struct DefiningSection {
  ToricDivisor divisor;
  IntVec weight;  // always zero
};

DefiningSection definingSection(const Fan& F, const ToricDivisor& D);

}  // namespace monotoric
