#include "monotoric/sections.hpp"

namespace monotoric {

SectionClass SectionClass::operator+(const SectionClass& o) const {
  if (nu.size() != o.nu.size()) throw InputError("section class: ray count mismatch");
  SectionClass r = *this;
  for (size_t i = 0; i < nu.size(); ++i) r.nu[i] += o.nu[i];
  return r;
}

SectionClass SectionClass::operator-() const {
  SectionClass r = *this;
  for (auto& v : r.nu) v = -v;
  return r;
}

SectionClass sectionFromDivisor(const Fan& F, const ToricDivisor& D) {
  if (D.coeffs.size() != static_cast<size_t>(F.numRays())) {
    throw InputError("section_from_divisor: divisor/fan ray mismatch");
  }
  SectionClass s;
  s.nu.reserve(D.coeffs.size());
  for (long n : D.coeffs) s.nu.push_back(-n);
  return s;
}

ToricDivisor divisorFromSection(const SectionClass& nu) {
  ToricDivisor d;
  d.coeffs.reserve(nu.nu.size());
  for (long v : nu.nu) d.coeffs.push_back(-v);
  return d;
}

bool sectionsIsotopic(const Fan& F, const SectionClass& a, const SectionClass& b) {
  if (a.nu.size() != b.nu.size() || a.nu.size() != static_cast<size_t>(F.numRays())) {
    throw InputError("sections_isotopic: ray count mismatch");
  }
  if (!F.flags().simplicial) {
    throw UnsupportedError("sections_isotopic: fan must be simplicial");
  }
  std::vector<long> delta(a.nu.size());
  for (size_t i = 0; i < delta.size(); ++i) delta[i] = a.nu[i] - b.nu[i];
  return characterEquivalent(F, delta);
}

SectionClass monodromyApply(const MonodromyFunctor& f, const SectionClass& nu) {
  if (f.divisor.coeffs.size() != nu.nu.size()) {
    throw InputError("monodromy_apply: ray count mismatch");
  }
  SectionClass r = nu;
  for (size_t i = 0; i < r.nu.size(); ++i) r.nu[i] -= f.divisor.coeffs[i];
  return r;
}

MonodromyFunctor composeFunctors(const MonodromyFunctor& a, const MonodromyFunctor& b) {
  return MonodromyFunctor{a.divisor + b.divisor};
}

SectionClass tensorSections(const SectionClass& a, const SectionClass& b) { return a + b; }

DefiningSection definingSection(const Fan& F, const ToricDivisor& D) {
  if (D.coeffs.size() != static_cast<size_t>(F.numRays())) {
    throw InputError("defining_section: divisor/fan ray mismatch");
  }
  if (!D.isEffective()) {
    throw InputError("defining_section: divisor must be effective");
  }
  DefiningSection s;
  s.divisor = D;
  s.weight = IntVec::Zero(F.dim());
  return s;
}

}  // namespace monotoric
