#include "rba/contract.hpp"

#include "rba/errors.hpp"

namespace rba {

bool element_eq(const Element& a, const Element& b) { return a == b; }

const FiniteElem& as_finite(const Element& e) {
  if (const auto* p = std::get_if<FiniteElem>(&e)) return *p;
  fail(Errc::model_mismatch, "expected an element of a finite carrier");
}

const NatRegion& as_nat(const Element& e) {
  if (const auto* p = std::get_if<NatRegion>(&e)) return *p;
  fail(Errc::model_mismatch, "expected a region of the discrete line");
}

const IntervalRegion& as_interval(const Element& e) {
  if (const auto* p = std::get_if<IntervalRegion>(&e)) return *p;
  fail(Errc::model_mismatch, "expected a region of the rational line");
}

}  // namespace rba
