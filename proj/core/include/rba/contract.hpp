#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rba/interval_region.hpp"
#include "rba/nat_region.hpp"

namespace rba {

/// Element of a finite algebra, an index into its element table.
struct FiniteElem {
  std::uint16_t idx = 0;
  friend bool operator==(const FiniteElem&, const FiniteElem&) = default;
};

/// Carrier element of any model the workbench speaks.
using Element = std::variant<FiniteElem, NatRegion, IntervalRegion>;

bool element_eq(const Element& a, const Element& b);

/// Checked variant access; raises ModelMismatch when the element belongs to
/// a different carrier.
const FiniteElem& as_finite(const Element& e);
const NatRegion& as_nat(const Element& e);
const IntervalRegion& as_interval(const Element& e);

/// Deterministic pseudo-random source. The seed and the number of draws fully
/// determine the stream; distribution helpers use plain modular reduction so
/// streams are stable across standard library implementations.
class SampleStream {
public:
  explicit SampleStream(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t u64() {
    ++draws_;
    return eng_();
  }
  std::uint32_t below(std::uint32_t n) { return static_cast<std::uint32_t>(u64() % n); }
  bool coin() { return (u64() & 1) != 0; }
  std::uint64_t draws() const { return draws_; }

private:
  std::mt19937_64 eng_;
  std::uint64_t draws_ = 0;
};

enum class CarrierKind { finite, cofinite_nat, rational_interval };

/// How the axiom engine quantifies over a carrier.
struct QuantifierStrategy {
  enum class Mode { exhaustive, sampled };

  Mode mode = Mode::exhaustive;
  std::uint64_t seed = 0;
  std::uint32_t sample_count = 1000;
  std::uint32_t witness_depth = 32;

  static QuantifierStrategy exhaustive() { return {}; }
  static QuantifierStrategy sampled(std::uint64_t seed, std::uint32_t samples = 1000,
                                    std::uint32_t depth = 32) {
    QuantifierStrategy s;
    s.mode = Mode::sampled;
    s.seed = seed;
    s.sample_count = samples;
    s.witness_depth = depth;
    return s;
  }
};

/// A Boolean algebra of exactly representable regions together with contact
/// and a bounded predicate, exposed as first-class closures so heterogeneous
/// models run through one checker. Enumeration is optional (finite carriers
/// only); sampling must be deterministic in the passed stream. The optional
/// oracles construct witnesses for the existential axioms on carriers that
/// cannot be enumerated:
///   interpolate(a, c): for a way below c, some b with a << b << c, bounded
///     whenever a is bounded;
///   inner_witness(w):  for w != 0, a nonzero bounded b way below w;
///   bc2_witness(a, b, depth): for a in contact with b, a bounded c with
///     a in contact with (c meet b), found by truncating b; reports the
///     truncation index used.
struct RegionAlgebra {
  CarrierKind kind = CarrierKind::finite;
  std::string name;

  Element zero, one;
  std::function<Element(const Element&, const Element&)> join, meet;
  std::function<Element(const Element&)> complement;
  std::function<bool(const Element&, const Element&)> contact;
  std::function<bool(const Element&)> bounded;
  std::function<std::string(const Element&)> print;

  std::optional<std::function<std::vector<Element>()>> enumerate;
  std::function<Element(SampleStream&)> sample;
  std::vector<Element> probes;

  std::optional<std::function<bool(const Element&, const Element&)>> leq_fn;
  std::optional<std::function<Element(const Element&, const Element&)>> interpolate;
  std::optional<std::function<Element(const Element&)>> inner_witness;
  std::optional<std::function<std::optional<std::pair<Element, std::uint32_t>>(
      const Element&, const Element&, std::uint32_t)>>
      bc2_witness;

  bool is_zero(const Element& a) const { return element_eq(a, zero); }
  bool is_one(const Element& a) const { return element_eq(a, one); }
  bool leq(const Element& a, const Element& b) const {
    if (leq_fn) return (*leq_fn)(a, b);
    return element_eq(join(a, b), b);
  }
  /// a way below b: a avoids contact with the complement of b.
  bool way_below(const Element& a, const Element& b) const {
    return !contact(a, complement(b));
  }
  /// Contact extended so that any two unbounded regions touch at infinity.
  bool alexandroff(const Element& a, const Element& b) const {
    return contact(a, b) || (!bounded(a) && !bounded(b));
  }
};

}  // namespace rba
