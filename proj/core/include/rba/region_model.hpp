#pragma once

#include <cstdint>
#include <string>

#include "rba/contract.hpp"
#include "rba/rational.hpp"

namespace rba {

/// Regular closed subsets of the rational line presented as finite unions of
/// closed intervals with rational (or infinite) endpoints. Exact arithmetic
/// throughout; ships interpolation, inner-witness, and bounded-trace oracles
/// so the existential axioms resolve without search.
RegionAlgebra interval_model();

/// Finite and cofinite subsets of the naturals (the regular closed algebra of
/// the discrete line). Contact is nonempty intersection; the bounded ideal is
/// the finite sets.
RegionAlgebra nat_model();

/// A point of a dual space presented concretely: an ordinary point of the
/// underlying model, or the single point at infinity.
struct ClusterPoint {
  enum class Kind { rational, natural, infinity };
  Kind kind = Kind::infinity;
  Rat x;
  std::uint32_t n = 0;

  static ClusterPoint at(Rat value);
  static ClusterPoint at_nat(std::uint32_t value);
  static ClusterPoint inf();
  std::string str() const;
};

/// Whether the region lies in the cluster named by the point: an ordinary
/// point tests containment, the point at infinity tests unboundedness.
bool cluster_membership(const RegionAlgebra& model, const ClusterPoint& p, const Element& e);

}  // namespace rba
