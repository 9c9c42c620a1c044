#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rba/duality.hpp"
#include "rba/finite_algebra.hpp"

namespace rba {

/// Verdict of the delta-ideal laws on a candidate element set: must contain
/// zero, be a downset, be closed under join, stay inside the bounded ideal,
/// and have a way-above partner inside itself for every member. `clause`
/// names the first violated law.
struct DeltaCheck {
  bool ok = false;
  std::string clause;  // "empty", "lower", "join", "bounded", "interpolation"
  std::vector<std::uint8_t> witness;
};

DeltaCheck is_delta_ideal(const FiniteAlgebra& B, std::uint32_t members);

/// The bounded elements way below a, with its verdict (the interpolation
/// clause can fail off the local contact laws).
struct PrincipalDelta {
  std::uint32_t members = 0;
  DeltaCheck check;
};

PrincipalDelta principal_delta_ideal(const FiniteAlgebra& B, std::uint8_t a);

/// Every delta-ideal, found through the generators of the ideals of a finite
/// Boolean algebra. `tops` holds the join of each ideal, aligned with
/// `ideals`.
struct DeltaIdealSet {
  std::vector<std::uint32_t> ideals;  // ascending member masks
  std::vector<std::uint8_t> tops;
};

DeltaIdealSet all_delta_ideals(const FiniteAlgebra& B);

/// Lattice operations of the delta-ideal frame. Inputs are validated; the
/// join is the least delta-ideal containing the union.
std::uint32_t frame_meet(const FiniteAlgebra& B, std::uint32_t I, std::uint32_t J);
std::uint32_t frame_join(const FiniteAlgebra& B, std::uint32_t I, std::uint32_t J);

/// The frame map onto the opens of the carrier: the union of the interiors
/// of lambda_g(a) over the members, in carrier coordinates, and its inverse
/// { b bounded : lambda_g(b) inside U }. The inverse raises NotOpen when U
/// is not open in the carrier.
std::uint32_t iota(const DualSpace& d, std::uint32_t members);
std::uint32_t iota_inverse(const DualSpace& d, std::uint32_t open_mask);

bool is_prime_element(const FiniteAlgebra& B, const DeltaIdealSet& all, std::uint32_t I);
std::vector<std::uint32_t> prime_elements(const FiniteAlgebra& B);

/// Bounded clusters and prime delta-ideals exchange along sigma -> IB minus
/// sigma and I -> { a : a in contact with every bounded element outside I }.
std::uint32_t cluster_to_prime(const FiniteAlgebra& B, std::uint32_t sigma);

struct PrimeToCluster {
  std::uint32_t sigma = 0;
  ClusterCheck check;
};

PrimeToCluster prime_to_cluster(const FiniteAlgebra& B, std::uint32_t I);

/// Round trip between the bounded clusters of the dual space and the prime
/// delta-ideals, with every mismatch spelled out.
struct PrimeBijection {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;  // (cluster, prime)
  bool ok = false;
  std::vector<std::string> failures;
};

PrimeBijection prime_cluster_bijection(const DualSpace& d);

}  // namespace rba
