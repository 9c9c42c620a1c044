#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "rba/finite_algebra.hpp"
#include "rba/finite_space.hpp"

namespace rba {

/// Dual space of a finite contact structure: the clusters of the extended
/// contact, topologized with the sets lambda(a) = { clusters containing a }
/// as a closed base. The carrier keeps the bounded clusters; it is the whole
/// space exactly when the top element is bounded.
struct DualSpace {
  std::shared_ptr<const FiniteAlgebra> algebra;
  ClusterSet clusters;
  FiniteSpace space;                        // one point per cluster
  std::uint32_t bounded_points = 0;         // bitmask over cluster indices
  Subspace carrier;
  std::vector<std::uint32_t> lambda_full;   // element id -> cluster-index mask
  bool lca_guarantees = false;
  std::vector<std::string> notes;

  std::uint32_t lambda(std::uint8_t a) const { return lambda_full[a]; }
  /// lambda(a) cut to the carrier, in carrier point coordinates.
  std::uint32_t lambda_g(std::uint8_t a) const;
};

DualSpace dualize(std::shared_ptr<const FiniteAlgebra> algebra);

/// Point-by-point verification that the dual space realizes the structure:
/// contact agrees with sharing a bounded cluster, the interiors of the
/// bounded lambda-sets form an open base of the carrier, the complement of
/// lambda(a) is the interior of lambda(a*), and every element is the join of
/// the bounded elements way below it.
struct RealizationReport {
  bool contact_realized = false;   // a C b  iff  some bounded cluster holds both
  bool open_base = false;          // interiors of bounded lambda-sets generate
  bool complement_interior = false;
  bool join_recovered = false;
  std::vector<std::string> failures;
  bool all() const {
    return contact_realized && open_base && complement_interior && join_recovered;
  }
};

RealizationReport verify_realization(const DualSpace& d);

/// Rebuilds an algebra from the dual space: the regular closed algebra of
/// the carrier, compared with the original through a |-> lambda_g(a).
struct RoundTrip {
  RcAlgebra rc;
  std::vector<std::uint8_t> to_rc;  // element id -> rc element id
  bool boolean_iso = false;
  bool contact_iso = false;
  bool bounded_iso = false;
  bool ok = false;
  std::string declined;  // reason when the isomorphism is not guaranteed
};

RoundTrip roundtrip_algebra(const DualSpace& d);

/// The canonical map x |-> { F regular closed : x in F } from a finite space
/// into the dual of its regular closed algebra. A homeomorphism whenever the
/// space is Hausdorff; reported as found otherwise.
struct TMap {
  DualSpace dual;
  std::vector<int> point_to_cluster;  // -1 where sigma_x is not a cluster
  bool defined = false;
  bool bijective = false;
  bool homeomorphism = false;
  bool guaranteed = false;  // Hausdorff source space
  std::string failure;
};

TMap t_map(const RcAlgebra& rc);

}  // namespace rba
