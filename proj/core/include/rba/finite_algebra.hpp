#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "rba/contract.hpp"

namespace rba {

/// Which contact a finite-algebra operation should read: the structure's own
/// contact, or its one-point-at-infinity extension (two unbounded elements
/// are always in contact).
enum class ContactChoice { rho, alexandroff };

/// Explicit finite Boolean algebra (at most 32 elements) with a contact
/// relation and a bounded ideal, all given by lookup tables. This is the
/// common ground for atom-presented structures, regular closed algebras of
/// finite spaces, and the algebras rebuilt from dual spaces.
struct FiniteAlgebra {
  std::vector<std::string> labels;
  std::uint8_t zero = 0, one = 0;
  std::vector<std::uint8_t> join_t, meet_t;  // n*n row-major
  std::vector<std::uint8_t> comp_t;
  std::vector<std::uint32_t> contact_row;  // bit j of contact_row[i]: i C j
  std::uint32_t bounded_mask = 0;
  std::vector<std::uint8_t> atoms;

  int size() const { return static_cast<int>(labels.size()); }
  std::uint32_t full_mask() const {
    return size() == 32 ? 0xffffffffu : ((1u << size()) - 1u);
  }
  std::uint8_t join(std::uint8_t i, std::uint8_t j) const { return join_t[i * size() + j]; }
  std::uint8_t meet(std::uint8_t i, std::uint8_t j) const { return meet_t[i * size() + j]; }
  std::uint8_t comp(std::uint8_t i) const { return comp_t[i]; }
  bool leq(std::uint8_t i, std::uint8_t j) const { return meet(i, j) == i; }
  bool bounded(std::uint8_t i) const { return (bounded_mask >> i) & 1u; }
  bool contact(std::uint8_t i, std::uint8_t j) const { return (contact_row[i] >> j) & 1u; }
  bool contact_of(std::uint8_t i, std::uint8_t j, ContactChoice c) const {
    if (c == ContactChoice::rho) return contact(i, j);
    return contact(i, j) || (!bounded(i) && !bounded(j));
  }
  std::uint32_t contact_row_of(std::uint8_t i, ContactChoice c) const {
    if (c == ContactChoice::rho) return contact_row[i];
    return bounded(i) ? contact_row[i] : (contact_row[i] | (~bounded_mask & full_mask()));
  }
  bool way_below(std::uint8_t i, std::uint8_t j) const { return !contact(i, comp(j)); }
  bool way_below_of(std::uint8_t i, std::uint8_t j, ContactChoice c) const {
    return !contact_of(i, comp(j), c);
  }

  /// Consistency of the tables themselves (sizes, involution, order).
  void validate() const;

  /// Builds the derived fields (atoms) and validates; labels/ops must be set.
  static std::shared_ptr<const FiniteAlgebra> from_tables(FiniteAlgebra raw);
};

/// Atoms-and-adjacency presentation of a finite contact structure: elements
/// are atom sets (the element id is the atom bitmask), contact is extended
/// from a reflexive symmetric adjacency, and the bounded ideal is the downset
/// of the join of the bound atoms.
struct FiniteContactStructure {
  std::vector<std::string> atom_names;
  std::vector<std::vector<bool>> adjacency;
  std::vector<std::string> bound_atoms;
  std::shared_ptr<const FiniteAlgebra> algebra;
};

FiniteContactStructure make_finite(std::vector<std::string> atom_names,
                                   std::vector<std::vector<bool>> adjacency,
                                   std::vector<std::string> bound_atoms);

/// Same construction with stock atom names p, q, r, s, t and bound atoms
/// given by index.
FiniteContactStructure make_finite_lca(int atom_count,
                                       std::vector<std::vector<bool>> adjacency,
                                       std::vector<int> bound_atoms = {});

/// Type-erased contract over a finite algebra. With ContactChoice::alexandroff
/// the contract is the extension: contact grows at infinity and every element
/// counts as bounded.
RegionAlgebra finite_contract(std::shared_ptr<const FiniteAlgebra> algebra,
                              ContactChoice choice = ContactChoice::rho,
                              std::string name = "finite");

struct ClusterCheck {
  bool ok = false;
  std::string failed;  // "K1", "K2", "K3"
  std::vector<std::uint8_t> witness;
};

/// Direct (K1)-(K3) check of a member set (bitmask over element ids).
ClusterCheck is_cluster(const FiniteAlgebra& alg, std::uint32_t members, ContactChoice choice);

/// The unique cluster around the ultrafilter generated by an atom:
/// { a : a C b for every b above the atom }.
std::uint32_t cluster_from_ultrafilter(const FiniteAlgebra& alg, std::uint8_t atom,
                                       ContactChoice choice);

enum class ClusterMode { brute, ultrafilter };

struct ClusterSet {
  std::vector<std::uint32_t> clusters;  // ascending member bitmasks
  std::vector<bool> bounded;            // per cluster: meets the bounded ideal
  std::vector<std::string> warnings;
};

/// All clusters, by subset scan (carriers up to 16 elements) or through atom
/// ultrafilters. Outside the NCA suite the ultrafilter route is flagged
/// UltrafilterModeUnsound, and any atom set failing (K1)-(K3) is dropped with
/// a warning.
ClusterSet enumerate_clusters(const FiniteAlgebra& alg, ClusterMode mode, ContactChoice choice);

struct SigmaInfinity {
  std::uint32_t members = 0;
  ClusterCheck check;
};

/// The set of unbounded elements, checked against (K1)-(K3) for the extended
/// contact. Requires a proper bounded ideal (1 unbounded).
SigmaInfinity sigma_infinity(const FiniteAlgebra& alg);

std::string element_set_str(const FiniteAlgebra& alg, std::uint32_t members);

}  // namespace rba
