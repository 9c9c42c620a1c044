#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rba/finite_algebra.hpp"

namespace rba {

/// Finite topological space on at most 16 named points. Subsets are bitmasks
/// over point indices; `opens` holds every open set in ascending mask order.
struct FiniteSpace {
  std::vector<std::string> points;
  std::vector<std::uint32_t> opens;

  int size() const { return static_cast<int>(points.size()); }
  std::uint32_t full_mask() const { return (1u << size()) - 1u; }
  bool is_open(std::uint32_t s) const;
  bool is_closed(std::uint32_t s) const { return is_open(full_mask() & ~s); }
  std::uint32_t interior(std::uint32_t s) const;
  std::uint32_t closure(std::uint32_t s) const;
  std::string set_str(std::uint32_t s) const;
};

/// Checks the open-set laws for the given subsets (given as lists of point
/// names) and returns the space. Raises NotATopology naming the missing set
/// or the violated closure law, with the witness pair.
FiniteSpace validate_topology(std::vector<std::string> points,
                              const std::vector<std::vector<std::string>>& open_sets);

/// Discrete and indiscrete constructions.
FiniteSpace discrete_space(std::vector<std::string> points);
FiniteSpace indiscrete_space(std::vector<std::string> points);

bool is_connected_space(const FiniteSpace& X);  // empty space counts as connected
bool is_hausdorff(const FiniteSpace& X);
bool is_discrete(const FiniteSpace& X);

/// Subspace on the points of `mask`, with the induced topology. `to_parent`
/// maps a subspace point index to its parent index.
struct Subspace {
  FiniteSpace space;
  std::vector<int> to_parent;
};

Subspace subspace(const FiniteSpace& X, std::uint32_t mask);

/// The regular closed sets of a finite space as an explicit algebra:
/// join is union, meet is cl(int(intersection)), complement is the closure
/// of the set complement, contact is nonempty intersection, and every
/// element is bounded. `elements` lists the regular closed masks in the
/// order used for the algebra's element ids.
struct RcAlgebra {
  FiniteSpace space;
  std::vector<std::uint32_t> elements;
  std::shared_ptr<const FiniteAlgebra> algebra;

  std::optional<std::uint8_t> id_of(std::uint32_t mask) const;
};

/// Requires at most 5 points so the regular closed family stays within the
/// 32-element table representation.
RcAlgebra rc_algebra(const FiniteSpace& X);

/// Restriction/extension pair between the regular closed algebras of a space
/// and of a dense subspace: F maps to F intersected with the subspace, G maps
/// back to its closure in the parent. Raises NotDense when the subspace
/// closure misses part of the parent.
struct DenseIso {
  Subspace sub;
  RcAlgebra rc_parent;
  RcAlgebra rc_sub;
  std::vector<std::uint8_t> restrict_map;  // parent element id -> sub element id
  std::vector<std::uint8_t> extend_map;    // sub element id -> parent element id
  bool boolean_iso = false;
  bool contact_iso = false;
  std::string failure;
};

DenseIso dense_subspace_iso(const FiniteSpace& X, std::uint32_t dense_mask);

}  // namespace rba
