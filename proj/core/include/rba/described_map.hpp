#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rba/contract.hpp"
#include "rba/rational.hpp"

namespace rba {

/// Self-map of the naturals given by explicit values on an initial segment
/// and a tail rule beyond it: either n + shift or a constant.
struct NatMap {
  std::vector<std::uint32_t> exceptions;  // values on [0, exceptions.size())
  bool tail_constant = false;
  std::int32_t shift = 0;
  std::uint32_t constant = 0;

  std::uint32_t operator()(std::uint32_t n) const;
};

NatMap make_nat_map(std::vector<std::uint32_t> exceptions, std::int32_t shift);
NatMap make_nat_const(std::vector<std::uint32_t> exceptions, std::uint32_t constant);

/// Piecewise linear self-map of the rational line: finitely many breakpoints
/// with values, linear in between, affine tails with the given end slopes.
struct PlMap {
  std::vector<std::pair<Rat, Rat>> bps;  // (x, value), x strictly increasing
  Rat slope_left, slope_right;

  Rat eval(const Rat& x) const;
};

PlMap make_pl_map(std::vector<std::pair<Rat, Rat>> bps, Rat slope_left, Rat slope_right);

/// A concrete continuous self-map of one of the infinite models, the raw
/// material for map-induced morphisms.
struct DescribedMap {
  std::string name;
  CarrierKind kind = CarrierKind::rational_interval;
  NatMap nat;
  PlMap pl;
};

DescribedMap described_nat(std::string name, NatMap f);
DescribedMap described_pl(std::string name, PlMap f);

/// Stock maps by name: on the line "identity", "double", "abs", "hat",
/// "constant"; on the naturals "identity", "successor", "constant".
DescribedMap stock_map(const std::string& name, CarrierKind kind);
std::vector<DescribedMap> stock_maps(CarrierKind kind);

/// The region transform of the map: the closure of the preimage of the
/// interior. Exact on both models; on the line it is computed piece by
/// piece, with constant pieces contributing only when their value lands in
/// the interior.
Element phi_apply(const DescribedMap& f, const Element& region);

/// g after f, exact. Raises NotComposable when the models differ.
DescribedMap compose_maps(const DescribedMap& g, const DescribedMap& f);

/// Region covering the forward image. Exact on the naturals; on the line
/// each component's value range is widened by `pad` (> 0) so the cover is a
/// region even where the map is locally constant.
Element image_hull(const DescribedMap& f, const Element& region, const Rat& pad);

/// Preimages of bounded regions stay bounded: a shift tail on the naturals,
/// nonzero end slopes on the line.
bool is_proper_map(const DescribedMap& f);

std::string map_str(const DescribedMap& f);

}  // namespace rba
