#pragma once

#include <stdexcept>
#include <string>

namespace rba {

/// Machine-readable failure classes surfaced by workbench operations.
enum class Errc {
  invalid_adjacency,
  atom_count_out_of_range,
  empty_candidate,
  not_an_atom,
  too_large_for_brute,
  bounded_top,
  malformed_interval,
  model_mismatch,
  precondition_violated,
  carrier_escape,
  not_a_topology,
  not_dense,
  exhaustive_unavailable,
  not_delta_ideal,
  not_open,
  not_composable,
  infinite_carrier,
  unsupported_family_for_model,
  axiom_precondition_failed,
  no_adjoint,
  not_continuous,
  not_finite,
  parse_error,
  reference_error,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace rba
