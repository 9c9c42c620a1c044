#include "rba/errors.hpp"

namespace rba {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_adjacency: return "InvalidAdjacency";
    case Errc::atom_count_out_of_range: return "AtomCountOutOfRange";
    case Errc::empty_candidate: return "EmptyCandidate";
    case Errc::not_an_atom: return "NotAnAtom";
    case Errc::too_large_for_brute: return "TooLargeForBrute";
    case Errc::bounded_top: return "BoundedTop";
    case Errc::malformed_interval: return "MalformedInterval";
    case Errc::model_mismatch: return "ModelMismatch";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::carrier_escape: return "CarrierEscape";
    case Errc::not_a_topology: return "NotATopology";
    case Errc::not_dense: return "NotDense";
    case Errc::exhaustive_unavailable: return "ExhaustiveUnavailable";
    case Errc::not_delta_ideal: return "NotDeltaIdeal";
    case Errc::not_open: return "NotOpen";
    case Errc::not_composable: return "NotComposable";
    case Errc::infinite_carrier: return "InfiniteCarrier";
    case Errc::unsupported_family_for_model: return "UnsupportedFamilyForModel";
    case Errc::axiom_precondition_failed: return "AxiomPreconditionFailed";
    case Errc::no_adjoint: return "NoAdjoint";
    case Errc::not_continuous: return "NotContinuous";
    case Errc::not_finite: return "NotFinite";
    case Errc::parse_error: return "ParseError";
    case Errc::reference_error: return "ReferenceError";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace rba
