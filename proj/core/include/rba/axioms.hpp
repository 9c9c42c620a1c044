#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rba/contract.hpp"

namespace rba {

/// Axiom suites the checker knows. BOOL is the Boolean algebra laws; CA the
/// contact axioms (C1)-(C4); LL the way-below laws (LL1)-(LL7); NCA adds the
/// normality axioms (C5), (C6); LCA the local axioms (BC1)-(BC3) on top of
/// (C1)-(C4); CON is the single connectedness axiom.
enum class Suite { BOOL, CA, LL, NCA, LCA, CON };

const char* suite_name(Suite s) noexcept;
std::optional<Suite> suite_parse(const std::string& text);

enum class AxStatus { holds, fails, inconclusive };

const char* ax_status_name(AxStatus s) noexcept;

/// Per-axiom verdict. A failing universal axiom carries the violating tuple;
/// a failing or inconclusive existential axiom carries the premise instance
/// for which no witness was found. Notes record search details, such as the
/// truncation index that produced a (BC2) witness.
struct AxiomVerdict {
  std::string axiom;
  AxStatus status = AxStatus::holds;
  std::vector<Element> witness;
  std::string note;
};

struct AxiomReport {
  Suite suite = Suite::BOOL;
  QuantifierStrategy::Mode mode = QuantifierStrategy::Mode::exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t samples_used = 0;
  std::vector<AxiomVerdict> verdicts;

  bool all_hold() const;
  bool any_fails() const;
  bool any_inconclusive() const;
};

AxiomReport check_axioms(const RegionAlgebra& algebra, Suite suite,
                         const QuantifierStrategy& strategy);

/// Re-evaluates a reported failure witness directly against the axiom body.
/// Returns true when the tuple still demonstrates the failure.
bool recheck_witness(const RegionAlgebra& algebra, const std::string& axiom,
                     const std::vector<Element>& witness);

/// The overlap contact: a C b iff a meet b != 0. The smallest contact on a
/// Boolean algebra; way-below collapses to the order.
RegionAlgebra with_smallest_contact(RegionAlgebra algebra);
/// The everywhere contact: a C b iff a != 0 and b != 0. The largest contact.
RegionAlgebra with_largest_contact(RegionAlgebra algebra);

/// The one-point-at-infinity extension: contact grows by putting any two
/// unbounded regions in contact, every region becomes bounded, and the
/// witness oracles are rewired so the extension of a local algebra passes
/// the NCA suite.
RegionAlgebra make_alexandroff_nca(const RegionAlgebra& algebra);

}  // namespace rba
