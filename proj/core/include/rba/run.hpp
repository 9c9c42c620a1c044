#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rba/document.hpp"
#include "rba/duality.hpp"

namespace rba {

/// Global knobs for a run. The seed feeds every sampled command that does
/// not carry its own; samples and depth bound the quantifier searches on the
/// infinite carriers. Timings are off by default so that a report is a pure
/// function of the document and the seeds.
struct RunOptions {
  std::uint64_t seed = 0;
  std::uint32_t samples = 1000;
  std::uint32_t depth = 32;
  bool timings = false;
};

/// Result of executing a document: the JSON report, the text of the last
/// emit-dot command if any, and the verdict tally. The exit code is 0 when
/// every command holds, 1 when any fails or errors, 2 when the only
/// shortfall is an inconclusive search.
struct RunOutcome {
  std::string report;
  std::string dot;
  int exit_code = 0;
  std::uint32_t holds = 0;
  std::uint32_t fails = 0;
  std::uint32_t inconclusive = 0;
  std::uint32_t errors = 0;
};

RunOutcome run_document(const WorkbenchDocument& doc, const RunOptions& opts);

/// DOT text for a finite structure: atoms as nodes, non-loop adjacency as
/// edges, bound atoms drawn with a double border.
std::string contact_graph_dot(const FiniteContactStructure& s);

/// DOT text for a dual space: one node per cluster, labeled by its trace on
/// the bounded ideal; the unbounded cluster is dashed and labeled with the
/// infinity sign.
std::string dual_space_dot(const DualSpace& d);

}  // namespace rba
