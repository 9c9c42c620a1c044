#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "rba/described_map.hpp"
#include "rba/finite_algebra.hpp"
#include "rba/finite_space.hpp"
#include "rba/morphism.hpp"
#include "rba/rational.hpp"

namespace rba {

/// Declaration of a named algebra. `model` is "finite", "rational-interval",
/// or "cofinite-nat"; the atom fields apply to the finite shape only. A
/// source document may omit `bounded`, which reads as every atom bounded;
/// the parsed declaration always carries the explicit list.
struct AlgebraDecl {
  std::string name;
  std::string model = "finite";
  std::vector<std::string> atoms;
  std::vector<std::vector<bool>> adjacency;
  std::vector<std::string> bounded;

  bool operator==(const AlgebraDecl&) const = default;
};

struct SpaceDecl {
  std::string name;
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> opens;

  bool operator==(const SpaceDecl&) const = default;
};

/// A described self-map. Either a stock name, or an explicit description:
/// breakpoints and tail slopes on the line, an initial-segment value table
/// and one tail rule on the naturals.
struct MapDecl {
  std::string name;
  std::string carrier = "line";  // "line" | "nat"
  std::string stock;

  std::vector<std::pair<Rat, Rat>> breakpoints;
  Rat slope_left, slope_right;

  std::vector<std::uint32_t> exceptions;
  bool tail_is_constant = false;
  std::int32_t tail_shift = 0;
  std::uint32_t tail_constant = 0;

  bool operator==(const MapDecl&) const = default;
};

/// A named morphism: a table between two declared finite algebras, the
/// transform of a declared map, or the transform of a point map between two
/// declared spaces.
struct MorphismDecl {
  std::string name;
  std::string lane = "table";  // "table" | "map" | "space-map"
  std::string from, to;        // algebra names, or space names for space-map
  std::vector<std::string> table;
  std::string map;
  std::vector<std::pair<std::string, std::string>> points;

  bool operator==(const MorphismDecl&) const = default;
};

/// One workbench command. `args` holds scalar arguments keyed by name in
/// canonical string form; `list` holds the one list-valued argument
/// (`suites` or `families`) when present.
struct Command {
  std::string cmd;
  std::map<std::string, std::string> args;
  std::string list_key;
  std::vector<std::string> list;

  bool operator==(const Command&) const = default;
};

struct WorkbenchDocument {
  std::vector<AlgebraDecl> algebras;
  std::vector<SpaceDecl> spaces;
  std::vector<MapDecl> maps;
  std::vector<MorphismDecl> morphisms;
  std::vector<Command> commands;

  bool operator==(const WorkbenchDocument&) const = default;
};

/// Parses the JSON workbench format. Structural validation happens here:
/// unique names, resolvable references, symmetric adjacency (the error names
/// the offending cell), well-formed literals. ParseError carries a line
/// estimate for syntax errors and the reason; ReferenceError names the
/// missing declaration.
WorkbenchDocument parse_document(const std::string& text);

/// Canonical form: declarations grouped and ordered as declared, keys in a
/// fixed order, two-space indentation, trailing newline. parse of the result
/// yields an equal document.
std::string print_document(const WorkbenchDocument& doc);

/// Declared entities resolved into runtime objects. Finite algebras are
/// shared so morphism tables between two declarations compose.
struct Registry {
  std::vector<std::string> algebra_order;
  std::map<std::string, FiniteContactStructure> finite;
  std::map<std::string, CarrierKind> models;
  std::map<std::string, FiniteSpace> spaces;
  std::map<std::string, RcAlgebra> rc;
  std::map<std::string, DescribedMap> maps;
  std::map<std::string, Morphism> morphisms;
};

Registry resolve(const WorkbenchDocument& doc);

/// Element of a declared finite algebra by its label. ReferenceError when no
/// element carries the label.
std::uint8_t element_by_label(const FiniteAlgebra& alg, const std::string& label);

}  // namespace rba
