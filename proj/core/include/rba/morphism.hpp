#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "rba/axioms.hpp"
#include "rba/described_map.hpp"
#include "rba/duality.hpp"
#include "rba/finite_algebra.hpp"
#include "rba/region_model.hpp"

namespace rba {

/// Morphism axiom families. The two numbered series share their first two
/// members; the primed and strengthened variants quantify the interpolation
/// square over other element ranges, and the last four are the contact
/// reflection, the skeletal laws, and complete Boolean homomorphisms.
enum class Family {
  DVAL1, DVAL2, DVAL3, DVAL4,
  PAL1, PAL2, PAL3, PAL4, PAL5, PAL6,
  DLC1, DLC2, DLC3, DLC4, DLC5,
  DLC3P, DLC3S, LC3, LC3S,
  F1, L1, L2, CBH,
};

const char* family_name(Family f);        // DLC3P prints as "DLC3'"
Family family_parse(const std::string&);  // ReferenceError on unknown names

/// A map between algebras: either a finite lookup table between explicit
/// algebras, or the region transform of a described self-map of an infinite
/// model (domain and codomain then coincide with that model).
struct Morphism {
  std::string name;
  bool map_induced = false;

  std::shared_ptr<const FiniteAlgebra> dom, cod;  // finite lane
  std::vector<std::uint8_t> table;                // dom element -> cod element

  DescribedMap map;     // map-induced lane
  RegionAlgebra model;  // the common carrier of both sides

  Element apply(const Element& a) const;
  std::uint8_t at(std::uint8_t a) const { return table[a]; }
};

Morphism finite_morphism(std::shared_ptr<const FiniteAlgebra> dom,
                         std::shared_ptr<const FiniteAlgebra> cod,
                         std::vector<std::uint8_t> table, std::string name);
Morphism identity_morphism(std::shared_ptr<const FiniteAlgebra> alg);
Morphism morphism_from_map(const DescribedMap& f);

/// The transform G -> cl(g^{-1}(int G)) of a point map between finite
/// spaces, as a finite morphism RC(Y) -> RC(X). Raises NotContinuous naming
/// an open whose preimage is not open.
Morphism morphism_from_space_map(const RcAlgebra& X, const RcAlgebra& Y,
                                 const std::vector<int>& point_map, std::string name);

struct FamilyVerdict {
  Family family = Family::DLC1;
  AxStatus status = AxStatus::inconclusive;
  std::string witness;
  std::string note;
};

struct MorphismReport {
  std::vector<FamilyVerdict> verdicts;
  QuantifierStrategy::Mode mode = QuantifierStrategy::Mode::exhaustive;
  std::uint64_t seed = 0;
  bool all_hold() const;
  bool any_fails() const;
};

/// Checks the families on the morphism: exact loops on the finite lane,
/// sampled instances with constructed witnesses on the map lane. The three
/// infinite-join laws run the two-sided dyadic approximation there, and L2
/// raises UnsupportedFamilyForModel on the map lane.
MorphismReport check_morphism(const Morphism& phi, const std::vector<Family>& families,
                              const QuantifierStrategy& strat);

/// phi-check: a |-> join of phi(b) over bounded b way below a; phi-tilde
/// quantifies over all b way below a in the extended contact. Finite lane
/// only (InfiniteCarrier otherwise).
Morphism check_of(const Morphism& phi);
Morphism tilde_of(const Morphism& phi);

/// Diamond composition (check of the plain composite). On the map lane the
/// composite of the underlying maps represents it exactly. NotComposable
/// when the middle algebras differ.
Morphism diamond(const Morphism& outer, const Morphism& inner);
/// Plain table composition, no correction.
Morphism compose_plain(const Morphism& outer, const Morphism& inner);

/// Dual point map of a finite morphism phi : A -> B between the carriers of
/// the dual spaces, built from the traces S, their complements J, and the
/// filters V. Raises AxiomPreconditionFailed unless phi passes DLC1-DLC4.
struct DualMapResult {
  DualSpace dom_dual, cod_dual;
  std::vector<int> table;              // cod carrier point -> dom carrier point
  std::vector<std::uint32_t> S, V, J;  // per cod carrier point, element masks in A
  bool continuous = false;             // preimage formula against iota
  bool commutes = false;               // lambda square with the induced transform
  std::vector<std::string> notes;
};

DualMapResult dual_map(const Morphism& phi);

/// Pointwise dual-map evidence on the map lane: the image cluster of a named
/// point, with each probe region tested both through the image point and
/// through the trace definition.
struct DualPointEvidence {
  ClusterPoint source, image;
  std::vector<std::string> checks;
  bool consistent = false;
};

DualPointEvidence dual_map_point(const Morphism& phi, const ClusterPoint& p,
                                 const QuantifierStrategy& strat);

struct LawReport {
  bool ok = true;
  std::uint32_t cases = 0;
  std::vector<std::string> failures;
};

/// Contravariant functor laws on the algebra side: identities dualize to
/// identities, diamond composites dualize to reversed composites of the dual
/// point maps. Triples of space-induced morphisms are drawn from the seed.
LawReport functor_laws_finite(std::uint64_t seed, std::uint32_t triples);
/// Same laws on the space side, exhaustively over all pairs of self-maps of
/// the discrete space with the given point count.
LawReport functor_laws_spaces(int points);
/// The composite transform against the dyadic joins of the composed
/// transforms on the line model.
LawReport functor_laws_dyadic(const DescribedMap& g, const DescribedMap& f,
                              std::uint32_t regions, std::uint32_t depth, std::uint64_t seed);

/// Naturality of the canonical point maps: the lambda square of a finite
/// morphism, the t-map squares of every map between discrete spaces up to
/// the given size, and sampled point squares of a described map.
LawReport naturality_finite(const Morphism& phi);
LawReport naturality_spaces(int max_points);
LawReport naturality_sampled(const DescribedMap& f, std::uint32_t points, std::uint64_t seed);

/// Lower Galois adjoint of a finite meet-preserving map with phi(1) = 1.
/// Raises NoAdjoint with a witness pair when the Galois equivalence fails.
Morphism left_adjoint(const Morphism& phi);

struct Classification {
  bool is_dlc = false;       // DLC1-DLC5
  bool is_pal = false;       // PAL1-PAL6
  bool is_dval = false;      // DVAL1-DVAL4
  bool is_skeletal = false;  // CBH + L1 + L2
  bool proper = false;       // PAL5
  std::vector<std::string> notes;
};

Classification classify(const Morphism& phi, const QuantifierStrategy& strat);

}  // namespace rba
