#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "rba/axioms.hpp"
#include "rba/errors.hpp"
#include "rba/finite_algebra.hpp"

namespace {

using namespace rba;

std::vector<std::vector<bool>> diagonal(int n) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) adj[i][i] = true;
  return adj;
}

std::vector<std::vector<bool>> complete(int n) {
  return std::vector<std::vector<bool>>(n, std::vector<bool>(n, true));
}

std::map<std::string, AxStatus> verdict_map(const AxiomReport& r) {
  std::map<std::string, AxStatus> out;
  for (const auto& v : r.verdicts) out[v.axiom] = v.status;
  return out;
}

}  // namespace

TEST_CASE("the overlap contact on two atoms is a normal contact algebra") {
  auto s = make_finite_lca(2, diagonal(2), {0, 1});
  RegionAlgebra alg = finite_contract(s.algebra);
  for (Suite suite : {Suite::BOOL, Suite::CA, Suite::LL, Suite::NCA, Suite::LCA}) {
    AxiomReport r = check_axioms(alg, suite, QuantifierStrategy::exhaustive());
    CAPTURE(suite_name(suite));
    CHECK(r.all_hold());
  }
  AxiomReport con = check_axioms(alg, Suite::CON, QuantifierStrategy::exhaustive());
  CHECK(con.any_fails());
}

TEST_CASE("the everywhere contact fails co-density with a reusable witness") {
  auto s = make_finite_lca(2, complete(2), {0, 1});
  RegionAlgebra alg = finite_contract(s.algebra);
  AxiomReport r = check_axioms(alg, Suite::NCA, QuantifierStrategy::exhaustive());
  REQUIRE(r.any_fails());
  bool saw_c6 = false;
  for (const auto& v : r.verdicts)
    if (v.axiom == "C6" && v.status == AxStatus::fails) {
      saw_c6 = true;
      CHECK(recheck_witness(alg, v.axiom, v.witness));
    }
  CHECK(saw_c6);
  AxiomReport con = check_axioms(alg, Suite::CON, QuantifierStrategy::exhaustive());
  CHECK(con.all_hold());
}

TEST_CASE("a proper bound breaks the local axioms on the diagonal structure") {
  auto s = make_finite_lca(2, diagonal(2), {0});
  RegionAlgebra alg = finite_contract(s.algebra);
  AxiomReport ca = check_axioms(alg, Suite::CA, QuantifierStrategy::exhaustive());
  CHECK(ca.all_hold());
  AxiomReport lca = check_axioms(alg, Suite::LCA, QuantifierStrategy::exhaustive());
  REQUIRE(lca.any_fails());
  auto v = verdict_map(lca);
  CHECK(v.at("BC3") == AxStatus::fails);
}

TEST_CASE("the extended contact joins unbounded regions and bounds everything") {
  auto s = make_finite_lca(3, diagonal(3), {0});
  const FiniteElem q{2}, r{4};
  RegionAlgebra plain = finite_contract(s.algebra);
  CHECK(!plain.bounded(q));
  CHECK(!plain.contact(q, r));
  RegionAlgebra ext = finite_contract(s.algebra, ContactChoice::alexandroff);
  CHECK(ext.bounded(q));
  CHECK(ext.contact(q, r));
  CHECK(ext.contact(FiniteElem{1}, FiniteElem{1}));
  CHECK(!ext.contact(FiniteElem{1}, r));
}

TEST_CASE("smallest and largest contacts bracket every structure") {
  auto s = make_finite_lca(3, diagonal(3), {0, 1, 2});
  RegionAlgebra base = finite_contract(s.algebra);
  RegionAlgebra small = with_smallest_contact(base);
  RegionAlgebra large = with_largest_contact(base);
  const int n = s.algebra->size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      FiniteElem ea{static_cast<std::uint16_t>(a)}, eb{static_cast<std::uint16_t>(b)};
      bool overlap = !base.is_zero(base.meet(ea, eb));
      REQUIRE(small.contact(ea, eb) == overlap);
      REQUIRE(large.contact(ea, eb) == (a != 0 && b != 0));
      if (small.contact(ea, eb)) REQUIRE(base.contact(ea, eb));
      if (base.contact(ea, eb)) REQUIRE(large.contact(ea, eb));
    }
}

TEST_CASE("non-nullity follows from symmetry, additivity and co-density") {
  // Sweeps every binary relation on the four-element carrier and checks
  // that C3, C4 and C6 together force C2. Symmetry is needed: without it
  // the relation {(0,1)} satisfies C4 and C6 yet breaks C2.
  auto s = make_finite_lca(2, diagonal(2), {0, 1});
  RegionAlgebra base = finite_contract(s.algebra);
  int premise_passers = 0;
  bool saw_c4_c6_without_c2 = false;
  for (std::uint32_t code = 0; code < (1u << 16); ++code) {
    RegionAlgebra cand = base;
    cand.contact = [code](const Element& x, const Element& y) {
      return ((code >> (as_finite(x).idx * 4 + as_finite(y).idx)) & 1u) != 0;
    };
    cand.interpolate.reset();
    cand.inner_witness.reset();
    cand.bc2_witness.reset();
    auto ca = verdict_map(check_axioms(cand, Suite::CA, QuantifierStrategy::exhaustive()));
    if (ca.at("C4") != AxStatus::holds) continue;
    auto nca = verdict_map(check_axioms(cand, Suite::NCA, QuantifierStrategy::exhaustive()));
    if (nca.at("C6") != AxStatus::holds) continue;
    if (ca.at("C2") != AxStatus::holds) saw_c4_c6_without_c2 = true;
    if (ca.at("C3") != AxStatus::holds) continue;
    ++premise_passers;
    REQUIRE(ca.at("C2") == AxStatus::holds);
  }
  CHECK(premise_passers > 0);
  CHECK(saw_c4_c6_without_c2);
}

TEST_CASE("the way-below zero law follows from the remaining laws") {
  // Every contact relation induces a way-below relation, and the induced
  // relations range over all of them. The sweep checks that LL3, LL4, LL6
  // and LL7 together force LL2 on the four-element carrier.
  auto s = make_finite_lca(2, diagonal(2), {0, 1});
  RegionAlgebra base = finite_contract(s.algebra);
  int premise_passers = 0;
  for (std::uint32_t code = 0; code < (1u << 16); ++code) {
    RegionAlgebra cand = base;
    cand.contact = [code](const Element& x, const Element& y) {
      return ((code >> (as_finite(x).idx * 4 + as_finite(y).idx)) & 1u) != 0;
    };
    cand.interpolate.reset();
    cand.inner_witness.reset();
    cand.bc2_witness.reset();
    auto ll = verdict_map(check_axioms(cand, Suite::LL, QuantifierStrategy::exhaustive()));
    if (ll.at("LL3") != AxStatus::holds || ll.at("LL4") != AxStatus::holds ||
        ll.at("LL6") != AxStatus::holds || ll.at("LL7") != AxStatus::holds)
      continue;
    ++premise_passers;
    REQUIRE(ll.at("LL2") == AxStatus::holds);
  }
  CHECK(premise_passers > 0);
}

TEST_CASE("structure constructors validate their inputs") {
  CHECK_THROWS_WITH_AS(make_finite({"p", "q"}, {{true, true}, {false, true}}, {}),
                       doctest::Contains("asymmetric"), Error);
  CHECK_THROWS_AS(make_finite({"p"}, {{false}}, {}), Error);
  CHECK_THROWS_AS(make_finite({"p", "p"}, diagonal(2), {}), Error);
  CHECK_THROWS_AS(make_finite({"a", "b", "c", "d", "e", "f"}, diagonal(6), {}), Error);
  CHECK_THROWS_AS(make_finite({"p", "q"}, diagonal(2), {"z"}), Error);
}

TEST_CASE("a failing witness replays against the axiom it broke") {
  auto s = make_finite_lca(2, diagonal(2), {0});
  RegionAlgebra alg = finite_contract(s.algebra);
  AxiomReport lca = check_axioms(alg, Suite::LCA, QuantifierStrategy::exhaustive());
  for (const auto& v : lca.verdicts)
    if (v.status == AxStatus::fails) CHECK(recheck_witness(alg, v.axiom, v.witness));
}
