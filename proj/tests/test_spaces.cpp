#include <string>
#include <vector>

#include "doctest.h"
#include "rba/axioms.hpp"
#include "rba/errors.hpp"
#include "rba/finite_space.hpp"

namespace {

using namespace rba;

FiniteSpace sierpinski() { return validate_topology({"a", "b"}, {{}, {"a"}, {"a", "b"}}); }

FiniteSpace chain3() {
  return validate_topology({"a", "b", "c"}, {{}, {"a"}, {"a", "b"}, {"a", "b", "c"}});
}

/// Every family of middle subsets of an n-point set, together with the empty
/// and full sets, tried against the validator. Returns how many families
/// survive.
int count_topologies(int n) {
  std::vector<std::string> points;
  for (int i = 0; i < n; ++i) points.push_back(std::string(1, static_cast<char>('a' + i)));
  std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint32_t> middles;
  for (std::uint32_t s = 1; s < full; ++s) middles.push_back(s);
  int count = 0;
  for (std::uint32_t family = 0; family < (1u << middles.size()); ++family) {
    std::vector<std::vector<std::string>> opens{{}, points};
    for (std::size_t i = 0; i < middles.size(); ++i) {
      if (!((family >> i) & 1u)) continue;
      std::vector<std::string> names;
      for (int p = 0; p < n; ++p)
        if ((middles[i] >> p) & 1u) names.push_back(points[p]);
      opens.push_back(names);
    }
    try {
      validate_topology(points, opens);
      ++count;
    } catch (const Error&) {
    }
  }
  return count;
}

}  // namespace

TEST_CASE("the topology validator names the violated closure law") {
  CHECK_THROWS_WITH_AS(validate_topology({"a", "b"}, {{"a"}, {"a", "b"}}),
                       doctest::Contains("empty set"), Error);
  CHECK_THROWS_WITH_AS(validate_topology({"a", "b"}, {{}, {"a"}}),
                       doctest::Contains("full set"), Error);
  CHECK_THROWS_WITH_AS(
      validate_topology({"a", "b", "c"}, {{}, {"a"}, {"b"}, {"a", "b", "c"}}),
      doctest::Contains("union of {a} and {b}"), Error);
  CHECK_THROWS_WITH_AS(
      validate_topology({"a", "b", "c"},
                        {{}, {"a", "b"}, {"b", "c"}, {"a", "b", "c"}}),
      doctest::Contains("intersection of {a, b} and {b, c}"), Error);
  CHECK_THROWS_AS(validate_topology({"a"}, {{}, {"z"}}), Error);
  CHECK_THROWS_AS(validate_topology({"a", "a"}, {{}, {"a"}}), Error);
}

TEST_CASE("the validator admits exactly the known topology counts") {
  CHECK(count_topologies(2) == 4);
  CHECK(count_topologies(3) == 29);
}

TEST_CASE("closure and interior are dual and idempotent") {
  for (const FiniteSpace& X : {sierpinski(), chain3(), discrete_space({"a", "b", "c"}),
                               indiscrete_space({"a", "b", "c"})}) {
    std::uint32_t full = X.full_mask();
    for (std::uint32_t s = 0; s <= full; ++s) {
      REQUIRE(X.closure(s) == (full & ~X.interior(full & ~s)));
      REQUIRE(X.interior(X.interior(s)) == X.interior(s));
      REQUIRE(X.closure(X.closure(s)) == X.closure(s));
      REQUIRE((X.interior(s) & ~s) == 0);
      REQUIRE((s & ~X.closure(s)) == 0);
      REQUIRE(X.is_closed(s) == (X.closure(s) == s));
    }
  }
}

TEST_CASE("the stock spaces show the expected separation and connectedness") {
  FiniteSpace d3 = discrete_space({"a", "b", "c"});
  CHECK(is_discrete(d3));
  CHECK(is_hausdorff(d3));
  CHECK(!is_connected_space(d3));

  FiniteSpace d1 = discrete_space({"a"});
  CHECK(is_connected_space(d1));

  FiniteSpace i3 = indiscrete_space({"a", "b", "c"});
  CHECK(!is_discrete(i3));
  CHECK(!is_hausdorff(i3));
  CHECK(is_connected_space(i3));

  FiniteSpace c3 = chain3();
  CHECK(!is_discrete(c3));
  CHECK(!is_hausdorff(c3));
  CHECK(is_connected_space(c3));

  CHECK(sierpinski().set_str(3) == "{a, b}");
}

TEST_CASE("subspaces carry the induced opens") {
  FiniteSpace c3 = chain3();
  Subspace S = subspace(c3, 0b110);
  REQUIRE(S.space.points == std::vector<std::string>{"b", "c"});
  REQUIRE(S.to_parent == std::vector<int>{1, 2});
  CHECK(S.space.opens == std::vector<std::uint32_t>{0, 1, 3});
  CHECK(!is_discrete(S.space));
  CHECK(is_connected_space(S.space));
}

TEST_CASE("regular closed algebras have the expected sizes") {
  CHECK(rc_algebra(discrete_space({"a", "b", "c"})).elements.size() == 8);
  CHECK(rc_algebra(sierpinski()).elements.size() == 2);
  CHECK(rc_algebra(chain3()).elements.size() == 2);
  CHECK(rc_algebra(indiscrete_space({"a", "b", "c"})).elements.size() == 2);
  CHECK_THROWS_AS(rc_algebra(discrete_space({"a", "b", "c", "d", "e", "f"})), Error);
}

TEST_CASE("regular closed joins are unions and meets close the interior") {
  RcAlgebra rc = rc_algebra(discrete_space({"a", "b", "c"}));
  const FiniteAlgebra& alg = *rc.algebra;
  for (int i = 0; i < alg.size(); ++i)
    for (int j = 0; j < alg.size(); ++j) {
      std::uint32_t a = rc.elements[i], b = rc.elements[j];
      REQUIRE(rc.elements[alg.join(i, j)] == (a | b));
      REQUIRE(rc.elements[alg.meet(i, j)] ==
              rc.space.closure(rc.space.interior(a & b)));
      REQUIRE(alg.contact(i, j) == ((a & b) != 0));
    }
  for (int i = 0; i < alg.size(); ++i) {
    REQUIRE(rc.elements[alg.comp(i)] == rc.space.closure(rc.space.full_mask() & ~rc.elements[i]));
    REQUIRE(alg.bounded(i));
  }
}

TEST_CASE("connectedness of a space matches the connectedness axiom of its algebra") {
  std::vector<std::string> points{"a", "b", "c"};
  std::uint32_t full = 0b111;
  std::vector<std::uint32_t> middles;
  for (std::uint32_t s = 1; s < full; ++s) middles.push_back(s);
  int topologies = 0, connected = 0;
  for (std::uint32_t family = 0; family < (1u << middles.size()); ++family) {
    std::vector<std::vector<std::string>> opens{{}, points};
    for (std::size_t i = 0; i < middles.size(); ++i) {
      if (!((family >> i) & 1u)) continue;
      std::vector<std::string> names;
      for (int p = 0; p < 3; ++p)
        if ((middles[i] >> p) & 1u) names.push_back(points[p]);
      opens.push_back(names);
    }
    FiniteSpace X;
    try {
      X = validate_topology(points, opens);
    } catch (const Error&) {
      continue;
    }
    ++topologies;
    RcAlgebra rc = rc_algebra(X);
    AxiomReport r = check_axioms(finite_contract(rc.algebra), Suite::CON,
                                 QuantifierStrategy::exhaustive());
    REQUIRE(is_connected_space(X) == r.all_hold());
    if (r.all_hold()) ++connected;
  }
  CHECK(topologies == 29);
  CHECK(connected > 0);
  CHECK(connected < topologies);
}

TEST_CASE("a dense subspace induces an isomorphism of regular closed algebras") {
  FiniteSpace c3 = chain3();
  DenseIso iso = dense_subspace_iso(c3, 0b001);
  CHECK(iso.boolean_iso);
  CHECK(iso.contact_iso);
  CHECK(iso.rc_parent.elements.size() == iso.rc_sub.elements.size());
  for (std::size_t i = 0; i < iso.restrict_map.size(); ++i)
    CHECK(iso.extend_map[iso.restrict_map[i]] == i);

  FiniteSpace d2 = discrete_space({"a", "b"});
  DenseIso whole = dense_subspace_iso(d2, 0b11);
  CHECK(whole.boolean_iso);
  CHECK(whole.contact_iso);
  CHECK_THROWS_AS(dense_subspace_iso(d2, 0b01), Error);
}
