#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "rba/duality.hpp"
#include "rba/errors.hpp"
#include "rba/finite_space.hpp"

namespace {

using namespace rba;

std::vector<std::vector<bool>> diagonal(int n) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) adj[i][i] = true;
  return adj;
}

std::vector<std::string> cluster_strings(const FiniteAlgebra& alg, const ClusterSet& cs) {
  std::vector<std::string> out;
  for (std::uint32_t m : cs.clusters) out.push_back(element_set_str(alg, m));
  return out;
}

}  // namespace

TEST_CASE("cluster checks accept boundary traces and reject broken sets") {
  auto s = make_finite_lca(2, diagonal(2), {0, 1});
  const FiniteAlgebra& alg = *s.algebra;

  std::uint32_t around_p = 0;
  for (int e = 0; e < alg.size(); ++e)
    if (alg.contact_of(1, static_cast<std::uint8_t>(e), ContactChoice::alexandroff))
      around_p |= 1u << e;
  CHECK(is_cluster(alg, around_p, ContactChoice::alexandroff).ok);

  ClusterCheck empty = is_cluster(alg, 0, ContactChoice::alexandroff);
  CHECK(!empty.ok);
  CHECK(empty.failed == "K1");

  ClusterCheck zero_in = is_cluster(alg, 0b0001, ContactChoice::alexandroff);
  CHECK(!zero_in.ok);

  std::uint32_t everything = (1u << alg.size()) - 1;
  ClusterCheck untouching = is_cluster(alg, everything, ContactChoice::alexandroff);
  CHECK(!untouching.ok);

  std::uint32_t missing_top = around_p & ~(1u << alg.one);
  ClusterCheck no_upset = is_cluster(alg, missing_top, ContactChoice::alexandroff);
  CHECK(!no_upset.ok);
}

TEST_CASE("the one-atom algebra has the single cluster around its atom") {
  auto s = make_finite_lca(1, diagonal(1), {0});
  ClusterSet cs = enumerate_clusters(*s.algebra, ClusterMode::brute, ContactChoice::alexandroff);
  REQUIRE(cs.clusters.size() == 1);
  CHECK(element_set_str(*s.algebra, cs.clusters[0]) == "{1}");
  CHECK(cs.bounded[0]);
}

TEST_CASE("brute and ultrafilter enumeration agree on the diagonal structures") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> all_atoms;
    for (int i = 0; i < n; ++i) all_atoms.push_back(i);
    auto s = make_finite_lca(n, diagonal(n), all_atoms);
    ClusterSet brute =
        enumerate_clusters(*s.algebra, ClusterMode::brute, ContactChoice::alexandroff);
    ClusterSet ultra =
        enumerate_clusters(*s.algebra, ClusterMode::ultrafilter, ContactChoice::alexandroff);
    CAPTURE(n);
    CHECK(brute.clusters == ultra.clusters);
    CHECK(brute.warnings.empty());
    CHECK(ultra.warnings.empty());
    CHECK(static_cast<int>(brute.clusters.size()) == n);
  }
}

TEST_CASE("the ultrafilter route is flagged unsound off the normal structures") {
  std::vector<std::vector<bool>> edge{{true, true}, {true, true}};
  auto s = make_finite_lca(2, edge, {0, 1});
  ClusterSet ultra =
      enumerate_clusters(*s.algebra, ClusterMode::ultrafilter, ContactChoice::alexandroff);
  REQUIRE(!ultra.warnings.empty());
  bool flagged = false;
  for (const auto& w : ultra.warnings)
    if (w.find("unsound") != std::string::npos) flagged = true;
  CHECK(flagged);
}

TEST_CASE("cluster sets refuse carriers beyond the subset scan") {
  auto s = make_finite_lca(5, diagonal(5), {0, 1, 2, 3, 4});
  CHECK_THROWS_AS(enumerate_clusters(*s.algebra, ClusterMode::brute, ContactChoice::alexandroff),
                  Error);
}

TEST_CASE("the unbounded trace is a cluster exactly under a proper bound") {
  auto half = make_finite_lca(2, diagonal(2), {0});
  SigmaInfinity si = sigma_infinity(*half.algebra);
  CHECK(si.check.ok);
  CHECK(element_set_str(*half.algebra, si.members) == "{{q}, 1}");

  auto full = make_finite_lca(2, diagonal(2), {0, 1});
  CHECK_THROWS_AS(sigma_infinity(*full.algebra), Error);
}

TEST_CASE("dual spaces of diagonal structures are discrete and fully realized") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> all_atoms;
    for (int i = 0; i < n; ++i) all_atoms.push_back(i);
    auto s = make_finite_lca(n, diagonal(n), all_atoms);
    DualSpace d = dualize(s.algebra);
    CAPTURE(n);
    REQUIRE(static_cast<int>(d.clusters.clusters.size()) == n);
    CHECK(d.lca_guarantees);
    CHECK(d.bounded_points == d.space.full_mask());
    CHECK(is_discrete(d.carrier.space));
    RealizationReport rr = verify_realization(d);
    CHECK(rr.all());
    RoundTrip rt = roundtrip_algebra(d);
    CHECK(rt.ok);
    CHECK(rt.boolean_iso);
    CHECK(rt.contact_iso);
    CHECK(rt.bounded_iso);
  }
}

TEST_CASE("lambda turns joins into unions and lands on atom counts") {
  auto s = make_finite_lca(3, diagonal(3), {0, 1, 2});
  DualSpace d = dualize(s.algebra);
  const FiniteAlgebra& alg = *s.algebra;
  for (int a = 0; a < alg.size(); ++a)
    for (int b = 0; b < alg.size(); ++b)
      REQUIRE(d.lambda(alg.join(a, b)) ==
              (d.lambda(static_cast<std::uint8_t>(a)) | d.lambda(static_cast<std::uint8_t>(b))));
  CHECK(d.lambda(alg.zero) == 0);
  CHECK(d.lambda(alg.one) == d.space.full_mask());
  for (std::uint8_t atom : alg.atoms)
    CHECK(std::popcount(d.lambda(atom)) == 1);
}

TEST_CASE("a non-local structure still dualizes but declines the roundtrip") {
  std::vector<std::vector<bool>> edge{{true, true}, {true, true}};
  auto s = make_finite_lca(2, edge, {0, 1});
  DualSpace d = dualize(s.algebra);
  REQUIRE(d.clusters.clusters.size() == 1);
  CHECK(cluster_strings(*s.algebra, d.clusters)[0] == "{{p}, {q}, 1}");
  CHECK(!d.lca_guarantees);
  RealizationReport rr = verify_realization(d);
  CHECK(!rr.all());
  CHECK(!rr.contact_realized);
  RoundTrip rt = roundtrip_algebra(d);
  CHECK(!rt.ok);
  CHECK(rt.declined == "structure is not a local contact algebra");
}

TEST_CASE("a proper bound shrinks the carrier to the bounded clusters") {
  auto s = make_finite_lca(2, diagonal(2), {0});
  DualSpace d = dualize(s.algebra);
  REQUIRE(d.clusters.clusters.size() == 2);
  int bounded = 0;
  for (std::size_t i = 0; i < d.clusters.clusters.size(); ++i)
    if (d.clusters.bounded[i]) ++bounded;
  CHECK(bounded == 1);
  CHECK(d.carrier.space.size() == 1);
  CHECK(std::popcount(d.bounded_points) == 1);
}

TEST_CASE("the canonical point map is a homeomorphism on discrete spaces") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    TMap t = t_map(rc_algebra(discrete_space(names)));
    CAPTURE(n);
    CHECK(t.defined);
    CHECK(t.bijective);
    CHECK(t.homeomorphism);
    CHECK(t.guaranteed);
    for (int p = 0; p < n; ++p) CHECK(t.point_to_cluster[p] >= 0);
  }
}

TEST_CASE("the canonical point map fails off the Hausdorff spaces") {
  FiniteSpace sp = validate_topology({"a", "b"}, {{}, {"a"}, {"a", "b"}});
  TMap t = t_map(rc_algebra(sp));
  CHECK(t.defined);
  CHECK(!t.bijective);
  CHECK(!t.homeomorphism);
  CHECK(!t.guaranteed);
  CHECK(t.failure == "the point map is not a bijection onto the clusters");
}
