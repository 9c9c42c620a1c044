#include <string>
#include <vector>

#include "doctest.h"
#include "rba/axioms.hpp"
#include "rba/described_map.hpp"
#include "rba/errors.hpp"
#include "rba/region_model.hpp"

namespace {

using namespace rba;

Element iv(const std::string& text) { return IntervalRegion::parse(text); }

const AxiomVerdict* find_verdict(const AxiomReport& r, const std::string& axiom) {
  for (const auto& v : r.verdicts)
    if (v.axiom == axiom) return &v;
  return nullptr;
}

}  // namespace

TEST_CASE("both infinite models pass the contact and local suites by sampling") {
  for (const RegionAlgebra& m : {interval_model(), nat_model()}) {
    CAPTURE(m.name);
    for (Suite suite : {Suite::BOOL, Suite::CA, Suite::LL, Suite::LCA}) {
      AxiomReport r = check_axioms(m, suite, QuantifierStrategy::sampled(5, 300, 24));
      CAPTURE(suite_name(suite));
      CHECK(r.all_hold());
    }
  }
}

TEST_CASE("the line is connected and the naturals are not") {
  AxiomReport line = check_axioms(interval_model(), Suite::CON,
                                  QuantifierStrategy::sampled(5, 300, 24));
  CHECK(line.all_hold());

  RegionAlgebra nat = nat_model();
  AxiomReport r = check_axioms(nat, Suite::CON, QuantifierStrategy::sampled(5, 300, 24));
  const AxiomVerdict* con = find_verdict(r, "CON");
  REQUIRE(con != nullptr);
  REQUIRE(con->status == AxStatus::fails);
  REQUIRE(con->witness.size() == 1);
  CHECK(nat.print(con->witness[0]) == "{finite: [0]}");
  CHECK(recheck_witness(nat, "CON", con->witness));
}

TEST_CASE("the point at infinity turns both models into normal contact algebras") {
  for (const RegionAlgebra& m : {interval_model(), nat_model()}) {
    RegionAlgebra ext = make_alexandroff_nca(m);
    CAPTURE(ext.name);
    AxiomReport r = check_axioms(ext, Suite::NCA, QuantifierStrategy::sampled(11, 400, 24));
    CHECK(r.all_hold());
    CHECK(ext.bounded(m.complement(m.zero)));
    CHECK(ext.contact(m.complement(m.zero), m.complement(m.zero)));
  }
}

TEST_CASE("the witness oracles honour their contracts on sampled regions") {
  for (const RegionAlgebra& m : {interval_model(), nat_model()}) {
    CAPTURE(m.name);
    REQUIRE(m.interpolate);
    REQUIRE(m.inner_witness);
    REQUIRE(m.bc2_witness);
    SampleStream stream(77);
    int interpolations = 0, inners = 0, bc2s = 0;
    for (int i = 0; i < 200; ++i) {
      Element a = m.sample(stream), b = m.sample(stream);
      if (m.way_below(a, b)) {
        Element c = (*m.interpolate)(a, b);
        CHECK(m.way_below(a, c));
        CHECK(m.way_below(c, b));
        if (m.bounded(a)) CHECK(m.bounded(c));
        ++interpolations;
      }
      if (!m.is_zero(a)) {
        Element w = (*m.inner_witness)(a);
        CHECK(!m.is_zero(w));
        CHECK(m.bounded(w));
        CHECK(m.way_below(w, a));
        ++inners;
      }
      if (m.contact(a, b)) {
        auto r = (*m.bc2_witness)(a, b, 32);
        REQUIRE(r.has_value());
        CHECK(m.bounded(r->first));
        CHECK(m.contact(a, m.meet(r->first, b)));
        ++bc2s;
      }
    }
    CHECK(interpolations > 10);
    CHECK(inners > 50);
    CHECK(bc2s > 50);
  }
}

TEST_CASE("region transforms of the stock line maps match hand computations") {
  auto apply = [](const char* name, const char* region) {
    DescribedMap f = stock_map(name, CarrierKind::rational_interval);
    return phi_apply(f, IntervalRegion::parse(region));
  };
  CHECK(element_eq(apply("identity", "[1,2]"), iv("[1,2]")));
  CHECK(element_eq(apply("double", "[1,2]"), iv("[1/2,1]")));
  CHECK(element_eq(apply("double", "[-1,0]"), iv("[-1/2,0]")));
  CHECK(element_eq(apply("abs", "[1,2]"), iv("[-2,-1] + [1,2]")));
  CHECK(element_eq(apply("abs", "[-1,0]"), iv("empty")));
  CHECK(element_eq(apply("abs", "[0,1]"), iv("[-1,1]")));
  CHECK(element_eq(apply("hat", "[0,1]"), iv("[0,2]")));
  CHECK(element_eq(apply("hat", "[1,2]"), iv("empty")));
  CHECK(element_eq(apply("hat", "[-1,0]"), iv("[-1,0] + [2,3]")));
  CHECK(element_eq(apply("constant", "[0,1]"), iv("empty")));
  CHECK(element_eq(apply("constant", "(-inf,inf)"), iv("(-inf,inf)")));
}

TEST_CASE("region transforms of the stock natural maps match hand computations") {
  auto apply = [](const char* name, const char* region) {
    DescribedMap f = stock_map(name, CarrierKind::cofinite_nat);
    return phi_apply(f, NatRegion::parse(region));
  };
  CHECK(element_eq(apply("identity", "{finite: [5]}"), NatRegion::parse("{finite: [5]}")));
  CHECK(element_eq(apply("successor", "{finite: [5]}"), NatRegion::parse("{finite: [4]}")));
  CHECK(element_eq(apply("successor", "{finite: [0,1]}"), NatRegion::parse("{finite: [0]}")));
  CHECK(element_eq(apply("successor", "{cofinite: []}"), NatRegion::parse("{cofinite: []}")));
  CHECK(element_eq(apply("constant", "{finite: [5]}"), NatRegion::parse("{finite: []}")));
  CHECK(element_eq(apply("constant", "{finite: [0,1]}"), NatRegion::parse("{cofinite: []}")));
}

TEST_CASE("stock maps print their descriptions") {
  auto str = [](const char* name, CarrierKind k) { return map_str(stock_map(name, k)); };
  CHECK(str("identity", CarrierKind::rational_interval) == "identity: pl 1 < (0,0) > 1");
  CHECK(str("double", CarrierKind::rational_interval) == "double: pl 2 < (0,0) > 2");
  CHECK(str("abs", CarrierKind::rational_interval) == "abs: pl -1 < (0,0) > 1");
  CHECK(str("hat", CarrierKind::rational_interval) == "hat: pl 1 < (0,0) (1,1) (2,0) > -1");
  CHECK(str("constant", CarrierKind::rational_interval) == "constant: pl 0 < (0,0) > 0");
  CHECK(str("identity", CarrierKind::cofinite_nat) == "identity: nat[] shift 0");
  CHECK(str("successor", CarrierKind::cofinite_nat) == "successor: nat[] shift 1");
  CHECK(str("constant", CarrierKind::cofinite_nat) == "constant: nat[] const 0");
  CHECK_THROWS_AS(stock_map("bogus", CarrierKind::rational_interval), Error);
  CHECK_THROWS_AS(stock_map("identity", CarrierKind::finite), Error);
}

TEST_CASE("composition of described maps is exact and normalizes") {
  DescribedMap dbl = stock_map("double", CarrierKind::rational_interval);
  DescribedMap abs = stock_map("abs", CarrierKind::rational_interval);
  DescribedMap hat = stock_map("hat", CarrierKind::rational_interval);

  DescribedMap da = compose_maps(dbl, abs);
  CHECK(map_str(da) == "double.abs: pl -2 < (0,0) > 2");
  CHECK(element_eq(phi_apply(da, iv("[2,4]")), iv("[-2,-1] + [1,2]")));
  CHECK(element_eq(phi_apply(da, iv("[2,4]")),
                   phi_apply(abs, phi_apply(dbl, iv("[2,4]")))));

  DescribedMap hh = compose_maps(hat, hat);
  CHECK(map_str(hh) == "hat.hat: pl 1 < (1,1) > -1");
  for (int x = -3; x <= 4; ++x) CHECK(hh.pl.eval(Rat(x)) == hat.pl.eval(hat.pl.eval(Rat(x))));

  DescribedMap succ = stock_map("successor", CarrierKind::cofinite_nat);
  DescribedMap ss = compose_maps(succ, succ);
  CHECK(ss.nat(3) == 5);
  CHECK_THROWS_AS(compose_maps(dbl, succ), Error);
}

TEST_CASE("properness of a map is read off its tail behaviour") {
  for (const char* n : {"identity", "double", "abs", "hat"})
    CHECK(is_proper_map(stock_map(n, CarrierKind::rational_interval)));
  CHECK(!is_proper_map(stock_map("constant", CarrierKind::rational_interval)));
  CHECK(is_proper_map(stock_map("identity", CarrierKind::cofinite_nat)));
  CHECK(is_proper_map(stock_map("successor", CarrierKind::cofinite_nat)));
  CHECK(!is_proper_map(stock_map("constant", CarrierKind::cofinite_nat)));
}

TEST_CASE("the image hull covers the forward image of sampled regions") {
  RegionAlgebra line = interval_model();
  SampleStream stream(31);
  for (const DescribedMap& f : stock_maps(CarrierKind::rational_interval)) {
    for (int i = 0; i < 40; ++i) {
      Element r = line.sample(stream);
      Element hull = image_hull(f, r, rat(1, 100));
      const auto& region = as_interval(r);
      for (const Rat& x : iv_interior_points(region)) {
        Rat y = f.pl.eval(x);
        CAPTURE(f.name);
        CHECK(as_interval(hull).contains(y));
      }
    }
  }
  CHECK_THROWS_AS(image_hull(stock_map("abs", CarrierKind::rational_interval),
                             iv("[0,1]"), Rat(0)),
                  Error);

  DescribedMap succ = stock_map("successor", CarrierKind::cofinite_nat);
  Element img = image_hull(succ, NatRegion::parse("{finite: [0,3]}"), Rat(1));
  CHECK(element_eq(img, NatRegion::parse("{finite: [1,4]}")));
}

TEST_CASE("piecewise and natural map evaluation follows the description") {
  PlMap hat = stock_map("hat", CarrierKind::rational_interval).pl;
  CHECK(hat.eval(rat(1, 2)) == rat(1, 2));
  CHECK(hat.eval(rat(3, 2)) == rat(1, 2));
  CHECK(hat.eval(Rat(3)) == Rat(-1));
  CHECK(hat.eval(Rat(-2)) == Rat(-2));

  NatMap f = make_nat_map({5, 3}, 2);
  CHECK(f(0) == 5);
  CHECK(f(1) == 3);
  CHECK(f(2) == 4);
  NatMap g = make_nat_const({7}, 1);
  CHECK(g(0) == 7);
  CHECK(g(9) == 1);

  CHECK_THROWS_AS(make_pl_map({}, Rat(1), Rat(1)), Error);
  CHECK_THROWS_AS(make_pl_map({{Rat(1), Rat(0)}, {Rat(1), Rat(2)}}, Rat(1), Rat(1)), Error);
  CHECK_THROWS_AS(make_nat_map({}, -1), Error);
}

TEST_CASE("cluster points name clusters of the models") {
  CHECK(ClusterPoint::at(rat(3, 2)).str() == "Point(3/2)");
  CHECK(ClusterPoint::at_nat(6).str() == "Point(6)");
  CHECK(ClusterPoint::inf().str() == "Infinity");

  RegionAlgebra line = interval_model();
  CHECK(cluster_membership(line, ClusterPoint::at(rat(3, 2)), iv("[1,2]")));
  CHECK(!cluster_membership(line, ClusterPoint::at(rat(3, 2)), iv("[3,4]")));
  CHECK(cluster_membership(line, ClusterPoint::inf(), iv("[0,inf)")));
  CHECK(!cluster_membership(line, ClusterPoint::inf(), iv("[0,1]")));

  RegionAlgebra nat = nat_model();
  CHECK(cluster_membership(nat, ClusterPoint::at_nat(2), NatRegion::parse("{finite: [2,5]}")));
  CHECK(!cluster_membership(nat, ClusterPoint::at_nat(3), NatRegion::parse("{finite: [2,5]}")));
  CHECK(cluster_membership(nat, ClusterPoint::inf(), NatRegion::parse("{cofinite: [0]}")));
}

TEST_CASE("a boundary point traces a cluster that is not a filter") {
  RegionAlgebra line = interval_model();
  ClusterPoint p = ClusterPoint::at(Rat(1));
  Element left = iv("[0,1]"), right = iv("[1,2]");
  CHECK(cluster_membership(line, p, left));
  CHECK(cluster_membership(line, p, right));
  Element meet = line.meet(left, right);
  CHECK(line.is_zero(meet));
  CHECK(!cluster_membership(line, p, meet));
}
