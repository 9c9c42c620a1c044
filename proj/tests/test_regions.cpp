#include <string>
#include <vector>

#include "doctest.h"
#include "rba/contract.hpp"
#include "rba/errors.hpp"
#include "rba/interval_region.hpp"
#include "rba/nat_region.hpp"
#include "rba/rational.hpp"
#include "rba/region_model.hpp"

namespace {

using namespace rba;

IntervalRegion iv(const std::string& text) { return IntervalRegion::parse(text); }

// Quarter-step probe points across a window wide enough to cross every
// sampled component.
std::vector<Rat> probe_grid() {
  std::vector<Rat> g;
  for (int k = -48; k <= 48; ++k) g.push_back(rat(k, 4));
  return g;
}

std::vector<IntervalRegion> sampled_regions(int count, std::uint64_t seed) {
  RegionAlgebra m = interval_model();
  SampleStream rng(seed);
  std::vector<IntervalRegion> out;
  for (int i = 0; i < count; ++i) out.push_back(as_interval(m.sample(rng)));
  return out;
}

}  // namespace

TEST_CASE("interval literals parse and print inversely") {
  IntervalRegion two = iv("[1/3, 2/3] + [1,inf)");
  REQUIRE(two.parts().size() == 2);
  CHECK(two.parts()[0].lo.finite());
  CHECK(!two.parts()[1].hi.finite());
  CHECK(two.str() == "[1/3,2/3] + [1,inf)");
  CHECK(IntervalRegion::parse(two.str()) == two);

  CHECK(iv("empty").is_empty());
  CHECK(iv("(-inf,inf)").is_line());
  CHECK(iv("(-inf,-2] + [5,7]").str() == "(-inf,-2] + [5,7]");
  CHECK_THROWS_AS(iv("[2,1]"), Error);
  CHECK_THROWS_AS(iv("[1;2]"), Error);
  CHECK_THROWS_AS(iv("(0,1)"), Error);
}

TEST_CASE("interval join matches pointwise union on a probe grid") {
  auto grid = probe_grid();
  auto regions = sampled_regions(40, 101);
  for (std::size_t i = 0; i + 1 < regions.size(); i += 2) {
    const IntervalRegion& a = regions[i];
    const IntervalRegion& b = regions[i + 1];
    IntervalRegion j = iv_join(a, b);
    for (const Rat& x : grid) {
      CAPTURE(a.str());
      CAPTURE(b.str());
      CAPTURE(rat_str(x));
      REQUIRE(j.contains(x) == (a.contains(x) || b.contains(x)));
    }
  }
}

TEST_CASE("interval meet closes the interior of the intersection") {
  auto grid = probe_grid();
  auto regions = sampled_regions(40, 202);
  for (std::size_t i = 0; i + 1 < regions.size(); i += 2) {
    const IntervalRegion& a = regions[i];
    const IntervalRegion& b = regions[i + 1];
    IntervalRegion mt = iv_meet(a, b);
    for (const Rat& x : grid) {
      CAPTURE(a.str());
      CAPTURE(b.str());
      CAPTURE(rat_str(x));
      if (a.interior_contains(x) && b.interior_contains(x)) REQUIRE(mt.contains(x));
      if (!a.contains(x) || !b.contains(x)) REQUIRE(!mt.contains(x));
    }
  }
  CHECK(iv_meet(iv("[0,1]"), iv("[1,2]")).is_empty());
  CHECK(iv_meet(iv("[0,2]"), iv("[1,3]")) == iv("[1,2]"));
}

TEST_CASE("interval complement closes the set complement") {
  auto grid = probe_grid();
  for (const IntervalRegion& a : sampled_regions(25, 303)) {
    IntervalRegion c = iv_complement(a);
    for (const Rat& x : grid) {
      CAPTURE(a.str());
      CAPTURE(rat_str(x));
      if (!a.contains(x)) REQUIRE(c.contains(x));
      if (a.interior_contains(x)) REQUIRE(!c.contains(x));
    }
    REQUIRE(iv_complement(c) == a);
    REQUIRE(iv_join(a, c).is_line());
  }
  CHECK(iv_complement(iv("[0,1]")).str() == "(-inf,0] + [1,inf)");
  CHECK(iv_complement(IntervalRegion::line()).is_empty());
}

TEST_CASE("contact and way-below on touching and separated intervals") {
  CHECK(iv_contact(iv("[0,1]"), iv("[1,2]")));
  CHECK(!iv_contact(iv("[0,1]"), iv("[2,3]")));
  CHECK(iv_contact(iv("(-inf,0]"), iv("[0,inf)")));

  CHECK(iv_way_below(iv("[0,1]"), iv("[-1,2]")));
  CHECK(!iv_way_below(iv("[0,1]"), iv("[0,2]")));
  CHECK(iv_way_below(iv("[0,1]"), IntervalRegion::line()));
  CHECK(iv_leq(iv("[0,1]"), iv("[0,2]")));
  CHECK(!iv_leq(iv("[0,2]"), iv("[0,1]")));
}

TEST_CASE("shrink stays inside the interior and expand covers strictly") {
  for (const IntervalRegion& a : sampled_regions(20, 404)) {
    if (a.is_empty()) continue;
    IntervalRegion s = iv_shrink(a, rat(1, 8));
    IntervalRegion e = iv_expand(a, rat(1, 8));
    CAPTURE(a.str());
    if (!s.is_empty()) REQUIRE(iv_way_below(s, a));
    REQUIRE(iv_bounded(s));
    REQUIRE(iv_way_below(a, e));
  }
}

TEST_CASE("interpolation and inner witnesses satisfy their contracts") {
  IntervalRegion a = iv("[0,1]");
  IntervalRegion c = iv("[-1,2]");
  IntervalRegion b = iv_interpolate(a, c);
  CHECK(iv_way_below(a, b));
  CHECK(iv_way_below(b, c));
  CHECK(iv_bounded(b));

  IntervalRegion ray = iv("[0,inf)");
  IntervalRegion w = iv_inner_witness(ray);
  CHECK(!w.is_empty());
  CHECK(iv_bounded(w));
  CHECK(iv_way_below(w, ray));
}

TEST_CASE("natural regions mirror finite and cofinite set algebra") {
  NatRegion f = NatRegion::finite({1, 4, 4, 2});
  CHECK(f.str() == "{finite: [1,2,4]}");
  CHECK(f.contains(2));
  CHECK(!f.contains(3));

  NatRegion c = NatRegion::cofinite({0, 1});
  CHECK(c.str() == "{cofinite: [0,1]}");
  CHECK(!c.contains(0));
  CHECK(c.contains(7));
  CHECK(c.is_cofinite());

  CHECK(NatRegion::parse("{finite: [1,2,4]}") == f);
  CHECK(NatRegion::parse("{cofinite: []}").is_all());
  CHECK(NatRegion::parse(" { finite : [ 3 ] } ").contains(3));
  CHECK_THROWS_AS(NatRegion::parse("{finite: [x]}"), Error);
  CHECK_THROWS_AS(NatRegion::parse("finite: [1]"), Error);
}

TEST_CASE("the nat model is a Boolean algebra under the closures") {
  RegionAlgebra m = nat_model();
  Element f = NatRegion::finite({0, 2});
  Element c = NatRegion::cofinite({2});
  CHECK(m.print(m.join(f, c)) == "{cofinite: []}");
  CHECK(m.print(m.meet(f, c)) == "{finite: [0]}");
  CHECK(m.print(m.complement(f)) == "{cofinite: [0,2]}");
  CHECK(m.contact(f, c));
  CHECK(m.bounded(f));
  CHECK(!m.bounded(c));
  CHECK(m.leq(f, m.join(f, c)));

  SampleStream rng(99);
  for (int i = 0; i < 50; ++i) {
    Element a = m.sample(rng);
    Element b = m.sample(rng);
    REQUIRE(element_eq(m.complement(m.complement(a)), a));
    REQUIRE(element_eq(m.meet(a, b), m.complement(m.join(m.complement(a), m.complement(b)))));
  }
}

TEST_CASE("rationals parse and print through the shared helpers") {
  CHECK(rat_str(rat(3, 2)) == "3/2");
  CHECK(rat_str(rat(-4)) == "-4");
  CHECK(*rat_parse("7/3") == rat(7, 3));
  CHECK(*rat_parse("-2") == rat(-2));
  CHECK(!rat_parse("1/0").has_value());
  CHECK(!rat_parse("abc").has_value());
}
