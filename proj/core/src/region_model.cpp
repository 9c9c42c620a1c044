#include "rba/region_model.hpp"

#include "rba/errors.hpp"

namespace rba {

namespace {

Rat draw_rat(SampleStream& s) {
  int num = static_cast<int>(s.below(33)) - 16;
  int den = static_cast<int>(s.below(4)) + 1;
  return rat(num, den);
}

IntervalRegion iv_sample(SampleStream& s) {
  std::uint32_t roll = s.below(8);
  switch (roll) {
    case 0:
      return IntervalRegion::empty();
    case 1:
      return IntervalRegion::line();
    case 2:
      return IntervalRegion::interval(Ext::ninf(), Ext::fin(draw_rat(s)));
    case 3:
      return IntervalRegion::interval(Ext::fin(draw_rat(s)), Ext::pinf());
    case 4: {
      Rat a = draw_rat(s), b = draw_rat(s);
      if (b < a) std::swap(a, b);
      return iv_join(IntervalRegion::interval(Ext::ninf(), Ext::fin(a)),
                     IntervalRegion::interval(Ext::fin(b), Ext::pinf()));
    }
    default: {
      IntervalRegion out;
      std::uint32_t pieces = roll - 4;
      for (std::uint32_t i = 0; i < pieces; ++i) {
        Rat a = draw_rat(s), b = draw_rat(s);
        if (a == b) b = a + 1;
        if (b < a) std::swap(a, b);
        out = iv_join(out, IntervalRegion::interval(Ext::fin(a), Ext::fin(b)));
      }
      return out;
    }
  }
}

NatRegion nat_sample(SampleStream& s) {
  std::uint32_t roll = s.below(8);
  if (roll == 0) return NatRegion::empty();
  if (roll == 1) return NatRegion::all();
  std::uint32_t count = s.below(5) + 1;
  std::vector<std::uint32_t> members;
  for (std::uint32_t i = 0; i < count; ++i) members.push_back(s.below(32));
  if (roll <= 4) return NatRegion::finite(std::move(members));
  return NatRegion::cofinite(std::move(members));
}

IntervalRegion iv_box(int lo, int hi) {
  return IntervalRegion::interval(Ext::fin(Rat(lo)), Ext::fin(Rat(hi)));
}

}  // namespace

RegionAlgebra interval_model() {
  RegionAlgebra m;
  m.kind = CarrierKind::rational_interval;
  m.name = "intervals";
  m.zero = IntervalRegion::empty();
  m.one = IntervalRegion::line();
  m.join = [](const Element& a, const Element& b) -> Element {
    return iv_join(as_interval(a), as_interval(b));
  };
  m.meet = [](const Element& a, const Element& b) -> Element {
    return iv_meet(as_interval(a), as_interval(b));
  };
  m.complement = [](const Element& a) -> Element { return iv_complement(as_interval(a)); };
  m.contact = [](const Element& a, const Element& b) {
    return iv_contact(as_interval(a), as_interval(b));
  };
  m.bounded = [](const Element& a) { return iv_bounded(as_interval(a)); };
  m.print = [](const Element& a) { return as_interval(a).str(); };
  m.leq_fn = [](const Element& a, const Element& b) {
    return iv_leq(as_interval(a), as_interval(b));
  };
  m.sample = [](SampleStream& s) -> Element { return iv_sample(s); };
  m.probes = {
      IntervalRegion::empty(),
      IntervalRegion::line(),
      iv_box(0, 1),
      iv_box(1, 2),
      iv_join(iv_box(0, 1), iv_box(2, 3)),
      IntervalRegion::interval(Ext::ninf(), Ext::fin(Rat(0))),
      IntervalRegion::interval(Ext::fin(Rat(0)), Ext::pinf()),
      IntervalRegion::interval(Ext::fin(rat(1, 3)), Ext::fin(rat(2, 3))),
      iv_join(IntervalRegion::interval(Ext::ninf(), Ext::fin(Rat(-1))),
              IntervalRegion::interval(Ext::fin(Rat(1)), Ext::pinf())),
      iv_box(-5, 5),
  };
  m.interpolate = [](const Element& a, const Element& c) -> Element {
    return iv_interpolate(as_interval(a), as_interval(c));
  };
  m.inner_witness = [](const Element& w) -> Element {
    return iv_inner_witness(as_interval(w));
  };
  m.bc2_witness = [](const Element& a, const Element& b,
                     std::uint32_t depth) -> std::optional<std::pair<Element, std::uint32_t>> {
    const IntervalRegion& ra = as_interval(a);
    const IntervalRegion& rb = as_interval(b);
    for (std::uint32_t n = 1; n <= depth; ++n) {
      IntervalRegion c = iv_meet(rb, iv_box(-static_cast<int>(n), static_cast<int>(n)));
      if (!c.is_empty() && iv_contact(ra, c)) return std::pair<Element, std::uint32_t>{c, n};
    }
    return std::nullopt;
  };
  return m;
}

RegionAlgebra nat_model() {
  RegionAlgebra m;
  m.kind = CarrierKind::cofinite_nat;
  m.name = "naturals";
  m.zero = NatRegion::empty();
  m.one = NatRegion::all();
  m.join = [](const Element& a, const Element& b) -> Element {
    return nat_join(as_nat(a), as_nat(b));
  };
  m.meet = [](const Element& a, const Element& b) -> Element {
    return nat_meet(as_nat(a), as_nat(b));
  };
  m.complement = [](const Element& a) -> Element { return nat_complement(as_nat(a)); };
  m.contact = [](const Element& a, const Element& b) {
    return nat_contact(as_nat(a), as_nat(b));
  };
  m.bounded = [](const Element& a) { return nat_bounded(as_nat(a)); };
  m.print = [](const Element& a) { return as_nat(a).str(); };
  m.leq_fn = [](const Element& a, const Element& b) { return nat_leq(as_nat(a), as_nat(b)); };
  m.sample = [](SampleStream& s) -> Element { return nat_sample(s); };
  m.probes = {
      NatRegion::empty(),
      NatRegion::all(),
      NatRegion::finite({0}),
      NatRegion::finite({0, 1}),
      NatRegion::finite({5}),
      NatRegion::cofinite({0}),
      NatRegion::cofinite({0, 1}),
      NatRegion::finite({0, 2, 4}),
      NatRegion::cofinite({1, 3}),
      NatRegion::finite({31}),
  };
  m.interpolate = [](const Element& a, const Element& c) -> Element {
    if (!nat_leq(as_nat(a), as_nat(c)))
      fail(Errc::precondition_violated, "interpolation needs a << c");
    return a;
  };
  m.inner_witness = [](const Element& w) -> Element {
    auto least = as_nat(w).least();
    if (!least) fail(Errc::empty_candidate, "no inner witness of the empty region");
    return NatRegion::finite({*least});
  };
  m.bc2_witness = [](const Element& a, const Element& b,
                     std::uint32_t) -> std::optional<std::pair<Element, std::uint32_t>> {
    NatRegion common = nat_meet(as_nat(a), as_nat(b));
    auto least = common.least();
    if (!least) return std::nullopt;
    return std::pair<Element, std::uint32_t>{NatRegion::finite({*least}), *least};
  };
  return m;
}

ClusterPoint ClusterPoint::at(Rat value) {
  ClusterPoint p;
  p.kind = Kind::rational;
  p.x = std::move(value);
  return p;
}

ClusterPoint ClusterPoint::at_nat(std::uint32_t value) {
  ClusterPoint p;
  p.kind = Kind::natural;
  p.n = value;
  return p;
}

ClusterPoint ClusterPoint::inf() { return ClusterPoint{}; }

std::string ClusterPoint::str() const {
  switch (kind) {
    case Kind::rational:
      return "Point(" + rat_str(x) + ")";
    case Kind::natural:
      return "Point(" + std::to_string(n) + ")";
    default:
      return "Infinity";
  }
}

bool cluster_membership(const RegionAlgebra& model, const ClusterPoint& p, const Element& e) {
  if (p.kind == ClusterPoint::Kind::infinity) return !model.bounded(e);
  switch (model.kind) {
    case CarrierKind::rational_interval:
      if (p.kind != ClusterPoint::Kind::rational)
        fail(Errc::model_mismatch, "the interval model takes rational points");
      return as_interval(e).contains(p.x);
    case CarrierKind::cofinite_nat:
      if (p.kind != ClusterPoint::Kind::natural)
        fail(Errc::model_mismatch, "the discrete model takes natural points");
      return as_nat(e).contains(p.n);
    default:
      fail(Errc::model_mismatch, "cluster points name the infinite models");
  }
}

}  // namespace rba
