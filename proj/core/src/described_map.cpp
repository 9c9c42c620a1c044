#include "rba/described_map.hpp"

#include <algorithm>
#include <set>

#include "rba/errors.hpp"
#include "rba/interval_region.hpp"
#include "rba/nat_region.hpp"

namespace rba {

std::uint32_t NatMap::operator()(std::uint32_t n) const {
  if (n < exceptions.size()) return exceptions[n];
  if (tail_constant) return constant;
  return static_cast<std::uint32_t>(static_cast<std::int64_t>(n) + shift);
}

NatMap make_nat_map(std::vector<std::uint32_t> exceptions, std::int32_t shift) {
  if (static_cast<std::int64_t>(exceptions.size()) + shift < 0)
    fail(Errc::precondition_violated,
         "tail shift " + std::to_string(shift) + " leaves the naturals");
  NatMap f;
  f.exceptions = std::move(exceptions);
  f.shift = shift;
  return f;
}

NatMap make_nat_const(std::vector<std::uint32_t> exceptions, std::uint32_t constant) {
  NatMap f;
  f.exceptions = std::move(exceptions);
  f.tail_constant = true;
  f.constant = constant;
  return f;
}

Rat PlMap::eval(const Rat& x) const {
  const auto& first = bps.front();
  if (x <= first.first) return first.second + slope_left * (x - first.first);
  const auto& last = bps.back();
  if (x >= last.first) return last.second + slope_right * (x - last.first);
  for (std::size_t i = 0; i + 1 < bps.size(); ++i)
    if (x <= bps[i + 1].first) {
      Rat s = (bps[i + 1].second - bps[i].second) / (bps[i + 1].first - bps[i].first);
      return bps[i].second + s * (x - bps[i].first);
    }
  return last.second;
}

PlMap make_pl_map(std::vector<std::pair<Rat, Rat>> bps, Rat slope_left, Rat slope_right) {
  if (bps.empty()) fail(Errc::precondition_violated, "a piecewise map needs a breakpoint");
  for (std::size_t i = 0; i + 1 < bps.size(); ++i)
    if (!(bps[i].first < bps[i + 1].first))
      fail(Errc::precondition_violated, "breakpoints must strictly increase");
  PlMap f;
  f.bps = std::move(bps);
  f.slope_left = std::move(slope_left);
  f.slope_right = std::move(slope_right);
  return f;
}

DescribedMap described_nat(std::string name, NatMap f) {
  DescribedMap d;
  d.name = std::move(name);
  d.kind = CarrierKind::cofinite_nat;
  d.nat = std::move(f);
  return d;
}

DescribedMap described_pl(std::string name, PlMap f) {
  DescribedMap d;
  d.name = std::move(name);
  d.kind = CarrierKind::rational_interval;
  d.pl = std::move(f);
  return d;
}

DescribedMap stock_map(const std::string& name, CarrierKind kind) {
  auto bp = [](int x, int v) { return std::pair<Rat, Rat>{Rat(x), Rat(v)}; };
  if (kind == CarrierKind::rational_interval) {
    if (name == "identity") return described_pl(name, make_pl_map({bp(0, 0)}, 1, 1));
    if (name == "double") return described_pl(name, make_pl_map({bp(0, 0)}, 2, 2));
    if (name == "abs") return described_pl(name, make_pl_map({bp(0, 0)}, -1, 1));
    if (name == "hat")
      return described_pl(name, make_pl_map({bp(0, 0), bp(1, 1), bp(2, 0)}, 1, -1));
    if (name == "constant") return described_pl(name, make_pl_map({bp(0, 0)}, 0, 0));
  } else if (kind == CarrierKind::cofinite_nat) {
    if (name == "identity") return described_nat(name, make_nat_map({}, 0));
    if (name == "successor") return described_nat(name, make_nat_map({}, 1));
    if (name == "constant") return described_nat(name, make_nat_const({}, 0));
  } else {
    fail(Errc::unsupported_family_for_model, "stock maps live on the infinite models");
  }
  fail(Errc::reference_error, "unknown stock map '" + name + "'");
}

std::vector<DescribedMap> stock_maps(CarrierKind kind) {
  std::vector<DescribedMap> out;
  if (kind == CarrierKind::rational_interval)
    for (const char* n : {"identity", "double", "abs", "hat", "constant"})
      out.push_back(stock_map(n, kind));
  else
    for (const char* n : {"identity", "successor", "constant"})
      out.push_back(stock_map(n, kind));
  return out;
}

namespace {

struct Piece {
  Ext lo, hi;
  Rat s, t;  // f(x) = s * x + t on [lo, hi]
};

std::vector<Piece> pieces_of(const PlMap& f) {
  std::vector<Piece> out;
  const auto& b = f.bps;
  out.push_back(Piece{Ext::ninf(), Ext::fin(b.front().first), f.slope_left,
                      b.front().second - f.slope_left * b.front().first});
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    Rat s = (b[i + 1].second - b[i].second) / (b[i + 1].first - b[i].first);
    out.push_back(Piece{Ext::fin(b[i].first), Ext::fin(b[i + 1].first), s,
                        b[i].second - s * b[i].first});
  }
  out.push_back(Piece{Ext::fin(b.back().first), Ext::pinf(), f.slope_right,
                      b.back().second - f.slope_right * b.back().first});
  return out;
}

// x with s*x + t = v, as an extended endpoint; v may be infinite.
Ext preimage_endpoint(const Rat& s, const Rat& t, const Ext& v) {
  bool up = s > 0;
  if (v.kind() == Ext::Kind::pos_inf) return up ? Ext::pinf() : Ext::ninf();
  if (v.kind() == Ext::Kind::neg_inf) return up ? Ext::ninf() : Ext::pinf();
  return Ext::fin((v.value() - t) / s);
}

IntervalRegion pl_phi(const PlMap& f, const IntervalRegion& G) {
  std::vector<Ivl> parts;
  for (const Piece& p : pieces_of(f)) {
    if (p.s == 0) {
      if (G.interior_contains(p.t)) parts.push_back(Ivl{p.lo, p.hi});
      continue;
    }
    for (const Ivl& g : G.parts()) {
      Ext a = preimage_endpoint(p.s, p.t, p.s > 0 ? g.lo : g.hi);
      Ext b = preimage_endpoint(p.s, p.t, p.s > 0 ? g.hi : g.lo);
      Ext lo = a < p.lo ? p.lo : a;
      Ext hi = b < p.hi ? b : p.hi;
      if (lo < hi) parts.push_back(Ivl{lo, hi});
    }
  }
  return IntervalRegion::from_parts(std::move(parts));
}

NatRegion nat_phi(const NatMap& f, const NatRegion& G) {
  // On the discrete line the transform is the plain preimage.
  std::uint32_t N = static_cast<std::uint32_t>(f.exceptions.size());
  std::vector<std::uint32_t> head;
  for (std::uint32_t n = 0; n < N; ++n)
    if (G.contains(f(n))) head.push_back(n);
  if (f.tail_constant) {
    if (!G.contains(f.constant)) return NatRegion::finite(std::move(head));
    std::vector<std::uint32_t> gaps;
    for (std::uint32_t n = 0; n < N; ++n)
      if (!G.contains(f(n))) gaps.push_back(n);
    return NatRegion::cofinite(std::move(gaps));
  }
  if (!G.is_cofinite()) {
    for (std::uint32_t m : G.support()) {
      std::int64_t n = static_cast<std::int64_t>(m) - f.shift;
      if (n >= N) head.push_back(static_cast<std::uint32_t>(n));
    }
    std::sort(head.begin(), head.end());
    return NatRegion::finite(std::move(head));
  }
  std::vector<std::uint32_t> gaps;
  for (std::uint32_t n = 0; n < N; ++n)
    if (!G.contains(f(n))) gaps.push_back(n);
  for (std::uint32_t m : G.support()) {
    std::int64_t n = static_cast<std::int64_t>(m) - f.shift;
    if (n >= N) gaps.push_back(static_cast<std::uint32_t>(n));
  }
  std::sort(gaps.begin(), gaps.end());
  return NatRegion::cofinite(std::move(gaps));
}

PlMap compose_pl(const PlMap& g, const PlMap& f) {
  std::set<Rat> xs;
  for (const auto& b : f.bps) xs.insert(b.first);
  for (const Piece& p : pieces_of(f)) {
    if (p.s == 0) continue;
    for (const auto& gb : g.bps) {
      Ext x = preimage_endpoint(p.s, p.t, Ext::fin(gb.first));
      if (p.lo <= x && x <= p.hi) xs.insert(x.value());
    }
  }
  std::vector<std::pair<Rat, Rat>> bps;
  for (const Rat& x : xs) bps.emplace_back(x, g.eval(f.eval(x)));
  auto tail_slope = [&](const Rat& sf, bool left) -> Rat {
    if (sf == 0) return Rat(0);
    if (sf > 0) return (left ? g.slope_left : g.slope_right) * sf;
    return (left ? g.slope_right : g.slope_left) * sf;
  };
  Rat sl = tail_slope(f.slope_left, true);
  Rat sr = tail_slope(f.slope_right, false);
  // The candidate set contains every kink of the composite, so each gap and
  // both tails must be affine; spot-check before normalizing.
  auto h = [&](const Rat& x) { return g.eval(f.eval(x)); };
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    Rat mid = (bps[i].first + bps[i + 1].first) / 2;
    Rat want = bps[i].second + (bps[i + 1].second - bps[i].second) / 2;
    if (h(mid) != want)
      fail(Errc::precondition_violated, "composition is not piecewise linear on its candidates");
  }
  if (h(bps.front().first - 1) != bps.front().second - sl ||
      h(bps.back().first + 1) != bps.back().second + sr)
    fail(Errc::precondition_violated, "composition tails are not affine");
  std::vector<std::pair<Rat, Rat>> kept;
  for (std::size_t i = 0; i < bps.size(); ++i) {
    Rat before = i == 0 ? sl
                        : (bps[i].second - bps[i - 1].second) /
                              (bps[i].first - bps[i - 1].first);
    Rat after = i + 1 == bps.size()
                    ? sr
                    : (bps[i + 1].second - bps[i].second) / (bps[i + 1].first - bps[i].first);
    if (before != after || bps.size() == 1) kept.push_back(bps[i]);
  }
  if (kept.empty()) kept.push_back(bps.front());
  return make_pl_map(std::move(kept), sl, sr);
}

NatMap compose_nat(const NatMap& g, const NatMap& f) {
  std::uint32_t Nf = static_cast<std::uint32_t>(f.exceptions.size());
  std::uint32_t Ng = static_cast<std::uint32_t>(g.exceptions.size());
  std::uint32_t M;
  if (f.tail_constant) {
    M = Nf;
  } else {
    std::int64_t need = static_cast<std::int64_t>(Ng) - f.shift;
    M = Nf;
    if (need > M) M = static_cast<std::uint32_t>(need);
  }
  std::vector<std::uint32_t> head;
  for (std::uint32_t n = 0; n < M; ++n) head.push_back(g(f(n)));
  if (f.tail_constant) return make_nat_const(std::move(head), g(f.constant));
  if (g.tail_constant) return make_nat_const(std::move(head), g.constant);
  return make_nat_map(std::move(head), f.shift + g.shift);
}

}  // namespace

namespace {

NatRegion nat_image(const NatMap& f, const NatRegion& b) {
  std::uint32_t N = static_cast<std::uint32_t>(f.exceptions.size());
  if (!b.is_cofinite()) {
    std::vector<std::uint32_t> vals;
    for (std::uint32_t n : b.support()) vals.push_back(f(n));
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return NatRegion::finite(std::move(vals));
  }
  std::vector<std::uint32_t> head;
  for (std::uint32_t n = 0; n < N; ++n)
    if (b.contains(n)) head.push_back(f(n));
  if (f.tail_constant) {
    head.push_back(f.constant);
    std::sort(head.begin(), head.end());
    head.erase(std::unique(head.begin(), head.end()), head.end());
    return NatRegion::finite(std::move(head));
  }
  // Shift tail of a cofinite region: everything from N + shift on, except the
  // shifted gaps, plus whatever the head contributes below.
  std::int64_t base = static_cast<std::int64_t>(N) + f.shift;
  std::set<std::uint32_t> gaps;
  for (std::int64_t m = 0; m < base; ++m) gaps.insert(static_cast<std::uint32_t>(m));
  for (std::uint32_t g : b.support())
    if (g >= N) gaps.insert(static_cast<std::uint32_t>(g + f.shift));
  for (std::uint32_t v : head) gaps.erase(v);
  return NatRegion::cofinite(std::vector<std::uint32_t>(gaps.begin(), gaps.end()));
}

IntervalRegion pl_image_hull(const PlMap& f, const IntervalRegion& b, const Rat& pad) {
  std::vector<Ivl> parts;
  auto value_at = [&](const Piece& p, const Ext& x) -> Ext {
    if (!x.finite()) {
      if (p.s == 0) return Ext::fin(p.t);
      bool up = (p.s > 0) == (x.kind() == Ext::Kind::pos_inf);
      return up ? Ext::pinf() : Ext::ninf();
    }
    return Ext::fin(p.s * x.value() + p.t);
  };
  for (const Piece& p : pieces_of(f))
    for (const Ivl& g : b.parts()) {
      Ext lo = g.lo < p.lo ? p.lo : g.lo;
      Ext hi = g.hi < p.hi ? g.hi : p.hi;
      if (hi < lo) continue;
      Ext va = value_at(p, lo), vb = value_at(p, hi);
      if (vb < va) std::swap(va, vb);
      Ext out_lo = va.finite() ? Ext::fin(va.value() - pad) : va;
      Ext out_hi = vb.finite() ? Ext::fin(vb.value() + pad) : vb;
      if (out_lo < out_hi) parts.push_back(Ivl{out_lo, out_hi});
    }
  return IntervalRegion::from_parts(std::move(parts));
}

}  // namespace

Element image_hull(const DescribedMap& f, const Element& region, const Rat& pad) {
  if (f.kind == CarrierKind::cofinite_nat) return nat_image(f.nat, as_nat(region));
  if (!(pad > 0)) fail(Errc::precondition_violated, "image hull needs a positive pad");
  return pl_image_hull(f.pl, as_interval(region), pad);
}

Element phi_apply(const DescribedMap& f, const Element& region) {
  if (f.kind == CarrierKind::cofinite_nat) return nat_phi(f.nat, as_nat(region));
  return pl_phi(f.pl, as_interval(region));
}

DescribedMap compose_maps(const DescribedMap& g, const DescribedMap& f) {
  if (g.kind != f.kind)
    fail(Errc::not_composable, "'" + g.name + "' and '" + f.name + "' live on different models");
  DescribedMap out;
  out.name = g.name + "." + f.name;
  out.kind = f.kind;
  if (f.kind == CarrierKind::cofinite_nat)
    out.nat = compose_nat(g.nat, f.nat);
  else
    out.pl = compose_pl(g.pl, f.pl);
  return out;
}

bool is_proper_map(const DescribedMap& f) {
  if (f.kind == CarrierKind::cofinite_nat) return !f.nat.tail_constant;
  return f.pl.slope_left != 0 && f.pl.slope_right != 0;
}

std::string map_str(const DescribedMap& f) {
  if (f.kind == CarrierKind::cofinite_nat) {
    std::string out = f.name + ": nat[";
    for (std::size_t i = 0; i < f.nat.exceptions.size(); ++i)
      out += (i ? "," : "") + std::to_string(f.nat.exceptions[i]);
    out += "]";
    if (f.nat.tail_constant)
      out += " const " + std::to_string(f.nat.constant);
    else
      out += " shift " + std::to_string(f.nat.shift);
    return out;
  }
  std::string out = f.name + ": pl " + rat_str(f.pl.slope_left) + " <";
  for (const auto& b : f.pl.bps) out += " (" + rat_str(b.first) + "," + rat_str(b.second) + ")";
  return out + " > " + rat_str(f.pl.slope_right);
}

}  // namespace rba
