#include "rba/morphism.hpp"

#include <algorithm>
#include <map>

#include "rba/delta_ideal.hpp"
#include "rba/errors.hpp"
#include "rba/region_model.hpp"

namespace rba {

namespace {

const std::map<std::string, Family>& family_table() {
  static const std::map<std::string, Family> t = {
      {"DVAL1", Family::DVAL1}, {"DVAL2", Family::DVAL2}, {"DVAL3", Family::DVAL3},
      {"DVAL4", Family::DVAL4}, {"PAL1", Family::PAL1},   {"PAL2", Family::PAL2},
      {"PAL3", Family::PAL3},   {"PAL4", Family::PAL4},   {"PAL5", Family::PAL5},
      {"PAL6", Family::PAL6},   {"DLC1", Family::DLC1},   {"DLC2", Family::DLC2},
      {"DLC3", Family::DLC3},   {"DLC4", Family::DLC4},   {"DLC5", Family::DLC5},
      {"DLC3'", Family::DLC3P}, {"DLC3S", Family::DLC3S}, {"LC3", Family::LC3},
      {"LC3S", Family::LC3S},   {"F1", Family::F1},       {"L1", Family::L1},
      {"L2", Family::L2},       {"CBH", Family::CBH},
  };
  return t;
}

}  // namespace

const char* family_name(Family f) {
  for (const auto& [name, fam] : family_table())
    if (fam == f) return name.c_str();
  return "?";
}

Family family_parse(const std::string& name) {
  auto it = family_table().find(name);
  if (it == family_table().end()) fail(Errc::reference_error, "unknown family '" + name + "'");
  return it->second;
}

Element Morphism::apply(const Element& a) const {
  if (map_induced) return phi_apply(map, a);
  return FiniteElem{table[as_finite(a).idx]};
}

Morphism finite_morphism(std::shared_ptr<const FiniteAlgebra> dom,
                         std::shared_ptr<const FiniteAlgebra> cod,
                         std::vector<std::uint8_t> table, std::string name) {
  if (static_cast<int>(table.size()) != dom->size())
    fail(Errc::precondition_violated, "table must cover the domain");
  for (std::uint8_t v : table)
    if (v >= cod->size()) fail(Errc::precondition_violated, "table value out of the codomain");
  Morphism m;
  m.name = std::move(name);
  m.dom = std::move(dom);
  m.cod = std::move(cod);
  m.table = std::move(table);
  return m;
}

Morphism identity_morphism(std::shared_ptr<const FiniteAlgebra> alg) {
  std::vector<std::uint8_t> t(alg->size());
  for (int i = 0; i < alg->size(); ++i) t[i] = static_cast<std::uint8_t>(i);
  return finite_morphism(alg, alg, std::move(t), "id");
}

Morphism morphism_from_map(const DescribedMap& f) {
  Morphism m;
  m.name = "phi_" + f.name;
  m.map_induced = true;
  m.map = f;
  m.model = f.kind == CarrierKind::cofinite_nat ? nat_model() : interval_model();
  return m;
}

Morphism morphism_from_space_map(const RcAlgebra& X, const RcAlgebra& Y,
                                 const std::vector<int>& point_map, std::string name) {
  if (static_cast<int>(point_map.size()) != X.space.size())
    fail(Errc::precondition_violated, "point map must cover the space");
  for (int v : point_map)
    if (v < 0 || v >= Y.space.size())
      fail(Errc::precondition_violated, "point map value out of range");
  auto preimage = [&](std::uint32_t ymask) {
    std::uint32_t m = 0;
    for (int x = 0; x < X.space.size(); ++x)
      if ((ymask >> point_map[x]) & 1u) m |= 1u << x;
    return m;
  };
  for (std::uint32_t o : Y.space.opens)
    if (!X.space.is_open(preimage(o)))
      fail(Errc::not_continuous,
           "preimage of " + Y.space.set_str(o) + " is " + X.space.set_str(preimage(o)) +
               ", not open");
  std::vector<std::uint8_t> table;
  for (std::uint32_t g : Y.elements) {
    std::uint32_t rc = X.space.closure(preimage(Y.space.interior(g)));
    auto id = X.id_of(rc);
    if (!id)
      fail(Errc::precondition_violated,
           "transform left the regular closed family at " + X.space.set_str(rc));
    table.push_back(*id);
  }
  return finite_morphism(Y.algebra, X.algebra, std::move(table), std::move(name));
}

bool MorphismReport::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const FamilyVerdict& v) { return v.status == AxStatus::holds; });
}

bool MorphismReport::any_fails() const {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const FamilyVerdict& v) { return v.status == AxStatus::fails; });
}

namespace {

// ---------- finite lane ----------

struct Fin {
  const FiniteAlgebra& A;
  const FiniteAlgebra& B;
  const std::vector<std::uint8_t>& t;

  int n() const { return A.size(); }
  std::uint8_t phi(int a) const { return t[a]; }
  std::string la(int a) const { return A.labels[a]; }
  std::string lb(int b) const { return B.labels[b]; }
};

FamilyVerdict fin_check(const Fin& f, Family fam) {
  FamilyVerdict v;
  v.family = fam;
  v.status = AxStatus::holds;
  const FiniteAlgebra& A = f.A;
  const FiniteAlgebra& B = f.B;
  auto fails2 = [&](int a, int b) {
    v.status = AxStatus::fails;
    v.witness = "a = " + f.la(a) + ", b = " + f.la(b);
  };
  int n = f.n();
  switch (fam) {
    case Family::DVAL1:
    case Family::PAL1:
    case Family::DLC1:
      if (f.phi(A.zero) != B.zero) {
        v.status = AxStatus::fails;
        v.witness = "phi(0) = " + f.lb(f.phi(A.zero));
      }
      break;
    case Family::DVAL2:
    case Family::PAL2:
    case Family::DLC2:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (f.phi(A.meet(a, b)) != B.meet(f.phi(a), f.phi(b))) {
            fails2(a, b);
            return v;
          }
      break;
    case Family::DVAL3:
    case Family::PAL3:
    case Family::DLC3:
    case Family::DLC3P:
    case Family::DLC3S:
      for (int a = 0; a < n; ++a) {
        bool a_ib = A.bounded(a);
        bool need_a_ib = fam == Family::PAL3 || fam == Family::DLC3 || fam == Family::DLC3P;
        if (need_a_ib && !a_ib) continue;
        for (int b = 0; b < n; ++b) {
          if (fam == Family::DLC3P && !A.bounded(b)) continue;
          if (!A.way_below(a, b)) continue;
          std::uint8_t lhs = B.comp(f.phi(A.comp(a)));
          if (!B.way_below(lhs, f.phi(b))) {
            fails2(a, b);
            return v;
          }
        }
      }
      break;
    case Family::LC3:
    case Family::LC3S:
      for (int a1 = 0; a1 < n; ++a1) {
        if (fam == Family::LC3 && !A.bounded(a1)) continue;
        for (int b1 = 0; b1 < n; ++b1) {
          if (!A.way_below(a1, b1)) continue;
          for (int a2 = 0; a2 < n; ++a2) {
            if (fam == Family::LC3 && !A.bounded(a2)) continue;
            for (int b2 = 0; b2 < n; ++b2) {
              if (!A.way_below(a2, b2)) continue;
              std::uint8_t lhs = f.phi(A.join(a1, a2));
              std::uint8_t rhs = B.join(f.phi(b1), f.phi(b2));
              if (!B.way_below(lhs, rhs)) {
                v.status = AxStatus::fails;
                v.witness = "a1 = " + f.la(a1) + ", b1 = " + f.la(b1) + ", a2 = " + f.la(a2) +
                            ", b2 = " + f.la(b2);
                return v;
              }
            }
          }
        }
      }
      break;
    case Family::DVAL4:
    case Family::PAL6:
    case Family::DLC5:
      for (int a = 0; a < n; ++a) {
        std::uint8_t acc = B.zero;
        for (int b = 0; b < n; ++b) {
          if (fam == Family::DLC5 && !A.bounded(b)) continue;
          bool wb = fam == Family::PAL6 ? A.way_below_of(b, a, ContactChoice::alexandroff)
                                        : A.way_below(b, a);
          if (wb) acc = B.join(acc, f.phi(b));
        }
        if (acc != f.phi(a)) {
          v.status = AxStatus::fails;
          v.witness = "a = " + f.la(a) + ", join = " + f.lb(acc) + ", phi(a) = " + f.lb(f.phi(a));
          return v;
        }
      }
      break;
    case Family::PAL4:
    case Family::DLC4:
      for (int b = 0; b < B.size(); ++b) {
        if (!B.bounded(b)) continue;
        bool found = false;
        for (int a = 0; a < n && !found; ++a)
          found = A.bounded(a) && B.leq(b, f.phi(a));
        if (!found) {
          v.status = AxStatus::fails;
          v.witness = "b = " + f.lb(b);
          return v;
        }
      }
      break;
    case Family::PAL5:
      for (int a = 0; a < n; ++a)
        if (A.bounded(a) && !B.bounded(f.phi(a))) {
          v.status = AxStatus::fails;
          v.witness = "a = " + f.la(a) + ", phi(a) = " + f.lb(f.phi(a));
          return v;
        }
      break;
    case Family::F1:
    case Family::L1:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (B.contact(f.phi(a), f.phi(b)) && !A.contact(a, b)) {
            fails2(a, b);
            return v;
          }
      break;
    case Family::L2: {
      for (int b = 0; b < B.size(); ++b) {
        if (!B.bounded(b)) continue;
        std::uint8_t adj = A.one;
        for (int a = 0; a < n; ++a)
          if (B.leq(b, f.phi(a))) adj = A.meet(adj, a);
        if (!A.bounded(adj)) {
          v.status = AxStatus::fails;
          v.witness = "b = " + f.lb(b) + ", adjoint = " + f.la(adj);
          return v;
        }
      }
      break;
    }
    case Family::CBH:
      for (int a = 0; a < n; ++a) {
        if (f.phi(A.comp(a)) != B.comp(f.phi(a))) {
          v.status = AxStatus::fails;
          v.witness = "a = " + f.la(a);
          return v;
        }
        for (int b = 0; b < n; ++b) {
          if (f.phi(A.join(a, b)) != B.join(f.phi(a), f.phi(b)) ||
              f.phi(A.meet(a, b)) != B.meet(f.phi(a), f.phi(b))) {
            fails2(a, b);
            return v;
          }
        }
      }
      if (f.phi(A.zero) != B.zero || f.phi(A.one) != B.one) {
        v.status = AxStatus::fails;
        v.witness = "units";
      }
      break;
  }
  return v;
}

// ---------- map lane ----------

struct MapCtx {
  const Morphism& phi;
  const RegionAlgebra& m;
  const QuantifierStrategy& strat;

  Element ap(const Element& a) const { return phi_apply(phi.map, a); }
  std::string pr(const Element& a) const { return m.print(a); }
};

std::vector<Element> draw_pool(const MapCtx& c, SampleStream& rng) {
  std::vector<Element> pool = c.m.probes;
  while (pool.size() < c.strat.sample_count) pool.push_back(c.m.sample(rng));
  return pool;
}

Element enlarge(const MapCtx& c, const Element& a, const Rat& eps, SampleStream& rng) {
  if (c.m.kind == CarrierKind::rational_interval) return iv_expand(as_interval(a), eps);
  return c.m.join(a, c.m.sample(rng));
}

Element truncate_nat(const Element& a, std::uint32_t cap) {
  const NatRegion& r = as_nat(a);
  std::vector<std::uint32_t> keep;
  if (!r.is_cofinite()) {
    for (std::uint32_t v : r.support())
      if (v <= cap) keep.push_back(v);
  } else {
    for (std::uint32_t v = 0; v <= cap; ++v)
      if (r.contains(v)) keep.push_back(v);
  }
  return NatRegion::finite(std::move(keep));
}

// Bounded approximant way below a for the dyadic chains.
Element lower_approx(const MapCtx& c, const Element& a, std::uint32_t k) {
  if (c.m.kind == CarrierKind::rational_interval)
    return iv_shrink(as_interval(a), rat(1, 1L << std::min(k, 20u)));
  return truncate_nat(a, 1u << std::min(k, 12u));
}

// Wide approximant for the joins that range over unbounded elements too.
Element wide_approx(const MapCtx& c, const Element& a, std::uint32_t k) {
  if (c.m.kind == CarrierKind::cofinite_nat) return a;
  Rat eps = rat(1, 1L << std::min(k, 20u));
  IntervalRegion inner = iv_shrink(as_interval(a), eps);
  IntervalRegion outer =
      iv_complement(iv_expand(iv_complement(as_interval(a)), eps));
  return iv_join(inner, outer);
}

FamilyVerdict map_check(const MapCtx& c, Family fam) {
  FamilyVerdict v;
  v.family = fam;
  v.status = AxStatus::holds;
  v.note = "sampled";
  const RegionAlgebra& m = c.m;
  SampleStream rng(c.strat.seed ^ (0x9e3779b97f4a7c15ull + static_cast<int>(fam)));
  auto fails = [&](const std::string& w) {
    v.status = AxStatus::fails;
    v.witness = w;
  };
  switch (fam) {
    case Family::DVAL1:
    case Family::PAL1:
    case Family::DLC1:
      if (!m.is_zero(c.ap(m.zero))) fails("phi(0) = " + c.pr(c.ap(m.zero)));
      v.note.clear();
      break;
    case Family::DVAL2:
    case Family::PAL2:
    case Family::DLC2: {
      auto pool = draw_pool(c, rng);
      for (std::size_t i = 0; i < pool.size(); ++i) {
        const Element& a = pool[i];
        const Element& b = pool[(i * 7 + 3) % pool.size()];
        if (!element_eq(c.ap(m.meet(a, b)), m.meet(c.ap(a), c.ap(b)))) {
          fails("a = " + c.pr(a) + ", b = " + c.pr(b));
          return v;
        }
      }
      break;
    }
    case Family::DVAL3:
    case Family::PAL3:
    case Family::DLC3:
    case Family::DLC3P:
    case Family::DLC3S: {
      bool need_a_ib = fam == Family::PAL3 || fam == Family::DLC3 || fam == Family::DLC3P;
      auto pool = draw_pool(c, rng);
      std::uint32_t used = 0;
      for (const Element& a : pool) {
        if (need_a_ib && !m.bounded(a)) continue;
        for (int e = 0; e < 3; ++e) {
          Element b = e == 2 ? pool[rng.below(static_cast<std::uint32_t>(pool.size()))]
                             : enlarge(c, a, rat(1, e + 1), rng);
          if (fam == Family::DLC3P && !m.bounded(b)) continue;
          if (!m.way_below(a, b)) continue;
          ++used;
          Element lhs = m.complement(c.ap(m.complement(a)));
          if (!m.way_below(lhs, c.ap(b))) {
            fails("a = " + c.pr(a) + ", b = " + c.pr(b));
            return v;
          }
        }
      }
      if (used == 0) {
        v.status = AxStatus::inconclusive;
        v.note = "no premise instance sampled";
      }
      break;
    }
    case Family::LC3:
    case Family::LC3S: {
      auto pool = draw_pool(c, rng);
      std::uint32_t used = 0;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        Element a1 = pool[i];
        Element a2 = pool[(i * 5 + 1) % pool.size()];
        if (fam == Family::LC3 && (!m.bounded(a1) || !m.bounded(a2))) continue;
        Element b1 = enlarge(c, a1, rat(1, 2), rng);
        Element b2 = enlarge(c, a2, rat(1, 3), rng);
        if (!m.way_below(a1, b1) || !m.way_below(a2, b2)) continue;
        ++used;
        Element lhs = c.ap(m.join(a1, a2));
        Element rhs = m.join(c.ap(b1), c.ap(b2));
        if (!m.way_below(lhs, rhs)) {
          fails("a1 = " + c.pr(a1) + ", b1 = " + c.pr(b1) + ", a2 = " + c.pr(a2) +
                ", b2 = " + c.pr(b2));
          return v;
        }
      }
      if (used == 0) {
        v.status = AxStatus::inconclusive;
        v.note = "no premise instance sampled";
      }
      break;
    }
    case Family::PAL4:
    case Family::DLC4: {
      auto pool = draw_pool(c, rng);
      for (const Element& b : pool) {
        if (!m.bounded(b)) continue;
        Element a = image_hull(c.phi.map, b, Rat(1));
        bool ok = m.bounded(a) && m.leq(b, c.ap(a));
        for (std::size_t i = 0; i < m.probes.size() && !ok; ++i)
          ok = m.bounded(m.probes[i]) && m.leq(b, c.ap(m.probes[i]));
        for (std::uint32_t i = 0; i < c.strat.witness_depth && !ok; ++i) {
          Element cand = m.sample(rng);
          ok = m.bounded(cand) && m.leq(b, c.ap(cand));
        }
        if (!ok) {
          v.status = AxStatus::inconclusive;
          v.witness = "b = " + c.pr(b);
          v.note = "no witness within depth";
          return v;
        }
      }
      break;
    }
    case Family::PAL5:
      for (const Element& a : draw_pool(c, rng)) {
        if (!m.bounded(a)) continue;
        if (!m.bounded(c.ap(a))) {
          fails("a = " + c.pr(a) + ", phi(a) = " + c.pr(c.ap(a)));
          return v;
        }
      }
      break;
    case Family::DVAL4:
    case Family::PAL6:
    case Family::DLC5: {
      auto pool = draw_pool(c, rng);
      for (const Element& a : pool) {
        Element exact = c.ap(a);
        Element last = m.zero;
        bool converged = false;
        for (std::uint32_t k = 1; k <= c.strat.witness_depth; ++k) {
          Element b = fam == Family::DLC5 ? lower_approx(c, a, k) : wide_approx(c, a, k);
          bool premise = fam == Family::DLC5
                             ? (m.bounded(b) && m.way_below(b, a))
                             : (fam == Family::PAL6 ? !m.alexandroff(b, m.complement(a))
                                                    : m.way_below(b, a));
          if (!premise) b = lower_approx(c, a, k);
          Element fb = c.ap(b);
          if (!m.leq(fb, exact)) {
            fails("a = " + c.pr(a) + ", b = " + c.pr(b) + ", phi(b) = " + c.pr(fb));
            return v;
          }
          last = fb;
        }
        // The joins live in the closure of the chain's union, so the last
        // approximant is compared up to the pinned 2^-10 gap on the line.
        if (m.kind == CarrierKind::rational_interval) {
          IntervalRegion want = iv_shrink(as_interval(exact), rat(1, 1024));
          converged = iv_leq(want, iv_expand(as_interval(last), rat(1, 1024)));
        } else {
          converged = m.leq(truncate_nat(exact, 256), last);
        }
        if (!converged) {
          v.status = AxStatus::inconclusive;
          v.witness = "a = " + c.pr(a);
          v.note = "no convergence within depth";
          return v;
        }
      }
      break;
    }
    case Family::F1:
    case Family::L1: {
      auto pool = draw_pool(c, rng);
      for (std::size_t i = 0; i < pool.size(); ++i) {
        const Element& a = pool[i];
        const Element& b = pool[(i * 11 + 5) % pool.size()];
        if (m.contact(c.ap(a), c.ap(b)) && !m.contact(a, b)) {
          fails("a = " + c.pr(a) + ", b = " + c.pr(b));
          return v;
        }
      }
      break;
    }
    case Family::L2:
      fail(Errc::unsupported_family_for_model,
           "L2 needs the adjoint, which this carrier cannot enumerate");
    case Family::CBH: {
      auto pool = draw_pool(c, rng);
      if (!m.is_zero(c.ap(m.zero)) || !m.is_one(c.ap(m.one))) {
        fails("units");
        return v;
      }
      for (std::size_t i = 0; i < pool.size(); ++i) {
        const Element& a = pool[i];
        const Element& b = pool[(i * 3 + 7) % pool.size()];
        if (!element_eq(c.ap(m.complement(a)), m.complement(c.ap(a)))) {
          fails("a = " + c.pr(a));
          return v;
        }
        if (!element_eq(c.ap(m.join(a, b)), m.join(c.ap(a), c.ap(b))) ||
            !element_eq(c.ap(m.meet(a, b)), m.meet(c.ap(a), c.ap(b)))) {
          fails("a = " + c.pr(a) + ", b = " + c.pr(b));
          return v;
        }
      }
      break;
    }
  }
  return v;
}

}  // namespace

MorphismReport check_morphism(const Morphism& phi, const std::vector<Family>& families,
                              const QuantifierStrategy& strat) {
  MorphismReport r;
  r.seed = strat.seed;
  if (phi.map_induced) {
    r.mode = QuantifierStrategy::Mode::sampled;
    MapCtx c{phi, phi.model, strat};
    for (Family f : families) r.verdicts.push_back(map_check(c, f));
  } else {
    r.mode = QuantifierStrategy::Mode::exhaustive;
    Fin f{*phi.dom, *phi.cod, phi.table};
    for (Family fam : families) r.verdicts.push_back(fin_check(f, fam));
  }
  return r;
}

namespace {

Morphism corrected(const Morphism& phi, ContactChoice choice, const char* suffix) {
  if (phi.map_induced)
    fail(Errc::infinite_carrier, "the corrected transform needs a finite table");
  const FiniteAlgebra& A = *phi.dom;
  const FiniteAlgebra& B = *phi.cod;
  std::vector<std::uint8_t> t(A.size());
  for (int a = 0; a < A.size(); ++a) {
    std::uint8_t acc = B.zero;
    for (int b = 0; b < A.size(); ++b) {
      if (choice == ContactChoice::rho && !A.bounded(b)) continue;
      if (A.way_below_of(b, a, choice)) acc = B.join(acc, phi.table[b]);
    }
    t[a] = acc;
  }
  return finite_morphism(phi.dom, phi.cod, std::move(t), phi.name + suffix);
}

}  // namespace

Morphism check_of(const Morphism& phi) { return corrected(phi, ContactChoice::rho, "^"); }

Morphism tilde_of(const Morphism& phi) {
  return corrected(phi, ContactChoice::alexandroff, "~");
}

Morphism compose_plain(const Morphism& outer, const Morphism& inner) {
  if (outer.map_induced || inner.map_induced)
    fail(Errc::infinite_carrier, "plain composition needs finite tables");
  if (inner.cod != outer.dom) fail(Errc::not_composable, "middle algebras differ");
  std::vector<std::uint8_t> t(inner.table.size());
  for (std::size_t a = 0; a < inner.table.size(); ++a) t[a] = outer.table[inner.table[a]];
  return finite_morphism(inner.dom, outer.cod, std::move(t),
                         outer.name + "." + inner.name);
}

Morphism diamond(const Morphism& outer, const Morphism& inner) {
  if (outer.map_induced != inner.map_induced)
    fail(Errc::not_composable, "cannot mix finite and map-induced morphisms");
  if (outer.map_induced) {
    if (outer.map.kind != inner.map.kind) fail(Errc::not_composable, "models differ");
    return morphism_from_map(compose_maps(inner.map, outer.map));
  }
  return check_of(compose_plain(outer, inner));
}

DualMapResult dual_map(const Morphism& phi) {
  if (phi.map_induced)
    fail(Errc::infinite_carrier, "the dual point map needs finite duals");
  {
    MorphismReport pre = check_morphism(
        phi, {Family::DLC1, Family::DLC2, Family::DLC3, Family::DLC4},
        QuantifierStrategy::exhaustive());
    for (const auto& v : pre.verdicts)
      if (v.status != AxStatus::holds)
        fail(Errc::axiom_precondition_failed,
             std::string("dual map needs DLC1-DLC4; ") + family_name(v.family) + " fails at " +
                 v.witness);
  }
  DualMapResult r;
  const FiniteAlgebra& A = *phi.dom;
  const FiniteAlgebra& B = *phi.cod;
  r.dom_dual = dualize(phi.dom);
  r.cod_dual = dualize(phi.cod);
  // Carrier index of each cluster of the domain dual.
  std::vector<int> dom_carrier_of(r.dom_dual.clusters.clusters.size(), -1);
  for (std::size_t k = 0; k < r.dom_dual.carrier.to_parent.size(); ++k)
    dom_carrier_of[r.dom_dual.carrier.to_parent[k]] = static_cast<int>(k);
  DeltaIdealSet all_ideals = all_delta_ideals(A);
  for (std::size_t yk = 0; yk < r.cod_dual.carrier.to_parent.size(); ++yk) {
    std::uint32_t sigma_p =
        r.cod_dual.clusters.clusters[r.cod_dual.carrier.to_parent[yk]];
    std::uint32_t S = 0;
    for (int a = 0; a < A.size(); ++a) {
      if (!A.bounded(a)) continue;
      bool all = true;
      for (int b = 0; b < A.size() && all; ++b)
        if (A.way_below(a, b)) all = (sigma_p >> phi.table[b]) & 1u;
      if (all) S |= 1u << a;
    }
    std::uint32_t J = A.bounded_mask & ~S;
    std::uint32_t V = 0;
    for (int a = 0; a < A.size(); ++a) {
      if (!A.bounded(a)) continue;
      for (int s = 0; s < A.size(); ++s)
        if (((S >> s) & 1u) && A.way_below(s, a)) {
          V |= 1u << a;
          break;
        }
    }
    // The cluster over the trace: everything in extended contact with each
    // trace member.
    std::uint32_t sigma = 0;
    if (S != 0) {
      for (int x = 0; x < A.size(); ++x) {
        bool all = true;
        for (int s = 0; s < A.size() && all; ++s)
          if ((S >> s) & 1u) all = A.contact_of(x, s, ContactChoice::alexandroff);
        if (all) sigma |= 1u << x;
      }
    }
    r.S.push_back(S);
    r.V.push_back(V);
    r.J.push_back(J);
    std::string at = "sigma'_" + std::to_string(yk);
    DeltaCheck jc = is_delta_ideal(A, J);
    if (!jc.ok) r.notes.push_back(at + ": J fails the " + jc.clause + " clause");
    if (jc.ok && !is_prime_element(A, all_ideals, J))
      r.notes.push_back(at + ": J is not prime");
    bool vfilter = S != 0;
    for (int u = 0; u < A.size() && vfilter; ++u) {
      if (!((V >> u) & 1u)) continue;
      for (int w = 0; w < A.size() && vfilter; ++w) {
        if (((V >> w) & 1u) && !((V >> A.meet(u, w)) & 1u)) vfilter = false;
        if (A.bounded(w) && A.leq(u, w) && !((V >> w) & 1u)) vfilter = false;
      }
    }
    if (!vfilter) r.notes.push_back(at + ": V is not a filter in the bounded ideal");
    ClusterCheck sc = sigma == 0 ? ClusterCheck{}
                                 : is_cluster(A, sigma, ContactChoice::alexandroff);
    if (!sc.ok) {
      r.notes.push_back(at + ": no cluster over the trace");
      r.table.push_back(-1);
      continue;
    }
    if ((sigma & A.bounded_mask) != S)
      r.notes.push_back(at + ": cluster trace differs from S");
    auto it = std::lower_bound(r.dom_dual.clusters.clusters.begin(),
                               r.dom_dual.clusters.clusters.end(), sigma);
    int ci = it != r.dom_dual.clusters.clusters.end() && *it == sigma
                 ? static_cast<int>(it - r.dom_dual.clusters.clusters.begin())
                 : -1;
    r.table.push_back(ci >= 0 ? dom_carrier_of[ci] : -1);
    if (ci < 0) r.notes.push_back(at + ": image cluster missing from the dual");
  }
  bool defined = std::none_of(r.table.begin(), r.table.end(), [](int x) { return x < 0; });
  auto preimage = [&](std::uint32_t dom_open) {
    std::uint32_t m = 0;
    for (std::size_t y = 0; y < r.table.size(); ++y)
      if (r.table[y] >= 0 && ((dom_open >> r.table[y]) & 1u)) m |= 1u << y;
    return m;
  };
  r.continuous = defined;
  if (defined) {
    for (std::uint32_t u : r.dom_dual.carrier.space.opens)
      if (!r.cod_dual.carrier.space.is_open(preimage(u))) {
        r.continuous = false;
        r.notes.push_back("preimage of " + r.dom_dual.carrier.space.set_str(u) +
                          " is not open");
        break;
      }
    for (int a = 0; a < A.size() && r.continuous; ++a) {
      if (!A.bounded(a)) continue;
      std::uint32_t lhs = preimage(
          r.dom_dual.carrier.space.interior(r.dom_dual.lambda_g(static_cast<std::uint8_t>(a))));
      std::uint32_t D = 0;
      for (int b = 0; b < A.size(); ++b)
        if (A.bounded(b) && A.way_below(b, a))
          D |= principal_delta_ideal(B, phi.table[b]).members;
      std::uint32_t rhs = iota(r.cod_dual, D);
      if (lhs != rhs) {
        r.continuous = false;
        r.notes.push_back("preimage formula fails at " + A.labels[a]);
        break;
      }
    }
  }
  r.commutes = defined;
  for (int a = 0; a < A.size() && r.commutes; ++a) {
    std::uint32_t want = r.cod_dual.lambda_g(phi.table[a]);
    std::uint32_t got = r.cod_dual.carrier.space.closure(preimage(
        r.dom_dual.carrier.space.interior(r.dom_dual.lambda_g(static_cast<std::uint8_t>(a)))));
    if (want != got) {
      r.commutes = false;
      r.notes.push_back("lambda square fails at " + A.labels[a]);
    }
  }
  return r;
}

DualPointEvidence dual_map_point(const Morphism& phi, const ClusterPoint& p,
                                 const QuantifierStrategy& strat) {
  if (!phi.map_induced)
    fail(Errc::precondition_violated, "pointwise evidence is for map-induced morphisms");
  if (p.kind == ClusterPoint::Kind::infinity)
    fail(Errc::carrier_escape, "the point at infinity lies outside the carrier");
  DualPointEvidence ev;
  ev.source = p;
  const RegionAlgebra& m = phi.model;
  if (p.kind == ClusterPoint::Kind::rational)
    ev.image = ClusterPoint::at(phi.map.pl.eval(p.x));
  else
    ev.image = ClusterPoint::at_nat(phi.map.nat(p.n));
  (void)strat;
  ev.consistent = true;
  for (const Element& g : m.probes) {
    if (!m.bounded(g)) continue;
    bool by_image = cluster_membership(m, ev.image, g);
    // Trace route: g belongs iff every way-above b keeps the source point
    // inside the transform of b. On the discrete carrier g is way below
    // itself, so b = g settles it; on the line a shrinking expansion chain
    // eventually separates the image point from g.
    bool by_trace = true;
    if (m.kind == CarrierKind::cofinite_nat) {
      by_trace = cluster_membership(m, p, phi_apply(phi.map, g));
    } else {
      for (std::uint32_t k = 1; k <= 8 && by_trace; ++k) {
        Element b = iv_expand(as_interval(g), rat(1, 1 << k));
        if (!m.way_below(g, b)) continue;
        by_trace = cluster_membership(m, p, phi_apply(phi.map, b));
      }
    }
    ev.checks.push_back(m.print(g) + ": by-image " + (by_image ? "yes" : "no") +
                        ", by-trace " + (by_trace ? "yes" : "no"));
    if (by_image != by_trace) ev.consistent = false;
  }
  return ev;
}

namespace {

std::vector<int> compose_points(const std::vector<int>& g, const std::vector<int>& f) {
  std::vector<int> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
  return out;
}

std::vector<std::string> stock_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

}  // namespace

LawReport functor_laws_finite(std::uint64_t seed, std::uint32_t triples) {
  LawReport r;
  SampleStream rng(seed);
  std::vector<RcAlgebra> rc;
  for (int n = 1; n <= 3; ++n) rc.push_back(rc_algebra(discrete_space(stock_names(n))));
  for (std::uint32_t t = 0; t < triples; ++t) {
    const RcAlgebra& X = rc[rng.below(3)];
    const RcAlgebra& Y = rc[rng.below(3)];
    const RcAlgebra& Z = rc[rng.below(3)];
    std::vector<int> f, g;
    for (int i = 0; i < X.space.size(); ++i)
      f.push_back(static_cast<int>(rng.below(Y.space.size())));
    for (int i = 0; i < Y.space.size(); ++i)
      g.push_back(static_cast<int>(rng.below(Z.space.size())));
    Morphism p1 = morphism_from_space_map(Y, Z, g, "g");   // RC(Z) -> RC(Y)
    Morphism p2 = morphism_from_space_map(X, Y, f, "f");   // RC(Y) -> RC(X)
    Morphism comp = diamond(p2, p1);                       // RC(Z) -> RC(X)
    DualMapResult dc = dual_map(comp);
    DualMapResult d1 = dual_map(p1);
    DualMapResult d2 = dual_map(p2);
    ++r.cases;
    bool total = std::none_of(d2.table.begin(), d2.table.end(), [](int v) { return v < 0; });
    if (!total) {
      r.ok = false;
      r.failures.push_back("triple " + std::to_string(t) + ": a dual point map is partial");
      continue;
    }
    std::vector<int> want;
    for (std::size_t x = 0; x < d2.table.size(); ++x) want.push_back(d1.table[d2.table[x]]);
    if (dc.table != want) {
      r.ok = false;
      r.failures.push_back("triple " + std::to_string(t) +
                           ": dual of the composite differs from the composed duals");
    }
    Morphism idm = identity_morphism(X.algebra);
    DualMapResult di = dual_map(idm);
    for (std::size_t k = 0; k < di.table.size(); ++k)
      if (di.table[k] != static_cast<int>(k)) {
        r.ok = false;
        r.failures.push_back("triple " + std::to_string(t) + ": identity does not dualize to identity");
        break;
      }
  }
  return r;
}

LawReport functor_laws_spaces(int points) {
  LawReport r;
  RcAlgebra X = rc_algebra(discrete_space(stock_names(points)));
  std::vector<std::vector<int>> maps;
  int total = 1;
  for (int i = 0; i < points; ++i) total *= points;
  for (int code = 0; code < total; ++code) {
    std::vector<int> f;
    int c = code;
    for (int i = 0; i < points; ++i) {
      f.push_back(c % points);
      c /= points;
    }
    maps.push_back(std::move(f));
  }
  {
    std::vector<int> idp;
    for (int i = 0; i < points; ++i) idp.push_back(i);
    Morphism lt = morphism_from_space_map(X, X, idp, "id");
    Morphism idm = identity_morphism(X.algebra);
    ++r.cases;
    if (lt.table != idm.table) {
      r.ok = false;
      r.failures.push_back("identity map does not transform to the identity morphism");
    }
  }
  for (const auto& f : maps)
    for (const auto& g : maps) {
      Morphism pf = morphism_from_space_map(X, X, f, "f");
      Morphism pg = morphism_from_space_map(X, X, g, "g");
      Morphism lhs = morphism_from_space_map(X, X, compose_points(g, f), "gf");
      Morphism rhs = diamond(pf, pg);
      ++r.cases;
      if (lhs.table != rhs.table) {
        r.ok = false;
        r.failures.push_back("composite transform mismatch");
      }
    }
  return r;
}

LawReport functor_laws_dyadic(const DescribedMap& g, const DescribedMap& f,
                              std::uint32_t regions, std::uint32_t depth, std::uint64_t seed) {
  if (g.kind != CarrierKind::rational_interval || f.kind != CarrierKind::rational_interval)
    fail(Errc::unsupported_family_for_model, "the dyadic chain runs on the line model");
  LawReport r;
  RegionAlgebra m = interval_model();
  DescribedMap gf = compose_maps(g, f);
  SampleStream rng(seed);
  std::vector<Element> pool = m.probes;
  while (pool.size() < regions) pool.push_back(m.sample(rng));
  for (const Element& G : pool) {
    ++r.cases;
    IntervalRegion exact = as_interval(phi_apply(gf, G));
    IntervalRegion last;
    bool bad = false;
    for (std::uint32_t k = 1; k <= depth && !bad; ++k) {
      IntervalRegion b = iv_shrink(as_interval(G), rat(1, 1L << std::min(k, 20u)));
      IntervalRegion approx = as_interval(phi_apply(f, phi_apply(g, Element(b))));
      if (!iv_leq(approx, exact)) {
        r.ok = false;
        r.failures.push_back("lower bound breached at " + m.print(G) + " depth " +
                             std::to_string(k));
        bad = true;
      }
      last = approx;
    }
    if (bad) continue;
    if (!iv_leq(iv_shrink(exact, rat(1, 1024)), iv_expand(last, rat(1, 1024)))) {
      r.ok = false;
      r.failures.push_back("no convergence at " + m.print(G));
    }
  }
  return r;
}

LawReport naturality_finite(const Morphism& phi) {
  LawReport r;
  DualMapResult d = dual_map(phi);
  r.cases = static_cast<std::uint32_t>(phi.table.size());
  r.ok = d.commutes && d.continuous;
  for (const auto& n : d.notes) r.failures.push_back(n);
  return r;
}

LawReport naturality_spaces(int max_points) {
  LawReport r;
  std::vector<RcAlgebra> rc;
  std::vector<TMap> tms;
  for (int p = 1; p <= max_points; ++p) {
    rc.push_back(rc_algebra(discrete_space(stock_names(p))));
    tms.push_back(t_map(rc.back()));
    if (!tms.back().bijective || !tms.back().homeomorphism) {
      r.ok = false;
      r.failures.push_back("canonical map fails on the discrete space of " + std::to_string(p));
    }
  }
  if (!r.ok) return r;
  for (int m = 1; m <= max_points; ++m)
    for (int n = 1; n <= max_points; ++n) {
      const RcAlgebra& X = rc[m - 1];
      const RcAlgebra& Y = rc[n - 1];
      const TMap& tx = tms[m - 1];
      const TMap& ty = tms[n - 1];
      int total = 1;
      for (int i = 0; i < m; ++i) total *= n;
      for (int code = 0; code < total; ++code) {
        std::vector<int> f;
        int c = code;
        for (int i = 0; i < m; ++i) {
          f.push_back(c % n);
          c /= n;
        }
        Morphism pf = morphism_from_space_map(X, Y, f, "f");
        DualMapResult d = dual_map(pf);
        ++r.cases;
        for (int x = 0; x < m; ++x)
          if (d.table[tx.point_to_cluster[x]] != ty.point_to_cluster[f[x]]) {
            r.ok = false;
            r.failures.push_back("square fails at point " + std::to_string(x) + " of a map " +
                                 std::to_string(m) + " -> " + std::to_string(n));
            break;
          }
      }
    }
  return r;
}

LawReport naturality_sampled(const DescribedMap& f, std::uint32_t points, std::uint64_t seed) {
  LawReport r;
  Morphism phi = morphism_from_map(f);
  QuantifierStrategy strat = QuantifierStrategy::sampled(seed);
  SampleStream rng(seed ^ 0x5851f42d4c957f2dull);
  for (std::uint32_t i = 0; i < points; ++i) {
    ClusterPoint p = f.kind == CarrierKind::rational_interval
                         ? ClusterPoint::at(rat(static_cast<int>(rng.below(33)) - 16,
                                                static_cast<int>(rng.below(4)) + 1))
                         : ClusterPoint::at_nat(rng.below(64));
    DualPointEvidence ev = dual_map_point(phi, p, strat);
    ++r.cases;
    if (!ev.consistent) {
      r.ok = false;
      r.failures.push_back("routes disagree at " + p.str());
    }
  }
  return r;
}

Morphism left_adjoint(const Morphism& phi) {
  if (phi.map_induced)
    fail(Errc::infinite_carrier, "the adjoint needs a finite table");
  const FiniteAlgebra& A = *phi.dom;
  const FiniteAlgebra& B = *phi.cod;
  for (int a = 0; a < A.size(); ++a)
    for (int b = 0; b < A.size(); ++b)
      if (A.leq(a, b) && !B.leq(phi.table[a], phi.table[b]))
        fail(Errc::precondition_violated, "the map is not monotone");
  if (phi.table[A.one] != B.one) fail(Errc::precondition_violated, "phi(1) must be 1");
  std::vector<std::uint8_t> adj(B.size());
  for (int b = 0; b < B.size(); ++b) {
    std::uint8_t acc = A.one;
    for (int a = 0; a < A.size(); ++a)
      if (B.leq(b, phi.table[a])) acc = A.meet(acc, static_cast<std::uint8_t>(a));
    adj[b] = acc;
  }
  for (int a = 0; a < A.size(); ++a)
    for (int b = 0; b < B.size(); ++b)
      if (B.leq(b, phi.table[a]) != A.leq(adj[b], a))
        fail(Errc::no_adjoint, "Galois equivalence fails at a = " + A.labels[a] +
                                   ", b = " + B.labels[b]);
  return finite_morphism(phi.cod, phi.dom, std::move(adj), phi.name + "_adj");
}

Classification classify(const Morphism& phi, const QuantifierStrategy& strat) {
  Classification c;
  auto holds = [&](std::vector<Family> fams) {
    MorphismReport r = check_morphism(phi, fams, strat);
    for (const auto& v : r.verdicts)
      if (v.status == AxStatus::inconclusive)
        c.notes.push_back(std::string(family_name(v.family)) + " inconclusive: " + v.note);
    return r.all_hold();
  };
  c.is_dlc = holds({Family::DLC1, Family::DLC2, Family::DLC3, Family::DLC4, Family::DLC5});
  c.is_pal = holds({Family::PAL1, Family::PAL2, Family::PAL3, Family::PAL4, Family::PAL5,
                    Family::PAL6});
  c.is_dval = holds({Family::DVAL1, Family::DVAL2, Family::DVAL3, Family::DVAL4});
  c.proper = holds({Family::PAL5});
  if (phi.map_induced) {
    c.is_skeletal = holds({Family::CBH, Family::L1});
    c.notes.push_back("L2 is not evaluable on this carrier; skeletal status uses CBH and L1");
    if (c.proper != is_proper_map(phi.map))
      c.notes.push_back("sampled properness disagrees with the tail analysis");
  } else {
    c.is_skeletal = holds({Family::CBH, Family::L1, Family::L2});
    if (c.proper)
      c.notes.push_back("finite carrier: properness makes the dual map perfect outright");
  }
  return c;
}

}  // namespace rba
