#include "rba/axioms.hpp"

#include <algorithm>
#include <functional>

#include "rba/errors.hpp"

namespace rba {

const char* suite_name(Suite s) noexcept {
  switch (s) {
    case Suite::BOOL: return "BOOL";
    case Suite::CA: return "CA";
    case Suite::LL: return "LL";
    case Suite::NCA: return "NCA";
    case Suite::LCA: return "LCA";
    case Suite::CON: return "CON";
  }
  return "?";
}

std::optional<Suite> suite_parse(const std::string& text) {
  if (text == "BOOL") return Suite::BOOL;
  if (text == "CA") return Suite::CA;
  if (text == "LL") return Suite::LL;
  if (text == "NCA") return Suite::NCA;
  if (text == "LCA") return Suite::LCA;
  if (text == "CON") return Suite::CON;
  return std::nullopt;
}

const char* ax_status_name(AxStatus s) noexcept {
  switch (s) {
    case AxStatus::holds: return "holds";
    case AxStatus::fails: return "fails";
    case AxStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

bool AxiomReport::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const AxiomVerdict& v) { return v.status == AxStatus::holds; });
}
bool AxiomReport::any_fails() const {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const AxiomVerdict& v) { return v.status == AxStatus::fails; });
}
bool AxiomReport::any_inconclusive() const {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const AxiomVerdict& v) { return v.status == AxStatus::inconclusive; });
}

namespace {

using Tuple = std::vector<Element>;
using A = RegionAlgebra;

enum class Oracle { none, interp_ll5, interp_c5, interp_bc1, inner_c6, inner_direct, bc2 };

struct Ax {
  const char* name;
  int arity;  // tuple arity; for existential axioms, the premise tuple
  bool existential = false;
  std::function<bool(const A&, const Tuple&)> pred;  // universal law, or premise
  std::function<bool(const A&, const Tuple&, const Element&)> body;  // witness body
  Oracle oracle = Oracle::none;
};

Ax uni(const char* name, int arity, std::function<bool(const A&, const Tuple&)> pred) {
  Ax ax;
  ax.name = name;
  ax.arity = arity;
  ax.pred = std::move(pred);
  return ax;
}

Ax exi(const char* name, int arity, std::function<bool(const A&, const Tuple&)> premise,
       std::function<bool(const A&, const Tuple&, const Element&)> body, Oracle oracle) {
  Ax ax;
  ax.name = name;
  ax.arity = arity;
  ax.existential = true;
  ax.pred = std::move(premise);
  ax.body = std::move(body);
  ax.oracle = oracle;
  return ax;
}

std::vector<Ax> bool_axioms() {
  return {
      uni("join-assoc", 3,
          [](const A& m, const Tuple& t) {
            return element_eq(m.join(m.join(t[0], t[1]), t[2]), m.join(t[0], m.join(t[1], t[2])));
          }),
      uni("meet-assoc", 3,
          [](const A& m, const Tuple& t) {
            return element_eq(m.meet(m.meet(t[0], t[1]), t[2]), m.meet(t[0], m.meet(t[1], t[2])));
          }),
      uni("join-comm", 2,
          [](const A& m, const Tuple& t) {
            return element_eq(m.join(t[0], t[1]), m.join(t[1], t[0]));
          }),
      uni("meet-comm", 2,
          [](const A& m, const Tuple& t) {
            return element_eq(m.meet(t[0], t[1]), m.meet(t[1], t[0]));
          }),
      uni("absorb-join", 2,
          [](const A& m, const Tuple& t) {
            return element_eq(m.join(t[0], m.meet(t[0], t[1])), t[0]);
          }),
      uni("absorb-meet", 2,
          [](const A& m, const Tuple& t) {
            return element_eq(m.meet(t[0], m.join(t[0], t[1])), t[0]);
          }),
      uni("dist-meet-join", 3,
          [](const A& m, const Tuple& t) {
            return element_eq(m.meet(t[0], m.join(t[1], t[2])),
                              m.join(m.meet(t[0], t[1]), m.meet(t[0], t[2])));
          }),
      uni("dist-join-meet", 3,
          [](const A& m, const Tuple& t) {
            return element_eq(m.join(t[0], m.meet(t[1], t[2])),
                              m.meet(m.join(t[0], t[1]), m.join(t[0], t[2])));
          }),
      uni("compl-join", 1,
          [](const A& m, const Tuple& t) {
            return element_eq(m.join(t[0], m.complement(t[0])), m.one);
          }),
      uni("compl-meet", 1,
          [](const A& m, const Tuple& t) {
            return element_eq(m.meet(t[0], m.complement(t[0])), m.zero);
          }),
      uni("unit-join", 1,
          [](const A& m, const Tuple& t) { return element_eq(m.join(t[0], m.zero), t[0]); }),
      uni("unit-meet", 1,
          [](const A& m, const Tuple& t) { return element_eq(m.meet(t[0], m.one), t[0]); }),
  };
}

std::vector<Ax> ca_axioms() {
  return {
      uni("C1", 1,
          [](const A& m, const Tuple& t) { return m.is_zero(t[0]) || m.contact(t[0], t[0]); }),
      uni("C2", 2,
          [](const A& m, const Tuple& t) {
            return !m.contact(t[0], t[1]) || (!m.is_zero(t[0]) && !m.is_zero(t[1]));
          }),
      uni("C3", 2,
          [](const A& m, const Tuple& t) {
            return !m.contact(t[0], t[1]) || m.contact(t[1], t[0]);
          }),
      uni("C4", 3,
          [](const A& m, const Tuple& t) {
            bool lhs = m.contact(t[0], m.join(t[1], t[2]));
            bool rhs = m.contact(t[0], t[1]) || m.contact(t[0], t[2]);
            return lhs == rhs;
          }),
  };
}

Ax c5_axiom() {
  return exi(
      "C5", 2, [](const A& m, const Tuple& t) { return !m.contact(t[0], t[1]); },
      [](const A& m, const Tuple& t, const Element& c) {
        return !m.contact(t[0], c) && !m.contact(t[1], m.complement(c));
      },
      Oracle::interp_c5);
}

Ax c6_axiom() {
  return exi(
      "C6", 1, [](const A& m, const Tuple& t) { return !m.is_one(t[0]); },
      [](const A& m, const Tuple& t, const Element& b) {
        return !m.is_zero(b) && !m.contact(b, t[0]);
      },
      Oracle::inner_c6);
}

std::vector<Ax> ll_axioms() {
  return {
      uni("LL1", 2,
          [](const A& m, const Tuple& t) {
            return !m.way_below(t[0], t[1]) || m.leq(t[0], t[1]);
          }),
      uni("LL2", 0, [](const A& m, const Tuple&) { return m.way_below(m.zero, m.zero); }),
      uni("LL3", 4,
          [](const A& m, const Tuple& t) {
            bool chain = m.leq(t[0], t[1]) && m.way_below(t[1], t[2]) && m.leq(t[2], t[3]);
            return !chain || m.way_below(t[0], t[3]);
          }),
      uni("LL4", 3,
          [](const A& m, const Tuple& t) {
            bool pre = m.way_below(t[0], t[2]) && m.way_below(t[1], t[2]);
            return !pre || m.way_below(m.join(t[0], t[1]), t[2]);
          }),
      exi(
          "LL5", 2, [](const A& m, const Tuple& t) { return m.way_below(t[0], t[1]); },
          [](const A& m, const Tuple& t, const Element& b) {
            return m.way_below(t[0], b) && m.way_below(b, t[1]);
          },
          Oracle::interp_ll5),
      exi(
          "LL6", 1, [](const A& m, const Tuple& t) { return !m.is_zero(t[0]); },
          [](const A& m, const Tuple& t, const Element& b) {
            return !m.is_zero(b) && m.way_below(b, t[0]);
          },
          Oracle::inner_direct),
      uni("LL7", 2,
          [](const A& m, const Tuple& t) {
            return !m.way_below(t[0], t[1]) ||
                   m.way_below(m.complement(t[1]), m.complement(t[0]));
          }),
  };
}

std::vector<Ax> lca_extra_axioms() {
  return {
      exi(
          "BC1", 2,
          [](const A& m, const Tuple& t) {
            return m.bounded(t[0]) && m.way_below(t[0], t[1]);
          },
          [](const A& m, const Tuple& t, const Element& b) {
            return m.bounded(b) && m.way_below(t[0], b) && m.way_below(b, t[1]);
          },
          Oracle::interp_bc1),
      exi(
          "BC2", 2, [](const A& m, const Tuple& t) { return m.contact(t[0], t[1]); },
          [](const A& m, const Tuple& t, const Element& c) {
            return m.bounded(c) && m.contact(t[0], m.meet(c, t[1]));
          },
          Oracle::bc2),
      exi(
          "BC3", 1, [](const A& m, const Tuple& t) { return !m.is_zero(t[0]); },
          [](const A& m, const Tuple& t, const Element& b) {
            return m.bounded(b) && !m.is_zero(b) && m.way_below(b, t[0]);
          },
          Oracle::inner_direct),
  };
}

Ax con_axiom() {
  return uni("CON", 1, [](const A& m, const Tuple& t) {
    if (m.is_zero(t[0]) || m.is_one(t[0])) return true;
    return m.contact(t[0], m.complement(t[0]));
  });
}

std::vector<Ax> suite_axioms(Suite s) {
  switch (s) {
    case Suite::BOOL: return bool_axioms();
    case Suite::CA: return ca_axioms();
    case Suite::LL: return ll_axioms();
    case Suite::NCA: {
      auto axs = ca_axioms();
      axs.push_back(c5_axiom());
      axs.push_back(c6_axiom());
      return axs;
    }
    case Suite::LCA: {
      auto axs = ca_axioms();
      auto extra = lca_extra_axioms();
      axs.insert(axs.end(), extra.begin(), extra.end());
      return axs;
    }
    case Suite::CON: return {con_axiom()};
  }
  return {};
}

/// Iterates tuples over a fixed pool in row-major order.
class Odometer {
public:
  Odometer(std::size_t base, int arity) : base_(base), idx_(arity, 0) {
    done_ = base == 0 && arity > 0;
  }
  bool done() const { return done_; }
  const std::vector<std::size_t>& idx() const { return idx_; }
  void next() {
    for (std::size_t i = idx_.size(); i-- > 0;) {
      if (++idx_[i] < base_) return;
      idx_[i] = 0;
    }
    done_ = true;
  }

private:
  std::size_t base_;
  std::vector<std::size_t> idx_;
  bool done_ = false;
};

struct Engine {
  const A& m;
  const QuantifierStrategy& strat;
  SampleStream stream;
  std::optional<std::vector<Element>> all;
  std::optional<std::uint32_t> max_truncation;

  Engine(const A& algebra, const QuantifierStrategy& s)
      : m(algebra), strat(s), stream(s.seed) {
    if (strat.mode == QuantifierStrategy::Mode::exhaustive) {
      if (!m.enumerate)
        fail(Errc::exhaustive_unavailable,
             "exhaustive strategy on a carrier without enumeration: " + m.name);
      all = (*m.enumerate)();
    }
  }

  std::optional<Element> oracle_witness(const Ax& ax, const Tuple& t,
                                        std::optional<std::uint32_t>* trunc) {
    try {
      switch (ax.oracle) {
        case Oracle::none:
          break;
        case Oracle::interp_ll5:
        case Oracle::interp_bc1:
          if (m.interpolate) return (*m.interpolate)(t[0], t[1]);
          break;
        case Oracle::interp_c5:
          if (m.interpolate)
            return m.complement((*m.interpolate)(t[0], m.complement(t[1])));
          break;
        case Oracle::inner_c6:
          if (m.inner_witness) return (*m.inner_witness)(m.complement(t[0]));
          break;
        case Oracle::inner_direct:
          if (m.inner_witness) return (*m.inner_witness)(t[0]);
          break;
        case Oracle::bc2:
          if (m.bc2_witness) {
            auto r = (*m.bc2_witness)(t[0], t[1], strat.witness_depth);
            if (r) {
              *trunc = r->second;
              return r->first;
            }
          }
          break;
      }
    } catch (const Error&) {
      // An oracle that cannot serve this instance falls back to the scans.
    }
    return std::nullopt;
  }

  /// True when a witness for the premise instance t was found.
  bool witness_search(const Ax& ax, const Tuple& t) {
    std::optional<std::uint32_t> trunc;
    auto found = oracle_witness(ax, t, &trunc);
    if (found && ax.body(m, t, *found)) {
      if (trunc && (!max_truncation || *trunc > *max_truncation)) max_truncation = trunc;
      return true;
    }
    if (all) {
      for (const Element& e : *all)
        if (ax.body(m, t, e)) return true;
      return false;
    }
    for (const Element& e : m.probes)
      if (ax.body(m, t, e)) return true;
    for (std::uint32_t i = 0; i < strat.witness_depth; ++i) {
      Element e = m.sample(stream);
      if (ax.body(m, t, e)) return true;
    }
    return false;
  }

  /// Applies check to every tuple of the run. Returns the first tuple on
  /// which check returned false, if any.
  std::optional<Tuple> scan(int arity, const std::function<bool(const Tuple&)>& check) {
    Tuple t(arity);
    if (arity == 0) {
      if (!check(t)) return t;
      return std::nullopt;
    }
    if (all) {
      for (Odometer od(all->size(), arity); !od.done(); od.next()) {
        for (int i = 0; i < arity; ++i) t[i] = (*all)[od.idx()[i]];
        if (!check(t)) return t;
      }
      return std::nullopt;
    }
    if (!m.probes.empty()) {
      for (Odometer od(m.probes.size(), arity); !od.done(); od.next()) {
        for (int i = 0; i < arity; ++i) t[i] = m.probes[od.idx()[i]];
        if (!check(t)) return t;
      }
    }
    for (std::uint32_t s = 0; s < strat.sample_count; ++s) {
      for (int i = 0; i < arity; ++i) t[i] = m.sample(stream);
      if (!check(t)) return t;
    }
    return std::nullopt;
  }

  AxiomVerdict run(const Ax& ax) {
    AxiomVerdict v;
    v.axiom = ax.name;
    if (!ax.existential) {
      auto bad = scan(ax.arity, [&](const Tuple& t) { return ax.pred(m, t); });
      if (bad) {
        v.status = AxStatus::fails;
        v.witness = *bad;
      }
      return v;
    }
    bool definite = all.has_value();
    max_truncation.reset();
    auto unresolved = scan(ax.arity, [&](const Tuple& t) {
      if (!ax.pred(m, t)) return true;
      return witness_search(ax, t);
    });
    if (unresolved) {
      v.status = definite ? AxStatus::fails : AxStatus::inconclusive;
      v.witness = *unresolved;
      v.note = definite ? "no witness in the carrier" : "no witness within depth";
    } else if (max_truncation) {
      v.note = "max truncation n=" + std::to_string(*max_truncation);
    }
    return v;
  }
};

}  // namespace

AxiomReport check_axioms(const RegionAlgebra& algebra, Suite suite,
                         const QuantifierStrategy& strategy) {
  Engine eng(algebra, strategy);
  AxiomReport rep;
  rep.suite = suite;
  rep.mode = strategy.mode;
  rep.seed = strategy.seed;
  for (const Ax& ax : suite_axioms(suite)) rep.verdicts.push_back(eng.run(ax));
  rep.samples_used = eng.stream.draws();
  return rep;
}

bool recheck_witness(const RegionAlgebra& algebra, const std::string& axiom,
                     const std::vector<Element>& witness) {
  for (Suite s : {Suite::BOOL, Suite::CA, Suite::LL, Suite::NCA, Suite::LCA, Suite::CON}) {
    for (const Ax& ax : suite_axioms(s)) {
      if (axiom != ax.name) continue;
      if (static_cast<int>(witness.size()) != ax.arity) return false;
      if (!ax.existential) return !ax.pred(algebra, witness);
      if (!ax.pred(algebra, witness)) return false;
      if (!algebra.enumerate) return true;  // premise still holds; carrier not scannable
      for (const Element& e : (*algebra.enumerate)())
        if (ax.body(algebra, witness, e)) return false;
      return true;
    }
  }
  return false;
}

RegionAlgebra with_smallest_contact(RegionAlgebra algebra) {
  auto meet = algebra.meet;
  Element zero = algebra.zero;
  algebra.contact = [meet, zero](const Element& a, const Element& b) {
    return !element_eq(meet(a, b), zero);
  };
  algebra.name += "+overlap";
  // Way-below collapses to the order, so interpolation is trivial.
  algebra.interpolate = [](const Element& a, const Element&) { return a; };
  algebra.bc2_witness.reset();
  return algebra;
}

RegionAlgebra with_largest_contact(RegionAlgebra algebra) {
  Element zero = algebra.zero;
  algebra.contact = [zero](const Element& a, const Element& b) {
    return !element_eq(a, zero) && !element_eq(b, zero);
  };
  algebra.name += "+everywhere";
  // Way-below only relates 0 and arguments of 1.
  Element one = algebra.one;
  algebra.interpolate = [zero, one](const Element& a, const Element&) -> Element {
    return element_eq(a, zero) ? zero : one;
  };
  algebra.inner_witness.reset();
  algebra.bc2_witness.reset();
  return algebra;
}

RegionAlgebra make_alexandroff_nca(const RegionAlgebra& algebra) {
  RegionAlgebra out = algebra;
  out.name = algebra.name + "+infinity";
  RegionAlgebra base = algebra;
  out.contact = [base](const Element& a, const Element& b) { return base.alexandroff(a, b); };
  out.bounded = [](const Element&) { return true; };
  if (algebra.interpolate) {
    out.interpolate = [base](const Element& a, const Element& c) -> Element {
      // Bounded side directly; unbounded side through the complements, where
      // the premise forces the complement of c to be bounded.
      if (base.bounded(a)) return (*base.interpolate)(a, c);
      return base.complement((*base.interpolate)(base.complement(c), base.complement(a)));
    };
  }
  out.bc2_witness.reset();
  return out;
}

}  // namespace rba
