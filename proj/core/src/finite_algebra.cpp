#include "rba/finite_algebra.hpp"

#include <algorithm>
#include <bit>

#include "rba/axioms.hpp"
#include "rba/errors.hpp"

namespace rba {

void FiniteAlgebra::validate() const {
  std::size_t n = labels.size();
  if (n == 0 || n > 32) fail(Errc::atom_count_out_of_range, "carrier size must be 1..32");
  if (join_t.size() != n * n || meet_t.size() != n * n || comp_t.size() != n ||
      contact_row.size() != n)
    fail(Errc::precondition_violated, "inconsistent table sizes");
  for (std::size_t i = 0; i < n; ++i) {
    if (comp_t[comp_t[i]] != i) fail(Errc::precondition_violated, "complement not involutive");
    if (join_t[i * n + zero] != i || meet_t[i * n + one] != i)
      fail(Errc::precondition_violated, "units misbehave");
  }
}

std::shared_ptr<const FiniteAlgebra> FiniteAlgebra::from_tables(FiniteAlgebra raw) {
  raw.validate();
  raw.atoms.clear();
  int n = raw.size();
  for (int e = 0; e < n; ++e) {
    if (e == raw.zero) continue;
    bool minimal = true;
    for (int f = 0; f < n && minimal; ++f)
      if (f != raw.zero && f != e && raw.leq(f, e)) minimal = false;
    if (minimal) raw.atoms.push_back(static_cast<std::uint8_t>(e));
  }
  return std::make_shared<const FiniteAlgebra>(std::move(raw));
}

namespace {

std::string mask_label(const std::vector<std::string>& names, std::uint32_t mask,
                       std::uint32_t full) {
  if (mask == 0) return "0";
  if (mask == full) return "1";
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!((mask >> i) & 1u)) continue;
    if (!first) out += ",";
    out += names[i];
    first = false;
  }
  return out + "}";
}

}  // namespace

FiniteContactStructure make_finite(std::vector<std::string> atom_names,
                                   std::vector<std::vector<bool>> adjacency,
                                   std::vector<std::string> bound_atoms) {
  std::size_t k = atom_names.size();
  if (k > 5) fail(Errc::atom_count_out_of_range, "at most 5 atoms, got " + std::to_string(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (atom_names[i] == atom_names[j])
        fail(Errc::precondition_violated, "duplicate atom name '" + atom_names[i] + "'");
  if (adjacency.size() != k)
    fail(Errc::invalid_adjacency, "adjacency must be " + std::to_string(k) + " rows");
  for (std::size_t i = 0; i < k; ++i) {
    if (adjacency[i].size() != k)
      fail(Errc::invalid_adjacency, "row " + std::to_string(i) + " has wrong length");
    if (!adjacency[i][i])
      fail(Errc::invalid_adjacency,
           "adjacency must be reflexive; atom '" + atom_names[i] + "' misses its loop");
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (adjacency[i][j] != adjacency[j][i])
        fail(Errc::invalid_adjacency, "adjacency asymmetric at (" + atom_names[i] + "," +
                                          atom_names[j] + ")");

  std::uint32_t bound_mask = 0;
  for (const std::string& b : bound_atoms) {
    auto it = std::find(atom_names.begin(), atom_names.end(), b);
    if (it == atom_names.end())
      fail(Errc::reference_error, "unknown bound atom '" + b + "'");
    bound_mask |= 1u << (it - atom_names.begin());
  }

  std::uint32_t n = 1u << k;
  FiniteAlgebra alg;
  alg.labels.reserve(n);
  std::uint32_t full = n - 1;
  for (std::uint32_t e = 0; e < n; ++e) alg.labels.push_back(mask_label(atom_names, e, full));
  alg.zero = 0;
  alg.one = static_cast<std::uint8_t>(full);
  alg.join_t.resize(n * n);
  alg.meet_t.resize(n * n);
  alg.comp_t.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    alg.comp_t[a] = static_cast<std::uint8_t>(full & ~a);
    for (std::uint32_t b = 0; b < n; ++b) {
      alg.join_t[a * n + b] = static_cast<std::uint8_t>(a | b);
      alg.meet_t[a * n + b] = static_cast<std::uint8_t>(a & b);
    }
  }
  // Contact: some atom of a is adjacent to some atom of b.
  std::vector<std::uint32_t> nbhd(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (adjacency[i][j]) nbhd[i] |= 1u << j;
  alg.contact_row.assign(n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    std::uint32_t reach = 0;
    for (std::size_t i = 0; i < k; ++i)
      if ((a >> i) & 1u) reach |= nbhd[i];
    for (std::uint32_t b = 0; b < n; ++b)
      if (reach & b) alg.contact_row[a] |= 1u << b;
  }
  alg.bounded_mask = 0;
  for (std::uint32_t e = 0; e < n; ++e)
    if ((e & ~bound_mask) == 0) alg.bounded_mask |= 1u << e;

  FiniteContactStructure s;
  s.atom_names = std::move(atom_names);
  s.adjacency = std::move(adjacency);
  s.bound_atoms = std::move(bound_atoms);
  s.algebra = FiniteAlgebra::from_tables(std::move(alg));
  return s;
}

FiniteContactStructure make_finite_lca(int atom_count, std::vector<std::vector<bool>> adjacency,
                                       std::vector<int> bound_atoms) {
  static const char* stock[5] = {"p", "q", "r", "s", "t"};
  if (atom_count < 0 || atom_count > 5)
    fail(Errc::atom_count_out_of_range,
         "at most 5 atoms, got " + std::to_string(atom_count));
  std::vector<std::string> names;
  for (int i = 0; i < atom_count; ++i) names.emplace_back(stock[i]);
  std::vector<std::string> bound;
  for (int i : bound_atoms) {
    if (i < 0 || i >= atom_count)
      fail(Errc::reference_error, "bound atom index " + std::to_string(i) + " out of range");
    bound.emplace_back(stock[i]);
  }
  return make_finite(std::move(names), std::move(adjacency), std::move(bound));
}

RegionAlgebra finite_contract(std::shared_ptr<const FiniteAlgebra> algebra, ContactChoice choice,
                              std::string name) {
  RegionAlgebra A;
  A.kind = CarrierKind::finite;
  A.name = std::move(name);
  auto alg = std::move(algebra);
  auto idx = [](const Element& e) { return std::get<FiniteElem>(e).idx; };
  A.zero = FiniteElem{alg->zero};
  A.one = FiniteElem{alg->one};
  A.join = [alg, idx](const Element& a, const Element& b) -> Element {
    return FiniteElem{alg->join(idx(a), idx(b))};
  };
  A.meet = [alg, idx](const Element& a, const Element& b) -> Element {
    return FiniteElem{alg->meet(idx(a), idx(b))};
  };
  A.complement = [alg, idx](const Element& a) -> Element { return FiniteElem{alg->comp(idx(a))}; };
  A.contact = [alg, idx, choice](const Element& a, const Element& b) {
    return alg->contact_of(idx(a), idx(b), choice);
  };
  if (choice == ContactChoice::alexandroff) {
    A.bounded = [](const Element&) { return true; };
  } else {
    A.bounded = [alg, idx](const Element& a) { return alg->bounded(idx(a)); };
  }
  A.print = [alg, idx](const Element& a) { return alg->labels[idx(a)]; };
  A.leq_fn = [alg, idx](const Element& a, const Element& b) { return alg->leq(idx(a), idx(b)); };
  A.enumerate = [alg]() {
    std::vector<Element> out;
    for (int e = 0; e < alg->size(); ++e) out.push_back(FiniteElem{static_cast<std::uint16_t>(e)});
    return out;
  };
  A.sample = [alg](SampleStream& s) -> Element {
    return FiniteElem{static_cast<std::uint16_t>(s.below(alg->size()))};
  };
  return A;
}

ClusterCheck is_cluster(const FiniteAlgebra& alg, std::uint32_t members, ContactChoice choice) {
  ClusterCheck r;
  std::uint32_t full = alg.full_mask();
  members &= full;
  if (members == 0) fail(Errc::empty_candidate, "a cluster candidate must be nonempty");
  int n = alg.size();
  for (int a = 0; a < n; ++a) {
    if (!((members >> a) & 1u)) continue;
    std::uint32_t row = alg.contact_row_of(static_cast<std::uint8_t>(a), choice);
    std::uint32_t misses = members & ~row;
    if (misses) {
      r.failed = "K1";
      r.witness = {static_cast<std::uint8_t>(a),
                   static_cast<std::uint8_t>(std::countr_zero(misses))};
      return r;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::uint8_t j = alg.join(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b));
      if (((members >> j) & 1u) && !((members >> a) & 1u) && !((members >> b) & 1u)) {
        r.failed = "K2";
        r.witness = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)};
        return r;
      }
    }
  for (int a = 0; a < n; ++a) {
    if ((members >> a) & 1u) continue;
    std::uint32_t row = alg.contact_row_of(static_cast<std::uint8_t>(a), choice);
    if ((members & ~row) == 0) {
      r.failed = "K3";
      r.witness = {static_cast<std::uint8_t>(a)};
      return r;
    }
  }
  r.ok = true;
  return r;
}

std::uint32_t cluster_from_ultrafilter(const FiniteAlgebra& alg, std::uint8_t atom,
                                       ContactChoice choice) {
  if (std::find(alg.atoms.begin(), alg.atoms.end(), atom) == alg.atoms.end())
    fail(Errc::not_an_atom, "element " + alg.labels[atom] + " is not an atom");
  int n = alg.size();
  std::uint32_t members = 0;
  for (int a = 0; a < n; ++a) {
    bool in = true;
    for (int b = 0; b < n && in; ++b) {
      if (!alg.leq(atom, static_cast<std::uint8_t>(b))) continue;
      if (!alg.contact_of(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), choice))
        in = false;
    }
    if (in) members |= 1u << a;
  }
  return members;
}

ClusterSet enumerate_clusters(const FiniteAlgebra& alg, ClusterMode mode, ContactChoice choice) {
  ClusterSet out;
  if (mode == ClusterMode::brute) {
    if (alg.size() > 16)
      fail(Errc::too_large_for_brute,
           "brute cluster scan needs at most 16 elements, carrier has " +
               std::to_string(alg.size()));
    std::uint32_t top = alg.full_mask();
    for (std::uint32_t c = 1; c <= top; ++c)
      if (is_cluster(alg, c, choice).ok) out.clusters.push_back(c);
  } else {
    // Ultrafilter route: sound exactly when the chosen contact passes NCA.
    auto shared = std::make_shared<const FiniteAlgebra>(alg);
    AxiomReport nca =
        check_axioms(finite_contract(shared, choice), Suite::NCA, QuantifierStrategy::exhaustive());
    if (!nca.all_hold()) out.warnings.push_back("UltrafilterModeUnsound: carrier fails NCA");
    for (std::uint8_t p : alg.atoms) {
      std::uint32_t sigma = cluster_from_ultrafilter(alg, p, choice);
      if (sigma == 0) {
        out.warnings.push_back("dropped candidate around atom " + alg.labels[p] + ": empty");
        continue;
      }
      ClusterCheck chk = is_cluster(alg, sigma, choice);
      if (!chk.ok) {
        out.warnings.push_back("dropped candidate around atom " + alg.labels[p] + ": fails " +
                               chk.failed);
        continue;
      }
      out.clusters.push_back(sigma);
    }
    std::sort(out.clusters.begin(), out.clusters.end());
    out.clusters.erase(std::unique(out.clusters.begin(), out.clusters.end()), out.clusters.end());
  }
  out.bounded.reserve(out.clusters.size());
  for (std::uint32_t c : out.clusters) out.bounded.push_back((c & alg.bounded_mask) != 0);
  return out;
}

SigmaInfinity sigma_infinity(const FiniteAlgebra& alg) {
  if (alg.bounded(alg.one))
    fail(Errc::bounded_top, "all elements bounded; there is no point at infinity");
  SigmaInfinity s;
  s.members = ~alg.bounded_mask & alg.full_mask();
  s.check = is_cluster(alg, s.members, ContactChoice::alexandroff);
  return s;
}

std::string element_set_str(const FiniteAlgebra& alg, std::uint32_t members) {
  std::string out = "{";
  bool first = true;
  for (int e = 0; e < alg.size(); ++e) {
    if (!((members >> e) & 1u)) continue;
    if (!first) out += ", ";
    out += alg.labels[e];
    first = false;
  }
  return out + "}";
}

}  // namespace rba
