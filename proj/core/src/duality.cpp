#include "rba/duality.hpp"

#include <algorithm>
#include <set>

#include "rba/axioms.hpp"
#include "rba/errors.hpp"

namespace rba {

namespace {

std::uint32_t compress_to(const std::vector<int>& to_parent, std::uint32_t parent_mask) {
  std::uint32_t m = 0;
  for (std::size_t k = 0; k < to_parent.size(); ++k)
    if ((parent_mask >> to_parent[k]) & 1u) m |= 1u << k;
  return m;
}

}  // namespace

std::uint32_t DualSpace::lambda_g(std::uint8_t a) const {
  return compress_to(carrier.to_parent, lambda_full[a] & bounded_points);
}

DualSpace dualize(std::shared_ptr<const FiniteAlgebra> algebra) {
  DualSpace d;
  d.algebra = algebra;
  const FiniteAlgebra& B = *algebra;
  ClusterMode mode = B.size() <= 16 ? ClusterMode::brute : ClusterMode::ultrafilter;
  d.clusters = enumerate_clusters(B, mode, ContactChoice::alexandroff);
  if (mode == ClusterMode::ultrafilter && !B.bounded(B.one)) {
    // The cluster of unbounded elements does not always sit over an atom
    // ultrafilter, so the scan-free route must add it by hand.
    SigmaInfinity si = sigma_infinity(B);
    if (si.check.ok &&
        !std::binary_search(d.clusters.clusters.begin(), d.clusters.clusters.end(), si.members)) {
      d.clusters.clusters.push_back(si.members);
      std::sort(d.clusters.clusters.begin(), d.clusters.clusters.end());
      d.clusters.bounded.clear();
      for (std::uint32_t c : d.clusters.clusters)
        d.clusters.bounded.push_back((c & B.bounded_mask) != 0);
    }
  }
  int k = static_cast<int>(d.clusters.clusters.size());
  for (int i = 0; i < k; ++i) {
    d.space.points.push_back("s" + std::to_string(i));
    if (d.clusters.bounded[i]) d.bounded_points |= 1u << i;
  }
  d.lambda_full.resize(B.size());
  for (int a = 0; a < B.size(); ++a) {
    std::uint32_t m = 0;
    for (int i = 0; i < k; ++i)
      if ((d.clusters.clusters[i] >> a) & 1u) m |= 1u << i;
    d.lambda_full[a] = m;
  }
  std::uint32_t full = k == 0 ? 0 : ((1u << k) - 1u);
  std::set<std::uint32_t> closed(d.lambda_full.begin(), d.lambda_full.end());
  closed.insert(0);
  closed.insert(full);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::uint32_t> snapshot(closed.begin(), closed.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        grew |= closed.insert(snapshot[i] & snapshot[j]).second;
        grew |= closed.insert(snapshot[i] | snapshot[j]).second;
      }
  }
  for (std::uint32_t c : closed) d.space.opens.push_back(full & ~c);
  std::sort(d.space.opens.begin(), d.space.opens.end());
  d.carrier = subspace(d.space, d.bounded_points);
  AxiomReport lca = check_axioms(finite_contract(algebra, ContactChoice::rho), Suite::LCA,
                                 QuantifierStrategy::exhaustive());
  d.lca_guarantees = lca.all_hold();
  if (!d.lca_guarantees)
    for (const auto& v : lca.verdicts)
      if (v.status != AxStatus::holds)
        d.notes.push_back("structure fails " + v.axiom + "; realization not guaranteed");
  AxiomReport nca = check_axioms(finite_contract(algebra, ContactChoice::alexandroff), Suite::NCA,
                                 QuantifierStrategy::exhaustive());
  if (!nca.all_hold())
    for (const auto& v : nca.verdicts)
      if (v.status != AxStatus::holds)
        d.notes.push_back("extended contact fails " + v.axiom);
  for (const auto& w : d.clusters.warnings) d.notes.push_back(w);
  return d;
}

RealizationReport verify_realization(const DualSpace& d) {
  RealizationReport r;
  const FiniteAlgebra& B = *d.algebra;
  int n = B.size();
  std::uint32_t full = d.space.full_mask();

  r.contact_realized = true;
  for (int a = 0; a < n && r.contact_realized; ++a)
    for (int b = 0; b < n; ++b) {
      bool shared = (d.lambda_full[a] & d.lambda_full[b] & d.bounded_points) != 0;
      if (B.contact(a, b) != shared) {
        r.contact_realized = false;
        r.failures.push_back("contact between " + B.labels[a] + " and " + B.labels[b] +
                             (shared ? " appears in the dual only" : " has no bounded cluster"));
        break;
      }
    }

  r.complement_interior = true;
  for (int a = 0; a < n; ++a) {
    std::uint32_t lhs = full & ~d.lambda_full[a];
    std::uint32_t rhs = d.space.interior(d.lambda_full[B.comp(a)]);
    if (lhs != rhs) {
      r.complement_interior = false;
      r.failures.push_back("complement of lambda(" + B.labels[a] + ") is " +
                           d.space.set_str(lhs) + ", interior of the dual set is " +
                           d.space.set_str(rhs));
      break;
    }
  }

  r.open_base = true;
  {
    std::vector<std::uint32_t> base;
    for (int a = 0; a < n; ++a)
      if (B.bounded(a)) base.push_back(d.carrier.space.interior(d.lambda_g(a)));
    for (std::uint32_t u : d.carrier.space.opens) {
      std::uint32_t covered = 0;
      for (std::uint32_t b : base)
        if ((b & ~u) == 0) covered |= b;
      if (covered != u) {
        r.open_base = false;
        r.failures.push_back("carrier open " + d.carrier.space.set_str(u) +
                             " is not a union of bounded base interiors");
        break;
      }
    }
  }

  r.join_recovered = true;
  for (int a = 0; a < n; ++a) {
    std::uint8_t acc = B.zero;
    for (int b = 0; b < n; ++b)
      if (B.bounded(b) && B.way_below(b, a)) acc = B.join(acc, static_cast<std::uint8_t>(b));
    if (acc != a) {
      r.join_recovered = false;
      r.failures.push_back(B.labels[a] + " is not the join of the bounded elements way below it");
      break;
    }
  }
  return r;
}

RoundTrip roundtrip_algebra(const DualSpace& d) {
  RoundTrip t;
  const FiniteAlgebra& B = *d.algebra;
  t.rc = rc_algebra(d.carrier.space);
  const FiniteAlgebra& R = *t.rc.algebra;
  if (!d.lca_guarantees) t.declined = "structure is not a local contact algebra";
  for (int a = 0; a < B.size(); ++a) {
    auto id = t.rc.id_of(d.lambda_g(static_cast<std::uint8_t>(a)));
    if (!id) {
      t.declined = "lambda_g(" + B.labels[a] + ") is not regular closed in the carrier";
      return t;
    }
    t.to_rc.push_back(*id);
  }
  bool inj = true;
  std::vector<bool> hit(R.size(), false);
  for (std::uint8_t v : t.to_rc) {
    if (hit[v]) inj = false;
    hit[v] = true;
  }
  bool onto = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  t.boolean_iso = inj && onto && B.size() == R.size();
  for (int a = 0; a < B.size() && t.boolean_iso; ++a) {
    if (t.to_rc[B.comp(a)] != R.comp(t.to_rc[a])) t.boolean_iso = false;
    for (int b = 0; b < B.size(); ++b) {
      if (t.to_rc[B.join(a, b)] != R.join(t.to_rc[a], t.to_rc[b])) t.boolean_iso = false;
      if (t.to_rc[B.meet(a, b)] != R.meet(t.to_rc[a], t.to_rc[b])) t.boolean_iso = false;
    }
  }
  t.contact_iso = true;
  for (int a = 0; a < B.size() && t.contact_iso; ++a)
    for (int b = 0; b < B.size(); ++b)
      if (B.contact(a, b) != R.contact(t.to_rc[a], t.to_rc[b])) {
        t.contact_iso = false;
        break;
      }
  t.bounded_iso = true;
  for (int a = 0; a < B.size(); ++a)
    if (B.bounded(a) != R.bounded(t.to_rc[a])) {
      t.bounded_iso = false;
      break;
    }
  t.ok = t.boolean_iso && t.contact_iso && t.bounded_iso;
  if (!t.ok && t.declined.empty()) t.declined = "rebuilt algebra disagrees with the original";
  return t;
}

TMap t_map(const RcAlgebra& rc) {
  TMap out;
  out.dual = dualize(rc.algebra);
  out.guaranteed = is_hausdorff(rc.space);
  out.defined = true;
  int npts = rc.space.size();
  for (int x = 0; x < npts; ++x) {
    std::uint32_t sigma = 0;
    for (std::size_t f = 0; f < rc.elements.size(); ++f)
      if ((rc.elements[f] >> x) & 1u) sigma |= 1u << f;
    auto it = std::lower_bound(out.dual.clusters.clusters.begin(),
                               out.dual.clusters.clusters.end(), sigma);
    if (it == out.dual.clusters.clusters.end() || *it != sigma) {
      out.point_to_cluster.push_back(-1);
      out.defined = false;
      ClusterCheck chk = is_cluster(*rc.algebra, sigma, ContactChoice::alexandroff);
      out.failure = "sigma_" + rc.space.points[x] + " is not a cluster" +
                    (chk.ok ? "" : " (fails " + chk.failed + ")");
    } else {
      out.point_to_cluster.push_back(
          static_cast<int>(it - out.dual.clusters.clusters.begin()));
    }
  }
  if (!out.defined) return out;
  int k = static_cast<int>(out.dual.clusters.clusters.size());
  std::vector<bool> hit(k, false);
  out.bijective = npts == k;
  for (int c : out.point_to_cluster) {
    if (hit[c]) out.bijective = false;
    hit[c] = true;
  }
  if (!out.bijective) {
    if (out.failure.empty()) out.failure = "the point map is not a bijection onto the clusters";
    return out;
  }
  out.homeomorphism = rc.space.opens.size() == out.dual.space.opens.size();
  for (std::uint32_t o : rc.space.opens) {
    std::uint32_t img = 0;
    for (int x = 0; x < npts; ++x)
      if ((o >> x) & 1u) img |= 1u << out.point_to_cluster[x];
    if (!out.dual.space.is_open(img)) {
      out.homeomorphism = false;
      break;
    }
  }
  if (!out.homeomorphism && out.failure.empty())
    out.failure = "the point map does not carry opens to opens";
  return out;
}

}  // namespace rba
