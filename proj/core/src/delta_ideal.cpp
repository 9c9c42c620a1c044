#include "rba/delta_ideal.hpp"

#include <algorithm>

#include "rba/errors.hpp"

namespace rba {

namespace {

bool in(std::uint32_t mask, int i) { return (mask >> i) & 1u; }

void require_delta(const FiniteAlgebra& B, std::uint32_t members, const char* side) {
  DeltaCheck c = is_delta_ideal(B, members);
  if (!c.ok)
    fail(Errc::not_delta_ideal,
         std::string(side) + " operand fails the " + c.clause + " clause");
}

}  // namespace

DeltaCheck is_delta_ideal(const FiniteAlgebra& B, std::uint32_t members) {
  DeltaCheck r;
  members &= B.full_mask();
  int n = B.size();
  if (!in(members, B.zero)) {
    r.clause = "empty";
    return r;
  }
  for (int a = 0; a < n; ++a) {
    if (!in(members, a)) continue;
    for (int b = 0; b < n; ++b)
      if (B.leq(static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(a)) && !in(members, b)) {
        r.clause = "lower";
        r.witness = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)};
        return r;
      }
  }
  for (int a = 0; a < n; ++a) {
    if (!in(members, a)) continue;
    for (int b = 0; b < n; ++b)
      if (in(members, b) &&
          !in(members, B.join(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)))) {
        r.clause = "join";
        r.witness = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)};
        return r;
      }
  }
  for (int a = 0; a < n; ++a)
    if (in(members, a) && !B.bounded(static_cast<std::uint8_t>(a))) {
      r.clause = "bounded";
      r.witness = {static_cast<std::uint8_t>(a)};
      return r;
    }
  for (int a = 0; a < n; ++a) {
    if (!in(members, a)) continue;
    bool found = false;
    for (int b = 0; b < n && !found; ++b)
      found = in(members, b) &&
              B.way_below(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b));
    if (!found) {
      r.clause = "interpolation";
      r.witness = {static_cast<std::uint8_t>(a)};
      return r;
    }
  }
  r.ok = true;
  return r;
}

PrincipalDelta principal_delta_ideal(const FiniteAlgebra& B, std::uint8_t a) {
  PrincipalDelta p;
  for (int b = 0; b < B.size(); ++b)
    if (B.bounded(static_cast<std::uint8_t>(b)) &&
        B.way_below(static_cast<std::uint8_t>(b), a))
      p.members |= 1u << b;
  p.check = is_delta_ideal(B, p.members);
  return p;
}

DeltaIdealSet all_delta_ideals(const FiniteAlgebra& B) {
  // Every ideal of a finite Boolean algebra is the downset of its join, so
  // the candidates are exactly the downsets of bounded elements.
  DeltaIdealSet out;
  for (int g = 0; g < B.size(); ++g) {
    if (!B.bounded(static_cast<std::uint8_t>(g))) continue;
    std::uint32_t down = 0;
    for (int b = 0; b < B.size(); ++b)
      if (B.leq(static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(g))) down |= 1u << b;
    if (is_delta_ideal(B, down).ok) {
      out.ideals.push_back(down);
      out.tops.push_back(static_cast<std::uint8_t>(g));
    }
  }
  std::vector<std::size_t> order(out.ideals.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return out.ideals[i] < out.ideals[j]; });
  DeltaIdealSet sorted;
  for (std::size_t i : order) {
    sorted.ideals.push_back(out.ideals[i]);
    sorted.tops.push_back(out.tops[i]);
  }
  return sorted;
}

std::uint32_t frame_meet(const FiniteAlgebra& B, std::uint32_t I, std::uint32_t J) {
  require_delta(B, I, "left");
  require_delta(B, J, "right");
  std::uint32_t K = I & J;
  DeltaCheck c = is_delta_ideal(B, K);
  if (!c.ok)
    fail(Errc::not_delta_ideal, "intersection fails the " + c.clause + " clause");
  return K;
}

std::uint32_t frame_join(const FiniteAlgebra& B, std::uint32_t I, std::uint32_t J) {
  require_delta(B, I, "left");
  require_delta(B, J, "right");
  std::uint32_t want = I | J;
  DeltaIdealSet all = all_delta_ideals(B);
  bool any = false;
  std::uint32_t acc = 0;
  for (std::uint32_t K : all.ideals)
    if ((want & ~K) == 0) {
      acc = any ? (acc & K) : K;
      any = true;
    }
  if (!any) fail(Errc::not_delta_ideal, "no delta-ideal contains the union");
  return acc;
}

std::uint32_t iota(const DualSpace& d, std::uint32_t members) {
  const FiniteAlgebra& B = *d.algebra;
  std::uint32_t open = 0;
  for (int a = 0; a < B.size(); ++a)
    if (in(members, a)) open |= d.carrier.space.interior(d.lambda_g(static_cast<std::uint8_t>(a)));
  return open;
}

std::uint32_t iota_inverse(const DualSpace& d, std::uint32_t open_mask) {
  if (!d.carrier.space.is_open(open_mask))
    fail(Errc::not_open,
         d.carrier.space.set_str(open_mask & d.carrier.space.full_mask()) +
             " is not open in the carrier");
  const FiniteAlgebra& B = *d.algebra;
  std::uint32_t members = 0;
  for (int b = 0; b < B.size(); ++b)
    if (B.bounded(static_cast<std::uint8_t>(b)) &&
        (d.lambda_g(static_cast<std::uint8_t>(b)) & ~open_mask) == 0)
      members |= 1u << b;
  return members;
}

bool is_prime_element(const FiniteAlgebra& B, const DeltaIdealSet& all, std::uint32_t I) {
  std::uint32_t top = B.bounded_mask;
  if (I == top) return false;
  for (std::uint32_t J : all.ideals)
    for (std::uint32_t K : all.ideals) {
      std::uint32_t meet = J & K;
      if ((meet & ~I) == 0 && (J & ~I) != 0 && (K & ~I) != 0) return false;
    }
  return true;
}

std::vector<std::uint32_t> prime_elements(const FiniteAlgebra& B) {
  DeltaIdealSet all = all_delta_ideals(B);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t I : all.ideals)
    if (is_prime_element(B, all, I)) primes.push_back(I);
  return primes;
}

std::uint32_t cluster_to_prime(const FiniteAlgebra& B, std::uint32_t sigma) {
  return B.bounded_mask & ~sigma;
}

PrimeToCluster prime_to_cluster(const FiniteAlgebra& B, std::uint32_t I) {
  PrimeToCluster out;
  std::uint32_t outside = B.bounded_mask & ~I;
  for (int a = 0; a < B.size(); ++a) {
    bool all_contact = true;
    for (int d = 0; d < B.size() && all_contact; ++d)
      if (in(outside, d))
        all_contact = B.contact(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(d));
    if (all_contact) out.sigma |= 1u << a;
  }
  out.check = out.sigma == 0 ? ClusterCheck{} : is_cluster(B, out.sigma, ContactChoice::rho);
  return out;
}

PrimeBijection prime_cluster_bijection(const DualSpace& d) {
  PrimeBijection out;
  const FiniteAlgebra& B = *d.algebra;
  DeltaIdealSet all = all_delta_ideals(B);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t I : all.ideals)
    if (is_prime_element(B, all, I)) primes.push_back(I);
  std::vector<std::uint32_t> hit;
  out.ok = true;
  for (std::size_t i = 0; i < d.clusters.clusters.size(); ++i) {
    if (!d.clusters.bounded[i]) continue;
    std::uint32_t sigma = d.clusters.clusters[i];
    std::uint32_t I = cluster_to_prime(B, sigma);
    out.pairs.emplace_back(sigma, I);
    if (!std::binary_search(primes.begin(), primes.end(), I)) {
      out.ok = false;
      out.failures.push_back("trace of " + element_set_str(B, sigma) +
                             " is not a prime delta-ideal");
      continue;
    }
    hit.push_back(I);
    PrimeToCluster back = prime_to_cluster(B, I);
    if (back.sigma != sigma) {
      out.ok = false;
      out.failures.push_back("prime of " + element_set_str(B, sigma) + " returns " +
                             element_set_str(B, back.sigma));
    }
  }
  std::sort(hit.begin(), hit.end());
  if (hit.size() != primes.size() || !std::equal(hit.begin(), hit.end(), primes.begin())) {
    out.ok = false;
    out.failures.push_back("bounded clusters cover " + std::to_string(hit.size()) + " of " +
                           std::to_string(primes.size()) + " primes");
  }
  return out;
}

}  // namespace rba
