#include "rba/finite_space.hpp"

#include <algorithm>
#include <map>

#include "rba/errors.hpp"

namespace rba {

bool FiniteSpace::is_open(std::uint32_t s) const {
  return std::binary_search(opens.begin(), opens.end(), s & full_mask());
}

std::uint32_t FiniteSpace::interior(std::uint32_t s) const {
  s &= full_mask();
  std::uint32_t out = 0;
  for (std::uint32_t o : opens)
    if ((o & ~s) == 0) out |= o;
  return out;
}

std::uint32_t FiniteSpace::closure(std::uint32_t s) const {
  return full_mask() & ~interior(full_mask() & ~s);
}

std::string FiniteSpace::set_str(std::uint32_t s) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < size(); ++i)
    if ((s >> i) & 1u) {
      if (!first) out += ", ";
      out += points[i];
      first = false;
    }
  return out + "}";
}

namespace {

std::map<std::string, int> point_index(const std::vector<std::string>& points) {
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!idx.emplace(points[i], static_cast<int>(i)).second)
      fail(Errc::precondition_violated, "duplicate point name '" + points[i] + "'");
  }
  return idx;
}

}  // namespace

FiniteSpace validate_topology(std::vector<std::string> points,
                              const std::vector<std::vector<std::string>>& open_sets) {
  if (points.size() > 16)
    fail(Errc::precondition_violated,
         "at most 16 points, got " + std::to_string(points.size()));
  auto idx = point_index(points);
  FiniteSpace X;
  X.points = std::move(points);
  for (const auto& names : open_sets) {
    std::uint32_t m = 0;
    for (const auto& nm : names) {
      auto it = idx.find(nm);
      if (it == idx.end()) fail(Errc::reference_error, "unknown point '" + nm + "'");
      m |= 1u << it->second;
    }
    X.opens.push_back(m);
  }
  std::sort(X.opens.begin(), X.opens.end());
  X.opens.erase(std::unique(X.opens.begin(), X.opens.end()), X.opens.end());
  if (!X.is_open(0)) fail(Errc::not_a_topology, "the empty set is not listed as open");
  if (!X.is_open(X.full_mask()))
    fail(Errc::not_a_topology, "the full set " + X.set_str(X.full_mask()) + " is not listed as open");
  for (std::size_t i = 0; i < X.opens.size(); ++i)
    for (std::size_t j = i + 1; j < X.opens.size(); ++j) {
      std::uint32_t a = X.opens[i], b = X.opens[j];
      if (!X.is_open(a | b))
        fail(Errc::not_a_topology,
             "union of " + X.set_str(a) + " and " + X.set_str(b) + " is not open");
      if (!X.is_open(a & b))
        fail(Errc::not_a_topology,
             "intersection of " + X.set_str(a) + " and " + X.set_str(b) + " is not open");
    }
  return X;
}

FiniteSpace discrete_space(std::vector<std::string> points) {
  if (points.size() > 16)
    fail(Errc::precondition_violated,
         "at most 16 points, got " + std::to_string(points.size()));
  point_index(points);
  FiniteSpace X;
  X.points = std::move(points);
  std::uint32_t full = X.full_mask();
  for (std::uint32_t s = 0;; ++s) {
    X.opens.push_back(s);
    if (s == full) break;
  }
  return X;
}

FiniteSpace indiscrete_space(std::vector<std::string> points) {
  if (points.size() > 16)
    fail(Errc::precondition_violated,
         "at most 16 points, got " + std::to_string(points.size()));
  point_index(points);
  FiniteSpace X;
  X.points = std::move(points);
  X.opens.push_back(0);
  if (X.full_mask() != 0) X.opens.push_back(X.full_mask());
  return X;
}

bool is_connected_space(const FiniteSpace& X) {
  std::uint32_t full = X.full_mask();
  for (std::uint32_t o : X.opens)
    if (o != 0 && o != full && X.is_open(full & ~o)) return false;
  return true;
}

bool is_hausdorff(const FiniteSpace& X) {
  // Minimal open neighbourhoods: two points are separated by disjoint opens
  // exactly when their minimal neighbourhoods are disjoint.
  int n = X.size();
  std::vector<std::uint32_t> least(n, X.full_mask());
  for (std::uint32_t o : X.opens)
    for (int i = 0; i < n; ++i)
      if ((o >> i) & 1u) least[i] &= o;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (least[i] & least[j]) return false;
  return true;
}

bool is_discrete(const FiniteSpace& X) {
  for (int i = 0; i < X.size(); ++i)
    if (!X.is_open(1u << i)) return false;
  return true;
}

Subspace subspace(const FiniteSpace& X, std::uint32_t mask) {
  mask &= X.full_mask();
  Subspace S;
  std::vector<int> rank(X.size(), -1);
  for (int i = 0; i < X.size(); ++i)
    if ((mask >> i) & 1u) {
      rank[i] = static_cast<int>(S.to_parent.size());
      S.to_parent.push_back(i);
      S.space.points.push_back(X.points[i]);
    }
  for (std::uint32_t o : X.opens) {
    std::uint32_t cut = o & mask, m = 0;
    for (int i = 0; i < X.size(); ++i)
      if ((cut >> i) & 1u) m |= 1u << rank[i];
    S.space.opens.push_back(m);
  }
  std::sort(S.space.opens.begin(), S.space.opens.end());
  S.space.opens.erase(std::unique(S.space.opens.begin(), S.space.opens.end()),
                      S.space.opens.end());
  return S;
}

std::optional<std::uint8_t> RcAlgebra::id_of(std::uint32_t mask) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == mask) return static_cast<std::uint8_t>(i);
  return std::nullopt;
}

RcAlgebra rc_algebra(const FiniteSpace& X) {
  if (X.size() > 5)
    fail(Errc::too_large_for_brute,
         "regular closed tables need at most 5 points, got " + std::to_string(X.size()));
  RcAlgebra rc;
  rc.space = X;
  std::uint32_t full = X.full_mask();
  for (std::uint32_t s = 0;; ++s) {
    if (X.closure(X.interior(s)) == s) rc.elements.push_back(s);
    if (s == full) break;
  }
  int n = static_cast<int>(rc.elements.size());
  FiniteAlgebra alg;
  for (std::uint32_t m : rc.elements) alg.labels.push_back(X.set_str(m));
  auto id = [&](std::uint32_t m) -> std::uint8_t {
    auto it = std::lower_bound(rc.elements.begin(), rc.elements.end(), m);
    if (it == rc.elements.end() || *it != m)
      fail(Errc::precondition_violated,
           "operation left the regular closed family at " + X.set_str(m));
    return static_cast<std::uint8_t>(it - rc.elements.begin());
  };
  alg.zero = id(0);
  alg.one = id(full);
  alg.join_t.resize(n * n);
  alg.meet_t.resize(n * n);
  alg.comp_t.resize(n);
  alg.contact_row.resize(n, 0);
  for (int i = 0; i < n; ++i) {
    std::uint32_t a = rc.elements[i];
    alg.comp_t[i] = id(X.closure(full & ~a));
    for (int j = 0; j < n; ++j) {
      std::uint32_t b = rc.elements[j];
      alg.join_t[i * n + j] = id(a | b);
      alg.meet_t[i * n + j] = id(X.closure(X.interior(a & b)));
      if (a & b) alg.contact_row[i] |= 1u << j;
    }
  }
  alg.bounded_mask = n == 32 ? 0xffffffffu : ((1u << n) - 1u);
  rc.algebra = FiniteAlgebra::from_tables(std::move(alg));
  return rc;
}

DenseIso dense_subspace_iso(const FiniteSpace& X, std::uint32_t dense_mask) {
  dense_mask &= X.full_mask();
  if (X.closure(dense_mask) != X.full_mask())
    fail(Errc::not_dense, "closure of " + X.set_str(dense_mask) + " is " +
                              X.set_str(X.closure(dense_mask)) + ", not the whole space");
  DenseIso d;
  d.sub = subspace(X, dense_mask);
  d.rc_parent = rc_algebra(X);
  d.rc_sub = rc_algebra(d.sub.space);
  auto compress = [&](std::uint32_t parent_set) {
    std::uint32_t m = 0;
    for (std::size_t k = 0; k < d.sub.to_parent.size(); ++k)
      if ((parent_set >> d.sub.to_parent[k]) & 1u) m |= 1u << k;
    return m;
  };
  auto expand = [&](std::uint32_t sub_set) {
    std::uint32_t m = 0;
    for (std::size_t k = 0; k < d.sub.to_parent.size(); ++k)
      if ((sub_set >> k) & 1u) m |= 1u << d.sub.to_parent[k];
    return m;
  };
  int np = d.rc_parent.algebra->size(), ns = d.rc_sub.algebra->size();
  for (int i = 0; i < np; ++i) {
    auto down = d.rc_sub.id_of(compress(d.rc_parent.elements[i] & dense_mask));
    if (!down) {
      d.failure = "restriction of " + X.set_str(d.rc_parent.elements[i]) +
                  " is not regular closed in the subspace";
      return d;
    }
    d.restrict_map.push_back(*down);
  }
  for (int j = 0; j < ns; ++j) {
    auto up = d.rc_parent.id_of(X.closure(expand(d.rc_sub.elements[j])));
    if (!up) {
      d.failure = "extension of " + d.sub.space.set_str(d.rc_sub.elements[j]) +
                  " is not regular closed in the parent";
      return d;
    }
    d.extend_map.push_back(*up);
  }
  const FiniteAlgebra& P = *d.rc_parent.algebra;
  const FiniteAlgebra& S = *d.rc_sub.algebra;
  d.boolean_iso = np == ns;
  for (int i = 0; i < np && d.boolean_iso; ++i) {
    if (d.extend_map[d.restrict_map[i]] != i) d.boolean_iso = false;
    if (d.restrict_map[P.comp(i)] != S.comp(d.restrict_map[i])) d.boolean_iso = false;
    for (int j = 0; j < np && d.boolean_iso; ++j) {
      if (d.restrict_map[P.join(i, j)] != S.join(d.restrict_map[i], d.restrict_map[j]))
        d.boolean_iso = false;
      if (d.restrict_map[P.meet(i, j)] != S.meet(d.restrict_map[i], d.restrict_map[j]))
        d.boolean_iso = false;
    }
  }
  d.contact_iso = d.boolean_iso;
  for (int i = 0; i < np && d.contact_iso; ++i)
    for (int j = 0; j < np; ++j)
      if (P.contact(i, j) != S.contact(d.restrict_map[i], d.restrict_map[j])) {
        d.contact_iso = false;
        break;
      }
  if (!d.boolean_iso)
    d.failure = "restriction is not a Boolean isomorphism";
  else if (!d.contact_iso)
    d.failure = "restriction breaks the contact relation";
  return d;
}

}  // namespace rba
