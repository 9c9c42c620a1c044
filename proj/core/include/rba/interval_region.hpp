#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rba/rational.hpp"

namespace rba {

/// One closed component of an interval region: [lo,hi], a ray, or the line.
/// Nondegenerate by construction (lo < hi in the extended order).
struct Ivl {
  Ext lo;
  Ext hi;
};

/// Finite union of closed rational intervals and rays, normalized to a sorted
/// list of strictly separated components. These are exactly the regular
/// closed subsets of the line the workbench represents; join is union, meet
/// closes the interior of the intersection, complement closes the set
/// complement.
class IntervalRegion {
public:
  IntervalRegion() = default;

  static IntervalRegion empty() { return IntervalRegion(); }
  static IntervalRegion line();
  static IntervalRegion interval(const Ext& lo, const Ext& hi);
  static IntervalRegion from_parts(std::vector<Ivl> parts);

  const std::vector<Ivl>& parts() const { return parts_; }
  bool is_empty() const { return parts_.empty(); }
  bool is_line() const;

  bool contains(const Rat& x) const;
  bool interior_contains(const Rat& x) const;

  std::string str() const;
  /// Parses the literal grammar: "empty", "[l,r]", "[l,inf)", "(-inf,r]",
  /// "(-inf,inf)", unions written with "+", rationals as "p/q".
  static IntervalRegion parse(const std::string& text);

  friend bool operator==(const IntervalRegion& a, const IntervalRegion& b);

private:
  std::vector<Ivl> parts_;
};

IntervalRegion iv_join(const IntervalRegion& a, const IntervalRegion& b);
IntervalRegion iv_meet(const IntervalRegion& a, const IntervalRegion& b);
IntervalRegion iv_complement(const IntervalRegion& a);
bool iv_leq(const IntervalRegion& a, const IntervalRegion& b);
/// Contact of the line model: the closed sets share a point.
bool iv_contact(const IntervalRegion& a, const IntervalRegion& b);
bool iv_bounded(const IntervalRegion& a);
/// a lies inside the interior of b.
bool iv_way_below(const IntervalRegion& a, const IntervalRegion& b);

/// Bounded region inside the interior of a, exhausting it as eps -> 0.
/// Components shrink by eps at finite ends; rays are truncated at width 1/eps.
IntervalRegion iv_shrink(const IntervalRegion& a, const Rat& eps);
/// Widens every component by eps, so a << iv_expand(a, eps) whenever eps > 0.
IntervalRegion iv_expand(const IntervalRegion& a, const Rat& eps);
/// A rational interior point of every component, one per component.
std::vector<Rat> iv_interior_points(const IntervalRegion& a);
/// Positive rational distance from x to the (nonempty) region not containing x.
Rat iv_distance(const IntervalRegion& a, const Rat& x);

/// For a way below c: some b with a << b << c, placed on half-margins inside
/// c. Bounded whenever a is bounded; ray ends pass through unchanged.
IntervalRegion iv_interpolate(const IntervalRegion& a, const IntervalRegion& c);
/// For nonzero w: a nonzero bounded region way below w.
IntervalRegion iv_inner_witness(const IntervalRegion& w);

}  // namespace rba
