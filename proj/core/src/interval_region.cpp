#include "rba/interval_region.hpp"

#include <algorithm>

#include "rba/errors.hpp"

namespace rba {

namespace {

Ext ext_min(const Ext& a, const Ext& b) { return a < b ? a : b; }
Ext ext_max(const Ext& a, const Ext& b) { return a < b ? b : a; }

std::string part_str(const Ivl& p) {
  bool lo_inf = p.lo.kind() == Ext::Kind::neg_inf;
  bool hi_inf = p.hi.kind() == Ext::Kind::pos_inf;
  if (lo_inf && hi_inf) return "(-inf,inf)";
  if (lo_inf) return "(-inf," + p.hi.str() + "]";
  if (hi_inf) return "[" + p.lo.str() + ",inf)";
  return "[" + p.lo.str() + "," + p.hi.str() + "]";
}

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

Ext parse_endpoint(const std::string& text) {
  if (text == "inf" || text == "+inf") return Ext::pinf();
  if (text == "-inf") return Ext::ninf();
  auto q = rat_parse(text);
  if (!q) fail(Errc::parse_error, "bad interval endpoint '" + text + "'");
  return Ext::fin(*q);
}

Ivl parse_term(const std::string& raw) {
  std::string t = trimmed(raw);
  if (t.size() < 5) fail(Errc::parse_error, "bad interval term '" + raw + "'");
  char open = t.front();
  char close = t.back();
  if ((open != '[' && open != '(') || (close != ']' && close != ')'))
    fail(Errc::parse_error, "bad interval term '" + raw + "'");
  std::string body = t.substr(1, t.size() - 2);
  std::size_t comma = body.find(',');
  if (comma == std::string::npos) fail(Errc::parse_error, "missing comma in '" + raw + "'");
  Ext lo = parse_endpoint(trimmed(body.substr(0, comma)));
  Ext hi = parse_endpoint(trimmed(body.substr(comma + 1)));
  if (open == '(' && lo.kind() != Ext::Kind::neg_inf)
    fail(Errc::parse_error, "open bracket requires -inf in '" + raw + "'");
  if (close == ')' && hi.kind() != Ext::Kind::pos_inf)
    fail(Errc::parse_error, "close paren requires inf in '" + raw + "'");
  if (open == '[' && lo.kind() == Ext::Kind::neg_inf)
    fail(Errc::parse_error, "-inf endpoint needs '(' in '" + raw + "'");
  if (close == ']' && hi.kind() == Ext::Kind::pos_inf)
    fail(Errc::parse_error, "inf endpoint needs ')' in '" + raw + "'");
  if (!(lo < hi))
    fail(Errc::malformed_interval, "empty or degenerate interval '" + raw + "'");
  return Ivl{lo, hi};
}

}  // namespace

IntervalRegion IntervalRegion::line() {
  IntervalRegion r;
  r.parts_.push_back(Ivl{Ext::ninf(), Ext::pinf()});
  return r;
}

IntervalRegion IntervalRegion::interval(const Ext& lo, const Ext& hi) {
  if (!(lo < hi))
    fail(Errc::malformed_interval, "interval needs lo < hi, got [" + lo.str() + "," + hi.str() + "]");
  IntervalRegion r;
  r.parts_.push_back(Ivl{lo, hi});
  return r;
}

IntervalRegion IntervalRegion::from_parts(std::vector<Ivl> parts) {
  for (const Ivl& p : parts)
    if (!(p.lo < p.hi))
      fail(Errc::malformed_interval, "degenerate component [" + p.lo.str() + "," + p.hi.str() + "]");
  std::sort(parts.begin(), parts.end(),
            [](const Ivl& a, const Ivl& b) { return a.lo < b.lo; });
  IntervalRegion r;
  for (const Ivl& p : parts) {
    if (!r.parts_.empty() && p.lo <= r.parts_.back().hi) {
      r.parts_.back().hi = ext_max(r.parts_.back().hi, p.hi);
    } else {
      r.parts_.push_back(p);
    }
  }
  return r;
}

bool IntervalRegion::is_line() const {
  return parts_.size() == 1 && parts_[0].lo.kind() == Ext::Kind::neg_inf &&
         parts_[0].hi.kind() == Ext::Kind::pos_inf;
}

bool IntervalRegion::contains(const Rat& x) const {
  Ext p = Ext::fin(x);
  for (const Ivl& part : parts_)
    if (part.lo <= p && p <= part.hi) return true;
  return false;
}

bool IntervalRegion::interior_contains(const Rat& x) const {
  // Components are strictly separated, so the interior of the union is the
  // union of the component interiors.
  Ext p = Ext::fin(x);
  for (const Ivl& part : parts_)
    if (part.lo < p && p < part.hi) return true;
  return false;
}

std::string IntervalRegion::str() const {
  if (parts_.empty()) return "empty";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += " + ";
    out += part_str(parts_[i]);
  }
  return out;
}

IntervalRegion IntervalRegion::parse(const std::string& text) {
  std::string t = trimmed(text);
  if (t == "empty" || t.empty()) return IntervalRegion::empty();
  std::vector<Ivl> parts;
  std::size_t pos = 0;
  while (pos <= t.size()) {
    std::size_t plus = t.find('+', pos);
    std::string term = plus == std::string::npos ? t.substr(pos) : t.substr(pos, plus - pos);
    parts.push_back(parse_term(term));
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return from_parts(std::move(parts));
}

bool operator==(const IntervalRegion& a, const IntervalRegion& b) {
  if (a.parts_.size() != b.parts_.size()) return false;
  for (std::size_t i = 0; i < a.parts_.size(); ++i)
    if (!(a.parts_[i].lo == b.parts_[i].lo && a.parts_[i].hi == b.parts_[i].hi)) return false;
  return true;
}

IntervalRegion iv_join(const IntervalRegion& a, const IntervalRegion& b) {
  std::vector<Ivl> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return IntervalRegion::from_parts(std::move(parts));
}

IntervalRegion iv_meet(const IntervalRegion& a, const IntervalRegion& b) {
  // Pairwise component intersections are pairwise separated, so closing the
  // interior just drops the degenerate (single point) ones.
  std::vector<Ivl> parts;
  for (const Ivl& p : a.parts()) {
    for (const Ivl& q : b.parts()) {
      Ext lo = ext_max(p.lo, q.lo);
      Ext hi = ext_min(p.hi, q.hi);
      if (lo < hi) parts.push_back(Ivl{lo, hi});
    }
  }
  return IntervalRegion::from_parts(std::move(parts));
}

IntervalRegion iv_complement(const IntervalRegion& a) {
  if (a.is_empty()) return IntervalRegion::line();
  std::vector<Ivl> parts;
  const std::vector<Ivl>& in = a.parts();
  if (in.front().lo.kind() != Ext::Kind::neg_inf)
    parts.push_back(Ivl{Ext::ninf(), in.front().lo});
  for (std::size_t i = 0; i + 1 < in.size(); ++i)
    parts.push_back(Ivl{in[i].hi, in[i + 1].lo});
  if (in.back().hi.kind() != Ext::Kind::pos_inf)
    parts.push_back(Ivl{in.back().hi, Ext::pinf()});
  return IntervalRegion::from_parts(std::move(parts));
}

namespace {

bool part_inside(const Ivl& p, const Ivl& q) { return q.lo <= p.lo && p.hi <= q.hi; }

bool part_inside_interior(const Ivl& p, const Ivl& q) {
  bool lo_ok = p.lo.kind() == Ext::Kind::neg_inf ? q.lo.kind() == Ext::Kind::neg_inf
                                                 : (q.lo.kind() == Ext::Kind::neg_inf || q.lo < p.lo);
  bool hi_ok = p.hi.kind() == Ext::Kind::pos_inf ? q.hi.kind() == Ext::Kind::pos_inf
                                                 : (q.hi.kind() == Ext::Kind::pos_inf || p.hi < q.hi);
  return lo_ok && hi_ok;
}

}  // namespace

bool iv_leq(const IntervalRegion& a, const IntervalRegion& b) {
  for (const Ivl& p : a.parts()) {
    bool found = false;
    for (const Ivl& q : b.parts())
      if (part_inside(p, q)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool iv_contact(const IntervalRegion& a, const IntervalRegion& b) {
  for (const Ivl& p : a.parts())
    for (const Ivl& q : b.parts())
      if (ext_max(p.lo, q.lo) <= ext_min(p.hi, q.hi)) return true;
  return false;
}

bool iv_bounded(const IntervalRegion& a) {
  if (a.is_empty()) return true;
  return a.parts().front().lo.finite() && a.parts().back().hi.finite();
}

bool iv_way_below(const IntervalRegion& a, const IntervalRegion& b) {
  for (const Ivl& p : a.parts()) {
    bool found = false;
    for (const Ivl& q : b.parts())
      if (part_inside_interior(p, q)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

IntervalRegion iv_shrink(const IntervalRegion& a, const Rat& eps) {
  if (!(eps > 0)) fail(Errc::precondition_violated, "shrink needs eps > 0");
  Rat cap = 1 / eps;
  std::vector<Ivl> parts;
  for (const Ivl& p : a.parts()) {
    bool lo_inf = !p.lo.finite();
    bool hi_inf = !p.hi.finite();
    Ext lo = Ext::ninf(), hi = Ext::pinf();
    if (lo_inf && hi_inf) {
      lo = Ext::fin(-cap);
      hi = Ext::fin(cap);
    } else if (lo_inf) {
      hi = Ext::fin(p.hi.value() - eps);
      lo = Ext::fin(p.hi.value() - eps - cap);
    } else if (hi_inf) {
      lo = Ext::fin(p.lo.value() + eps);
      hi = Ext::fin(p.lo.value() + eps + cap);
    } else {
      lo = Ext::fin(p.lo.value() + eps);
      hi = Ext::fin(p.hi.value() - eps);
    }
    if (lo < hi) parts.push_back(Ivl{lo, hi});
  }
  return IntervalRegion::from_parts(std::move(parts));
}

IntervalRegion iv_expand(const IntervalRegion& a, const Rat& eps) {
  if (!(eps > 0)) fail(Errc::precondition_violated, "expand needs eps > 0");
  std::vector<Ivl> parts;
  for (const Ivl& p : a.parts()) {
    Ext lo = p.lo.finite() ? Ext::fin(p.lo.value() - eps) : p.lo;
    Ext hi = p.hi.finite() ? Ext::fin(p.hi.value() + eps) : p.hi;
    parts.push_back(Ivl{lo, hi});
  }
  return IntervalRegion::from_parts(std::move(parts));
}

std::vector<Rat> iv_interior_points(const IntervalRegion& a) {
  std::vector<Rat> out;
  for (const Ivl& p : a.parts()) {
    if (p.lo.finite() && p.hi.finite())
      out.push_back((p.lo.value() + p.hi.value()) / 2);
    else if (p.lo.finite())
      out.push_back(p.lo.value() + 1);
    else if (p.hi.finite())
      out.push_back(p.hi.value() - 1);
    else
      out.push_back(Rat(0));
  }
  return out;
}

Rat iv_distance(const IntervalRegion& a, const Rat& x) {
  if (a.is_empty()) fail(Errc::empty_candidate, "distance to the empty region");
  if (a.contains(x)) return Rat(0);
  std::optional<Rat> best;
  for (const Ivl& p : a.parts()) {
    if (p.lo.finite() && x < p.lo.value()) {
      Rat d = p.lo.value() - x;
      if (!best || d < *best) best = d;
    }
    if (p.hi.finite() && p.hi.value() < x) {
      Rat d = x - p.hi.value();
      if (!best || d < *best) best = d;
    }
  }
  return *best;
}

IntervalRegion iv_interpolate(const IntervalRegion& a, const IntervalRegion& c) {
  if (!iv_way_below(a, c)) fail(Errc::precondition_violated, "interpolation needs a << c");
  std::vector<Ivl> parts;
  for (const Ivl& p : a.parts()) {
    const Ivl* host = nullptr;
    for (const Ivl& q : c.parts())
      if (part_inside_interior(p, q)) {
        host = &q;
        break;
      }
    Ext lo = Ext::ninf(), hi = Ext::pinf();
    if (p.lo.finite()) {
      Rat dl = host->lo.finite() ? (p.lo.value() - host->lo.value()) / 2 : Rat(1);
      lo = Ext::fin(p.lo.value() - dl);
    }
    if (p.hi.finite()) {
      Rat dr = host->hi.finite() ? (host->hi.value() - p.hi.value()) / 2 : Rat(1);
      hi = Ext::fin(p.hi.value() + dr);
    }
    parts.push_back(Ivl{lo, hi});
  }
  return IntervalRegion::from_parts(std::move(parts));
}

IntervalRegion iv_inner_witness(const IntervalRegion& w) {
  if (w.is_empty()) fail(Errc::empty_candidate, "no inner witness of the empty region");
  const Ivl& p = w.parts().front();
  if (p.lo.finite() && p.hi.finite()) {
    Rat l = p.lo.value(), r = p.hi.value();
    return IntervalRegion::interval(Ext::fin((3 * l + r) / 4), Ext::fin((l + 3 * r) / 4));
  }
  if (p.lo.finite())
    return IntervalRegion::interval(Ext::fin(p.lo.value() + 1), Ext::fin(p.lo.value() + 2));
  if (p.hi.finite())
    return IntervalRegion::interval(Ext::fin(p.hi.value() - 2), Ext::fin(p.hi.value() - 1));
  return IntervalRegion::interval(Ext::fin(Rat(0)), Ext::fin(Rat(1)));
}

}  // namespace rba
