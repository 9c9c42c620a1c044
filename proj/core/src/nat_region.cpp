#include "rba/nat_region.hpp"

#include <algorithm>
#include <cctype>

#include "rba/errors.hpp"

namespace rba {

namespace {

std::vector<std::uint32_t> normalized(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<std::uint32_t> set_union(const std::vector<std::uint32_t>& a,
                                     const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::uint32_t> set_intersection(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::uint32_t> set_difference(const std::vector<std::uint32_t>& a,
                                          const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

NatRegion NatRegion::finite(std::vector<std::uint32_t> support) {
  NatRegion r;
  r.cofinite_ = false;
  r.support_ = normalized(std::move(support));
  return r;
}

NatRegion NatRegion::cofinite(std::vector<std::uint32_t> gaps) {
  NatRegion r;
  r.cofinite_ = true;
  r.support_ = normalized(std::move(gaps));
  return r;
}

bool NatRegion::contains(std::uint32_t n) const {
  bool in_support = std::binary_search(support_.begin(), support_.end(), n);
  return cofinite_ ? !in_support : in_support;
}

std::optional<std::uint32_t> NatRegion::least() const {
  if (!cofinite_) {
    if (support_.empty()) return std::nullopt;
    return support_.front();
  }
  std::uint32_t n = 0;
  for (std::uint32_t gap : support_) {
    if (gap != n) break;
    ++n;
  }
  return n;
}

std::string NatRegion::str() const {
  std::string out = cofinite_ ? "{cofinite: [" : "{finite: [";
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(support_[i]);
  }
  out += "]}";
  return out;
}

NatRegion NatRegion::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  bool cofin = t.rfind("{cofinite:[", 0) == 0;
  bool fin = t.rfind("{finite:[", 0) == 0;
  if ((!cofin && !fin) || t.size() < 2 || t.substr(t.size() - 2) != "]}")
    fail(Errc::parse_error, "expected {finite: [..]} or {cofinite: [..]}, got '" + text + "'");
  std::size_t open = t.find('[');
  std::string body = t.substr(open + 1, t.size() - open - 3);
  std::vector<std::uint32_t> vals;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string item = comma == std::string::npos ? body.substr(pos) : body.substr(pos, comma - pos);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      fail(Errc::parse_error, "expected a natural number, got '" + item + "'");
    vals.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return cofin ? cofinite(std::move(vals)) : finite(std::move(vals));
}

NatRegion nat_join(const NatRegion& a, const NatRegion& b) {
  if (!a.is_cofinite() && !b.is_cofinite())
    return NatRegion::finite(set_union(a.support(), b.support()));
  if (a.is_cofinite() && b.is_cofinite())
    return NatRegion::cofinite(set_intersection(a.support(), b.support()));
  const NatRegion& co = a.is_cofinite() ? a : b;
  const NatRegion& fi = a.is_cofinite() ? b : a;
  return NatRegion::cofinite(set_difference(co.support(), fi.support()));
}

NatRegion nat_meet(const NatRegion& a, const NatRegion& b) {
  if (!a.is_cofinite() && !b.is_cofinite())
    return NatRegion::finite(set_intersection(a.support(), b.support()));
  if (a.is_cofinite() && b.is_cofinite())
    return NatRegion::cofinite(set_union(a.support(), b.support()));
  const NatRegion& co = a.is_cofinite() ? a : b;
  const NatRegion& fi = a.is_cofinite() ? b : a;
  return NatRegion::finite(set_difference(fi.support(), co.support()));
}

NatRegion nat_complement(const NatRegion& a) {
  return a.is_cofinite() ? NatRegion::finite(a.support()) : NatRegion::cofinite(a.support());
}

bool nat_leq(const NatRegion& a, const NatRegion& b) { return nat_meet(a, b) == a; }

bool nat_contact(const NatRegion& a, const NatRegion& b) { return !nat_meet(a, b).is_empty(); }

bool nat_bounded(const NatRegion& a) { return !a.is_cofinite(); }

}  // namespace rba
