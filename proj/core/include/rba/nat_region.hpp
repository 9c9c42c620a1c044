#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rba {

/// Finite or cofinite subset of the naturals, the regular closed sets of the
/// discrete line that the workbench can represent exactly. `support` is the
/// set itself for finite regions and the complement for cofinite ones; it is
/// kept sorted and duplicate-free.
class NatRegion {
public:
  NatRegion() : cofinite_(false) {}
  static NatRegion finite(std::vector<std::uint32_t> support);
  static NatRegion cofinite(std::vector<std::uint32_t> gaps);
  static NatRegion empty() { return finite({}); }
  static NatRegion all() { return cofinite({}); }

  bool is_cofinite() const { return cofinite_; }
  const std::vector<std::uint32_t>& support() const { return support_; }

  bool is_empty() const { return !cofinite_ && support_.empty(); }
  bool is_all() const { return cofinite_ && support_.empty(); }
  bool contains(std::uint32_t n) const;
  /// Least member; nullopt for the empty region.
  std::optional<std::uint32_t> least() const;

  friend bool operator==(const NatRegion& a, const NatRegion& b) {
    return a.cofinite_ == b.cofinite_ && a.support_ == b.support_;
  }

  std::string str() const;
  /// Inverse of str: `{finite: [..]}` or `{cofinite: [..]}`, whitespace
  /// tolerant. ParseError otherwise.
  static NatRegion parse(const std::string& text);

private:
  bool cofinite_;
  std::vector<std::uint32_t> support_;
};

NatRegion nat_join(const NatRegion& a, const NatRegion& b);
NatRegion nat_meet(const NatRegion& a, const NatRegion& b);
NatRegion nat_complement(const NatRegion& a);
bool nat_leq(const NatRegion& a, const NatRegion& b);
/// Contact of the discrete line: the regions share a point.
bool nat_contact(const NatRegion& a, const NatRegion& b);
bool nat_bounded(const NatRegion& a);

}  // namespace rba
