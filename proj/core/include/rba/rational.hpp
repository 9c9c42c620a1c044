#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace rba {

/// Exact rational scalar. All region arithmetic is exact; no floating point.
using Rat = mpq_class;

Rat rat(long num, long den = 1);

/// Canonical text form: "p" when the denominator is 1, else "p/q" with q > 0.
std::string rat_str(const Rat& q);

/// Accepts "p" or "p/q" with optional sign; rejects zero denominators.
std::optional<Rat> rat_parse(const std::string& text);

/// Endpoint of a closed interval on the extended rational line.
class Ext {
public:
  enum class Kind { neg_inf, finite, pos_inf };

  static Ext ninf() { return Ext(Kind::neg_inf, 0); }
  static Ext pinf() { return Ext(Kind::pos_inf, 0); }
  static Ext fin(Rat v) { return Ext(Kind::finite, std::move(v)); }

  Kind kind() const { return kind_; }
  bool finite() const { return kind_ == Kind::finite; }
  const Rat& value() const;

  friend bool operator==(const Ext& a, const Ext& b);
  friend bool operator<(const Ext& a, const Ext& b);
  friend bool operator<=(const Ext& a, const Ext& b) { return a == b || a < b; }

  std::string str() const;

private:
  Ext(Kind k, Rat v) : kind_(k), value_(std::move(v)) {}

  Kind kind_;
  Rat value_;
};

}  // namespace rba
