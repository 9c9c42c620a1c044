#include "rba/rational.hpp"

#include <cstdlib>

#include "rba/errors.hpp"

namespace rba {

Rat rat(long num, long den) {
  if (den == 0) fail(Errc::malformed_interval, "zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rat> rat_parse(const std::string& text) {
  if (text.empty()) return std::nullopt;
  // mpq_class accepts "p/q" directly but tolerates whitespace and bases we
  // do not want; validate the shape first.
  std::size_t slash = text.find('/');
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!is_int(text)) return std::nullopt;
    return Rat(mpz_class(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) return std::nullopt;
  mpz_class d(den);
  if (d == 0) return std::nullopt;
  Rat q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

const Rat& Ext::value() const {
  if (kind_ != Kind::finite) fail(Errc::precondition_violated, "infinite endpoint has no value");
  return value_;
}

bool operator==(const Ext& a, const Ext& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != Ext::Kind::finite) return true;
  return a.value_ == b.value_;
}

bool operator<(const Ext& a, const Ext& b) {
  if (a.kind_ == Ext::Kind::neg_inf) return b.kind_ != Ext::Kind::neg_inf;
  if (a.kind_ == Ext::Kind::pos_inf) return false;
  if (b.kind_ == Ext::Kind::neg_inf) return false;
  if (b.kind_ == Ext::Kind::pos_inf) return true;
  return a.value_ < b.value_;
}

std::string Ext::str() const {
  switch (kind_) {
    case Kind::neg_inf: return "-inf";
    case Kind::pos_inf: return "inf";
    case Kind::finite: return rat_str(value_);
  }
  return "?";
}

}  // namespace rba
