#include "tcgen/rational.hpp"

#include <cctype>
#include <ostream>

namespace tcgen {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_digits(std::string_view s) {
  BigInt v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

}  // namespace

Q01 Q01::of(long long num, long long den) {
  if (den == 0) throw RangeError("Q01: zero denominator");
  return from_rational(BigRational(num, den));
}

Q01 Q01::from_rational(const BigRational& r) {
  if (r < 0 || r > 1) {
    throw RangeError("Q01: value " + rational_str(r) + " outside [0,1]");
  }
  return Q01(r);
}

Q01 Q01::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!all_digits(text)) throw ParseError("malformed rational: '" + std::string(text) + "'");
    BigInt p = parse_digits(text);
    if (p > 1) throw RangeError("rational '" + std::string(text) + "' outside [0,1]");
    return Q01(BigRational(p));
  }
  std::string_view ps = text.substr(0, slash);
  std::string_view qs = text.substr(slash + 1);
  if (!all_digits(ps) || !all_digits(qs)) {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  BigInt p = parse_digits(ps);
  BigInt q = parse_digits(qs);
  if (q == 0) throw ParseError("rational '" + std::string(text) + "' has zero denominator");
  if (p > q) throw RangeError("rational '" + std::string(text) + "' outside [0,1]");
  return Q01(BigRational(p, q));
}

const Q01& Q01::zero() {
  static const Q01 z{};
  return z;
}

const Q01& Q01::one() {
  static const Q01 o{BigRational(1)};
  return o;
}

Q01 Q01::add_clamped(const Q01& o) const {
  BigRational s = v_ + o.v_;
  return s > 1 ? one() : Q01(std::move(s));
}

Q01 Q01::sub_floored(const Q01& o) const {
  BigRational d = v_ - o.v_;
  return d < 0 ? zero() : Q01(std::move(d));
}

std::string Q01::str() const { return rational_str(v_); }

double Q01::approx() const { return v_.convert_to<double>(); }

BigRational parse_signed_rational(std::string_view text) {
  bool neg = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    neg = text.front() == '-';
    text.remove_prefix(1);
  }
  auto slash = text.find('/');
  std::string_view ps = slash == std::string_view::npos ? text : text.substr(0, slash);
  std::string_view qs = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!all_digits(ps) || (slash != std::string_view::npos && !all_digits(qs))) {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  BigInt p = parse_digits(ps);
  BigInt q = slash == std::string_view::npos ? BigInt(1) : parse_digits(qs);
  if (q == 0) throw ParseError("rational '" + std::string(text) + "' has zero denominator");
  BigRational r(p, q);
  return neg ? -r : r;
}

std::string rational_str(const BigRational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

Q01 clamp01(const BigRational& r) {
  if (r < 0) return Q01::zero();
  if (r > 1) return Q01::one();
  return Q01::from_rational(r);
}

std::ostream& operator<<(std::ostream& os, const Q01& q) { return os << q.str(); }

}  // namespace tcgen
