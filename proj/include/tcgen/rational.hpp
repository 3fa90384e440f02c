#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "tcgen/errors.hpp"

namespace tcgen {

// Expression templates are switched off so that mixed arithmetic and
// ternaries yield plain values.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using BigRational =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

// Exact rational constrained to [0,1]. Every scalar in the artifact is a Q01;
// intermediate formula work that may leave the unit interval is done on the
// underlying BigRational and converted back at the boundary.
class Q01 {
 public:
  Q01() : v_(0) {}

  // Throws RangeError when num/den is outside [0,1] or den == 0.
  static Q01 of(long long num, long long den);
  static Q01 from_rational(const BigRational& r);

  // Accepts "p" or "p/q" with decimal digits only (no sign, no whitespace).
  static Q01 parse(std::string_view text);

  static const Q01& zero();
  static const Q01& one();

  const BigRational& value() const { return v_; }
  BigInt num() const { return numerator(v_); }
  BigInt den() const { return denominator(v_); }

  // Checked arithmetic: result must stay in [0,1].
  Q01 operator+(const Q01& o) const { return from_rational(v_ + o.v_); }
  Q01 operator-(const Q01& o) const { return from_rational(v_ - o.v_); }
  Q01 operator*(const Q01& o) const { return Q01(v_ * o.v_); }

  Q01 add_clamped(const Q01& o) const;
  Q01 sub_floored(const Q01& o) const;

  bool operator==(const Q01& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const Q01& o) const {
    if (v_ < o.v_) return std::strong_ordering::less;
    if (v_ > o.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "p/q", or "p" when the denominator is 1.
  std::string str() const;
  double approx() const;

 private:
  explicit Q01(BigRational v) : v_(std::move(v)) {}
  BigRational v_;
};

inline Q01 min(const Q01& a, const Q01& b) { return a < b ? a : b; }
inline Q01 max(const Q01& a, const Q01& b) { return a < b ? b : a; }

// Signed rational text ("p/q" or "p", optional leading '-'); used for
// generator slopes and intercepts which are not confined to [0,1].
BigRational parse_signed_rational(std::string_view text);
std::string rational_str(const BigRational& r);

// Clamp an arbitrary rational into the unit interval.
Q01 clamp01(const BigRational& r);

std::ostream& operator<<(std::ostream& os, const Q01& q);

}  // namespace tcgen
