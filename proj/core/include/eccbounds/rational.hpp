#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace eccb {

using Int128 = __int128;
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

std::string to_string(Int128 v);

Int128 gcd(Int128 a, Int128 b) noexcept;

/// Exact rational over 128-bit integers. Arithmetic is overflow-checked and
/// throws std::overflow_error rather than wrapping; operands are reduced
/// only when an intermediate would otherwise overflow, so integer-valued
/// arithmetic stays on the cheap path. Denominator is always positive.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  constexpr Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT: implicit by design of the numeric tower
  Rational(Int128 num, Int128 den);

  static Rational from_int128(Int128 value) noexcept {
    Rational r;
    r.num_ = value;
    return r;
  }

  Int128 numerator() const noexcept { return num_; }
  Int128 denominator() const noexcept { return den_; }

  Rational reduced() const noexcept;
  bool is_integer() const noexcept { return num_ % den_ == 0; }
  int sign() const noexcept { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  /// "p/q" in lowest terms, or "p" when integral.
  std::string to_string() const;
  double to_double() const noexcept;
  BigRational to_big() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  Int128 num_ = 0;
  Int128 den_ = 1;
};

BigInt to_big(Int128 v);

/// Integer power by squaring for any type in the numeric tower.
template <class Num>
Num ipow(Num base, unsigned exponent) {
  Num result(1);
  while (exponent != 0) {
    if (exponent & 1u) {
      result *= base;
    }
    exponent >>= 1;
    if (exponent != 0) {
      base *= base;
    }
  }
  return result;
}

}  // namespace eccb
