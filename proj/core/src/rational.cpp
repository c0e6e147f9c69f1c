#include "eccbounds/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace eccb {

namespace {

Int128 checked_mul(Int128 a, Int128 b) {
  Int128 out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("128-bit rational overflow in multiplication");
  }
  return out;
}

Int128 checked_add(Int128 a, Int128 b) {
  Int128 out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("128-bit rational overflow in addition");
  }
  return out;
}

bool mul_overflows(Int128 a, Int128 b) {
  Int128 out;
  return __builtin_mul_overflow(a, b, &out);
}

Int128 abs128(Int128 v) { return v < 0 ? -v : v; }

constexpr Int128 kInt128Min = static_cast<Int128>(static_cast<unsigned __int128>(1) << 127);

}  // namespace

std::string to_string(Int128 v) {
  if (v == 0) {
    return "0";
  }
  const bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1
                                 : static_cast<unsigned __int128>(v);
  std::string out;
  while (u != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (negative) {
    out.push_back('-');
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Int128 gcd(Int128 a, Int128 b) noexcept {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const Int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

BigInt to_big(Int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1
                                 : static_cast<unsigned __int128>(v);
  BigInt out = static_cast<std::uint64_t>(u >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(u);
  return negative ? BigInt(-out) : out;
}

Rational::Rational(Int128 num, Int128 den) : num_(num), den_(den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Rational Rational::reduced() const noexcept {
  const Int128 g = gcd(num_, den_);
  Rational r;
  r.num_ = g > 1 ? num_ / g : num_;
  r.den_ = g > 1 ? den_ / g : den_;
  if (r.num_ == 0) {
    r.den_ = 1;
  }
  return r;
}

std::string Rational::to_string() const {
  const Rational r = reduced();
  if (r.den_ == 1) {
    return eccb::to_string(r.num_);
  }
  return eccb::to_string(r.num_) + "/" + eccb::to_string(r.den_);
}

double Rational::to_double() const noexcept {
  const Rational r = reduced();
  return static_cast<double>(r.num_) / static_cast<double>(r.den_);
}

BigRational Rational::to_big() const {
  return BigRational(eccb::to_big(num_), eccb::to_big(den_));
}

Rational Rational::operator-() const {
  if (num_ == kInt128Min) {
    throw std::overflow_error("128-bit rational overflow in negation");
  }
  Rational r = *this;
  r.num_ = -num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == 1 && b.den_ == 1) {
    return Rational::from_int128(checked_add(a.num_, b.num_));
  }
  if (a.den_ == b.den_) {
    return Rational(checked_add(a.num_, b.num_), a.den_);
  }
  const Rational x = a.reduced();
  const Rational y = b.reduced();
  const Int128 g = gcd(x.den_, y.den_);
  const Int128 xs = y.den_ / g;
  const Int128 ys = x.den_ / g;
  return Rational(checked_add(checked_mul(x.num_, xs), checked_mul(y.num_, ys)),
                  checked_mul(x.den_, xs));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!mul_overflows(a.num_, b.num_) && !mul_overflows(a.den_, b.den_)) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  // Cross-cancel before giving up.
  const Rational x = a.reduced();
  const Rational y = b.reduced();
  const Int128 g1 = std::max<Int128>(gcd(x.num_, y.den_), 1);
  const Int128 g2 = std::max<Int128>(gcd(y.num_, x.den_), 1);
  return Rational(checked_mul(x.num_ / g1, y.num_ / g2), checked_mul(x.den_ / g2, y.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) {
    throw std::domain_error("rational division by zero");
  }
  Rational inv;
  inv.num_ = b.den_;
  inv.den_ = b.num_;
  if (inv.den_ < 0) {
    inv.num_ = -inv.num_;
    inv.den_ = -inv.den_;
  }
  return a * inv;
}

bool operator==(const Rational& a, const Rational& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) {
    return a.num_ <=> b.num_;
  }
  if (!mul_overflows(a.num_, b.den_) && !mul_overflows(b.num_, a.den_)) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }
  const Rational x = a.reduced();
  const Rational y = b.reduced();
  return checked_mul(x.num_, y.den_) <=> checked_mul(y.num_, x.den_);
}

}  // namespace eccb
