#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace atomreach {

// Unsigned arbitrary-precision integer, little-endian base-2^32 limbs with no
// trailing zero limbs.  Only the operations the rational type needs.
class BigUint {
 public:
  BigUint() = default;
  explicit BigUint(std::uint64_t v);
  static BigUint from_decimal(std::string_view digits);

  bool is_zero() const { return limbs_.empty(); }
  bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

  int compare(const BigUint& other) const;
  bool operator==(const BigUint& other) const { return compare(other) == 0; }

  BigUint add(const BigUint& other) const;
  BigUint sub(const BigUint& other) const;  // requires *this >= other
  BigUint mul(const BigUint& other) const;
  BigUint div_exact(const BigUint& divisor) const;  // requires divisor | *this
  void shr1();
  void shl1();

  static BigUint gcd(BigUint a, BigUint b);

  std::string to_decimal() const;

 private:
  void trim();
  void mul_small_add(std::uint32_t factor, std::uint32_t addend);
  std::uint32_t div_small(std::uint32_t divisor);  // in place, returns remainder
  std::size_t bit_length() const;
  bool bit(std::size_t i) const;

  std::vector<std::uint32_t> limbs_;
};

// Exact rational, canonically reduced: positive denominator, gcd(|num|,den)=1,
// and zero is never negative.
class Rational {
 public:
  Rational() : negative_(false), num_(0), den_(1) {}
  Rational(std::int64_t numerator, std::int64_t denominator);

  // Accepts "p", "-p", "p/q", "-p/q" with decimal p, q (q > 0).
  static Rational parse(std::string_view text);

  int compare(const Rational& other) const;
  bool operator==(const Rational& other) const;
  bool operator<(const Rational& other) const { return compare(other) < 0; }
  bool operator<=(const Rational& other) const { return compare(other) <= 0; }

  bool is_integer() const;
  std::string str() const;

 private:
  Rational(bool negative, BigUint num, BigUint den);
  void normalize();

  bool negative_;
  BigUint num_;
  BigUint den_;
};

}  // namespace atomreach
