#include "atomreach/rational.hpp"

#include <algorithm>
#include <cctype>

#include "atomreach/error.hpp"

namespace atomreach {

BigUint::BigUint(std::uint64_t v) {
  while (v != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
    v >>= 32;
  }
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::from_decimal(std::string_view digits) {
  if (digits.empty()) fail(ErrorKind::ParseError, "empty integer literal");
  BigUint result;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(ErrorKind::ParseError, std::string("bad digit in integer literal: '") + c + "'");
    result.mul_small_add(10, static_cast<std::uint32_t>(c - '0'));
  }
  return result;
}

void BigUint::mul_small_add(std::uint32_t factor, std::uint32_t addend) {
  std::uint64_t carry = addend;
  for (auto& limb : limbs_) {
    std::uint64_t v = static_cast<std::uint64_t>(limb) * factor + carry;
    limb = static_cast<std::uint32_t>(v & 0xffffffffu);
    carry = v >> 32;
  }
  while (carry != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
    carry >>= 32;
  }
  trim();
}

std::uint32_t BigUint::div_small(std::uint32_t divisor) {
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
    rem = cur % divisor;
  }
  trim();
  return static_cast<std::uint32_t>(rem);
}

int BigUint::compare(const BigUint& other) const {
  if (limbs_.size() != other.limbs_.size())
    return limbs_.size() < other.limbs_.size() ? -1 : 1;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != other.limbs_[i]) return limbs_[i] < other.limbs_[i] ? -1 : 1;
  }
  return 0;
}

BigUint BigUint::add(const BigUint& other) const {
  BigUint result;
  const std::size_t n = std::max(limbs_.size(), other.limbs_.size());
  result.limbs_.reserve(n + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t v = carry;
    if (i < limbs_.size()) v += limbs_[i];
    if (i < other.limbs_.size()) v += other.limbs_[i];
    result.limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
    carry = v >> 32;
  }
  if (carry != 0) result.limbs_.push_back(static_cast<std::uint32_t>(carry));
  return result;
}

BigUint BigUint::sub(const BigUint& other) const {
  BigUint result;
  result.limbs_.reserve(limbs_.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t v = static_cast<std::int64_t>(limbs_[i]) - borrow -
                     (i < other.limbs_.size() ? other.limbs_[i] : 0);
    if (v < 0) {
      v += (std::int64_t{1} << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    result.limbs_.push_back(static_cast<std::uint32_t>(v));
  }
  result.trim();
  return result;
}

BigUint BigUint::mul(const BigUint& other) const {
  if (is_zero() || other.is_zero()) return BigUint();
  BigUint result;
  result.limbs_.assign(limbs_.size() + other.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < other.limbs_.size(); ++j) {
      std::uint64_t v = static_cast<std::uint64_t>(limbs_[i]) * other.limbs_[j] +
                        result.limbs_[i + j] + carry;
      result.limbs_[i + j] = static_cast<std::uint32_t>(v & 0xffffffffu);
      carry = v >> 32;
    }
    std::size_t k = i + other.limbs_.size();
    while (carry != 0) {
      std::uint64_t v = result.limbs_[k] + carry;
      result.limbs_[k] = static_cast<std::uint32_t>(v & 0xffffffffu);
      carry = v >> 32;
      ++k;
    }
  }
  result.trim();
  return result;
}

void BigUint::shr1() {
  std::uint32_t carry = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint32_t next = limbs_[i] & 1u;
    limbs_[i] = (limbs_[i] >> 1) | (carry << 31);
    carry = next;
  }
  trim();
}

void BigUint::shl1() {
  std::uint32_t carry = 0;
  for (auto& limb : limbs_) {
    std::uint32_t next = limb >> 31;
    limb = (limb << 1) | carry;
    carry = next;
  }
  if (carry != 0) limbs_.push_back(carry);
}

std::size_t BigUint::bit_length() const {
  if (limbs_.empty()) return 0;
  std::uint32_t top = limbs_.back();
  std::size_t bits = (limbs_.size() - 1) * 32;
  while (top != 0) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

bool BigUint::bit(std::size_t i) const {
  std::size_t limb = i / 32;
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> (i % 32)) & 1u;
}

// Shift-and-subtract long division; numbers here stay small, so simplicity
// beats Knuth's algorithm D.
BigUint BigUint::div_exact(const BigUint& divisor) const {
  if (divisor.is_zero()) fail(ErrorKind::BadArgument, "division by zero");
  BigUint quotient;
  BigUint remainder;
  for (std::size_t i = bit_length(); i-- > 0;) {
    remainder.shl1();
    if (bit(i)) {
      if (remainder.limbs_.empty())
        remainder.limbs_.push_back(1);
      else
        remainder.limbs_[0] |= 1u;
    }
    quotient.shl1();
    if (remainder.compare(divisor) >= 0) {
      remainder = remainder.sub(divisor);
      if (quotient.limbs_.empty())
        quotient.limbs_.push_back(1);
      else
        quotient.limbs_[0] |= 1u;
    }
  }
  quotient.trim();
  return quotient;
}

BigUint BigUint::gcd(BigUint a, BigUint b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int shift = 0;
  while (a.is_even() && b.is_even()) {
    a.shr1();
    b.shr1();
    ++shift;
  }
  while (a.is_even()) a.shr1();
  while (!b.is_zero()) {
    while (b.is_even()) b.shr1();
    if (a.compare(b) > 0) std::swap(a, b);
    b = b.sub(a);
  }
  for (int i = 0; i < shift; ++i) a.shl1();
  return a;
}

std::string BigUint::to_decimal() const {
  if (is_zero()) return "0";
  BigUint tmp = *this;
  std::string out;
  while (!tmp.is_zero()) {
    std::uint32_t rem = tmp.div_small(1000000000u);
    if (tmp.is_zero()) {
      out = std::to_string(rem) + out;
    } else {
      std::string chunk = std::to_string(rem);
      out = std::string(9 - chunk.size(), '0') + chunk + out;
    }
  }
  return out;
}

Rational::Rational(bool negative, BigUint num, BigUint den)
    : negative_(negative), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : negative_(false), num_(0), den_(1) {
  if (denominator == 0) fail(ErrorKind::BadArgument, "zero denominator");
  bool neg = (numerator < 0) != (denominator < 0);
  std::uint64_t n = numerator < 0 ? -static_cast<std::uint64_t>(numerator)
                                  : static_cast<std::uint64_t>(numerator);
  std::uint64_t d = denominator < 0 ? -static_cast<std::uint64_t>(denominator)
                                    : static_cast<std::uint64_t>(denominator);
  negative_ = neg;
  num_ = BigUint(n);
  den_ = BigUint(d);
  normalize();
}

void Rational::normalize() {
  if (den_.is_zero()) fail(ErrorKind::BadArgument, "zero denominator");
  if (num_.is_zero()) {
    negative_ = false;
    den_ = BigUint(1);
    return;
  }
  BigUint g = BigUint::gcd(num_, den_);
  num_ = num_.div_exact(g);
  den_ = den_.div_exact(g);
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) fail(ErrorKind::ParseError, "empty rational literal");
  bool neg = false;
  if (text.front() == '-') {
    neg = true;
    text.remove_prefix(1);
  }
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(neg, BigUint::from_decimal(text), BigUint(1));
  BigUint num = BigUint::from_decimal(text.substr(0, slash));
  BigUint den = BigUint::from_decimal(text.substr(slash + 1));
  return Rational(neg, std::move(num), std::move(den));
}

int Rational::compare(const Rational& other) const {
  if (negative_ != other.negative_) return negative_ ? -1 : 1;
  // Same sign: cross-multiply magnitudes.
  int mag = num_.mul(other.den_).compare(other.num_.mul(den_));
  return negative_ ? -mag : mag;
}

bool Rational::operator==(const Rational& other) const {
  return negative_ == other.negative_ && num_ == other.num_ && den_ == other.den_;
}

bool Rational::is_integer() const { return den_.compare(BigUint(1)) == 0; }

std::string Rational::str() const {
  std::string out = negative_ ? "-" : "";
  out += num_.to_decimal();
  if (!is_integer()) {
    out += "/";
    out += den_.to_decimal();
  }
  return out;
}

}  // namespace atomreach
