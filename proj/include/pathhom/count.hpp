#pragma once

#include <compare>
#include <concepts>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pathhom {

/// Signed arbitrary-precision integer, used for alternating sums before
/// they are known to be nonnegative.
using BigInt = boost::multiprecision::cpp_int;

/// Exact nonnegative integer. Every homomorphism, path and partition count
/// in the library is a Count.
class Count {
public:
  Count() = default;

  template <std::unsigned_integral T>
  Count(T v) : value_(v) {}

  /// Accepts a signed value; throws std::domain_error if it is negative.
  static Count from_signed(BigInt v);

  template <std::signed_integral T>
  static Count from_signed(T v) { return from_signed(BigInt(v)); }

  /// 2^e as an exact integer.
  static Count pow2(unsigned e);

  const BigInt& value() const noexcept { return value_; }

  std::string to_string() const { return value_.str(); }

  bool is_zero() const noexcept { return value_.is_zero(); }
  bool is_even() const { return !bit_test(value_, 0); }

  Count& operator+=(const Count& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Count& operator*=(const Count& rhs) {
    value_ *= rhs.value_;
    return *this;
  }

  friend Count operator+(Count lhs, const Count& rhs) { return lhs += rhs; }
  friend Count operator*(Count lhs, const Count& rhs) { return lhs *= rhs; }

  friend bool operator==(const Count& a, const Count& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Count& a, const Count& b) {
    int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  template <std::integral T>
  friend bool operator==(const Count& a, T b) { return a.value_ == b; }

  friend std::ostream& operator<<(std::ostream& os, const Count& c) { return os << c.value_; }

private:
  explicit Count(BigInt v) : value_(std::move(v)) {}

  BigInt value_{0};
};

} // namespace pathhom
