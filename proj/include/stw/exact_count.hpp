#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace stw {

// Signed 128-bit integer whose arithmetic throws Error(Overflow) instead of
// wrapping. All index values, binomials and move deltas use this type.
class ExactCount {
 public:
  using value_type = __int128;

  constexpr ExactCount() = default;
  constexpr ExactCount(long long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  static constexpr ExactCount from_raw(value_type v) {
    ExactCount c;
    c.value_ = v;
    return c;
  }

  constexpr value_type raw() const { return value_; }

  ExactCount& operator+=(ExactCount rhs);
  ExactCount& operator-=(ExactCount rhs);
  ExactCount& operator*=(ExactCount rhs);

  friend ExactCount operator+(ExactCount a, ExactCount b) { return a += b; }
  friend ExactCount operator-(ExactCount a, ExactCount b) { return a -= b; }
  friend ExactCount operator*(ExactCount a, ExactCount b) { return a *= b; }
  ExactCount operator-() const;

  friend constexpr bool operator==(ExactCount a, ExactCount b) = default;
  friend constexpr std::strong_ordering operator<=>(ExactCount a, ExactCount b) {
    return a.value_ <=> b.value_;
  }

  int sign() const { return value_ > 0 ? 1 : (value_ < 0 ? -1 : 0); }

  // Decimal representation, e.g. "-42".
  std::string to_string() const;
  // Parses an optionally signed decimal string; throws ParseError or Overflow.
  static ExactCount parse(std::string_view text);

 private:
  value_type value_ = 0;
};

std::ostream& operator<<(std::ostream& os, ExactCount c);

// Binomial coefficient C(n, k), zero when k < 0 or k > n. Values for n <= 128
// come from a memoized Pascal table; larger n use a checked product.
ExactCount binomial(long long n, long long k);

}  // namespace stw
