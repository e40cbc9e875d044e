#include "stw/exact_count.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

#include "stw/error.hpp"

namespace stw {

namespace {

using i128 = __int128;

constexpr int kPascalRows = 128;

struct PascalTable {
  // rows[n][k] for 0 <= k <= n <= kPascalRows; C(128, 64) < 2^127.
  std::array<std::array<i128, kPascalRows + 1>, kPascalRows + 1> rows{};

  PascalTable() {
    for (int n = 0; n <= kPascalRows; ++n) {
      rows[n][0] = 1;
      for (int k = 1; k <= n; ++k) {
        i128 sum;
        if (__builtin_add_overflow(rows[n - 1][k - 1], rows[n - 1][k], &sum)) {
          throw Error(ErrorKind::Overflow, "Pascal table row " + std::to_string(n));
        }
        rows[n][k] = sum;
      }
    }
  }
};

const PascalTable& pascal() {
  static const PascalTable table;
  return table;
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

ExactCount& ExactCount::operator+=(ExactCount rhs) {
  if (__builtin_add_overflow(value_, rhs.value_, &value_)) {
    throw Error(ErrorKind::Overflow, "addition");
  }
  return *this;
}

ExactCount& ExactCount::operator-=(ExactCount rhs) {
  if (__builtin_sub_overflow(value_, rhs.value_, &value_)) {
    throw Error(ErrorKind::Overflow, "subtraction");
  }
  return *this;
}

ExactCount& ExactCount::operator*=(ExactCount rhs) {
  if (__builtin_mul_overflow(value_, rhs.value_, &value_)) {
    throw Error(ErrorKind::Overflow, "multiplication");
  }
  return *this;
}

ExactCount ExactCount::operator-() const {
  return ExactCount{} - *this;
}

std::string ExactCount::to_string() const {
  if (value_ == 0) return "0";
  const bool negative = value_ < 0;
  // Work in the negative range so the minimum value has no special case.
  i128 v = negative ? value_ : -value_;
  std::string digits;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

ExactCount ExactCount::parse(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty number");
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw Error(ErrorKind::ParseError, "sign without digits");
  i128 v = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') {
      throw Error(ErrorKind::ParseError, "invalid digit in '" + std::string(text) + "'");
    }
    if (__builtin_mul_overflow(v, 10, &v) || __builtin_sub_overflow(v, c - '0', &v)) {
      throw Error(ErrorKind::Overflow, "number '" + std::string(text) + "'");
    }
  }
  if (!negative) {
    if (v == std::numeric_limits<i128>::min()) {
      throw Error(ErrorKind::Overflow, "number '" + std::string(text) + "'");
    }
    v = -v;
  }
  return from_raw(v);
}

std::ostream& operator<<(std::ostream& os, ExactCount c) {
  return os << c.to_string();
}

ExactCount binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n <= kPascalRows) return ExactCount::from_raw(pascal().rows[n][k]);
  k = std::min(k, n - k);
  i128 result = 1;
  for (long long i = 0; i < k; ++i) {
    // result * (n - i) is divisible by (i + 1); cancel first to delay overflow.
    const i128 divisor = i + 1;
    const i128 g = gcd128(result, divisor);
    const i128 reduced = result / g;
    const i128 factor = static_cast<i128>(n - i) / (divisor / g);
    if (__builtin_mul_overflow(reduced, factor, &result)) {
      throw Error(ErrorKind::Overflow,
                  "C(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
  }
  return ExactCount::from_raw(result);
}

}  // namespace stw
