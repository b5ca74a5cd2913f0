/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational arithmetic on arbitrary-precision integers.
 *
 * Every Rational is kept in lowest terms with a positive denominator, so
 * structural equality coincides with numeric equality and bit growth stays
 * as small as the values allow. Zero is uniquely 0/1.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace certeuler {

using BigInt = mpz_class;

/// Sequence index of a Cauchy sequence or approximation stage.
using Index = std::uint64_t;

/// Positive precision exponent p, standing for the tolerance 2^-p.
class Precision {
 public:
  constexpr explicit Precision(std::uint32_t value) : value_(value) {
    if (value == 0) {
      throw std::domain_error("precision exponent must be >= 1");
    }
  }

  [[nodiscard]] constexpr std::uint32_t value() const noexcept { return value_; }

  friend constexpr Precision operator+(Precision p, std::uint32_t k) {
    return Precision(p.value_ + k);
  }
  friend constexpr auto operator<=>(Precision, Precision) = default;

 private:
  std::uint32_t value_;
};

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n);                  // NOLINT(google-explicit-constructor)
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT
  /// Throws std::domain_error when den is zero.
  Rational(BigInt num, BigInt den);

  /// n / 2^k.
  static Rational dyadic(BigInt n, std::uint32_t k);
  /// Parses "n" or "n/d" (optional leading sign on n).
  static Rational parse(std::string_view text);

  [[nodiscard]] const BigInt& numerator() const noexcept { return num_; }
  [[nodiscard]] const BigInt& denominator() const noexcept { return den_; }

  [[nodiscard]] int sign() const noexcept { return sgn(num_); }
  [[nodiscard]] bool is_zero() const noexcept { return sgn(num_) == 0; }
  [[nodiscard]] bool is_integer() const noexcept { return den_ == 1; }

  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] double to_double() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(Rational a) {
    a.num_ = -a.num_;
    return a;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  struct NoNormalize {};
  Rational(BigInt num, BigInt den, NoNormalize)
      : num_(std::move(num)), den_(std::move(den)) {}

  void normalize();

  BigInt num_;
  BigInt den_;
};

[[nodiscard]] Rational abs(const Rational& a);
[[nodiscard]] const Rational& min(const Rational& a, const Rational& b);
[[nodiscard]] const Rational& max(const Rational& a, const Rational& b);

/// Greatest integer <= a (rounds toward negative infinity).
[[nodiscard]] BigInt floor(const Rational& a);
/// Least integer >= a.
[[nodiscard]] BigInt ceil(const Rational& a);

/// 2^k for any signed k.
[[nodiscard]] Rational pow2(std::int64_t k);

/// Smallest p >= 1 with |a| <= 2^p.
[[nodiscard]] Precision le_abs_bound(const Rational& a);

/// Sum of absolute values.
[[nodiscard]] Rational norm1(std::span<const Rational> v);

/// Number of bits of the denominator.
[[nodiscard]] std::size_t denominator_bits(const Rational& a);

/// True when gcd(|num|, den) == 1 and den > 0.
[[nodiscard]] bool is_normalized(const Rational& a);

using RationalVector = std::vector<Rational>;

/// Componentwise a + s * b.
[[nodiscard]] RationalVector axpy(std::span<const Rational> a, const Rational& s,
                                  std::span<const Rational> b);
[[nodiscard]] RationalVector sub(std::span<const Rational> a, std::span<const Rational> b);
[[nodiscard]] Rational dist1(std::span<const Rational> a, std::span<const Rational> b);

/// Comma separated list of Rational::parse values.
[[nodiscard]] RationalVector parse_vector(std::string_view text);

}  // namespace certeuler
