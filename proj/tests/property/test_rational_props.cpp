/* SPDX-License-Identifier: Apache-2.0 */

#include <doctest.h>

#include <random>

#include "certeuler/rational.hpp"

using namespace certeuler;

namespace {

// GMP's mpq_class is an independent implementation of the same field; it
// serves as the oracle for every exact operation below.
mpq_class as_mpq(const Rational& r) { return mpq_class(r.numerator(), r.denominator()); }

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1'000'000'000L, 1'000'000'000L);
  std::uniform_int_distribution<long> den(1, 1'000'000L);
  std::uniform_int_distribution<int> scale(0, 3);
  BigInt n(num(rng));
  BigInt d(den(rng));
  for (int i = scale(rng); i > 0; --i) {
    n *= num(rng);
    d *= den(rng);
  }
  return Rational(n, d);
}

}  // namespace

TEST_SUITE("rational_properties") {
  TEST_CASE("normalization over 10^4 random pairs") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10000; ++i) {
      const Rational a = random_rational(rng);
      Rational b = random_rational(rng);
      const mpq_class qa = as_mpq(a);
      const mpq_class qb = as_mpq(b);
      REQUIRE(is_normalized(a));
      const Rational sum = a + b;
      const Rational diff = a - b;
      const Rational prod = a * b;
      CHECK(is_normalized(sum));
      CHECK(is_normalized(diff));
      CHECK(is_normalized(prod));
      CHECK(as_mpq(sum) == qa + qb);
      CHECK(as_mpq(diff) == qa - qb);
      CHECK(as_mpq(prod) == qa * qb);
      if (!b.is_zero()) {
        const Rational quot = a / b;
        CHECK(is_normalized(quot));
        CHECK(as_mpq(quot) == qa / qb);
      }
      CHECK((a < b) == (qa < qb));
      CHECK((a == b) == (qa == qb));
    }
  }

  TEST_CASE("floor brackets its argument") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 10000; ++i) {
      const Rational a = random_rational(rng);
      const Rational f(floor(a));
      CHECK(f <= a);
      CHECK(a < f + 1);
      const Rational c(ceil(a));
      CHECK(a <= c);
      CHECK(c - 1 < a);
    }
  }

  TEST_CASE("le_abs_bound is the least admissible exponent") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 10000; ++i) {
      const Rational a = random_rational(rng);
      const std::uint32_t p = le_abs_bound(a).value();
      CHECK(abs(a) <= pow2(p));
      if (p > 1) CHECK(pow2(p - 1) < abs(a));
    }
  }

  TEST_CASE("parse inverts to_string") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 2000; ++i) {
      const Rational a = random_rational(rng);
      CHECK(Rational::parse(a.to_string()) == a);
    }
  }

  TEST_CASE("norm1 is a norm on random vectors") {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 1000; ++i) {
      RationalVector u(3);
      RationalVector v(3);
      for (auto& c : u) c = random_rational(rng);
      for (auto& c : v) c = random_rational(rng);
      CHECK(norm1(axpy(u, Rational(1), v)) <= norm1(u) + norm1(v));
      CHECK(dist1(u, v) == norm1(sub(u, v)));
      CHECK(norm1(axpy(RationalVector(3), Rational(-3), u)) == 3 * norm1(u));
    }
  }
}
