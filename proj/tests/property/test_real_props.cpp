/* SPDX-License-Identifier: Apache-2.0 */

#include <doctest.h>

#include "../support/real_generator.hpp"

using namespace certeuler;
using fixtures::inv_pow2;

TEST_SUITE("real_properties") {
  TEST_CASE("generated reals satisfy the real-number contract") {
    fixtures::RealGenerator gen(31);
    for (int i = 0; i < 200; ++i) {
      const auto g = gen.next();
      INFO(g.label);
      CHECK_FALSE(check_regularity(g.x, Precision(10), 6).has_value());
      CHECK(modulus_monotone(g.x, Precision(24)));
      for (std::uint32_t p = 1; p <= 14; ++p) {
        CHECK(oracle::within(approx(g.x, Precision(p)), g.ref, inv_pow2(p)));
      }
    }
  }

  TEST_CASE("compression keeps the value and yields dyadic approximants") {
    fixtures::RealGenerator gen(32);
    for (int i = 0; i < 200; ++i) {
      const auto g = gen.next();
      INFO(g.label);
      const Real c = compress(g.x);
      for (Index n = 0; n <= 16; ++n) {
        const Rational b = c.at(n);
        CHECK(fixtures::power_of_two_denominator(b));
        CHECK(denominator_bits(b) <= n + 1);
        // b_n = floor(a 2^n) / 2^n: 0 <= a - b_n < 2^-n, with a the modulus read at n.
        const Rational a = approx(g.x, Precision(static_cast<std::uint32_t>(std::max<Index>(n, 1))));
        CHECK(b <= a);
        CHECK(a - b < pow2(-static_cast<std::int64_t>(n)));
      }
      for (std::uint32_t p = 1; p <= 12; ++p) CHECK(eq_up_to(c, g.x, Precision(p)));
      CHECK_FALSE(check_regularity(c, Precision(10), 6).has_value());
    }
  }

  TEST_CASE("vector approximation splits the tolerance") {
    fixtures::RealGenerator gen(33);
    std::mt19937_64 rng(34);
    for (int i = 0; i < 100; ++i) {
      const std::size_t dim = 1 + rng() % 5;
      std::vector<Real> comps;
      std::vector<oracle::Value> refs;
      for (std::size_t k = 0; k < dim; ++k) {
        auto g = gen.next(1);
        comps.push_back(g.x);
        refs.push_back(g.ref);
      }
      const Precision p(static_cast<std::uint32_t>(1 + rng() % 12));
      const RationalVector v = vec_approx(RealVector(comps), p);
      Rational total;
      for (std::size_t k = 0; k < dim; ++k) total += oracle::distance_upper(v[k], refs[k]);
      CHECK(total <= inv_pow2(p.value()));
      const std::uint64_t split = std::uint64_t{1} << (component_precision(dim, p).value() - p.value());
      CHECK(split >= dim);
    }
  }
}
