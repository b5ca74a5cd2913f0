/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

// Random constructive reals paired with independently computed reference
// values. Reference radii propagate through the arithmetic combinations.

#include <random>
#include <string>

#include "fixtures.hpp"
#include "oracle.hpp"

namespace certeuler::fixtures {

struct GeneratedReal {
  Real x;
  oracle::Value ref;
  std::string label;
};

class RealGenerator {
 public:
  explicit RealGenerator(std::uint64_t seed) : rng_(seed) {}

  GeneratedReal next(int depth = 2) {
    const int kinds = depth > 0 ? 9 : 5;
    switch (static_cast<int>(rng_() % static_cast<unsigned>(kinds))) {
      case 0: {
        const Rational a = random_dyadic(rng_, Rational(-8), Rational(8), 10) / Rational(3);
        return {Real::from_rational(a), {a, Rational(0)}, "const " + a.to_string()};
      }
      case 1: return {e_series(), oracle::e(), "e"};
      case 2: return {sqrt2_newton(), oracle::sqrt2(), "sqrt2"};
      case 3: return {third_decimal(), {Rational(1, 3), Rational(0)}, "0.333..."};
      case 4: return {one_minus_pow2(), {Rational(1), Rational(0)}, "1-2^-n"};
      case 5: {
        auto a = next(depth - 1);
        auto b = next(depth - 1);
        return {a.x + b.x, {a.ref.value + b.ref.value, a.ref.radius + b.ref.radius},
                "(" + a.label + " + " + b.label + ")"};
      }
      case 6: {
        auto a = next(depth - 1);
        auto b = next(depth - 1);
        return {a.x - b.x, {a.ref.value - b.ref.value, a.ref.radius + b.ref.radius},
                "(" + a.label + " - " + b.label + ")"};
      }
      case 7: {
        auto a = next(depth - 1);
        auto b = next(depth - 1);
        const Rational r = abs(a.ref.value) * b.ref.radius + abs(b.ref.value) * a.ref.radius +
                           a.ref.radius * b.ref.radius;
        return {a.x * b.x, {a.ref.value * b.ref.value, r},
                "(" + a.label + " * " + b.label + ")"};
      }
      default: {
        auto a = next(depth - 1);
        return {compress(a.x), a.ref, "compress(" + a.label + ")"};
      }
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace certeuler::fixtures
