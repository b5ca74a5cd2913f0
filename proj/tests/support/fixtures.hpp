/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

// Reals and uniformly continuous functions shared by the test binaries.

#include <cstdint>
#include <random>

#include "certeuler/real.hpp"
#include "certeuler/registry.hpp"
#include "certeuler/solver.hpp"
#include "certeuler/ucf.hpp"

namespace certeuler::fixtures {

inline Rational inv_pow2(std::uint32_t k) { return pow2(-static_cast<std::int64_t>(k)); }

inline bool power_of_two_denominator(const Rational& a) {
  return mpz_popcount(a.denominator().get_mpz_t()) == 1;
}

/// a_n = sum_{k<=n} 1/k!. The tail after n is at most 2/(n+1)!, so
/// M(p) = least n with (n+1)! >= 2^(p+1).
inline Real e_series() {
  return Real(
      [](Index n) {
        Rational sum(1);
        Rational term(1);
        for (Index k = 1; k <= n; ++k) {
          term /= Rational(static_cast<long>(k));
          sum += term;
        }
        return sum;
      },
      [](Precision p) {
        BigInt fact(1);
        BigInt target;
        mpz_ui_pow_ui(target.get_mpz_t(), 2, p.value() + 1);
        Index n = 0;
        while (fact < target) {
          ++n;
          fact *= static_cast<unsigned long>(n + 1);
        }
        return n;
      });
}

/// Newton iterates x_k for sqrt 2 from 3/2 obey 0 <= x_k - sqrt 2 <= 2^-(2^(k+1)).
/// Index n holds the first iterate within 2^-(n+1), so M(p) = p and the size of
/// a_n grows linearly in n even when a combination reads far past M.
inline Real sqrt2_newton() {
  return Real(
      [](Index n) {
        Rational x(3, 2);
        for (Index k = 0; (Index{2} << k) < n + 1; ++k) x = x / Rational(2) + Rational(1) / x;
        return x;
      },
      [](Precision p) { return Index{p.value()}; });
}

/// a_n = floor(10^n / 3) / 10^n with M(p) = p.
inline Real third_decimal() {
  return Real(
      [](Index n) {
        BigInt ten;
        mpz_ui_pow_ui(ten.get_mpz_t(), 10, n);
        return Rational(BigInt((ten - 1) / 3), ten);
      },
      [](Precision p) { return Index{p.value()}; });
}

/// a_n = 1 - 2^-n with M(p) = p.
inline Real one_minus_pow2() {
  return Real([](Index n) { return Rational(1) - pow2(-static_cast<std::int64_t>(n)); },
              [](Precision p) { return Index{p.value()}; });
}

/// x -> x^2 on [0, 2] with alpha = 0 and the given continuity shift.
inline UcfScalar square_on_0_2(std::uint32_t omega_shift = 3) {
  return UcfScalar(Rational(0), Rational(2), [](const Rational& a, Index) { return a * a; },
                   constant_convergence(0), shifted_continuity(omega_shift));
}

inline UcfScalar identity_on(const Rational& lo, const Rational& hi) {
  return UcfScalar(lo, hi, [](const Rational& a, Index) { return a; }, constant_convergence(0),
                   shifted_continuity(0));
}

/// h == 0 on the ball of radius R around 0 in R^(n+1).
inline UcfVector zero_rhs(std::size_t n, const Rational& radius = Rational(1024)) {
  return UcfVector(RationalVector(n + 1), radius, n,
                   [n](std::span<const Rational>, Index) { return RationalVector(n); },
                   constant_convergence(0), shifted_continuity(1));
}

inline EulerProblem zero_problem(RationalVector x0) {
  const std::size_t n = x0.size();
  return EulerProblem{zero_rhs(n), std::move(x0), Rational(1), Rational(1), Rational(1),
                      Rational(1)};
}

inline EulerProblem exp_problem() { return make_problem(find_system("exp")); }
inline EulerProblem circle_problem() { return make_problem(find_system("circle")); }

/// Uniform dyadic rational in [lo, hi] with denominator 2^bits.
inline Rational random_dyadic(std::mt19937_64& rng, const Rational& lo, const Rational& hi,
                              std::uint32_t bits = 16) {
  std::uniform_int_distribution<long> d(0, 1L << bits);
  return lo + (hi - lo) * Rational::dyadic(BigInt(d(rng)), bits);
}

}  // namespace certeuler::fixtures
