/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

/**
 * @file real.hpp
 * @brief Constructive reals: regular Cauchy sequences of rationals with moduli.
 *
 * A Real is a pair (a, M) where a maps indices to rationals and M maps
 * precision exponents to indices such that |a_n - a_m| <= 2^-p whenever
 * n, m >= M(p), with M weakly increasing. Nothing here decides equality;
 * comparisons are always "up to 2^-p".
 */

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

#include "certeuler/rational.hpp"

namespace certeuler {

class Real {
 public:
  using Sequence = std::function<Rational(Index)>;
  using Modulus = std::function<Index(Precision)>;

  /// The sequence must be a pure function of the index and the modulus
  /// weakly increasing; neither is checked here (see check_regularity).
  Real(Sequence seq, Modulus modulus);

  /// Constant sequence with modulus 0.
  static Real from_rational(Rational a);

  /// a_n, memoized. Safe to call concurrently.
  [[nodiscard]] Rational at(Index n) const;
  [[nodiscard]] Index modulus(Precision p) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/// a_{M(p)}; within 2^-p of the real.
[[nodiscard]] Rational approx(const Real& x, Precision p);

[[nodiscard]] Real operator+(const Real& x, const Real& y);
[[nodiscard]] Real operator-(const Real& x);
[[nodiscard]] Real operator-(const Real& x, const Real& y);
[[nodiscard]] Real operator*(const Real& x, const Real& y);
[[nodiscard]] Real abs(const Real& x);

/// -2^-p <= a_{M(p+1)}.
[[nodiscard]] bool is_nonneg_up_to(const Real& x, Precision p);
/// 2^-p <= a_{M(p+1)}.
[[nodiscard]] bool is_pos_up_to(const Real& x, Precision p);
/// |a_{M(p+1)} - b_{N(p+1)}| <= 2^-p.
[[nodiscard]] bool eq_up_to(const Real& x, const Real& y, Precision p);

/// Dyadic re-encoding b_n = floor(a_{M(n)} 2^n) / 2^n with modulus p + 2.
[[nodiscard]] Real compress(const Real& x);

class RealVector {
 public:
  explicit RealVector(std::vector<Real> components);

  [[nodiscard]] std::size_t dim() const noexcept { return components_.size(); }
  [[nodiscard]] const Real& operator[](std::size_t i) const { return components_[i]; }
  [[nodiscard]] const std::vector<Real>& components() const noexcept { return components_; }

 private:
  std::vector<Real> components_;
};

/// Per-component precision p + ceil(log2 dim), so that dim * 2^-p_i <= 2^-p.
[[nodiscard]] Precision component_precision(std::size_t dim, Precision p);

/// Rational vector within 2^-p of x in the 1-norm.
[[nodiscard]] RationalVector vec_approx(const RealVector& x, Precision p);

struct RegularityViolation {
  Precision p;
  Index n;
  Index m;
};

/// Samples the regularity and monotonicity conditions for p <= p_max and
/// indices in [M(p), M(p_max) + extra]. Returns the first violation found.
[[nodiscard]] std::optional<RegularityViolation> check_regularity(const Real& x,
                                                                  Precision p_max,
                                                                  Index extra);
[[nodiscard]] bool modulus_monotone(const Real& x, Precision p_max);

/// "n,a_n" rows for n = 0..upto.
void dump_csv(std::ostream& os, const Real& x, Index upto);

}  // namespace certeuler
