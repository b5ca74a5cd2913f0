/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

/**
 * @file ucf.hpp
 * @brief Uniformly continuous functions given by an approximating map and moduli.
 *
 * A scalar function on [lo, hi] is h(a, n) together with a modulus of
 * convergence alpha (h(a, .) is Cauchy with modulus alpha) and a modulus of
 * continuity omega:
 *
 *     |a - b| <= 2^(-omega(p) + 1)  ==>  |h(a, n) - h(b, n)| <= 2^-p   for n >= alpha(p).
 *
 * Vector-valued functions live on a rational 1-norm ball B(c, R). Inputs are
 * ordered (t, x1, ..., xn), outputs are n-dimensional.
 *
 * None of these conditions can be decided; validate() searches for
 * counterexamples by sampling and an empty report is not a proof.
 */

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "certeuler/rational.hpp"
#include "certeuler/real.hpp"

namespace certeuler {

using ConvergenceModulus = std::function<Index(Precision)>;
using ContinuityModulus = std::function<Precision(Precision)>;

/// A modulus together with a human-readable description such as "p -> p+1".
struct ConvergenceSpec {
  ConvergenceModulus fn;
  std::string description;
};

struct ContinuitySpec {
  ContinuityModulus fn;
  std::string description;
};

[[nodiscard]] ConvergenceSpec constant_convergence(Index n);
[[nodiscard]] ContinuitySpec shifted_continuity(std::uint32_t shift);

class UcfScalar {
 public:
  using Approx = std::function<Rational(const Rational&, Index)>;

  UcfScalar(Rational lo, Rational hi, Approx approx, ConvergenceSpec alpha,
            ContinuitySpec omega);

  [[nodiscard]] const Rational& lo() const noexcept { return lo_; }
  [[nodiscard]] const Rational& hi() const noexcept { return hi_; }
  [[nodiscard]] Rational eval(const Rational& a, Index n) const { return approx_(a, n); }
  [[nodiscard]] Index alpha(Precision p) const { return alpha_.fn(p); }
  [[nodiscard]] Precision omega(Precision p) const { return omega_.fn(p); }
  [[nodiscard]] const ConvergenceSpec& alpha_spec() const noexcept { return alpha_; }
  [[nodiscard]] const ContinuitySpec& omega_spec() const noexcept { return omega_; }

 private:
  Rational lo_;
  Rational hi_;
  Approx approx_;
  ConvergenceSpec alpha_;
  ContinuitySpec omega_;
};

class UcfVector {
 public:
  using Approx = std::function<RationalVector(std::span<const Rational>, Index)>;

  /// center has dim_out + 1 entries (time first); radius > 0.
  UcfVector(RationalVector center, Rational radius, std::size_t dim_out, Approx approx,
            ConvergenceSpec alpha, ContinuitySpec omega);

  [[nodiscard]] const RationalVector& center() const noexcept { return center_; }
  [[nodiscard]] const Rational& radius() const noexcept { return radius_; }
  [[nodiscard]] std::size_t dim_in() const noexcept { return center_.size(); }
  [[nodiscard]] std::size_t dim_out() const noexcept { return dim_out_; }
  [[nodiscard]] bool contains(std::span<const Rational> point) const;

  [[nodiscard]] RationalVector eval(std::span<const Rational> point, Index n) const {
    return approx_(point, n);
  }
  [[nodiscard]] Index alpha(Precision p) const { return alpha_.fn(p); }
  [[nodiscard]] Precision omega(Precision p) const { return omega_.fn(p); }
  [[nodiscard]] const ConvergenceSpec& alpha_spec() const noexcept { return alpha_; }
  [[nodiscard]] const ContinuitySpec& omega_spec() const noexcept { return omega_; }

 private:
  RationalVector center_;
  Rational radius_;
  std::size_t dim_out_;
  Approx approx_;
  ConvergenceSpec alpha_;
  ContinuitySpec omega_;
};

/// Approximants of x are clamped into [lo, hi]; std::range_error when x is
/// outside the domain by more than 2^-16.
[[nodiscard]] Real apply(const UcfScalar& f, const Real& x);

/// Application modulus p -> max(alpha(p+2), M(max(omega(p+1) - 1, 1))).
[[nodiscard]] Index application_modulus(const UcfScalar& f, const Real& x, Precision p);

/// Rational vector within 2^-p (1-norm) of f(t, x). With compress set, every
/// component real is replaced by its dyadic compression before approximating.
/// std::range_error when (t, x) is outside the ball.
[[nodiscard]] RationalVector apply(const UcfVector& f, const Rational& t,
                                   std::span<const Rational> x, Precision p,
                                   bool compress = true);

/// Same as apply() but over a full input point (t first).
[[nodiscard]] RationalVector apply_point(const UcfVector& f, std::span<const Rational> point,
                                         Precision p, bool compress = true);

/// f(point) as a vector of constructive reals; component i has sequence
/// n -> h(point, n)_i and modulus alpha.
[[nodiscard]] RealVector apply_real(const UcfVector& f, std::span<const Rational> point);

struct UcfViolation {
  enum class Kind { cauchy, continuity, monotonicity, domain };
  Kind kind;
  Precision p;
  std::string detail;
};

struct UcfReport {
  std::vector<UcfViolation> violations;
  [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
};

[[nodiscard]] const char* to_string(UcfViolation::Kind kind);

/// Samples domain points (endpoints/vertices, center, and `samples` pseudo-random
/// points) and checks the Cauchy clause, the continuity clause and modulus
/// monotonicity for every p <= p_max.
[[nodiscard]] UcfReport validate(const UcfScalar& f, std::size_t samples, Precision p_max,
                                 std::uint64_t seed = 1);
[[nodiscard]] UcfReport validate(const UcfVector& f, std::size_t samples, Precision p_max,
                                 std::uint64_t seed = 1);

/// phi_2 is the time derivative of phi_1 with modulus of differentiability delta:
/// t1 < t2 <= t1 + 2^-delta(p)  ==>
///     |phi_1(t2) - phi_1(t1) - phi_2(t1, x)(t2 - t1)| <= 2^-p (t2 - t1).
/// Both functions take (t, x) inputs; phi_1 ignores x.
struct DerivativeWitness {
  UcfVector base;
  UcfVector derivative;
  ContinuitySpec delta;
};

[[nodiscard]] UcfReport validate(const DerivativeWitness& w, const Rational& t_lo,
                                 const Rational& t_hi, std::size_t samples, Precision p_max,
                                 std::uint64_t seed = 1);

}  // namespace certeuler
