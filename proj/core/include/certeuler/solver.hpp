/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

/**
 * @file solver.hpp
 * @brief Cauchy-Euler approximate solutions with a certified defect.
 *
 * For x' = f(t, x), x(0) = x0, and a precision p, solve() builds a
 * piecewise-linear phi on [0, T] whose defect |phi'(t) - f(t, phi(t))|_1
 * is at most 2^-p wherever phi' exists. With a Lipschitz constant L the
 * distance to the exact solution is then bounded by global_error_bound().
 *
 * Construction:
 *   q      = omega(p + 1)
 *   T      = min(t_a, x_b / C)
 *   mesh  <= 2^-(q + le_abs_bound(C))
 *   s_i    = f(c_i, b_i) approximated to 2^-(p+1), with |s_i|_1 <= C
 *   b_i+1  = b_i + (c_i+1 - c_i) s_i
 *   phi(t) = b_i + (t - c_i) s_i            on [c_i, c_i+1]
 */

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "certeuler/partition.hpp"
#include "certeuler/rational.hpp"
#include "certeuler/ucf.hpp"

namespace certeuler {

/// Problem data inconsistent with the theorem's hypotheses.
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EulerProblem {
  UcfVector rhs;
  RationalVector x0;
  Rational t_a;
  Rational x_b;
  Rational bound_c;
  std::optional<Rational> lipschitz;
};

struct SolveOptions {
  bool compress = true;
  /// Points sampled when checking |f|_1 <= C on the admissible box.
  std::size_t bound_samples = 32;
  /// Stop after this many steps (benchmarks); the horizon shrinks accordingly.
  std::optional<std::size_t> max_steps;
};

struct EulerSolution {
  Partition partition;
  std::vector<RationalVector> nodes;
  std::vector<RationalVector> slopes;
  Precision p;
  Rational horizon;
  /// q = omega(p + 1); phi drifts at most 2^-q within one segment.
  Precision continuity_exponent;
};

/// Checks the hypotheses for the box |t - t0| <= t_a, |x - x0|_1 <= x_b.
/// Throws ConfigurationError naming t0 on failure.
void validate_problem(const EulerProblem& problem, const Rational& t0,
                      std::span<const Rational> x0, std::size_t bound_samples = 32);

/// T = min(t_a, x_b / C).
[[nodiscard]] Rational horizon(const EulerProblem& problem);

/// Reference recursion: a for n = 0, otherwise
/// E(n) + d * f(n d, E(n)) approximated to 2^-p, with E(n) evaluated twice.
[[nodiscard]] RationalVector euler_map(const UcfVector& f, const RationalVector& a, std::size_t n,
                                       const Rational& d, Precision p, bool compress = true);

using EulerState = std::pair<RationalVector, RationalVector>;

/// Tail-recursive form: n steps of (l, r) -> (r, r + d * f(k d, r)).
/// The right component equals euler_map(f, r0, n, d, p).
[[nodiscard]] EulerState euler_map_fast(const UcfVector& f, std::size_t n, EulerState state,
                                        const Rational& d, Precision p, bool compress = true);

[[nodiscard]] EulerSolution solve(const EulerProblem& problem, Precision p,
                                  const SolveOptions& options = {});

/// Restarts solve() from the last node until the horizon reaches t_end.
[[nodiscard]] EulerSolution solve_chained(const EulerProblem& problem, Precision p,
                                          const Rational& t_end, const SolveOptions& options = {});

/// phi(t) = b_{i-1} + (t - c_{i-1}) s_{i-1} on [c_{i-1}, c_i]. Throws std::range_error
/// outside [0, horizon].
[[nodiscard]] RationalVector eval_solution(const EulerSolution& sol, const Rational& t);

struct DefectViolation {
  std::size_t segment;
  Rational t;
  Rational defect;
};

struct DefectReport {
  std::size_t checked = 0;
  Rational max_defect;
  Rational tolerance;
  std::vector<DefectViolation> violations;
  [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
};

/// For `samples` interior points of every segment, checks
/// |s_i - f(t, phi(t))|_1 <= 2^-p + 2^-(p+4) with f approximated at p + 4.
[[nodiscard]] DefectReport defect_certificate(const EulerSolution& sol,
                                              const EulerProblem& problem, std::size_t samples,
                                              bool compress = true);

/// Rational upper bound of (2^-p / L) (e^(L T) - 1). Requires L, T > 0.
[[nodiscard]] Rational global_error_bound(Precision p, const Rational& lipschitz,
                                          const Rational& horizon);

/// Certified rational upper bound of e^x for x >= 0.
[[nodiscard]] Rational exp_upper(const Rational& x);

/// Largest denominator bit length over all slopes.
[[nodiscard]] std::size_t max_slope_denominator_bits(const EulerSolution& sol);

}  // namespace certeuler
