/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <optional>

#include "certeuler/expr.hpp"
#include "certeuler/ucf.hpp"

namespace certeuler {

/// Admissible box |t| <= t_a, |x - x0|_1 <= x_b. The function ball is
/// B((0, x0), domain_radius), defaulting to t_a + x_b (the smallest ball
/// containing the box).
struct DerivationBox {
  Rational t_a;
  RationalVector x0;
  Rational x_b;
  std::optional<Rational> domain_radius;
};

struct DerivedRhs {
  UcfVector ucf;
  /// Upper bound of |f|_1 over the admissible box (over the whole ball when
  /// domain_radius is given), never below 1 when the enclosure is 0.
  Rational bound_c;
  /// Bound of the induced 1-norm of the state Jacobian over the ball, clamped
  /// to at least kMinLipschitz.
  Rational lipschitz;
  /// Bound of |df/dt|_1 over the ball.
  Rational time_lipschitz;
};

inline const Rational kMinLipschitz{1, 1024};

/// Exact evaluation (alpha = 0) with interval-derived C, L and
/// omega(p) = p + le_abs_bound(max(L, L_t, 1)) + 1. Throws ConfigurationError
/// for degenerate boxes.
[[nodiscard]] DerivedRhs derive_ucf(const RhsExpr& rhs, const DerivationBox& box);

}  // namespace certeuler
