/* SPDX-License-Identifier: Apache-2.0 */

#include "certeuler/derive.hpp"

#include "certeuler/solver.hpp"

namespace certeuler {

namespace {

std::vector<Interval> box_intervals(const Rational& t_half, const RationalVector& x0,
                                    const Rational& x_half) {
  std::vector<Interval> box{{-t_half, t_half}};
  for (const auto& c : x0) box.push_back({c - x_half, c + x_half});
  return box;
}

Rational norm1_bound(const RhsExpr& rhs, std::span<const Interval> box) {
  Rational s;
  for (const auto& e : rhs) s += enclose(e, box).magnitude();
  return s;
}

}  // namespace

DerivedRhs derive_ucf(const RhsExpr& rhs, const DerivationBox& box) {
  const std::size_t n = rhs.size();
  if (n == 0) throw ConfigurationError("right-hand side has no components");
  if (box.x0.size() != n) {
    throw ConfigurationError("initial state has dimension " + std::to_string(box.x0.size()) +
                             ", expression has " + std::to_string(n) + " components");
  }
  if (box.t_a.sign() <= 0 || box.x_b.sign() <= 0) {
    throw ConfigurationError("degenerate derivation box: t_a and x_b must be positive");
  }
  const Rational radius = box.domain_radius.value_or(box.t_a + box.x_b);
  if (radius < box.t_a + box.x_b) {
    throw ConfigurationError("domain radius " + radius.to_string() +
                             " does not cover the admissible box");
  }

  const auto ball = box_intervals(radius, box.x0, radius);
  const auto admissible =
      box.domain_radius ? ball : box_intervals(box.t_a, box.x0, box.x_b);

  Rational bound_c = norm1_bound(rhs, admissible);
  if (bound_c.is_zero()) bound_c = 1;

  // Induced 1-norm: max over columns of the column's absolute sum.
  Rational lipschitz;
  for (std::size_t j = 1; j <= n; ++j) {
    Rational column;
    for (const auto& e : rhs) column += enclose(differentiate(e, j), ball).magnitude();
    lipschitz = max(lipschitz, column);
  }
  Rational time_lipschitz;
  for (const auto& e : rhs) time_lipschitz += enclose(differentiate(e, 0), ball).magnitude();
  lipschitz = max(lipschitz, kMinLipschitz);

  // |f(a) - f(b)|_1 <= max(L, L_t) |a - b|_1 on the (convex) ball.
  const std::uint32_t shift =
      le_abs_bound(max(max(lipschitz, time_lipschitz), Rational(1))).value() + 1;

  RationalVector center{Rational(0)};
  center.insert(center.end(), box.x0.begin(), box.x0.end());
  UcfVector ucf(
      std::move(center), radius, n,
      [rhs](std::span<const Rational> point, Index) {
        RationalVector out;
        out.reserve(rhs.size());
        for (const auto& e : rhs) out.push_back(evaluate(e, point));
        return out;
      },
      constant_convergence(0), shifted_continuity(shift));
  return DerivedRhs{std::move(ucf), std::move(bound_c), std::move(lipschitz),
                    std::move(time_lipschitz)};
}

}  // namespace certeuler
