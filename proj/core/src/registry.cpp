/* SPDX-License-Identifier: Apache-2.0 */

#include "certeuler/registry.hpp"

namespace certeuler {

namespace {

// Both right-hand sides are exact (alpha = 0) and 1-Lipschitz in the
// 1-norm, so omega(p) = p + 1 meets the continuity clause on any ball.
constexpr std::uint32_t kBuiltinOmegaShift = 1;
const Rational kBuiltinRadius{1024};

SystemInfo make_exp() {
  UcfVector rhs(
      {Rational(0), Rational(0)}, kBuiltinRadius, 1,
      [](std::span<const Rational> a, Index) { return RationalVector{a[1]}; },
      constant_convergence(0), shifted_continuity(kBuiltinOmegaShift));
  return SystemInfo{"exp", "x1' = x1",       std::move(rhs), {Rational(1)},
                    Rational(1), Rational(1), Rational(2),   Rational(1)};
}

SystemInfo make_circle() {
  UcfVector rhs(
      {Rational(0), Rational(0), Rational(0)}, kBuiltinRadius, 2,
      [](std::span<const Rational> a, Index) { return RationalVector{-a[2], a[1]}; },
      constant_convergence(0), shifted_continuity(kBuiltinOmegaShift));
  // x_b = 1/2 keeps |f|_1 = |x|_1 <= sqrt(2) + 1/2 < C = 2 around every point
  // of the unit circle, so restarts stay admissible all the way round.
  return SystemInfo{"circle",    "x1' = -x2; x2' = x1", std::move(rhs),
                    {Rational(1), Rational(0)},          Rational(1),
                    Rational(1, 2),                      Rational(2),
                    Rational(1)};
}

}  // namespace

const std::vector<SystemInfo>& builtin_systems() {
  static const std::vector<SystemInfo> systems{make_exp(), make_circle()};
  return systems;
}

const SystemInfo& find_system(std::string_view name) {
  for (const auto& s : builtin_systems()) {
    if (s.name == name) return s;
  }
  throw std::out_of_range("unknown system '" + std::string(name) + "'");
}

EulerProblem make_problem(const SystemInfo& system) {
  return EulerProblem{system.rhs, system.x0, system.t_a, system.x_b, system.bound_c,
                      system.lipschitz};
}

}  // namespace certeuler
