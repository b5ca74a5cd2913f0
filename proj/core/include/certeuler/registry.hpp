/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "certeuler/solver.hpp"
#include "certeuler/ucf.hpp"

namespace certeuler {

/// A named system with the default problem data used by the CLI.
struct SystemInfo {
  std::string name;
  std::string formula;
  UcfVector rhs;
  RationalVector x0;
  Rational t_a;
  Rational x_b;
  Rational bound_c;
  Rational lipschitz;
};

/// "exp" (x' = x) and "circle" (x' = -y, y' = x).
[[nodiscard]] const std::vector<SystemInfo>& builtin_systems();

/// Throws std::out_of_range for unknown names.
[[nodiscard]] const SystemInfo& find_system(std::string_view name);

[[nodiscard]] EulerProblem make_problem(const SystemInfo& system);

}  // namespace certeuler
