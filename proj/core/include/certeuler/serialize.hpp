/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

/**
 * @file serialize.hpp
 * @brief JSON and CSV encodings. Rationals are always exact "num/den" strings.
 */

#include <iosfwd>

#include <nlohmann/json.hpp>

#include "certeuler/registry.hpp"
#include "certeuler/solver.hpp"

namespace certeuler {

[[nodiscard]] nlohmann::json to_json(std::span<const Rational> v);

/// {horizon, p, partition, nodes, slopes, defect_bound: "2^-p"}.
[[nodiscard]] nlohmann::json to_json(const EulerSolution& sol);

/// Inverse of to_json(const EulerSolution&).
[[nodiscard]] EulerSolution solution_from_json(const nlohmann::json& j);

[[nodiscard]] nlohmann::json to_json(const DefectReport& report);

/// Domain ball and symbolic moduli.
[[nodiscard]] nlohmann::json ucf_metadata(const UcfVector& f);
[[nodiscard]] nlohmann::json to_json(const SystemInfo& system);

/// Header "t,x1,...,xn" then one row per knot.
void write_csv(std::ostream& os, const EulerSolution& sol);

}  // namespace certeuler
