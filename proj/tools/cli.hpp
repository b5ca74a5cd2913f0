/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "certeuler/rational.hpp"
#include "certeuler/solver.hpp"

namespace certeuler::cli {

enum class OutputFormat { json, csv, decimal };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int configuration = 2;
inline constexpr int range = 3;
inline constexpr int certificate = 4;
}  // namespace exit_code

struct RunConfig {
  std::optional<std::string> system;
  std::optional<std::string> rhs;
  std::optional<RationalVector> x0;
  Precision p{10};
  Rational t_end{1};
  Rational t_end_scale{1};
  std::optional<Rational> t_a;
  std::optional<Rational> x_b;
  std::optional<Rational> bound_c;
  std::optional<Rational> lipschitz;
  std::optional<Rational> domain_radius;
  bool compress = true;
  OutputFormat format = OutputFormat::json;
  std::size_t samples = 2;
  std::optional<std::string> out;
};

/// Problem assembled from a RunConfig: a built-in system with overrides, or a
/// parsed polynomial right-hand side with derived C, L and moduli.
struct PreparedProblem {
  std::string label;
  EulerProblem problem;
  Rational lipschitz;
};

/// Throws ConfigurationError, ParseError, std::invalid_argument, or std::range_error
/// when the initial point lies outside the domain of a built-in system.
[[nodiscard]] PreparedProblem prepare(const RunConfig& config);

/// Solves, certifies and reports. Returns one of the exit codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

struct BenchRow {
  bool compress;
  std::size_t steps;
  double wall_ms;
  std::size_t max_denominator_bits;
};

/// `repeat` timed runs of the first `steps` Euler steps, with compression on and off.
[[nodiscard]] std::vector<BenchRow> bench(const RunConfig& config, std::size_t repeat,
                                          std::size_t steps);
void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows);

/// v rounded to `digits` decimals.
[[nodiscard]] std::string to_decimal(const Rational& v, std::uint32_t digits);
/// v rounded up to `digits` decimals.
[[nodiscard]] std::string to_decimal_up(const Rational& v, std::uint32_t digits);
/// ceil(p log10 2) + 1.
[[nodiscard]] std::uint32_t display_digits(Precision p);

/// Full command line front end.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace certeuler::cli
