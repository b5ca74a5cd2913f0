/* SPDX-License-Identifier: Apache-2.0 */

#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "certeuler/derive.hpp"
#include "certeuler/expr.hpp"
#include "certeuler/registry.hpp"
#include "certeuler/serialize.hpp"

namespace certeuler::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

BigInt pow10(std::uint32_t digits) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, digits);
  return p;
}

std::string format_scaled(BigInt scaled, std::uint32_t digits) {
  const bool negative = sgn(scaled) < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  return (negative ? "-" : "") + s;
}

/// Registers the run options shared by the top level and `bench`.
void add_run_options(CLI::App& app, RunConfig& config, std::vector<std::string>& raw) {
  raw.assign(10, {});
  app.add_option("--system", config.system, "Built-in system (exp, circle)");
  app.add_option("--rhs", config.rhs, "Polynomial right-hand side, components separated by ';'");
  app.add_option("--x0", raw[0], "Initial state, comma separated rationals");
  app.add_option("--p", raw[1], "Precision exponent (defect <= 2^-p)");
  app.add_option("--t-end", raw[2], "End time (rational)");
  app.add_option("--t-end-scale", raw[3], "Multiplier applied to --t-end");
  app.add_option("--t-a", raw[4], "Time half-width of the admissible box");
  app.add_option("--x-b", raw[5], "State radius (1-norm) of the admissible box");
  app.add_option("--C", raw[6], "Bound of |f|_1 on the admissible box");
  app.add_option("--L", raw[7], "Lipschitz constant of f in x");
  app.add_option("--domain-radius", raw[8], "Radius of the function ball for --rhs");
  app.add_flag("--no-compress", [&config](std::int64_t) { config.compress = false; },
               "Disable dyadic compression of real approximations");
  app.add_option("--format", raw[9], "Output format: json, csv or decimal")
      ->check(CLI::IsMember({"json", "csv", "decimal"}));
  app.add_option("--samples", config.samples, "Certificate samples per segment");
  app.add_option("--out", config.out, "Write the full solution to this file");
}

void finish_config(RunConfig& config, const std::vector<std::string>& raw) {
  auto opt = [](const std::string& s) -> std::optional<Rational> {
    if (s.empty()) return std::nullopt;
    return Rational::parse(s);
  };
  if (!raw[0].empty()) config.x0 = parse_vector(raw[0]);
  if (!raw[1].empty()) {
    const long p = std::stol(raw[1]);
    if (p < 1) throw ConfigurationError("--p must be >= 1");
    config.p = Precision(static_cast<std::uint32_t>(p));
  }
  if (auto v = opt(raw[2])) config.t_end = *v;
  if (auto v = opt(raw[3])) config.t_end_scale = *v;
  config.t_a = opt(raw[4]);
  config.x_b = opt(raw[5]);
  config.bound_c = opt(raw[6]);
  config.lipschitz = opt(raw[7]);
  config.domain_radius = opt(raw[8]);
  if (raw[9] == "csv") config.format = OutputFormat::csv;
  if (raw[9] == "decimal") config.format = OutputFormat::decimal;
}

nlohmann::json vector_json(const RationalVector& v) { return to_json(std::span<const Rational>(v)); }

}  // namespace

std::uint32_t display_digits(Precision p) {
  // ceil(p * log10(2)) without floating point: smallest d with 10^d >= 2^p.
  std::uint32_t d = 0;
  BigInt ten(1);
  BigInt two;
  mpz_ui_pow_ui(two.get_mpz_t(), 2, p.value());
  while (ten < two) {
    ten *= 10;
    ++d;
  }
  return d + 1;
}

std::string to_decimal(const Rational& v, std::uint32_t digits) {
  return format_scaled(floor(v * Rational(pow10(digits)) + Rational(1, 2)), digits);
}

std::string to_decimal_up(const Rational& v, std::uint32_t digits) {
  return format_scaled(ceil(v * Rational(pow10(digits))), digits);
}

namespace {

/// The initial point must lie in the function's domain before any box checks.
void require_in_ball(const EulerProblem& problem) {
  RationalVector point{Rational(0)};
  point.insert(point.end(), problem.x0.begin(), problem.x0.end());
  if (point.size() == problem.rhs.dim_in() && !problem.rhs.contains(point)) {
    throw std::range_error("initial point (0, x0) lies outside the function ball");
  }
}

}  // namespace

PreparedProblem prepare(const RunConfig& config) {
  if (config.system.has_value() == config.rhs.has_value()) {
    throw ConfigurationError("exactly one of --system or --rhs is required");
  }
  if (config.t_end.sign() <= 0 || config.t_end_scale.sign() <= 0) {
    throw ConfigurationError("--t-end must be positive");
  }

  if (config.system) {
    const SystemInfo* info = nullptr;
    try {
      info = &find_system(*config.system);
    } catch (const std::out_of_range& e) {
      throw ConfigurationError(e.what());
    }
    EulerProblem problem = make_problem(*info);
    if (config.x0) problem.x0 = *config.x0;
    if (config.t_a) problem.t_a = *config.t_a;
    if (config.x_b) problem.x_b = *config.x_b;
    if (config.bound_c) problem.bound_c = *config.bound_c;
    Rational lipschitz = config.lipschitz.value_or(info->lipschitz);
    problem.lipschitz = lipschitz;
    require_in_ball(problem);
    return {info->name, std::move(problem), std::move(lipschitz)};
  }

  if (!config.x0) throw ConfigurationError("--rhs needs --x0");
  const RhsExpr rhs = parse_rhs(*config.rhs, config.x0->size());
  DerivationBox box{config.t_a.value_or(Rational(1)), *config.x0,
                    config.x_b.value_or(Rational(1)), config.domain_radius};
  DerivedRhs derived = derive_ucf(rhs, box);
  Rational lipschitz = config.lipschitz.value_or(derived.lipschitz);
  EulerProblem problem{std::move(derived.ucf), *config.x0, box.t_a, box.x_b,
                       config.bound_c.value_or(derived.bound_c), lipschitz};
  return {to_string(rhs), std::move(problem), std::move(lipschitz)};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const PreparedProblem prepared = prepare(config);
    const Rational t_end = config.t_end * config.t_end_scale;
    const EulerProblem& problem = prepared.problem;
    SolveOptions options;
    options.compress = config.compress;

    const auto start = Clock::now();
    const EulerSolution sol = solve_chained(problem, config.p, t_end, options);
    const double solve_ms = elapsed_ms(start);

    const auto cert_start = Clock::now();
    const DefectReport report = defect_certificate(sol, problem, config.samples, config.compress);
    const double cert_ms = elapsed_ms(cert_start);

    const RationalVector value = eval_solution(sol, t_end);
    const Rational bound = global_error_bound(config.p, prepared.lipschitz, t_end);

    if (config.out) {
      std::ofstream file(*config.out);
      if (!file) throw ConfigurationError("cannot open output file " + *config.out);
      if (config.format == OutputFormat::json) {
        file << to_json(sol).dump() << '\n';
      } else {
        write_csv(file, sol);
      }
    }

    switch (config.format) {
      case OutputFormat::json: {
        nlohmann::json j{{"system", prepared.label},
                         {"p", config.p.value()},
                         {"t_end", t_end.to_string()},
                         {"value", vector_json(value)},
                         {"error_bound", bound.to_string()},
                         {"horizon", sol.horizon.to_string()},
                         {"steps", sol.slopes.size()},
                         {"compress", config.compress},
                         {"certificate", to_json(report)},
                         {"certified", report.ok()},
                         {"timing_ms", {{"solve", solve_ms}, {"certificate", cert_ms}}}};
        if (config.out) j["solution_file"] = *config.out;
        out << j.dump(2) << '\n';
        break;
      }
      case OutputFormat::csv: {
        out << 't';
        for (std::size_t i = 1; i <= value.size(); ++i) out << ",x" << i;
        out << ",error_bound,certified\n" << t_end;
        for (const auto& c : value) out << ',' << c;
        out << ',' << bound << ',' << (report.ok() ? 1 : 0) << '\n';
        break;
      }
      case OutputFormat::decimal: {
        const std::uint32_t digits = display_digits(config.p);
        // Rounding the value to `digits` decimals adds up to half a unit.
        const Rational shown = bound + Rational(BigInt(1), 2 * pow10(digits));
        out << "t = " << to_decimal(t_end, digits) << '\n';
        for (std::size_t i = 0; i < value.size(); ++i) {
          out << "x" << (i + 1) << " = " << to_decimal(value[i], digits) << " ± "
              << to_decimal_up(shown, digits) << '\n';
        }
        out << "certified: " << (report.ok() ? "yes" : "no") << '\n';
        break;
      }
    }
    err << "solve " << solve_ms << " ms, certificate " << cert_ms << " ms, " << sol.slopes.size()
        << " steps\n";

    if (!report.ok()) {
      err << "defect certificate violated at " << report.violations.size() << " sample(s)\n";
      return exit_code::certificate;
    }
    return exit_code::ok;
  } catch (const std::range_error& e) {
    err << "range error: " << e.what() << '\n';
    return exit_code::range;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_code::configuration;
  } catch (const ConfigurationError& e) {
    err << "configuration error: " << e.what() << '\n';
    return exit_code::configuration;
  } catch (const std::invalid_argument& e) {
    err << "configuration error: " << e.what() << '\n';
    return exit_code::configuration;
  } catch (const std::domain_error& e) {
    err << "configuration error: " << e.what() << '\n';
    return exit_code::configuration;
  }
}

std::vector<BenchRow> bench(const RunConfig& config, std::size_t repeat, std::size_t steps) {
  if (repeat == 0) throw std::invalid_argument("repeat must be >= 1");
  const PreparedProblem prepared = prepare(config);
  std::vector<BenchRow> rows;
  for (bool compress : {true, false}) {
    for (std::size_t r = 0; r < repeat; ++r) {
      const auto start = Clock::now();
      const EulerSolution sol =
          solve(prepared.problem, config.p, SolveOptions{.compress = compress, .max_steps = steps});
      rows.push_back({compress, sol.slopes.size(), elapsed_ms(start), max_slope_denominator_bits(sol)});
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << "compress,steps,wall_ms,max_denominator_bits\n";
  for (const auto& r : rows) {
    os << (r.compress ? 1 : 0) << ',' << r.steps << ',' << r.wall_ms << ','
       << r.max_denominator_bits << '\n';
  }
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified Cauchy-Euler solutions of x' = f(t, x) in exact rational arithmetic"};
  app.name("certeuler");

  RunConfig run_config;
  std::vector<std::string> run_raw;
  add_run_options(app, run_config, run_raw);

  auto* bench_cmd = app.add_subcommand("bench", "Time the first steps with compression on and off");
  RunConfig bench_config;
  std::vector<std::string> bench_raw;
  add_run_options(*bench_cmd, bench_config, bench_raw);
  std::size_t repeat = 1;
  std::size_t steps = 256;
  bench_cmd->add_option("--repeat", repeat, "Timed repetitions per setting");
  bench_cmd->add_option("--steps", steps, "Euler steps per run");

  auto* systems_cmd = app.add_subcommand("systems", "Print the built-in systems as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_code::configuration;
  }

  try {
    if (systems_cmd->parsed()) {
      auto arr = nlohmann::json::array();
      for (const auto& s : builtin_systems()) arr.push_back(to_json(s));
      out << arr.dump(2) << '\n';
      return exit_code::ok;
    }
    if (bench_cmd->parsed()) {
      finish_config(bench_config, bench_raw);
      write_bench_csv(out, bench(bench_config, repeat, steps));
      return exit_code::ok;
    }
    finish_config(run_config, run_raw);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_code::configuration;
  } catch (const std::range_error& e) {
    err << "range error: " << e.what() << '\n';
    return exit_code::range;
  } catch (const std::exception& e) {
    err << "configuration error: " << e.what() << '\n';
    return exit_code::configuration;
  }
  return run(run_config, out, err);
}

}  // namespace certeuler::cli
