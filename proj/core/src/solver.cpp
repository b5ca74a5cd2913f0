/* SPDX-License-Identifier: Apache-2.0 */

#include "certeuler/solver.hpp"

#include <algorithm>
#include <random>

namespace certeuler {

namespace {

Rational tolerance(Precision p) { return pow2(-static_cast<std::int64_t>(p.value())); }

std::string vec_str(std::span<const Rational> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

/// Slope within 2^-(p+1) of f(t, x) and inside the 1-norm ball of radius C.
RationalVector slope(const EulerProblem& problem, const Rational& t, std::span<const Rational> x,
                     Precision p, bool compress) {
  RationalVector s = apply(problem.rhs, t, x, p + 1, compress);
  if (norm1(s) <= problem.bound_c) return s;
  // Radial shrink onto |s|_1 = C moves s by at most its own approximation
  // error, so approximate twice as tightly first.
  s = apply(problem.rhs, t, x, p + 2, compress);
  const Rational n = norm1(s);
  if (problem.bound_c < n) {
    const Rational scale = problem.bound_c / n;
    for (auto& c : s) c *= scale;
  }
  return s;
}

/// Smallest d >= 0 with value <= 2^d.
std::uint32_t ceil_log2(const Rational& value) {
  if (value <= Rational(1)) return 0;
  return le_abs_bound(value).value();
}

EulerSolution solve_from(const EulerProblem& problem, Precision p, const Rational& t0,
                         const RationalVector& start, const SolveOptions& options) {
  validate_problem(problem, t0, start, options.bound_samples);

  const Precision q = problem.rhs.omega(p + 1);
  const std::uint32_t mesh_exp = q.value() + le_abs_bound(problem.bound_c).value();
  const Rational length = horizon(problem);

  // Coarsest unif_p partition of [0, T] whose mesh is <= 2^-mesh_exp.
  const std::uint32_t depth_needed = ceil_log2(length * pow2(mesh_exp));
  const std::uint32_t lb = le_abs_bound(length).value();
  const Precision pp(depth_needed > lb ? depth_needed - lb : 1);
  const std::uint32_t depth = unif_p_depth(length, pp);
  if (depth > 30) {
    throw ConfigurationError("partition depth " + std::to_string(depth) +
                             " exceeds the supported maximum of 30");
  }
  const Partition local = unif_p(length, pp);
  const Rational step = length * pow2(-static_cast<std::int64_t>(depth));

  std::size_t steps = local.size() - 1;
  if (options.max_steps) steps = std::min(steps, *options.max_steps);

  std::vector<Rational> points;
  std::vector<RationalVector> nodes;
  std::vector<RationalVector> slopes;
  points.reserve(steps + 1);
  nodes.reserve(steps + 1);
  slopes.reserve(steps);

  points.push_back(t0);
  nodes.push_back(start);
  for (std::size_t i = 0; i < steps; ++i) {
    RationalVector s = slope(problem, points.back(), nodes.back(), p, options.compress);
    nodes.push_back(axpy(nodes.back(), step, s));
    slopes.push_back(std::move(s));
    points.push_back(t0 + local[i + 1]);
  }
  Rational end = points.back();
  return EulerSolution{Partition(std::move(points)), std::move(nodes), std::move(slopes), p,
                       std::move(end), q};
}

}  // namespace

void validate_problem(const EulerProblem& problem, const Rational& t0,
                      std::span<const Rational> x0, std::size_t bound_samples) {
  const std::string where = " (segment starting at t=" + t0.to_string() + ")";
  if (problem.t_a.sign() <= 0) throw ConfigurationError("t_a must be positive" + where);
  if (problem.x_b.sign() <= 0) throw ConfigurationError("x_b must be positive" + where);
  if (problem.bound_c.sign() <= 0) throw ConfigurationError("C must be positive" + where);
  if (problem.lipschitz && problem.lipschitz->sign() <= 0) {
    throw ConfigurationError("L must be positive" + where);
  }
  const UcfVector& f = problem.rhs;
  if (x0.size() != f.dim_out()) {
    throw ConfigurationError("initial state has dimension " + std::to_string(x0.size()) +
                             ", system has " + std::to_string(f.dim_out()));
  }

  // max over B' of |(t, x) - c|_1 is attained at its extreme corner.
  const RationalVector& c = f.center();
  const std::span<const Rational> cx(c.begin() + 1, c.end());
  const Rational reach = abs(t0 - c[0]) + problem.t_a + dist1(x0, cx) + problem.x_b;
  if (f.radius() < reach) {
    throw ConfigurationError("admissible box |t - " + t0.to_string() + "| <= " +
                             problem.t_a.to_string() + ", |x - " + vec_str(x0) +
                             "|_1 <= " + problem.x_b.to_string() +
                             " is not inside the function ball" + where);
  }

  // Sampled check of |f|_1 <= C: box corners plus pseudo-random interior points.
  const Precision check(8);
  const Rational limit = problem.bound_c + tolerance(check);
  auto verify = [&](const Rational& t, const RationalVector& x) {
    const Rational value = norm1(apply(f, t, x, check));
    if (limit < value) {
      throw ConfigurationError("|f(" + t.to_string() + ", " + vec_str(x) + ")|_1 ~ " +
                               value.to_string() + " exceeds C = " +
                               problem.bound_c.to_string() + where);
    }
  };
  const RationalVector base(x0.begin(), x0.end());
  for (const Rational& t : {t0 - problem.t_a, t0, t0 + problem.t_a}) {
    verify(t, base);
    for (std::size_t j = 0; j < base.size(); ++j) {
      for (int s : {-1, 1}) {
        RationalVector x = base;
        x[j] += Rational(s) * problem.x_b;
        verify(t, x);
      }
    }
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long> unit(-(1L << 12), 1L << 12);
  for (std::size_t i = 0; i < bound_samples; ++i) {
    Rational t = t0 + problem.t_a * Rational::dyadic(BigInt(unit(rng)), 12);
    RationalVector dir(base.size());
    Rational n;
    for (auto& d : dir) {
      d = Rational::dyadic(BigInt(unit(rng)), 12);
      n += abs(d);
    }
    if (n.is_zero()) continue;
    Rational r = problem.x_b * Rational::dyadic(BigInt(std::abs(unit(rng))), 12) / n;
    verify(t, axpy(base, r, dir));
  }
}

Rational horizon(const EulerProblem& problem) {
  return min(problem.t_a, problem.x_b / problem.bound_c);
}

RationalVector euler_map(const UcfVector& f, const RationalVector& a, std::size_t n,
                         const Rational& d, Precision p, bool compress) {
  if (n == 0) return a;
  // Both recursive calls are kept, exactly as the defining equations read.
  const RationalVector prev = euler_map(f, a, n - 1, d, p, compress);
  const RationalVector again = euler_map(f, a, n - 1, d, p, compress);
  const Rational t = Rational(static_cast<long>(n - 1)) * d;
  return axpy(prev, d, apply(f, t, again, p, compress));
}

EulerState euler_map_fast(const UcfVector& f, std::size_t n, EulerState state, const Rational& d,
                          Precision p, bool compress) {
  for (std::size_t k = 0; k < n; ++k) {
    const Rational t = Rational(static_cast<long>(k)) * d;
    RationalVector next = axpy(state.second, d, apply(f, t, state.second, p, compress));
    state.first = std::move(state.second);
    state.second = std::move(next);
  }
  return state;
}

EulerSolution solve(const EulerProblem& problem, Precision p, const SolveOptions& options) {
  return solve_from(problem, p, Rational(0), problem.x0, options);
}

EulerSolution solve_chained(const EulerProblem& problem, Precision p, const Rational& t_end,
                            const SolveOptions& options) {
  if (t_end.sign() <= 0) throw ConfigurationError("t_end must be positive");
  EulerSolution sol = solve(problem, p, options);
  if (options.max_steps) return sol;

  std::vector<Rational> points = sol.partition.points();
  while (sol.horizon < t_end) {
    EulerSolution seg = solve_from(problem, p, sol.horizon, sol.nodes.back(), options);
    points.insert(points.end(), seg.partition.points().begin() + 1, seg.partition.points().end());
    sol.nodes.insert(sol.nodes.end(), std::make_move_iterator(seg.nodes.begin() + 1),
                     std::make_move_iterator(seg.nodes.end()));
    sol.slopes.insert(sol.slopes.end(), std::make_move_iterator(seg.slopes.begin()),
                      std::make_move_iterator(seg.slopes.end()));
    sol.horizon = seg.horizon;
  }
  sol.partition = Partition(std::move(points));
  return sol;
}

RationalVector eval_solution(const EulerSolution& sol, const Rational& t) {
  const auto& pts = sol.partition.points();
  if (t < pts.front() || sol.horizon < t) {
    throw std::range_error("t = " + t.to_string() + " outside [0, " + sol.horizon.to_string() +
                           "]");
  }
  if (sol.slopes.empty()) return sol.nodes.front();
  auto it = std::upper_bound(pts.begin(), pts.end(), t);
  auto i = static_cast<std::size_t>(std::distance(pts.begin(), it));
  i = std::min(i == 0 ? 0 : i - 1, sol.slopes.size() - 1);
  return axpy(sol.nodes[i], t - pts[i], sol.slopes[i]);
}

DefectReport defect_certificate(const EulerSolution& sol, const EulerProblem& problem,
                                std::size_t samples, bool compress) {
  if (samples == 0) throw std::invalid_argument("defect certificate needs samples >= 1");
  DefectReport report;
  const Precision check = sol.p + 4;
  report.tolerance = tolerance(sol.p) + tolerance(check);
  const auto& pts = sol.partition.points();
  const Rational denom(static_cast<long>(samples + 1));
  for (std::size_t i = 0; i < sol.slopes.size(); ++i) {
    const Rational width = pts[i + 1] - pts[i];
    if (width.is_zero()) continue;
    const RationalVector& s = sol.slopes[i];
    for (std::size_t j = 1; j <= samples; ++j) {
      const Rational offset = width * Rational(static_cast<long>(j)) / denom;
      const Rational t = pts[i] + offset;
      const RationalVector phi = axpy(sol.nodes[i], offset, s);
      Rational defect = dist1(s, apply(problem.rhs, t, phi, check, compress));
      ++report.checked;
      if (report.max_defect < defect) report.max_defect = defect;
      if (report.tolerance < defect) report.violations.push_back({i, t, std::move(defect)});
    }
  }
  return report;
}

Rational exp_upper(const Rational& x) {
  if (x.sign() < 0) throw std::domain_error("exp_upper requires x >= 0");
  // Least K with K + 1 >= 2x, plus 8 extra terms. Beyond K the term ratio is
  // <= 1/2, so the tail is at most twice the first omitted term.
  BigInt twice = ceil(x * 2);
  long k0 = std::max(0L, twice.get_si() - 1);
  const long terms = k0 + 8;
  Rational term(1);
  Rational sum(1);
  for (long k = 1; k <= terms; ++k) {
    term *= x / Rational(k);
    sum += term;
  }
  term *= x / Rational(terms + 1);
  return sum + 2 * term;
}

Rational global_error_bound(Precision p, const Rational& lipschitz, const Rational& horizon) {
  if (lipschitz.sign() <= 0) throw std::domain_error("Lipschitz constant must be positive");
  if (horizon.sign() <= 0) throw std::domain_error("horizon must be positive");
  return tolerance(p) / lipschitz * (exp_upper(lipschitz * horizon) - 1);
}

std::size_t max_slope_denominator_bits(const EulerSolution& sol) {
  std::size_t bits = 0;
  for (const auto& s : sol.slopes) {
    for (const auto& c : s) bits = std::max(bits, denominator_bits(c));
  }
  return bits;
}

}  // namespace certeuler
