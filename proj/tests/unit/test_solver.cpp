/* SPDX-License-Identifier: Apache-2.0 */

#include <doctest.h>

#include "../support/fixtures.hpp"
#include "../support/oracle.hpp"
#include "certeuler/solver.hpp"

using namespace certeuler;
using fixtures::inv_pow2;

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

/// floor(2 pi 2^20) / 2^20 from the oracle.
Rational two_pi_dyadic() {
  const auto pi = oracle::pi();
  return Rational(floor(pi.value * 2 * pow2(20))) * pow2(-20);
}

}  // namespace

TEST_SUITE("solver") {
  TEST_CASE("euler_map unrolled by hand") {
    const UcfVector& ex = find_system("exp").rhs;
    const UcfVector& circle = find_system("circle").rhs;
    CHECK(euler_map(ex, RationalVector{1}, 0, q(1, 2), Precision(20)) == RationalVector{1});
    CHECK(euler_map(ex, RationalVector{1}, 1, q(1, 2), Precision(20)) == RationalVector{q(3, 2)});
    CHECK(euler_map(circle, RationalVector{1, 0}, 2, q(1, 4), Precision(20)) ==
          RationalVector{q(15, 16), q(1, 2)});
  }

  TEST_CASE("euler_map_fast") {
    const UcfVector& ex = find_system("exp").rhs;
    const EulerState start{RationalVector{7}, RationalVector{1}};
    CHECK(euler_map_fast(ex, 0, start, q(1, 2), Precision(20)) == start);
    CHECK(euler_map_fast(ex, 1, start, q(1, 2), Precision(20)).second == RationalVector{q(3, 2)});
    const UcfVector& circle = find_system("circle").rhs;
    for (std::size_t n = 0; n <= 8; ++n) {
      const RationalVector a{1, 0};
      CHECK(euler_map_fast(circle, n, {RationalVector{0, 0}, a}, q(1, 8), Precision(16)).second ==
            euler_map(circle, a, n, q(1, 8), Precision(16)));
    }
  }

  TEST_CASE("horizon is min(t_a, x_b / C)") {
    EulerProblem p = fixtures::exp_problem();
    CHECK(horizon(p) == q(1, 2));
    p.bound_c = Rational(8);
    CHECK(horizon(p) == q(1, 8));
    p.bound_c = q(1, 2);
    CHECK(horizon(p) == Rational(1));
  }

  TEST_CASE("Example 1 at p = 10 lies inside the certified enclosure") {
    const EulerProblem problem = fixtures::exp_problem();
    const EulerSolution sol = solve(problem, Precision(10));
    CHECK(sol.horizon == q(1, 2));
    const Rational r = eval_solution(sol, q(1, 2))[0];
    const Rational bound = global_error_bound(Precision(10), Rational(1), q(1, 2));
    CHECK(oracle::within(r, oracle::exp(q(1, 2)), bound));
  }

  TEST_CASE("first segment of Example 1 by hand") {
    const EulerSolution sol = solve(fixtures::exp_problem(), Precision(10));
    // q = omega(11) = 12, mesh <= 2^-(12 + 1), T = 1/2: 4096 steps of 2^-13.
    CHECK(sol.continuity_exponent.value() == 12);
    CHECK(sol.slopes.size() == 4096);
    CHECK(sol.partition[1] == inv_pow2(13));
    CHECK(sol.slopes[0] == RationalVector{1});
    CHECK(eval_solution(sol, inv_pow2(14)) == RationalVector{1 + inv_pow2(14)});
    CHECK(eval_solution(sol, Rational(0)) == RationalVector{1});
    for (std::size_t i = 0; i < sol.nodes.size(); i += 97) {
      CHECK(eval_solution(sol, sol.partition[i]) == sol.nodes[i]);
    }
    CHECK_THROWS_AS((void)eval_solution(sol, q(-1, 8)), std::range_error);
    CHECK_THROWS_AS((void)eval_solution(sol, q(5, 8)), std::range_error);
  }

  TEST_CASE("solution invariants") {
    for (const EulerProblem& problem : {fixtures::exp_problem(), fixtures::circle_problem()}) {
      const EulerSolution sol = solve(problem, Precision(8));
      REQUIRE(sol.nodes.size() == sol.partition.size());
      REQUIRE(sol.slopes.size() + 1 == sol.nodes.size());
      CHECK(sol.nodes[0] == problem.x0);
      for (std::size_t i = 0; i < sol.slopes.size(); ++i) {
        CHECK(norm1(sol.slopes[i]) <= problem.bound_c);
        CHECK(dist1(sol.nodes[i], problem.x0) <= problem.x_b);
        const Rational h = sol.partition[i + 1] - sol.partition[i];
        CHECK(sol.nodes[i + 1] == axpy(sol.nodes[i], h, sol.slopes[i]));
      }
    }
  }

  TEST_CASE("zero right-hand side") {
    const EulerProblem problem = fixtures::zero_problem(RationalVector{1, 1});
    const EulerSolution sol = solve(problem, Precision(6));
    for (const auto& s : sol.slopes) CHECK(norm1(s) <= inv_pow2(7));
    for (const auto& b : sol.nodes) CHECK(b == problem.x0);
    const DefectReport report = defect_certificate(sol, problem, 3);
    CHECK(report.ok());
    CHECK(report.max_defect <= 2 * inv_pow2(10));
  }

  TEST_CASE("defect certificate for Example 1 and fault injection") {
    const EulerProblem problem = fixtures::exp_problem();
    EulerSolution sol = solve(problem, Precision(10));
    const DefectReport good = defect_certificate(sol, problem, 100);
    CHECK(good.ok());
    CHECK(good.checked == 100 * sol.slopes.size());
    CHECK(good.tolerance == inv_pow2(10) + inv_pow2(14));

    sol.slopes[1234][0] += 2 * inv_pow2(10);
    const DefectReport bad = defect_certificate(sol, problem, 4);
    REQUIRE_FALSE(bad.ok());
    CHECK(bad.violations.front().segment == 1234);
    CHECK_THROWS_AS((void)defect_certificate(sol, problem, 0), std::invalid_argument);
  }

  TEST_CASE("global error bound") {
    const Rational b = global_error_bound(Precision(10), Rational(1), q(1, 2));
    const auto e_half = oracle::exp(q(1, 2));
    const Rational exact_lo = inv_pow2(10) * (e_half.value - e_half.radius - 1);
    CHECK(exact_lo <= b);
    CHECK(b <= q(11, 10) * exact_lo);

    // Small T: bound <= 2^-p T e^(LT).
    for (const Rational& t : {q(1, 1000), q(1, 64), q(1, 3)}) {
      const auto et = oracle::exp(t);
      CHECK(global_error_bound(Precision(12), Rational(1), t) <=
            inv_pow2(12) * t * (et.value - et.radius));
    }

    const Rational t_end = two_pi_dyadic();
    const auto e2pi = oracle::exp(t_end);
    const Rational b16 = global_error_bound(Precision(16), Rational(1), t_end);
    const Rational ref = inv_pow2(16) * (e2pi.value - 1);
    CHECK(ref <= b16);
    CHECK(b16 <= q(101, 100) * ref);
    CHECK(abs(b16 - q(82, 10000)) <= q(1, 10000));

    CHECK_THROWS_AS((void)global_error_bound(Precision(3), Rational(0), Rational(1)),
                    std::domain_error);
    CHECK_THROWS_AS((void)global_error_bound(Precision(3), Rational(1), Rational(-1)),
                    std::domain_error);
  }

  TEST_CASE("exp_upper dominates exp") {
    CHECK(exp_upper(Rational(0)) == Rational(1));
    for (const Rational& x : {q(1, 2), Rational(1), q(7, 3), Rational(20)}) {
      const auto ex = oracle::exp(x);
      const Rational u = exp_upper(x);
      CHECK(ex.value + ex.radius <= u);
      CHECK(u <= ex.value * (1 + inv_pow2(10)));
    }
    CHECK_THROWS_AS((void)exp_upper(Rational(-1)), std::domain_error);
  }

  TEST_CASE("chaining") {
    const EulerProblem ex = fixtures::exp_problem();
    const EulerSolution one = solve(ex, Precision(6));
    const EulerSolution chained = solve_chained(ex, Precision(6), q(1, 3));
    CHECK(chained.partition.points() == one.partition.points());
    CHECK(chained.nodes == one.nodes);
    CHECK(chained.slopes == one.slopes);

    const EulerProblem zero = fixtures::zero_problem(RationalVector{2, -1});
    const EulerSolution z = solve_chained(zero, Precision(4), q(5, 2));
    CHECK(z.horizon == Rational(3));
    for (const auto& b : z.nodes) CHECK(b == zero.x0);
    CHECK(eval_solution(z, q(5, 2)) == zero.x0);

    const EulerSolution c = solve_chained(fixtures::circle_problem(), Precision(6), Rational(1));
    CHECK(c.horizon == Rational(1));
    for (std::size_t i = 0; i + 1 < c.partition.size(); ++i) {
      CHECK(c.partition[i] <= c.partition[i + 1]);
    }
    CHECK_THROWS_AS((void)solve_chained(ex, Precision(6), Rational(0)), ConfigurationError);
  }

  TEST_CASE("restart outside the ball names the restart time") {
    EulerProblem problem = fixtures::zero_problem(RationalVector{0});
    problem.rhs = fixtures::zero_rhs(1, Rational(3));
    try {
      (void)solve_chained(problem, Precision(3), Rational(3));
      FAIL("expected a configuration error");
    } catch (const ConfigurationError& e) {
      CHECK(std::string(e.what()).find("t=2") != std::string::npos);
    }
  }

  TEST_CASE("configuration errors") {
    EulerProblem p = fixtures::exp_problem();
    p.bound_c = Rational(1);
    CHECK_THROWS_AS((void)solve(p, Precision(4)), ConfigurationError);
    p = fixtures::exp_problem();
    p.x0 = RationalVector{1, 0};
    CHECK_THROWS_AS((void)solve(p, Precision(4)), ConfigurationError);
    p = fixtures::exp_problem();
    p.t_a = Rational(0);
    CHECK_THROWS_AS((void)solve(p, Precision(4)), ConfigurationError);
    p = fixtures::exp_problem();
    p.lipschitz = Rational(-1);
    CHECK_THROWS_AS((void)solve(p, Precision(4)), ConfigurationError);
    p = fixtures::exp_problem();
    p.t_a = Rational(2000);
    CHECK_THROWS_AS((void)solve(p, Precision(4)), ConfigurationError);
  }

  TEST_CASE("max_steps truncates") {
    SolveOptions options;
    options.max_steps = 10;
    const EulerSolution sol = solve(fixtures::circle_problem(), Precision(8), options);
    CHECK(sol.slopes.size() == 10);
    CHECK(sol.horizon == sol.partition.hi());
    CHECK(max_slope_denominator_bits(sol) <= 8 + 16);
  }
}
