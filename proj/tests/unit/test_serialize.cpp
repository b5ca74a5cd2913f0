/* SPDX-License-Identifier: Apache-2.0 */

#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "../support/fixtures.hpp"
#include "certeuler/serialize.hpp"

using namespace certeuler;

TEST_SUITE("serialize") {
  TEST_CASE("solution json round-trip") {
    const EulerSolution sol = solve(fixtures::circle_problem(), Precision(4));
    const nlohmann::json j = to_json(sol);
    CHECK(j.at("p") == 4);
    CHECK(j.at("defect_bound") == "2^-4");
    CHECK(j.at("horizon") == "1/4");
    CHECK(j.at("partition").size() == sol.partition.size());
    CHECK(j.at("nodes")[0] == nlohmann::json::array({"1", "0"}));

    const EulerSolution back = solution_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back.partition.points() == sol.partition.points());
    CHECK(back.nodes == sol.nodes);
    CHECK(back.slopes == sol.slopes);
    CHECK(back.horizon == sol.horizon);
    CHECK(back.p == sol.p);
  }

  TEST_CASE("solution csv") {
    const EulerSolution sol = solve(fixtures::exp_problem(), Precision(2));
    std::ostringstream os;
    write_csv(os, sol);
    const std::string s = os.str();
    CHECK(s.rfind("t,x1\n0,1\n", 0) == 0);
    CHECK(static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')) ==
          sol.partition.size() + 1);
  }

  TEST_CASE("defect report json") {
    DefectReport r;
    r.checked = 3;
    r.tolerance = Rational(1, 4);
    r.max_defect = Rational(1, 2);
    r.violations.push_back({2, Rational(1, 3), Rational(1, 2)});
    const nlohmann::json j = to_json(r);
    CHECK(j.at("checked") == 3);
    CHECK(j.at("violations")[0].at("t") == "1/3");
    CHECK(j.at("violations")[0].at("segment") == 2);
  }

  TEST_CASE("system metadata") {
    const nlohmann::json j = to_json(find_system("circle"));
    CHECK(j.at("name") == "circle");
    CHECK(j.at("domain").at("dim_in") == 3);
    CHECK(j.at("domain").at("continuity_modulus") == "p -> p+1");
    CHECK(j.at("defaults").at("x_b") == "1/2");
    CHECK_THROWS_AS((void)find_system("lorenz"), std::out_of_range);
  }
}
