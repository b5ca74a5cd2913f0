/* SPDX-License-Identifier: Apache-2.0 */

#include "certeuler/serialize.hpp"

#include <ostream>

namespace certeuler {

namespace {

RationalVector vector_from_json(const nlohmann::json& j) {
  RationalVector out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(Rational::parse(v.get<std::string>()));
  return out;
}

}  // namespace

nlohmann::json to_json(std::span<const Rational> v) {
  auto arr = nlohmann::json::array();
  for (const auto& x : v) arr.push_back(x.to_string());
  return arr;
}

nlohmann::json to_json(const EulerSolution& sol) {
  nlohmann::json j;
  j["horizon"] = sol.horizon.to_string();
  j["p"] = sol.p.value();
  j["partition"] = to_json(sol.partition.points());
  auto nodes = nlohmann::json::array();
  for (const auto& b : sol.nodes) nodes.push_back(to_json(b));
  j["nodes"] = std::move(nodes);
  auto slopes = nlohmann::json::array();
  for (const auto& s : sol.slopes) slopes.push_back(to_json(s));
  j["slopes"] = std::move(slopes);
  j["defect_bound"] = "2^-" + std::to_string(sol.p.value());
  return j;
}

EulerSolution solution_from_json(const nlohmann::json& j) {
  std::vector<RationalVector> nodes;
  for (const auto& b : j.at("nodes")) nodes.push_back(vector_from_json(b));
  std::vector<RationalVector> slopes;
  for (const auto& s : j.at("slopes")) slopes.push_back(vector_from_json(s));
  const Precision p(j.at("p").get<std::uint32_t>());
  // q is not part of the wire format; p + 1 is a safe lower bound for it.
  Precision q = j.contains("continuity_exponent")
                    ? Precision(j["continuity_exponent"].get<std::uint32_t>())
                    : p + 1;
  return EulerSolution{Partition(vector_from_json(j.at("partition"))), std::move(nodes),
                       std::move(slopes), p, Rational::parse(j.at("horizon").get<std::string>()),
                       q};
}

nlohmann::json to_json(const DefectReport& report) {
  nlohmann::json j;
  j["checked"] = report.checked;
  j["tolerance"] = report.tolerance.to_string();
  j["max_defect"] = report.max_defect.to_string();
  auto violations = nlohmann::json::array();
  for (const auto& v : report.violations) {
    violations.push_back(
        {{"segment", v.segment}, {"t", v.t.to_string()}, {"defect", v.defect.to_string()}});
  }
  j["violations"] = std::move(violations);
  return j;
}

nlohmann::json ucf_metadata(const UcfVector& f) {
  return {{"center", to_json(f.center())},
          {"radius", f.radius().to_string()},
          {"norm", "1"},
          {"dim_in", f.dim_in()},
          {"dim_out", f.dim_out()},
          {"convergence_modulus", f.alpha_spec().description},
          {"continuity_modulus", f.omega_spec().description}};
}

nlohmann::json to_json(const SystemInfo& system) {
  return {{"name", system.name},
          {"formula", system.formula},
          {"domain", ucf_metadata(system.rhs)},
          {"defaults",
           {{"x0", to_json(system.x0)},
            {"t_a", system.t_a.to_string()},
            {"x_b", system.x_b.to_string()},
            {"C", system.bound_c.to_string()},
            {"L", system.lipschitz.to_string()}}}};
}

void write_csv(std::ostream& os, const EulerSolution& sol) {
  const std::size_t n = sol.nodes.empty() ? 0 : sol.nodes.front().size();
  os << 't';
  for (std::size_t i = 1; i <= n; ++i) os << ",x" << i;
  os << '\n';
  for (std::size_t k = 0; k < sol.nodes.size(); ++k) {
    os << sol.partition[k];
    for (const auto& c : sol.nodes[k]) os << ',' << c;
    os << '\n';
  }
}

}  // namespace certeuler
