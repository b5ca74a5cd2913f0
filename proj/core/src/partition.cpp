/* SPDX-License-Identifier: Apache-2.0 */

#include "certeuler/partition.hpp"

#include <ostream>
#include <stdexcept>

namespace certeuler {

Partition::Partition(std::vector<Rational> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("partition must have at least one point");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (points_[i] < points_[i - 1]) {
      throw std::invalid_argument("partition points must be weakly increasing");
    }
  }
}

std::vector<Rational> unif_p_core(std::uint32_t depth, const Rational& a, const Rational& b) {
  if (!(a < b)) throw std::domain_error("unif_p_core requires a < b");
  if (depth > 40) throw std::length_error("partition depth too large");
  const std::uint64_t count = std::uint64_t{1} << depth;
  const Rational width = b - a;
  std::vector<Rational> out;
  out.reserve(count);
  for (std::uint64_t i = 1; i < count; ++i) {
    out.push_back(a + width * Rational::dyadic(BigInt(std::to_string(i)), depth));
  }
  out.push_back(b);
  return out;
}

std::uint32_t unif_p_depth(const Rational& b, Precision p) {
  return p.value() + le_abs_bound(b).value();
}

Partition unif_p(const Rational& b, Precision p) {
  if (b.sign() <= 0) throw std::domain_error("unif_p requires b > 0");
  std::vector<Rational> points{Rational(0)};
  auto rest = unif_p_core(unif_p_depth(b, p), Rational(0), b);
  points.insert(points.end(), std::make_move_iterator(rest.begin()),
                std::make_move_iterator(rest.end()));
  return Partition(std::move(points));
}

Rational mesh(const Partition& partition) {
  if (partition.size() < 2) throw std::domain_error("mesh of a singleton partition");
  Rational best = partition[1] - partition[0];
  for (std::size_t i = 2; i < partition.size(); ++i) {
    Rational gap = partition[i] - partition[i - 1];
    if (best < gap) best = std::move(gap);
  }
  return best;
}

void write_csv(std::ostream& os, const Partition& partition) {
  for (const auto& c : partition.points()) os << c << '\n';
}

}  // namespace certeuler
