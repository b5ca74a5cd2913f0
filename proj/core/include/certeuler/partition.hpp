/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <iosfwd>
#include <vector>

#include "certeuler/rational.hpp"

namespace certeuler {

/// Weakly increasing list of rationals c_0 = lo <= ... <= c_n = hi.
class Partition {
 public:
  /// Throws std::invalid_argument unless the points are nonempty and weakly increasing.
  explicit Partition(std::vector<Rational> points);

  [[nodiscard]] const std::vector<Rational>& points() const noexcept { return points_; }
  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
  [[nodiscard]] const Rational& operator[](std::size_t i) const { return points_[i]; }
  [[nodiscard]] const Rational& lo() const { return points_.front(); }
  [[nodiscard]] const Rational& hi() const { return points_.back(); }

 private:
  std::vector<Rational> points_;
};

/// The 2^depth points a + i (b - a) / 2^depth for i = 1..2^depth, i.e. the
/// dyadic bisection of [a, b] without its left end. Requires a < b.
[[nodiscard]] std::vector<Rational> unif_p_core(std::uint32_t depth, const Rational& a,
                                                const Rational& b);

/// Uniform partition of [0, b] at depth p + le_abs_bound(b); mesh <= 2^-p.
/// Requires b > 0.
[[nodiscard]] Partition unif_p(const Rational& b, Precision p);

/// Depth used by unif_p.
[[nodiscard]] std::uint32_t unif_p_depth(const Rational& b, Precision p);

/// Exact maximum gap; requires at least two points.
[[nodiscard]] Rational mesh(const Partition& partition);

/// One rational per line.
void write_csv(std::ostream& os, const Partition& partition);

}  // namespace certeuler
