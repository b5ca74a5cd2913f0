/* SPDX-License-Identifier: Apache-2.0 */

#include "certeuler/real.hpp"

#include <algorithm>
#include <mutex>
#include <ostream>
#include <unordered_map>

namespace certeuler {

struct Real::Impl {
  Sequence seq;
  Modulus modulus;
  mutable std::mutex mutex;
  mutable std::unordered_map<Index, Rational> memo;
};

Real::Real(Sequence seq, Modulus modulus) : impl_(std::make_shared<Impl>()) {
  impl_->seq = std::move(seq);
  impl_->modulus = std::move(modulus);
}

Real Real::from_rational(Rational a) {
  return Real([a = std::move(a)](Index) { return a; }, [](Precision) { return Index{0}; });
}

Rational Real::at(Index n) const {
  {
    std::lock_guard lock(impl_->mutex);
    if (auto it = impl_->memo.find(n); it != impl_->memo.end()) return it->second;
  }
  // Evaluate outside the lock; the sequence may recurse into other reals.
  Rational value = impl_->seq(n);
  std::lock_guard lock(impl_->mutex);
  return impl_->memo.try_emplace(n, std::move(value)).first->second;
}

Index Real::modulus(Precision p) const { return impl_->modulus(p); }

Rational approx(const Real& x, Precision p) { return x.at(x.modulus(p)); }

Real operator+(const Real& x, const Real& y) {
  return Real([x, y](Index n) { return x.at(n) + y.at(n); },
              [x, y](Precision p) { return std::max(x.modulus(p + 1), y.modulus(p + 1)); });
}

Real operator-(const Real& x) {
  return Real([x](Index n) { return -x.at(n); }, [x](Precision p) { return x.modulus(p); });
}

Real operator-(const Real& x, const Real& y) { return x + (-y); }

Real operator*(const Real& x, const Real& y) {
  // Beyond M(1) every approximant satisfies |a_n| <= |a_{M(1)}| + 1/2 <= 2^kx.
  const Precision one(1);
  const Index base = std::max(x.modulus(one), y.modulus(one));
  const std::uint32_t kx = le_abs_bound(approx(x, one)).value() + 2;
  const std::uint32_t ky = le_abs_bound(approx(y, one)).value() + 2;
  return Real([x, y](Index n) { return x.at(n) * y.at(n); },
              [x, y, base, kx, ky](Precision p) {
                return std::max({base, x.modulus(p + 1 + ky), y.modulus(p + 1 + kx)});
              });
}

Real abs(const Real& x) {
  return Real([x](Index n) { return abs(x.at(n)); }, [x](Precision p) { return x.modulus(p); });
}

bool is_nonneg_up_to(const Real& x, Precision p) {
  return -pow2(-static_cast<std::int64_t>(p.value())) <= approx(x, p + 1);
}

bool is_pos_up_to(const Real& x, Precision p) {
  return pow2(-static_cast<std::int64_t>(p.value())) <= approx(x, p + 1);
}

bool eq_up_to(const Real& x, const Real& y, Precision p) {
  return abs(approx(x, p + 1) - approx(y, p + 1)) <= pow2(-static_cast<std::int64_t>(p.value()));
}

Real compress(const Real& x) {
  return Real(
      [x](Index n) {
        auto k = static_cast<std::uint32_t>(n);
        Rational a = approx(x, Precision(std::max<std::uint32_t>(k, 1)));
        BigInt scaled;
        mpz_mul_2exp(scaled.get_mpz_t(), a.numerator().get_mpz_t(), k);
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), a.denominator().get_mpz_t());
        return Rational::dyadic(std::move(q), k);
      },
      [](Precision p) { return Index{p.value()} + 2; });
}

RealVector::RealVector(std::vector<Real> components) : components_(std::move(components)) {
  if (components_.empty()) {
    throw std::invalid_argument("real vector must have dimension >= 1");
  }
}

Precision component_precision(std::size_t dim, Precision p) {
  std::uint32_t extra = 0;
  while ((std::size_t{1} << extra) < dim) ++extra;
  return p + extra;
}

RationalVector vec_approx(const RealVector& x, Precision p) {
  const Precision pi = component_precision(x.dim(), p);
  RationalVector out;
  out.reserve(x.dim());
  for (const auto& c : x.components()) out.push_back(approx(c, pi));
  return out;
}

std::optional<RegularityViolation> check_regularity(const Real& x, Precision p_max,
                                                    Index extra) {
  const Index last = x.modulus(p_max) + extra;
  for (std::uint32_t k = 1; k <= p_max.value(); ++k) {
    const Precision p(k);
    const Index first = x.modulus(p);
    // All pairs are within 2^-p iff max - min is.
    Index lo_at = first;
    Index hi_at = first;
    Rational lo = x.at(first);
    Rational hi = lo;
    for (Index n = first + 1; n <= last; ++n) {
      Rational v = x.at(n);
      if (v < lo) {
        lo = v;
        lo_at = n;
      }
      if (hi < v) {
        hi = std::move(v);
        hi_at = n;
      }
    }
    if (hi - lo > pow2(-static_cast<std::int64_t>(k))) {
      return RegularityViolation{p, lo_at, hi_at};
    }
  }
  return std::nullopt;
}

bool modulus_monotone(const Real& x, Precision p_max) {
  Index prev = x.modulus(Precision(1));
  for (std::uint32_t k = 2; k <= p_max.value(); ++k) {
    Index cur = x.modulus(Precision(k));
    if (cur < prev) return false;
    prev = cur;
  }
  return true;
}

void dump_csv(std::ostream& os, const Real& x, Index upto) {
  os << "n,a_n\n";
  for (Index n = 0; n <= upto; ++n) os << n << ',' << x.at(n) << '\n';
}

}  // namespace certeuler
