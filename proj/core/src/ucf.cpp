/* SPDX-License-Identifier: Apache-2.0 */

#include "certeuler/ucf.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace certeuler {

namespace {

Rational tolerance(Precision p) { return pow2(-static_cast<std::int64_t>(p.value())); }

Rational clamp(const Rational& a, const Rational& lo, const Rational& hi) {
  if (a < lo) return lo;
  if (hi < a) return hi;
  return a;
}

Rational dyadic_floor(const Rational& a, std::uint32_t k) {
  BigInt scaled;
  mpz_mul_2exp(scaled.get_mpz_t(), a.numerator().get_mpz_t(), k);
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), a.denominator().get_mpz_t());
  return Rational::dyadic(std::move(q), k);
}

/// Uniform dyadic rational in [-1, 1] with 16 fractional bits.
Rational random_unit(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-(1L << 16), 1L << 16);
  return Rational::dyadic(BigInt(dist(rng)), 16);
}

std::string describe(const RationalVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

void check_monotone(UcfReport& report, Precision p_max, const ConvergenceModulus& alpha,
                    const ContinuityModulus& omega) {
  for (std::uint32_t k = 1; k < p_max.value(); ++k) {
    const Precision p(k);
    if (alpha(p + 1) < alpha(p)) {
      report.violations.push_back({UcfViolation::Kind::monotonicity, p,
                                   "convergence modulus decreases after p=" + std::to_string(k)});
    }
    if (omega(p + 1) < omega(p)) {
      report.violations.push_back({UcfViolation::Kind::monotonicity, p,
                                   "continuity modulus decreases after p=" + std::to_string(k)});
    }
  }
}

constexpr Index kCauchyWindow = 4;

}  // namespace

ConvergenceSpec constant_convergence(Index n) {
  return {[n](Precision) { return n; }, "p -> " + std::to_string(n)};
}

ContinuitySpec shifted_continuity(std::uint32_t shift) {
  return {[shift](Precision p) { return p + shift; },
          shift == 0 ? std::string("p -> p") : "p -> p+" + std::to_string(shift)};
}

UcfScalar::UcfScalar(Rational lo, Rational hi, Approx approx, ConvergenceSpec alpha,
                     ContinuitySpec omega)
    : lo_(std::move(lo)),
      hi_(std::move(hi)),
      approx_(std::move(approx)),
      alpha_(std::move(alpha)),
      omega_(std::move(omega)) {
  if (hi_ < lo_) throw std::invalid_argument("ucf domain requires lo <= hi");
}

UcfVector::UcfVector(RationalVector center, Rational radius, std::size_t dim_out, Approx approx,
                     ConvergenceSpec alpha, ContinuitySpec omega)
    : center_(std::move(center)),
      radius_(std::move(radius)),
      dim_out_(dim_out),
      approx_(std::move(approx)),
      alpha_(std::move(alpha)),
      omega_(std::move(omega)) {
  if (radius_.sign() <= 0) throw std::invalid_argument("ucf ball radius must be positive");
  if (dim_out_ == 0 || center_.size() != dim_out_ + 1) {
    throw std::invalid_argument("ucf input dimension must be output dimension + 1");
  }
}

bool UcfVector::contains(std::span<const Rational> point) const {
  return point.size() == center_.size() && dist1(point, center_) <= radius_;
}

Index application_modulus(const UcfScalar& f, const Real& x, Precision p) {
  const std::uint32_t w = f.omega(p + 1).value();
  return std::max(f.alpha(p + 2), x.modulus(Precision(std::max<std::uint32_t>(w - 1, 1))));
}

Real apply(const UcfScalar& f, const Real& x) {
  const Precision check(16);
  const Rational a = approx(x, check);
  const Rational tol = tolerance(check);
  if (a < f.lo() - tol || f.hi() + tol < a) {
    throw std::range_error("argument " + a.to_string() + " outside function domain [" +
                           f.lo().to_string() + ", " + f.hi().to_string() + "]");
  }
  return Real([f, x](Index n) { return f.eval(clamp(x.at(n), f.lo(), f.hi()), n); },
              [f, x](Precision p) { return application_modulus(f, x, p); });
}

RationalVector apply_point(const UcfVector& f, std::span<const Rational> point, Precision p,
                           bool compress) {
  if (!f.contains(point)) {
    throw std::range_error("point " + describe(RationalVector(point.begin(), point.end())) +
                           " outside function ball");
  }
  const Precision pc = component_precision(f.dim_out(), p);
  if (!compress) {
    RationalVector v = f.eval(point, f.alpha(pc));
    if (v.size() != f.dim_out()) throw std::logic_error("approximating map has wrong arity");
    return v;
  }
  // compress(x) approximated at pc reads b_{pc+2} = floor(a_{M(pc+2)} 2^(pc+2)) / 2^(pc+2).
  const Precision k = pc + 2;
  RationalVector v = f.eval(point, f.alpha(k));
  if (v.size() != f.dim_out()) throw std::logic_error("approximating map has wrong arity");
  for (auto& c : v) c = dyadic_floor(c, k.value());
  return v;
}

RationalVector apply(const UcfVector& f, const Rational& t, std::span<const Rational> x,
                     Precision p, bool compress) {
  RationalVector point;
  point.reserve(x.size() + 1);
  point.push_back(t);
  point.insert(point.end(), x.begin(), x.end());
  return apply_point(f, point, p, compress);
}

RealVector apply_real(const UcfVector& f, std::span<const Rational> point) {
  if (!f.contains(point)) throw std::range_error("point outside function ball");
  RationalVector pt(point.begin(), point.end());
  std::vector<Real> comps;
  comps.reserve(f.dim_out());
  for (std::size_t i = 0; i < f.dim_out(); ++i) {
    comps.emplace_back([f, pt, i](Index n) { return f.eval(pt, n).at(i); },
                       [f](Precision p) { return f.alpha(p); });
  }
  return RealVector(std::move(comps));
}

const char* to_string(UcfViolation::Kind kind) {
  switch (kind) {
    case UcfViolation::Kind::cauchy: return "cauchy";
    case UcfViolation::Kind::continuity: return "continuity";
    case UcfViolation::Kind::monotonicity: return "monotonicity";
    case UcfViolation::Kind::domain: return "domain";
  }
  return "unknown";
}

UcfReport validate(const UcfScalar& f, std::size_t samples, Precision p_max, std::uint64_t seed) {
  UcfReport report;
  std::mt19937_64 rng(seed);
  std::vector<Rational> points{f.lo(), f.hi(), (f.lo() + f.hi()) / 2};
  const Rational width = f.hi() - f.lo();
  for (std::size_t i = 0; i < samples; ++i) {
    points.push_back(f.lo() + width * (random_unit(rng) + 1) / 2);
  }

  for (std::uint32_t k = 1; k <= p_max.value(); ++k) {
    const Precision p(k);
    const Rational tol = tolerance(p);
    const Index n0 = f.alpha(p);
    const Rational delta = pow2(-static_cast<std::int64_t>(f.omega(p).value()) + 1);
    for (const auto& a : points) {
      const Rational base = f.eval(a, n0);
      for (Index n = n0 + 1; n <= n0 + kCauchyWindow; ++n) {
        if (abs(f.eval(a, n) - base) > tol) {
          report.violations.push_back({UcfViolation::Kind::cauchy, p,
                                       "h(" + a.to_string() + ", .) not Cauchy at n=" +
                                           std::to_string(n)});
          break;
        }
      }
      bool found = false;
      for (const Rational& b : {clamp(a + delta, f.lo(), f.hi()), clamp(a - delta, f.lo(), f.hi())}) {
        for (Index n : {n0, n0 + kCauchyWindow}) {
          if (found) break;
          if (abs(f.eval(a, n) - f.eval(b, n)) > tol) {
            report.violations.push_back(
                {UcfViolation::Kind::continuity, p,
                 "|h(" + a.to_string() + ") - h(" + b.to_string() + ")| > 2^-" +
                     std::to_string(k) + " at n=" + std::to_string(n)});
            found = true;
          }
        }
      }
    }
  }
  check_monotone(report, p_max, f.alpha_spec().fn, f.omega_spec().fn);
  return report;
}

UcfReport validate(const UcfVector& f, std::size_t samples, Precision p_max, std::uint64_t seed) {
  UcfReport report;
  std::mt19937_64 rng(seed);
  const std::size_t dim = f.dim_in();

  auto random_direction = [&] {
    RationalVector u(dim);
    Rational n;
    while (n.is_zero()) {
      for (auto& c : u) c = random_unit(rng);
      n = norm1(u);
    }
    for (auto& c : u) c /= n;
    return u;
  };

  std::vector<RationalVector> points{f.center()};
  for (std::size_t j = 0; j < dim; ++j) {
    for (int s : {-1, 1}) {
      RationalVector v = f.center();
      v[j] += Rational(s) * f.radius();
      points.push_back(std::move(v));
    }
  }
  for (std::size_t i = 0; i < samples; ++i) {
    Rational r = (random_unit(rng) + 1) / 2;
    points.push_back(axpy(f.center(), r * f.radius(), random_direction()));
  }

  std::vector<RationalVector> directions;
  for (std::size_t j = 0; j < dim; ++j) {
    RationalVector e(dim);
    e[j] = 1;
    directions.push_back(e);
  }
  directions.push_back(random_direction());

  for (std::uint32_t k = 1; k <= p_max.value(); ++k) {
    const Precision p(k);
    const Rational tol = tolerance(p);
    const Index n0 = f.alpha(p);
    const Rational delta = pow2(-static_cast<std::int64_t>(f.omega(p).value()) + 1);
    for (const auto& a : points) {
      const RationalVector base = f.eval(a, n0);
      for (Index n = n0 + 1; n <= n0 + kCauchyWindow; ++n) {
        if (dist1(f.eval(a, n), base) > tol) {
          report.violations.push_back({UcfViolation::Kind::cauchy, p,
                                       "h(" + describe(a) + ", .) not Cauchy at n=" +
                                           std::to_string(n)});
          break;
        }
      }
      bool found = false;
      for (const auto& dir : directions) {
        if (found) break;
        for (int s : {1, -1}) {
          RationalVector b = axpy(a, Rational(s) * delta, dir);
          if (!f.contains(b)) continue;
          if (dist1(f.eval(a, n0), f.eval(b, n0)) > tol) {
            report.violations.push_back({UcfViolation::Kind::continuity, p,
                                         "|h" + describe(a) + " - h" + describe(b) + "|_1 > 2^-" +
                                             std::to_string(k)});
            found = true;
            break;
          }
        }
      }
    }
  }
  check_monotone(report, p_max, f.alpha_spec().fn, f.omega_spec().fn);
  return report;
}

UcfReport validate(const DerivativeWitness& w, const Rational& t_lo, const Rational& t_hi,
                   std::size_t samples, Precision p_max, std::uint64_t seed) {
  UcfReport report;
  if (!(t_lo < t_hi)) throw std::invalid_argument("derivative check needs t_lo < t_hi");
  if (w.base.dim_out() != w.derivative.dim_out()) {
    throw std::invalid_argument("derivative witness dimension mismatch");
  }
  std::mt19937_64 rng(seed);
  const RationalVector x(w.derivative.center().begin() + 1, w.derivative.center().end());
  const RationalVector xb(w.base.center().begin() + 1, w.base.center().end());
  const Rational width = t_hi - t_lo;

  for (std::uint32_t k = 1; k <= p_max.value(); ++k) {
    const Precision p(k);
    const Rational step = pow2(-static_cast<std::int64_t>(w.delta.fn(p).value()));
    for (std::size_t i = 0; i < samples; ++i) {
      const Rational t1 = t_lo + width * (random_unit(rng) + 1) / 2;
      for (const Rational& frac : {Rational(1), Rational(1, 2), (random_unit(rng) + 1) / 2}) {
        const Rational t2 = min(t1 + step * frac, t_hi);
        if (!(t1 < t2)) continue;
        const Rational h = t2 - t1;
        // Each approximation contributes at most 2^-r, so 3 * 2^-r of slack.
        const Precision r = p + 8 + le_abs_bound(1 / h).value();
        const RationalVector lhs =
            axpy(sub(apply(w.base, t2, xb, r), apply(w.base, t1, xb, r)), -h,
                 apply(w.derivative, t1, x, r));
        if (norm1(lhs) > tolerance(p) * h + 3 * tolerance(r)) {
          report.violations.push_back({UcfViolation::Kind::continuity, p,
                                       "difference quotient off at t1=" + t1.to_string() +
                                           ", t2=" + t2.to_string()});
        }
      }
    }
  }
  return report;
}

}  // namespace certeuler
