/* SPDX-License-Identifier: Apache-2.0 */

#include "oracle.hpp"

#include <mpfr.h>

#include <vector>

namespace certeuler::oracle {

namespace {

// 512 working bits; the claimed radius 2^-400 leaves ample room for the
// input rounding of mpfr_set_q and the final rounding, even for |x| <= 64.
constexpr mpfr_prec_t kBits = 512;
constexpr std::int64_t kRadiusExp = -400;

class Mpfr {
 public:
  Mpfr() { mpfr_init2(v_, kBits); }
  explicit Mpfr(const Rational& q) : Mpfr() {
    mpq_class r(q.numerator(), q.denominator());
    mpfr_set_q(v_, r.get_mpq_t(), MPFR_RNDN);
  }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;

  mpfr_ptr get() { return v_; }

  [[nodiscard]] Value to_value() const {
    BigInt mantissa;
    const mpfr_exp_t exp = mpfr_get_z_2exp(mantissa.get_mpz_t(), v_);
    return {Rational(mantissa) * pow2(exp), pow2(kRadiusExp)};
  }

 private:
  mpfr_t v_;
};

}  // namespace

Value e() {
  Mpfr one(Rational(1));
  Mpfr r;
  mpfr_exp(r.get(), one.get(), MPFR_RNDN);
  return r.to_value();
}

Value sqrt2() {
  Mpfr r;
  mpfr_sqrt_ui(r.get(), 2, MPFR_RNDN);
  return r.to_value();
}

Value pi() {
  Mpfr r;
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r.to_value();
}

Value exp(const Rational& x) {
  Mpfr in(x);
  Mpfr r;
  mpfr_exp(r.get(), in.get(), MPFR_RNDN);
  return r.to_value();
}

Value cos(const Rational& x) {
  Mpfr in(x);
  Mpfr r;
  mpfr_cos(r.get(), in.get(), MPFR_RNDN);
  return r.to_value();
}

Value sin(const Rational& x) {
  Mpfr in(x);
  Mpfr r;
  mpfr_sin(r.get(), in.get(), MPFR_RNDN);
  return r.to_value();
}

Rational distance_upper(const Rational& candidate, const Value& v) {
  return abs(candidate - v.value) + v.radius;
}

bool within(const Rational& candidate, const Value& v, const Rational& bound) {
  return distance_upper(candidate, v) <= bound;
}

std::string decimal(const Value& v, int digits) {
  Mpfr r(v.value);
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", digits, r.get());
  return buf.data();
}

}  // namespace certeuler::oracle
