/* SPDX-License-Identifier: Apache-2.0 */

#include "certeuler/rational.hpp"

#include <algorithm>
#include <ostream>

namespace certeuler {

Rational::Rational(long long n) : num_(0), den_(1) {
  // gmpxx has no long long constructor on every platform
  num_ = std::to_string(n);
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (sgn(den_) == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  normalize();
}

void Rational::normalize() {
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (sgn(num_) == 0) {
    den_ = 1;
    return;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational Rational::dyadic(BigInt n, std::uint32_t k) {
  BigInt d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, k);
  return Rational(std::move(n), std::move(d));
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [](std::string_view s, bool allow_sign) {
    std::string str(s);
    std::size_t start = 0;
    if (allow_sign && !str.empty() && (str[0] == '-' || str[0] == '+')) start = 1;
    if (start == str.size() ||
        !std::all_of(str.begin() + static_cast<std::ptrdiff_t>(start), str.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("malformed rational literal '" + str + "'");
    }
    if (str[0] == '+') str.erase(0, 1);
    return BigInt(str);
  };

  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text, true));
  }
  return Rational(parse_int(trim(text.substr(0, slash)), true),
                  parse_int(trim(text.substr(slash + 1)), false));
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

double Rational::to_double() const {
  mpq_class q(num_, den_);
  return q.get_d();
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  if (is_zero() || rhs.is_zero()) {
    num_ = 0;
    den_ = 1;
    return *this;
  }
  // Cross-cancel so the product is already in lowest terms.
  BigInt g1;
  BigInt g2;
  mpz_gcd(g1.get_mpz_t(), num_.get_mpz_t(), rhs.den_.get_mpz_t());
  mpz_gcd(g2.get_mpz_t(), rhs.num_.get_mpz_t(), den_.get_mpz_t());
  num_ = (num_ / g1) * (rhs.num_ / g2);
  den_ = (den_ / g2) * (rhs.den_ / g1);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("rational division by zero");
  }
  Rational inv(rhs.den_, rhs.num_, NoNormalize{});
  if (sgn(inv.den_) < 0) {
    inv.num_ = -inv.num_;
    inv.den_ = -inv.den_;
  }
  return *this *= inv;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = 0;
  if (a.den_ == b.den_) {
    c = cmp(a.num_, b.num_);
  } else {
    c = cmp(a.num_ * b.den_, b.num_ * a.den_);
  }
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

BigInt floor(const Rational& a) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.numerator().get_mpz_t(), a.denominator().get_mpz_t());
  return q;
}

BigInt ceil(const Rational& a) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.numerator().get_mpz_t(), a.denominator().get_mpz_t());
  return q;
}

Rational pow2(std::int64_t k) {
  BigInt p;
  auto e = static_cast<unsigned long>(k < 0 ? -k : k);
  mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
  if (k < 0) return Rational(BigInt(1), std::move(p));
  return Rational(std::move(p));
}

Precision le_abs_bound(const Rational& a) {
  // |a| <= 2^p  <=>  |num| <= den * 2^p
  BigInt n = a.numerator();
  if (sgn(n) < 0) n = -n;
  const BigInt& d = a.denominator();
  if (n <= 2 * d) return Precision(1);
  auto nbits = static_cast<std::int64_t>(mpz_sizeinbase(n.get_mpz_t(), 2));
  auto dbits = static_cast<std::int64_t>(mpz_sizeinbase(d.get_mpz_t(), 2));
  // 2^(nbits-1) <= n < 2^nbits and 2^(dbits-1) <= d < 2^dbits, so the
  // answer lies in [nbits - dbits, nbits - dbits + 1].
  std::int64_t p = std::max<std::int64_t>(1, nbits - dbits);
  BigInt scaled;
  mpz_mul_2exp(scaled.get_mpz_t(), d.get_mpz_t(), static_cast<mp_bitcnt_t>(p));
  while (n > scaled) {
    ++p;
    scaled *= 2;
  }
  return Precision(static_cast<std::uint32_t>(p));
}

Rational norm1(std::span<const Rational> v) {
  Rational s;
  for (const auto& x : v) s += abs(x);
  return s;
}

std::size_t denominator_bits(const Rational& a) {
  return mpz_sizeinbase(a.denominator().get_mpz_t(), 2);
}

bool is_normalized(const Rational& a) {
  if (sgn(a.denominator()) <= 0) return false;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.numerator().get_mpz_t(), a.denominator().get_mpz_t());
  return g == 1;
}

RationalVector axpy(std::span<const Rational> a, const Rational& s,
                    std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("axpy: dimension mismatch");
  RationalVector out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + s * b[i]);
  return out;
}

RationalVector sub(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  RationalVector out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
  return out;
}

Rational dist1(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dist1: dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += abs(a[i] - b[i]);
  return s;
}

RationalVector parse_vector(std::string_view text) {
  RationalVector out;
  while (true) {
    auto comma = text.find(',');
    out.push_back(Rational::parse(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace certeuler
