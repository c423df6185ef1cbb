// Copyright 2026 The agsum Authors.
// SPDX-License-Identifier: Apache-2.0

#include "agsum/scalar.hpp"

#include <ostream>

namespace agsum {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class m = z % mpz_class(static_cast<unsigned long>(p));
  if (m < 0) m += static_cast<unsigned long>(p);
  return m.get_ui();
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  // 2^31 keeps products inside 64 bits even without the 128-bit path.
  if (p >= (1ULL << 31) || !is_prime(p))
    throw FieldError("modulus " + std::to_string(p) + " is not a prime below 2^31");
  return Field(p);
}

Scalar Field::zero() const { return Scalar(*this, 0); }
Scalar Field::one() const { return Scalar(*this, 1); }
Scalar Field::from_int(long long n) const { return Scalar(*this, n); }
Scalar Field::from_mpq(const mpq_class& q) const { return Scalar(*this, q); }

std::string Field::to_string() const {
  return p_ == 0 ? "rat" : "fp:" + std::to_string(p_);
}

Scalar::Scalar(const Field& f, long long n) : p_(f.characteristic()) {
  if (p_ == 0) {
    q_ = mpq_class(static_cast<long>(n));
  } else {
    long long m = n % static_cast<long long>(p_);
    if (m < 0) m += static_cast<long long>(p_);
    r_ = static_cast<std::uint64_t>(m);
  }
}

Scalar::Scalar(const Field& f, const mpq_class& q) : p_(f.characteristic()) {
  if (p_ == 0) {
    // Copy through the mpz parts: mpq_set assumes a positive denominator.
    q_ = mpq_class(mpz_class(q.get_num()), mpz_class(q.get_den()));
    q_.canonicalize();
    return;
  }
  std::uint64_t den = reduce_mpz(q.get_den(), p_);
  if (den == 0)
    throw FieldError("denominator of " + q.get_str() + " vanishes mod " + std::to_string(p_));
  r_ = mulmod(reduce_mpz(q.get_num(), p_), powmod(den, p_ - 2, p_), p_);
}

Field Scalar::field() const {
  return Field(p_);
}

bool Scalar::is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

void Scalar::check_same(const Scalar& o) const {
  if (p_ != o.p_)
    throw FieldError("field mismatch: " + std::to_string(p_) + " vs " + std::to_string(o.p_));
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar r = *this;
  if (p_ == 0) r.q_ += o.q_;
  else r.r_ = (r_ + o.r_) % p_;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar r = *this;
  if (p_ == 0) r.q_ -= o.q_;
  else r.r_ = (r_ + p_ - o.r_) % p_;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar r = *this;
  if (p_ == 0) r.q_ *= o.q_;
  else r.r_ = mulmod(r_, o.r_, p_);
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  Scalar r = *this;
  if (p_ == 0) r.q_ = 1 / q_;
  else r.r_ = powmod(r_, p_ - 2, p_);
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  return *this * o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (p_ == 0) r.q_ = -q_;
  else r.r_ = (p_ - r_) % p_;
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::optional<Scalar> Scalar::sqrt() const {
  if (is_zero()) return *this;
  if (p_ == 0) {
    if (sgn(q_) < 0) return std::nullopt;
    mpz_class n = q_.get_num(), d = q_.get_den();
    mpz_class sn = ::sqrt(n), sd = ::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Scalar(field(), mpq_class(sn, sd));
  }
  if (p_ == 2) return *this;
  if (powmod(r_, (p_ - 1) / 2, p_) != 1) return std::nullopt;
  for (std::uint64_t x = 1; x < p_; ++x)
    if (mulmod(x, x, p_) == r_) {
      Scalar s = *this;
      s.r_ = x;
      return s;
    }
  return std::nullopt;
}

std::string Scalar::to_string() const {
  return p_ == 0 ? q_.get_str() : std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace agsum
