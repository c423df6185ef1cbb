// Copyright 2026 The agsum Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace agsum {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldError : Error {
  using Error::Error;
};

// Raised when a result contradicts a theorem the code relies on.
struct InternalError : Error {
  using Error::Error;
};

class Scalar;

// Either Q or F_p.  p == 0 encodes the rationals.
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long n) const;
  Scalar from_mpq(const mpq_class& q) const;

  std::string to_string() const;
  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

class Scalar {
 public:
  Scalar() = default;  // rational zero
  Scalar(const Field& f, long long n);
  Scalar(const Field& f, const mpq_class& q);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Only meaningful over Q.
  const mpq_class& rational() const { return q_; }
  std::uint64_t residue() const { return r_; }

  // Square root inside the field, if one exists.
  std::optional<Scalar> sqrt() const;

  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;
  mpq_class q_;
  std::uint64_t p_ = 0;
  std::uint64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace agsum
