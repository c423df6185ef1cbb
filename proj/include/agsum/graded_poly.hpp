// Copyright 2026 The agsum Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "agsum/scalar.hpp"

namespace agsum {

struct Grading {
  std::vector<int> weights;

  Grading() = default;
  explicit Grading(std::vector<int> w);
  static Grading standard(int n) { return Grading(std::vector<int>(n, 1)); }

  int nvars() const { return static_cast<int>(weights.size()); }
  bool is_standard() const;
  int max_weight() const;
  friend bool operator==(const Grading&, const Grading&) = default;
};

struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}
  static Monomial one(int n) { return Monomial(std::vector<int>(n, 0)); }
  static Monomial var(int n, int i, int e = 1);

  int nvars() const { return static_cast<int>(exps.size()); }
  int degree(const Grading& g) const;
  bool divides(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  // Requires divides(o).
  Monomial quotient_of(const Monomial& o) const;
  std::vector<int> support() const;
  bool is_one() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Graded reverse lexicographic, for monomials of one weighted degree:
// the one with the smaller exponent in the last differing variable is larger.
bool grevlex_greater(const Grading& g, const Monomial& a, const Monomial& b);

// All monomials of weighted degree d, largest first in grevlex.
std::vector<Monomial> monomials_of_degree(const Grading& g, int d);

enum class Side { Ring, Dual };

class Poly {
 public:
  Poly() = default;
  Poly(Field f, int nvars, Side side = Side::Ring) : field_(f), nvars_(nvars), side_(side) {}
  static Poly monomial(Field f, const Monomial& m, Side side, const Scalar& c);
  static Poly constant(Field f, int nvars, Side side, const Scalar& c);

  const Field& field() const { return field_; }
  int nvars() const { return nvars_; }
  Side side() const { return side_; }
  Poly with_side(Side s) const;

  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Scalar& c);

  bool is_homogeneous(const Grading& g) const;
  // Degree of a nonzero homogeneous polynomial; throws otherwise.
  int degree(const Grading& g) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Scalar& c) const;
  Poly pow(int e) const;

  // Terms sorted grevlex-descending (by degree first when inhomogeneous).
  std::vector<std::pair<Monomial, Scalar>> sorted_terms(const Grading& g) const;
  // Divide by the leading coefficient (grevlex).  Zero stays zero.
  Poly normalized(const Grading& g) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  Field field_;
  int nvars_ = 0;
  Side side_ = Side::Ring;
  std::map<Monomial, Scalar> terms_;
};

// f o F: x^a o X^b = X^(b-a) when a <= b, else 0.
Poly contract(const Poly& f, const Poly& F);
Scalar eval_at_zero(const Poly& F);
Poly dual_monomial(const Poly& m);

// Substitute images[i] for variable i.  All images share one ring.
Poly substitute(const Poly& f, const std::vector<Poly>& images);

// Coefficient vector of a homogeneous polynomial against a monomial list.
std::vector<Scalar> coefficients(const Poly& f, const std::vector<Monomial>& basis,
                                 const std::map<Monomial, int>& index);
Poly from_coefficients(Field f, Side side, const std::vector<Monomial>& basis,
                       const std::vector<Scalar>& c);

struct VarNames {
  std::vector<std::string> names;
  static VarNames defaults(int n);
};

// Ring side prints lower case names, dual side upper case.
std::string to_string(const Poly& f, const Grading& g, const VarNames& names);
std::string to_string(const Monomial& m, const VarNames& names, Side side);

}  // namespace agsum
