// Copyright 2026 The agsum Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "agsum/scalar.hpp"

namespace agsum {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, int n);
Vec unit_vec(const Field& f, int n, int i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Scalar& c);
Vec concat(const Vec& a, const Vec& b);

class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, int rows, int cols);
  static Matrix identity(const Field& f, int n);
  static Matrix from_columns(const Field& f, int rows, const std::vector<Vec>& cols);
  static Matrix from_rows(const Field& f, int cols, const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  Vec row(int r) const;
  Vec col(int c) const;
  std::vector<Vec> columns() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  bool is_zero() const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  Field field_;
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

struct Rref {
  Matrix reduced;
  std::vector<int> pivots;
  int rank = 0;
  // transform * original == reduced; only filled on request.
  Matrix transform;
};

Rref rref(const Matrix& m, bool with_transform = false);
int rank(const Matrix& m);
std::vector<Vec> kernel_basis(const Matrix& m);
// Free variables are set to zero.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

struct SubspaceDims {
  int dim_u = 0, dim_v = 0, dim_sum = 0, dim_intersection = 0;
};
SubspaceDims subspace_dims(const Field& f, int ambient, const std::vector<Vec>& u,
                           const std::vector<Vec>& v);

int span_rank(const Field& f, int ambient, const std::vector<Vec>& vs);
// A basis of span(vs), taken from vs itself, in order.
std::vector<Vec> independent_subset(const Field& f, int ambient, const std::vector<Vec>& vs);
// Extends an independent list by standard unit vectors to a basis of F^ambient;
// returns only the added unit-vector indices.
std::vector<int> complement_units(const Field& f, int ambient, const std::vector<Vec>& vs);

// Coordinates with respect to independent columns, via a cached reduction.
class ColumnSpace {
 public:
  ColumnSpace() = default;
  ColumnSpace(const Field& f, int ambient, const std::vector<Vec>& basis);
  int dim() const { return dim_; }
  int ambient() const { return ambient_; }
  std::optional<Vec> coordinates(const Vec& v) const;
  bool contains(const Vec& v) const { return coordinates(v).has_value(); }

 private:
  Field field_;
  int ambient_ = 0, dim_ = 0;
  Matrix transform_;
};

}  // namespace agsum
