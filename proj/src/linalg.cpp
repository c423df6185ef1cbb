// Copyright 2026 The agsum Authors.
// SPDX-License-Identifier: Apache-2.0

#include "agsum/linalg.hpp"

#include <algorithm>

namespace agsum {

Vec zero_vec(const Field& f, int n) { return Vec(n, f.zero()); }

Vec unit_vec(const Field& f, int n, int i) {
  Vec v = zero_vec(f, n);
  v[i] = f.one();
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Vec& a, const Scalar& c) {
  Vec r = a;
  for (auto& x : r) x *= c;
  return r;
}

Vec concat(const Vec& a, const Vec& b) {
  Vec r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Matrix::Matrix(const Field& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * cols, f.zero()) {}

Matrix Matrix::identity(const Field& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::from_columns(const Field& f, int rows, const std::vector<Vec>& cols) {
  Matrix m(f, rows, static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols_; ++c) {
    if (static_cast<int>(cols[c].size()) != rows) throw Error("column length mismatch");
    for (int r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(const Field& f, int cols, const std::vector<Vec>& rows) {
  Matrix m(f, static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw Error("row length mismatch");
    for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(int r) const {
  return Vec(a_.begin() + static_cast<std::ptrdiff_t>(r) * cols_,
             a_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_);
}

Vec Matrix::col(int c) const {
  Vec v;
  v.reserve(rows_);
  for (int r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

std::vector<Vec> Matrix::columns() const {
  std::vector<Vec> out;
  for (int c = 0; c < cols_; ++c) out.push_back(col(c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix product dimension mismatch");
  Matrix m(field_, rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& x = at(r, k);
      if (x.is_zero()) continue;
      for (int c = 0; c < o.cols_; ++c)
        if (!o.at(k, c).is_zero()) m.at(r, c) += x * o.at(k, c);
    }
  return m;
}

Vec Matrix::operator*(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error("matrix-vector dimension mismatch");
  Vec out = zero_vec(field_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Rref rref(const Matrix& m, bool with_transform) {
  Rref out;
  Matrix a = m;
  Matrix t = with_transform ? Matrix::identity(m.field(), m.rows()) : Matrix();
  int row = 0;
  for (int c = 0; c < a.cols() && row < a.rows(); ++c) {
    int p = -1;
    for (int r = row; r < a.rows(); ++r)
      if (!a.at(r, c).is_zero()) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row) {
      for (int k = 0; k < a.cols(); ++k) std::swap(a.at(p, k), a.at(row, k));
      if (with_transform)
        for (int k = 0; k < t.cols(); ++k) std::swap(t.at(p, k), t.at(row, k));
    }
    Scalar inv = a.at(row, c).inverse();
    for (int k = 0; k < a.cols(); ++k) a.at(row, k) *= inv;
    if (with_transform)
      for (int k = 0; k < t.cols(); ++k) t.at(row, k) *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || a.at(r, c).is_zero()) continue;
      Scalar f = a.at(r, c);
      for (int k = c; k < a.cols(); ++k)
        if (!a.at(row, k).is_zero()) a.at(r, k) -= f * a.at(row, k);
      if (with_transform)
        for (int k = 0; k < t.cols(); ++k)
          if (!t.at(row, k).is_zero()) t.at(r, k) -= f * t.at(row, k);
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.rank = row;
  out.reduced = std::move(a);
  out.transform = std::move(t);
  return out;
}

int rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return rref(m).rank;
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = unit_vec(m.field(), m.cols(), free);
    for (int i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw Error("solve: right-hand side length mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  Rref red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
  Vec x = zero_vec(m.field(), m.cols());
  for (int i = 0; i < red.rank; ++i) x[red.pivots[i]] = red.reduced.at(i, m.cols());
  return x;
}

int span_rank(const Field& f, int ambient, const std::vector<Vec>& vs) {
  if (vs.empty() || ambient == 0) return 0;
  return rank(Matrix::from_rows(f, ambient, vs));
}

SubspaceDims subspace_dims(const Field& f, int ambient, const std::vector<Vec>& u,
                           const std::vector<Vec>& v) {
  for (const auto& x : u)
    if (static_cast<int>(x.size()) != ambient) throw Error("subspace_dims: ambient mismatch");
  for (const auto& x : v)
    if (static_cast<int>(x.size()) != ambient) throw Error("subspace_dims: ambient mismatch");
  SubspaceDims d;
  d.dim_u = span_rank(f, ambient, u);
  d.dim_v = span_rank(f, ambient, v);
  std::vector<Vec> both = u;
  both.insert(both.end(), v.begin(), v.end());
  d.dim_sum = span_rank(f, ambient, both);
  d.dim_intersection = d.dim_u + d.dim_v - d.dim_sum;
  return d;
}

std::vector<Vec> independent_subset(const Field& f, int ambient, const std::vector<Vec>& vs) {
  if (vs.empty()) return {};
  Rref r = rref(Matrix::from_columns(f, ambient, vs));
  std::vector<Vec> out;
  for (int p : r.pivots) out.push_back(vs[p]);
  return out;
}

std::vector<int> complement_units(const Field& f, int ambient, const std::vector<Vec>& vs) {
  std::vector<Vec> cols = vs;
  for (int i = 0; i < ambient; ++i) cols.push_back(unit_vec(f, ambient, i));
  Rref r = rref(Matrix::from_columns(f, ambient, cols));
  std::vector<int> out;
  for (int p : r.pivots)
    if (p >= static_cast<int>(vs.size())) out.push_back(p - static_cast<int>(vs.size()));
  return out;
}

ColumnSpace::ColumnSpace(const Field& f, int ambient, const std::vector<Vec>& basis)
    : field_(f), ambient_(ambient), dim_(static_cast<int>(basis.size())) {
  Matrix b = Matrix::from_columns(f, ambient, basis);
  Rref r = rref(b, true);
  if (r.rank != dim_) throw Error("ColumnSpace: basis vectors are dependent");
  transform_ = r.transform;
}

std::optional<Vec> ColumnSpace::coordinates(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw Error("ColumnSpace: ambient mismatch");
  Vec e = transform_ * v;
  for (int i = dim_; i < ambient_; ++i)
    if (!e[i].is_zero()) return std::nullopt;
  e.resize(dim_);
  return e;
}

}  // namespace agsum
