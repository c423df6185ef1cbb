// Copyright 2026 The agsum Authors.
// SPDX-License-Identifier: Apache-2.0

#include "agsum/graded_algebra.hpp"

#include <numeric>

namespace agsum {

GradedAlgebra::GradedAlgebra(Field f, std::vector<int> dims, const Product& product,
                             Matrix orientation)
    : field_(f), dims_(std::move(dims)), orientation_(std::move(orientation)) {
  while (!dims_.empty() && dims_.back() == 0) dims_.pop_back();
  if (dims_.empty() || dims_[0] != 1) throw Error("graded algebra must have A_0 = F");
  int d = top_degree();
  if (orientation_.rows() != dims_[d]) throw Error("orientation must be defined on the top degree");
  table_.assign(d + 1, {});
  for (int i = 0; i <= d; ++i) {
    table_[i].assign(d + 1 - i, {});
    for (int j = 0; i + j <= d; ++j) {
      auto& t = table_[i][j];
      t.reserve(static_cast<std::size_t>(dims_[i]) * dims_[j]);
      for (int p = 0; p < dims_[i]; ++p)
        for (int q = 0; q < dims_[j]; ++q) {
          // Commutativity lets us reuse the transposed entry.
          if (j < i) t.push_back(table_[j][i][static_cast<std::size_t>(q) * dims_[i] + p]);
          else t.push_back(product(i, p, j, q));
        }
    }
  }
}

int GradedAlgebra::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

HilbertFunction GradedAlgebra::hilbert() const {
  return HilbertFunction(std::vector<long>(dims_.begin(), dims_.end()));
}

const Vec& GradedAlgebra::table(int i, int p, int j, int q) const {
  return table_[i][j][static_cast<std::size_t>(p) * dims_[j] + q];
}

Vec GradedAlgebra::one() const { return Vec{field_.one()}; }

Vec GradedAlgebra::multiply(int i, const Vec& a, int j, const Vec& b) const {
  int k = i + j;
  Vec out = zero_vec(field_, dim(k));
  if (k > top_degree() || i < 0 || j < 0) return out;
  for (int p = 0; p < dims_[i]; ++p) {
    if (a[p].is_zero()) continue;
    for (int q = 0; q < dims_[j]; ++q) {
      if (b[q].is_zero()) continue;
      Scalar c = a[p] * b[q];
      const Vec& t = table(i, p, j, q);
      for (int r = 0; r < dims_[k]; ++r)
        if (!t[r].is_zero()) out[r] += c * t[r];
    }
  }
  return out;
}

Matrix GradedAlgebra::mult_by(int i, const Vec& a, int j) const {
  Matrix m(field_, dim(i + j), dim(j));
  if (dim(i + j) == 0 || dim(j) == 0) return m;
  for (int q = 0; q < dims_[j]; ++q) {
    Vec col = multiply(i, a, j, unit_vec(field_, dims_[j], q));
    for (int r = 0; r < m.rows(); ++r) m.at(r, q) = col[r];
  }
  return m;
}

Vec GradedAlgebra::power(int i, const Vec& a, int e) const {
  Vec r = one();
  int deg = 0;
  for (int k = 0; k < e; ++k) {
    r = multiply(deg, r, i, a);
    deg += i;
  }
  return r;
}

Vec GradedAlgebra::integral(const Vec& top) const {
  return orientation_.transpose() * top;
}

std::vector<std::vector<Vec>> GradedAlgebra::socle() const {
  int d = top_degree();
  std::vector<std::vector<Vec>> out(d + 1);
  for (int i = 0; i <= d; ++i) {
    // Stack the maps a -> a*b over every basis element b of positive degree.
    std::vector<Vec> rows;
    for (int j = 1; i + j <= d; ++j)
      for (int q = 0; q < dims_[j]; ++q) {
        Matrix m = mult_by(j, unit_vec(field_, dims_[j], q), i);
        for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
      }
    if (rows.empty()) {
      for (int p = 0; p < dims_[i]; ++p) out[i].push_back(unit_vec(field_, dims_[i], p));
    } else {
      out[i] = kernel_basis(Matrix::from_rows(field_, dims_[i], rows));
    }
  }
  return out;
}

int GradedAlgebra::socle_dim() const {
  int n = 0;
  for (const auto& v : socle()) n += static_cast<int>(v.size());
  return n;
}

bool GradedAlgebra::is_level() const {
  auto s = socle();
  for (int i = 0; i < top_degree(); ++i)
    if (!s[i].empty()) return false;
  return true;
}

bool GradedAlgebra::pairing_nondegenerate() const {
  int d = top_degree();
  for (int i = 0; i <= d; ++i) {
    // Row p: the values int(e_p * e_q) over q and orientation components.
    std::vector<Vec> rows;
    for (int p = 0; p < dims_[i]; ++p) {
      Vec row;
      for (int q = 0; q < dims_[d - i]; ++q) {
        Vec prod = multiply(i, unit_vec(field_, dims_[i], p), d - i, unit_vec(field_, dims_[d - i], q));
        Vec v = integral(prod);
        row.insert(row.end(), v.begin(), v.end());
      }
      rows.push_back(row);
    }
    int width = dims_[d - i] * orientation_.cols();
    if (span_rank(field_, width, rows) != dims_[i]) return false;
  }
  return true;
}

HilbertFunction GradedAlgebra::generated_by_degree_one() const {
  int d = top_degree();
  std::vector<long> h(d + 1, 0);
  h[0] = 1;
  std::vector<Vec> cur{one()};
  for (int i = 1; i <= d; ++i) {
    std::vector<Vec> next;
    for (const auto& a : cur)
      for (int q = 0; q < dim(1); ++q) next.push_back(multiply(i - 1, a, 1, unit_vec(field_, dims_[1], q)));
    cur = independent_subset(field_, dims_[i], next);
    h[i] = static_cast<long>(cur.size());
  }
  return HilbertFunction(h);
}

}  // namespace agsum
