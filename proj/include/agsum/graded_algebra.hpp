// Copyright 2026 The agsum Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

#include "agsum/hilbert.hpp"
#include "agsum/linalg.hpp"

namespace agsum {

// A finite-dimensional graded commutative algebra given by per-degree bases,
// structure constants, and an orientation on the top degree.  Every algebra
// the library builds (inverse systems, fibered products, connected sums) can
// be flattened to one of these, and the Lefschetz code works on this form.
class GradedAlgebra {
 public:
  using Product = std::function<Vec(int i, int p, int j, int q)>;

  GradedAlgebra() = default;
  // product(i, p, j, q): basis p of degree i times basis q of degree j, in
  // coordinates of degree i+j.  orientation: dims[top] x type matrix.
  GradedAlgebra(Field f, std::vector<int> dims, const Product& product, Matrix orientation);

  const Field& field() const { return field_; }
  int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
  int dim(int i) const { return i >= 0 && i <= top_degree() ? dims_[i] : 0; }
  int total_dim() const;
  HilbertFunction hilbert() const;
  // Number of orientation components (2 for a fibered product, 1 for AG).
  int orientation_rank() const { return orientation_.cols(); }

  Vec one() const;
  Vec multiply(int i, const Vec& a, int j, const Vec& b) const;
  // Matrix of b -> a*b from degree j to degree i+j.
  Matrix mult_by(int i, const Vec& a, int j) const;
  // e-th power of a degree-i element.
  Vec power(int i, const Vec& a, int e) const;
  Vec integral(const Vec& top) const;

  // Per-degree bases (as coordinate vectors) of the socle.
  std::vector<std::vector<Vec>> socle() const;
  int socle_dim() const;
  bool is_level() const;
  bool pairing_nondegenerate() const;
  // dim of the subalgebra generated by the degree-1 part, per degree.
  HilbertFunction generated_by_degree_one() const;

 private:
  const Vec& table(int i, int p, int j, int q) const;
  Field field_;
  std::vector<int> dims_;
  // table_[i][j][p * dims[j] + q]
  std::vector<std::vector<std::vector<Vec>>> table_;
  Matrix orientation_;
};

}  // namespace agsum
