// Copyright 2026 The agsum Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "agsum/graded_algebra.hpp"
#include "agsum/graded_poly.hpp"
#include "agsum/hilbert.hpp"
#include "agsum/linalg.hpp"

namespace agsum {

// A class in A_i, stored as its contractions (f o G_1, ..., f o G_m).
struct AlgebraElement {
  int degree = 0;
  std::vector<Poly> normal_form;
  std::optional<Poly> representative;

  bool is_zero() const;
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.degree == b.degree && a.normal_form == b.normal_form;
  }
};

// A = Q / Ann(G_1, ..., G_m) for homogeneous duals of one degree d.
class InverseSystem {
 public:
  static InverseSystem build(const Grading& g, std::vector<Poly> duals);

  const Grading& grading() const { return grading_; }
  const Field& field() const { return field_; }
  int nvars() const { return grading_.nvars(); }
  const std::vector<Poly>& duals() const { return duals_; }
  int socle_degree() const { return d_; }
  int type() const { return static_cast<int>(duals_.size()); }

  HilbertFunction hilbert() const;
  int dim(int i) const;

  // Monomial basis of Q_i (grevlex-descending).
  std::vector<Monomial> q_basis(int i) const;
  // Standard monomials: the basis of A_i used for coordinates.
  const std::vector<Monomial>& standard_monomials(int i) const;

  // Basis of Ann_i, as polynomials and as coordinates over q_basis(i).
  std::vector<Poly> ann_component(int i) const;
  std::vector<Vec> ann_coords(int i) const;
  bool annihilates(const Poly& f) const;

  std::vector<int> min_generator_degrees() const;
  // One minimal generating set, degree by degree.
  std::vector<Poly> min_generators() const;

  AlgebraElement element(const Poly& f) const;           // f nonzero homogeneous
  AlgebraElement element(int i, const Poly& f) const;    // f in Q_i, may be zero
  AlgebraElement from_coordinates(int i, const Vec& c) const;
  Vec coordinates(int i, const Poly& f) const;
  Vec coordinates(const AlgebraElement& a) const;
  Poly lift(int i, const Vec& c) const;
  Poly lift(const AlgebraElement& a) const;

  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  Vec orientation(const AlgebraElement& a) const;
  std::vector<std::vector<AlgebraElement>> socle() const;
  bool level_pairing_nondegenerate() const;

  // Structure constants on the standard monomial bases.
  GradedAlgebra algebra() const;

 private:
  struct Piece {
    std::vector<Monomial> q_basis;
    std::map<Monomial, int> q_index;
    std::vector<Monomial> r_basis;  // R_{d-i}
    std::map<Monomial, int> r_index;
    Matrix catalecticant;           // (m * |R_{d-i}|) x |Q_i|
    int rank = 0;
    std::vector<Vec> kernel;
    std::vector<Monomial> standard;
    Matrix coord_map;               // rank x rows: normal form -> coordinates
  };
  Vec normal_vector(int i, const Poly& f) const;
  std::vector<Poly> normal_polys(int i, const Vec& nv) const;

  Grading grading_;
  Field field_;
  std::vector<Poly> duals_;
  int d_ = 0;
  std::vector<Piece> pieces_;
};

}  // namespace agsum
