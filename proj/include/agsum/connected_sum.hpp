// Copyright 2026 The agsum Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "agsum/graded_algebra.hpp"
#include "agsum/inverse_system.hpp"

namespace agsum {

// tau in Q_{d-k} with tau o F = H, plus a basis of Ann(F)_{d-k}: every
// solution is tau + span(coset).
struct ThomSolution {
  Poly tau;
  std::vector<Poly> coset;
};

// Empty when no tau exists, i.e. when Q/Ann(F) -> Q/Ann(H) is not a
// well-defined surjection.  Throws when deg H > deg F.
std::optional<ThomSolution> thom_class(const Grading& g, const Poly& F, const Poly& H);

// pi: A -> T, an algebra surjection of Gorenstein algebras given by images
// of the variables of A (polynomials in the ring of T).
class OrientedSurjection {
 public:
  // Identity on variables: A and T live in the same ring.
  static OrientedSurjection natural(std::shared_ptr<const InverseSystem> a,
                                    std::shared_ptr<const InverseSystem> t);
  static OrientedSurjection from_map(std::shared_ptr<const InverseSystem> a,
                                     std::shared_ptr<const InverseSystem> t,
                                     std::vector<Poly> images);

  const InverseSystem& source() const { return *a_; }
  const InverseSystem& target() const { return *t_; }
  std::shared_ptr<const InverseSystem> source_ptr() const { return a_; }
  std::shared_ptr<const InverseSystem> target_ptr() const { return t_; }
  const std::vector<Poly>& images() const { return images_; }
  int d() const { return a_->socle_degree(); }
  int k() const { return t_->socle_degree(); }

  // Matrix of pi from A_i to T_i in standard-monomial coordinates.
  const Matrix& matrix(int i) const { return mats_[i]; }
  Vec apply(int i, const Vec& a) const;
  Poly apply(const Poly& f) const { return substitute(f, images_); }

  // Thom class from the pairing: int_A(tau a) = int_T(pi(a)) on A_k.
  const Vec& thom_coords() const { return thom_; }
  Poly thom_poly() const { return a_->lift(d() - k(), thom_); }

  // Some preimage of t in A_i.
  Vec lift(int i, const Vec& t) const;

 private:
  std::shared_ptr<const InverseSystem> a_, t_;
  std::vector<Poly> images_;
  std::vector<Matrix> mats_;
  GradedAlgebra alg_a_;
  Vec thom_;
  friend Vec gysin_apply(const OrientedSurjection& pi, int j, const Vec& t);
};

// iota(t) = tau * (any lift of t), from T_j to A_{j+d-k}.
Vec gysin_apply(const OrientedSurjection& pi, int j, const Vec& t);

struct CsCertificate {
  bool verdict = false;
  Poly tau;
  int k = 0;
  std::optional<Poly> H;  // tau o F, when nonzero
  bool condition_a = false;
  bool condition_b = false;
  std::optional<int> failing_degree;
  long dim_sum_at_failure = 0;      // dim(Ann(F)_j + Ann(G)_j)
  long dim_ann_h_at_failure = 0;    // dim Ann(H)_j
  HilbertFunction hilbert_actual;     // of Q/Ann(F - G)
  HilbertFunction hilbert_predicted;  // H(A) + H(B) - H(T) - H(T)[d-k]
};

// Conditions (a) and (b) for F - G to be the connected sum over T = Q/Ann(tau o F).
// When the verdict holds, also checks Ann(F-G)_j = (Ann(F,G) + (tau))_j for
// j <= d and throws InternalError if that fails.
CsCertificate check_connected_sum(const Grading& g, const Poly& F, const Poly& G, const Poly& tau);

InverseSystem fibered_product_dual(const Grading& g, const Poly& F, const Poly& G);
// Throws unless check_connected_sum accepts.
InverseSystem connected_sum_dual(const Grading& g, const Poly& F, const Poly& G, const Poly& tau);

// pi_A(tau_A) != pi_B(tau_B): no total Thom class.
struct ThomMismatch : Error {
  ThomMismatch(Poly a, Poly b, const std::string& msg) : Error(msg), pi_a(std::move(a)), pi_b(std::move(b)) {}
  Poly pi_a, pi_b;  // in the ring of T
};

// A fibered product D inside A (+) B, or the connected sum C = D / <(tau_A, tau_B)>.
class GradedSubquotient {
 public:
  enum class Kind { FiberedProduct, ConnectedSum };

  Kind kind() const { return kind_; }
  const GradedAlgebra& algebra() const { return alg_; }
  HilbertFunction hilbert() const { return alg_.hilbert(); }
  int d() const { return pa_->d(); }
  int k() const { return pa_->k(); }
  const OrientedSurjection& pi_a() const { return *pa_; }
  const OrientedSurjection& pi_b() const { return *pb_; }
  const InverseSystem& a() const { return pa_->source(); }
  const InverseSystem& b() const { return pb_->source(); }
  const InverseSystem& t() const { return pa_->target(); }

  // Basis of D_i as vectors of A_i (+) B_i coordinates.
  const std::vector<Vec>& fiber_basis(int i) const { return fiber_[i]; }
  // Basis of <(tau_A, tau_B)>_i in D_i coordinates (connected sum only).
  const std::vector<Vec>& ideal_basis(int i) const { return ideal_[i]; }

  // The class of (a, b) in this algebra; throws if pi_A(a) != pi_B(b).
  Vec element(int i, const Vec& a, const Vec& b) const;
  // For A, B in one ring with natural maps: the class of (f, f).
  Vec element_of(const Poly& f) const;
  // The pair (tau_A, tau_B) in D_{d-k} coordinates.
  Vec thom_pair() const;

 private:
  friend GradedSubquotient fibered_product_structural(const OrientedSurjection&, const OrientedSurjection&);
  friend GradedSubquotient connected_sum_structural(const GradedSubquotient&);
  Vec fiber_coords(int i, const Vec& ab) const;

  Kind kind_ = Kind::FiberedProduct;
  std::shared_ptr<const OrientedSurjection> pa_, pb_;
  std::vector<std::vector<Vec>> fiber_;
  std::vector<ColumnSpace> fiber_space_;
  std::vector<std::vector<Vec>> ideal_;
  std::vector<std::vector<Vec>> reps_;       // quotient representatives in D coordinates
  std::vector<ColumnSpace> quotient_space_;  // columns: ideal then reps
  GradedAlgebra alg_;
};

GradedSubquotient fibered_product_structural(const OrientedSurjection& pa, const OrientedSurjection& pb);
// Throws ThomMismatch when pi_A(tau_A) != pi_B(tau_B).
GradedSubquotient connected_sum_structural(const GradedSubquotient& d);

// A presentation Qhat / Ann(G_1..G_r) of an oriented level algebra: generators
// are chosen degree by degree to fill what lower generators miss, and
// G_c = sum over monomials m of Qhat_d of int_c(m) m*.
struct DualPresentation {
  Grading grading;
  std::vector<int> generator_degrees;
  std::vector<Vec> generators;  // coordinates in the algebra
  std::vector<Poly> duals;
};
DualPresentation dual_presentation(const GradedAlgebra& a);

}  // namespace agsum
