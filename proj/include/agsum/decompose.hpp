// Copyright 2026 The agsum Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "agsum/connected_sum.hpp"

namespace agsum {

// F = M_F * M0 and G = M_G * M0 with disjoint supports of M_F, M_G and
// neither dividing M0.  tau = m_F + m_G (dual monomials on the ring side).
struct MonomialSplit {
  Monomial m0, mf, mg;
  Poly tau;
};
// Tries common divisors M0 from the largest degree down.
std::optional<MonomialSplit> monomial_cs_criterion(const Grading& g, const Monomial& F, const Monomial& G,
                                                  const Field& f = Field::rationals());

struct BinomialDecomposition {
  Poly F, G, tau;  // F_in = F - G
  MonomialSplit split;
  int k = 0;
};

struct ProbeReport {
  std::vector<int> generator_degrees;
  // Socle degrees k of a possible T, from generators in degree d - k.
  std::vector<int> candidates;
  bool k0_ruled_out = false;  // dim C_1 < 2 in the standard grading
  bool totally_indecomposable = false;
  bool binomial_attempted = false;
  std::optional<BinomialDecomposition> binomial;
  std::string note;
};
ProbeReport probe_decomposability(const Grading& g, const Poly& F);

// Congruence diagonalization of a quadratic dual form.  Column j of P gives
// the ring-side form y_j = sum_i P_ij x_i; (y_j y_l) o F = a_j when j = l and 0
// otherwise, so in the dual coordinates Z (X = P Z) F reads sum a_j Z_j^2.
struct QuadraticDiagonal {
  Matrix P;
  Vec diagonal;
  Poly form;  // sum a_i Z_i^2, on the dual side
  int blocks = 0;
};
QuadraticDiagonal diagonalize_quadratic(const Grading& g, const Poly& F);

// K's dual equals sum psi_i (tau o G_i) up to the leading-coefficient normalization.
bool verify_generalized_thom(const InverseSystem& L, const InverseSystem& K, const Vec& psi, const Poly& tau);

// A x_F B and A #_F B for A, B in separate rings, checked against the
// tensor-style presentation degree by degree.
struct ProductPresentation {
  Grading grading;  // variables of A, then those of B
  Poly F, G;        // the duals moved into the joint ring; the sum has dual F - G
  Poly tau;         // tau_A + tau_B
  HilbertFunction fiber_hilbert, sum_hilbert;
  std::vector<int> fiber_generator_degrees, sum_generator_degrees;
  bool fiber_matches = false, sum_matches = false;
  bool standard_graded = false;
};
ProductPresentation product_presentation_over_F(const InverseSystem& A, const InverseSystem& B);

}  // namespace agsum
