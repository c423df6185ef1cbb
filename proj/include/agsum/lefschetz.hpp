// Copyright 2026 The agsum Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "agsum/connected_sum.hpp"
#include "agsum/graded_algebra.hpp"
#include "agsum/hilbert.hpp"
#include "agsum/inverse_system.hpp"

namespace agsum {

// Linear forms are coordinate vectors in the algebra's degree-1 basis.

// Matrix of multiplication by l^e from A_i to A_{i+e}.
Matrix mult_map(const GradedAlgebra& a, const Vec& ell, int e, int i);

// l = sum c_i x_i over the weight-1 variables, in A_1 coordinates.
Vec linear_form(const InverseSystem& a, const Poly& ell);

struct LefschetzReport {
  Vec ell;
  bool wlp = false;
  bool slp = false;
  // First (i, e) where x l^e: A_i -> A_{i+e} is not of maximal rank.
  std::optional<std::pair<int, int>> wlp_failure, slp_failure;
  // Set when H(A) is symmetric: x l^(d-2i): A_i -> A_{d-i} bijective for all i.
  std::optional<bool> narrow_sense_slp;
  bool no_linear_forms = false;  // A_1 = 0; verdicts come from l = 0
  bool char_sensitive = false;   // F_p with p <= socle degree
  std::vector<std::string> warnings;
};

// Every (i, e) with i + e <= d.
LefschetzReport slp_check(const GradedAlgebra& a, const Vec& ell);
bool wlp_check(const GradedAlgebra& a, const Vec& ell);

struct JordanType {
  Partition partition;
  Vec ell;
  std::vector<long> ranks;  // ranks[s] = rank of x l^s on all of A
  // The partition equals the conjugate of the sorted Hilbert function.
  bool conjugate_of_hilbert = false;
  // Sampling metadata; trials == 0 for a given form.
  int trials = 0;
  std::uint64_t seed = 0;
  bool observed_generic = false;
};

// Also checks that conjugate_of_hilbert agrees with slp_check.
JordanType jordan_type(const GradedAlgebra& a, const Vec& ell);

struct GenericLefschetz {
  LefschetzReport report;  // best verdict; its ell is the witness
  JordanType jordan;       // dominance-maximal over the trials
  std::vector<Vec> sampled;
};

constexpr int kDefaultTrials = 5;
constexpr std::uint64_t kDefaultSeed = 20190417;

// Integer coordinates in [-10, 10], never all zero.  Throws when A_1 = 0.
GenericLefschetz generic_lefschetz(const GradedAlgebra& a, int trials = kDefaultTrials,
                                   std::uint64_t seed = kDefaultSeed);
// Same, drawing coefficients per weight-1 variable.
GenericLefschetz generic_lefschetz(const InverseSystem& a, int trials = kDefaultTrials,
                                   std::uint64_t seed = kDefaultSeed);

// Maximal-rank test at the middle degrees only: x l injective D_{u-1} -> D_u
// and surjective D_{v-1} -> D_v.
struct MiddleCheck {
  int u = 0, v = 0;
  bool injective_u = false, surjective_v = false;
  bool result = false;
  bool full_wlp = false;
};
// Requires standard-graded A, B and k < floor((d-1)/2).
MiddleCheck wlp_middle_check(const GradedSubquotient& d, const Vec& ell);

// B = T[x]/(x^(d-k+1)) with dual H X^(d-k); x is appended to T's variables.
struct BlowupResult {
  std::shared_ptr<const InverseSystem> b;
  std::shared_ptr<const OrientedSurjection> pi_b;
  GradedSubquotient fiber, sum;
  GenericLefschetz fiber_lefschetz, sum_lefschetz;
};
BlowupResult blowup_cs(std::shared_ptr<const OrientedSurjection> pi_a, int trials = kDefaultTrials,
                       std::uint64_t seed = kDefaultSeed);

// A #_T B with T = F[y]/(y^(k+1)), B = F[x,y]/(x^(d-k+1), y^(k+1)) and
// pi_A(x_i) = lambda_i y where lambda(l) = 1.
struct ClosureResult {
  Vec lambda;  // per variable of A
  std::shared_ptr<const OrientedSurjection> pi_a, pi_b;
  GradedSubquotient sum;
  HilbertFunction predicted;  // H(A) + W(k, d)
  GenericLefschetz lefschetz;
};
ClosureResult closure_add(std::shared_ptr<const InverseSystem> a, const Poly& ell, int k,
                          std::optional<Vec> lambda = std::nullopt, int trials = kDefaultTrials,
                          std::uint64_t seed = kDefaultSeed);

// C with Jordan type (a, a) for u: basis u^i, u^i v with deg v = t.
struct TwoBlockClass {
  int a = 0, t = 0;
  // 1: F[u,v]/(u^a, v^2);  2: F[u,v]/(u^a, v^2 - u^t v);  0: undecided.
  int type = 0;
  bool extension_required = false;
  Scalar alpha, beta;  // v^2 = alpha u^t v + beta u^(2t)
  Vec u, v;            // v adjusted so the defining relation holds exactly
  bool slp = false, standard_graded = false, t_is_one = false;
  std::string note;
};
// Without u, the generic form must give two equal parts.
TwoBlockClass two_block_classify(const GradedAlgebra& c, std::optional<Vec> u = std::nullopt,
                                 int trials = kDefaultTrials, std::uint64_t seed = kDefaultSeed);

// F[z1,z2] with deg z2 = t and dual sum_j Z1^(m-1-jt) Z2^j, 1 <= j < ceil(m/t).
InverseSystem nonslp_family(int m, int t, const Field& f = Field::rationals());
// A = F[x]/(x^m), B = F[y]/(y^m) over T = F[z]/(z^t), built structurally.
GradedSubquotient nonslp_structural(int m, int t, const Field& f = Field::rationals());
// (1^t, 2^(m-2t), 1^t), (1^m) or (1^(m-t), 0^(2t-m), 1^(m-t)).
HilbertFunction nonslp_hilbert(int m, int t);

// Variables s, x, y; dual S^a Y^b - X^(d-k) Y^k with b = d - a.
struct HeightThree {
  InverseSystem c;
  HilbertFunction predicted;  // H(A) + H(B) - H(T) - H(T)[d-k]
};
HeightThree heightthree_family(int a, int d, int k, const Field& f = Field::rationals());

// A x_F B and A #_F B in the joint ring, tested with l = l_A + l_B.  When
// the sum fails with that form, l_B is replaced by b l_B for the first
// b = 2, 3, ... with b^d != 1 that works.
struct ProductSlp {
  bool fiber_slp = false, sum_slp = false;
  bool sum_slp_unscaled = false;
  Scalar b;  // scale finally used on l_B for the sum
  HilbertFunction fiber_hilbert, sum_hilbert;
};
ProductSlp slp_over_field(const InverseSystem& a, const Vec& ell_a, const InverseSystem& b, const Vec& ell_b);

}  // namespace agsum
