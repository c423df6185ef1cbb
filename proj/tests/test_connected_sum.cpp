// Copyright 2026 The agsum Authors.
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <gtest/gtest.h>

#include "agsum/connected_sum.hpp"
#include "agsum/poly_parse.hpp"
#include "oracle.hpp"

using namespace agsum;

namespace {

const Field QQ = Field::rationals();

using SysPtr = std::shared_ptr<const InverseSystem>;

SysPtr sys(const VarTable& v, const char* dual) {
  return std::make_shared<InverseSystem>(InverseSystem::build(v.grading, {poly_of(dual, v, Side::Dual)}));
}

Poly R(const char* s, const VarTable& v) { return poly_of(s, v, Side::Ring); }
Poly D(const char* s, const VarTable& v) { return poly_of(s, v, Side::Dual); }

std::vector<Poly> images(const VarTable& target, std::initializer_list<const char*> imgs) {
  std::vector<Poly> out;
  for (const char* s : imgs) out.push_back(R(s, target));
  return out;
}

oracle::Dual to_oracle(const Poly& p) {
  oracle::Dual d;
  for (const auto& [m, c] : p.terms()) d[m.exps] = c.rational();
  return d;
}

// The example with A = F[x,y]/(x^2,y^4), B = F[u,v]/(u^3,v^3), T = F[z]/(z^2).
struct CiOverLine {
  VarTable xy = make_vars({"x", "y"}), uv = make_vars({"u", "v"}), z = make_vars({"z"});
  SysPtr A = sys(xy, "X*Y^3"), B = sys(uv, "U^2*V^2"), T = sys(z, "Z");
  OrientedSurjection pa = OrientedSurjection::from_map(A, T, images(z, {"z", "0"}));
  OrientedSurjection pb = OrientedSurjection::from_map(B, T, images(z, {"z", "0"}));
};

// Weighted example: A = F[x]/(x^4), B = F[u,v]/(u^3,v^2), T = F[z]/(z^2).
struct WeightedCubic {
  VarTable x = make_vars({"x"}), uv = make_vars({"u", "v"}), z = make_vars({"z"});
  SysPtr A = sys(x, "X^3"), B = sys(uv, "U^2*V"), T = sys(z, "Z");
  OrientedSurjection pa = OrientedSurjection::from_map(A, T, images(z, {"z"}));
  OrientedSurjection pb = OrientedSurjection::from_map(B, T, images(z, {"z", "0"}));
};

// Multiplication ranks of x ell on every degree, as a fingerprint.
std::vector<int> ell_ranks(const GradedAlgebra& a, const Vec& ell) {
  std::vector<int> out;
  for (int i = 0; i < a.top_degree(); ++i) out.push_back(rank(a.mult_by(1, ell, i)));
  return out;
}

}  // namespace

TEST(ThomClass, Examples) {
  VarTable v = make_vars({"x", "y", "z"});
  auto t = thom_class(v.grading, D("X^3*Y", v), D("X", v));
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->tau, R("x^2*y", v));
  auto t2 = thom_class(v.grading, D("X*Z^3", v), D("X", v));
  ASSERT_TRUE(t2.has_value());
  EXPECT_EQ(t2->tau, R("z^3", v));

  VarTable w = make_vars({"z1", "z2", "z3"}, {1, 1, 2});
  auto t3 = thom_class(w.grading, D("Z1^3", w), D("Z1", w));
  ASSERT_TRUE(t3.has_value());
  EXPECT_TRUE(contract(t3->tau - R("z1^2", w), D("Z1^3", w)).is_zero());
  // The coset is Ann(Z1^3)_2: z1 z2, z2^2, z3.
  EXPECT_EQ(t3->coset.size(), 3u);
  for (const auto& c : t3->coset) EXPECT_TRUE(contract(c, D("Z1^3", w)).is_zero());
}

TEST(ThomClass, NoSolutionAndErrors) {
  VarTable v = make_vars({"x", "y"});
  EXPECT_FALSE(thom_class(v.grading, D("X^2", v), D("Y", v)).has_value());
  EXPECT_THROW(thom_class(v.grading, D("X", v), D("X^2", v)), Error);
}

TEST(ThomClass, AgreesWithOracleContraction) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> c(-2, 2);
  VarTable v = make_vars({"x", "y", "z"});
  for (int trial = 0; trial < 15; ++trial) {
    Poly F(QQ, 3, Side::Dual), tau(QQ, 3, Side::Ring);
    for (const auto& m : monomials_of_degree(v.grading, 4)) F.add_term(m, QQ.from_int(c(rng)));
    for (const auto& m : monomials_of_degree(v.grading, 1 + trial % 3)) tau.add_term(m, QQ.from_int(c(rng)));
    if (F.is_zero() || tau.is_zero()) continue;
    Poly H = contract(tau, F);
    if (H.is_zero()) continue;
    auto t = thom_class(v.grading, F, H);
    ASSERT_TRUE(t.has_value());
    oracle::Dual got;
    for (const auto& [m, x] : t->tau.terms())
      got = oracle::add(got, oracle::contract(oracle::Dual{{m.exps, x.rational()}}, to_oracle(F)));
    EXPECT_EQ(got, to_oracle(H));
  }
}

TEST(Surjection, PairingThomMatchesDualThom) {
  VarTable v = make_vars({"x", "y", "z"});
  auto A = sys(v, "X^3*Y");
  auto T = sys(v, "X");
  auto pi = OrientedSurjection::natural(A, T);
  EXPECT_EQ(A->coordinates(3, pi.thom_poly()), A->coordinates(3, R("x^2*y", v)));
}

TEST(Surjection, RejectsBadMaps) {
  VarTable xy = make_vars({"x", "y"}), z = make_vars({"z"});
  auto A = sys(xy, "X*Y^3"), T = sys(z, "Z");
  EXPECT_THROW(OrientedSurjection::from_map(A, T, images(z, {"0", "0"})), Error);  // not surjective
  auto T3 = sys(z, "Z^2");
  EXPECT_THROW(OrientedSurjection::from_map(A, T3, images(z, {"z", "0"})), Error);  // x^2 = 0 but z^2 != 0
  EXPECT_THROW(OrientedSurjection::from_map(A, T, images(z, {"z^2", "0"})), Error);  // wrong degree
}

TEST(Gysin, XYOverY) {
  VarTable v = make_vars({"x", "y", "z"});
  auto A = sys(v, "X*Y");
  auto T = sys(v, "Y");
  auto pi = OrientedSurjection::natural(A, T);
  EXPECT_EQ(A->coordinates(1, pi.thom_poly()), A->coordinates(1, R("x", v)));
  EXPECT_EQ(gysin_apply(pi, 0, Vec{QQ.one()}), pi.thom_coords());
  EXPECT_EQ(gysin_apply(pi, 1, T->coordinates(1, R("y", v))), A->coordinates(2, R("x*y", v)));
}

TEST(Check, SharedVariablePair) {
  VarTable v = make_vars({"x", "y", "z"});
  auto c = check_connected_sum(v.grading, D("X^2*Y", v), D("Y^2*Z", v), R("x^2+y*z", v));
  EXPECT_TRUE(c.condition_a);
  EXPECT_TRUE(c.condition_b);
  EXPECT_TRUE(c.verdict);
  EXPECT_EQ(*c.H, D("Y", v));
  EXPECT_EQ(c.hilbert_actual, c.hilbert_predicted);
}

TEST(Check, NotAConnectedSum) {
  VarTable v = make_vars({"x", "y"});
  auto c = check_connected_sum(v.grading, D("X^2", v), D("X*Y", v), R("x^2+x*y", v));
  EXPECT_TRUE(c.condition_a);
  EXPECT_FALSE(c.condition_b);
  EXPECT_FALSE(c.verdict);
  ASSERT_TRUE(c.failing_degree.has_value());
  EXPECT_EQ(*c.failing_degree, 1);
  EXPECT_EQ(c.dim_sum_at_failure, 1);
  EXPECT_EQ(c.dim_ann_h_at_failure, 2);
  EXPECT_EQ(c.hilbert_actual, HilbertFunction({1, 2, 1}));
  EXPECT_EQ(c.hilbert_predicted, HilbertFunction({1, 3, 1}));
}

TEST(Check, CsAndEasy) {
  VarTable v = make_vars({"x", "y", "z"});
  auto c = check_connected_sum(v.grading, D("X*Y", v), D("Y*Z", v), R("x+z", v));
  EXPECT_TRUE(c.verdict);
  EXPECT_EQ(*c.H, D("Y", v));
  auto e = check_connected_sum(v.grading, D("X^3*Y", v), D("X*Z^3", v), R("x^2*y+z^3", v));
  EXPECT_TRUE(e.verdict);
  EXPECT_EQ(e.k, 1);
}

TEST(Check, ConditionAFails) {
  VarTable v = make_vars({"x", "y", "z"});
  auto c = check_connected_sum(v.grading, D("X^3*Y", v), D("X*Z^3", v), R("x^2*y", v));
  EXPECT_FALSE(c.condition_a);
  EXPECT_FALSE(c.verdict);
  EXPECT_THROW(connected_sum_dual(v.grading, D("X^3*Y", v), D("X*Z^3", v), R("x^2*y", v)), Error);
}

TEST(Check, Preconditions) {
  VarTable v = make_vars({"x", "y"});
  EXPECT_THROW(check_connected_sum(v.grading, D("X^2", v), D("2*X^2", v), R("x", v)), Error);
  EXPECT_THROW(check_connected_sum(v.grading, D("X^2", v), D("X*Y^2", v), R("x", v)), Error);
  EXPECT_THROW(check_connected_sum(v.grading, D("X^2", v), D("Y^2", v), R("1", v)), Error);
}

TEST(DualRoute, FibredAndSum) {
  VarTable v = make_vars({"x", "y", "z"});
  auto fp = fibered_product_dual(v.grading, D("X^3*Y", v), D("X*Z^3", v));
  for (const char* g : {"x^4", "y^2", "z^4", "y*z", "x^2*z"}) EXPECT_TRUE(fp.annihilates(R(g, v))) << g;
  // H(A) + H(B) - H(T) = (1,2,2,2,1) + (1,2,2,2,1) - (1,1).
  EXPECT_EQ(fp.hilbert(), HilbertFunction({1, 3, 4, 4, 2}));
  auto cs = connected_sum_dual(v.grading, D("X^3*Y", v), D("X*Z^3", v), R("x^2*y+z^3", v));
  EXPECT_EQ(cs.hilbert(), HilbertFunction({1, 3, 4, 3, 1}));
  EXPECT_TRUE(cs.annihilates(R("x^2*y+z^3", v)));

  VarTable w = make_vars({"z1", "z2", "z3"}, {1, 1, 2});
  auto c3 = connected_sum_dual(w.grading, D("Z1^3", w), D("Z1^2*Z2+Z2*Z3", w), R("z1^2-z3+z1*z2", w));
  EXPECT_EQ(c3.hilbert(), HilbertFunction({1, 2, 2, 1}));

  VarTable u = make_vars({"x", "y"});
  auto mixed = fibered_product_dual(u.grading, D("X^2*Y", u), D("X*Y^2", u));
  for (const char* g : {"x^3", "y^3", "x^2*y^2"}) EXPECT_TRUE(mixed.annihilates(R(g, u)));
}

TEST(Structural, CiOverLineHilbertFunctions) {
  CiOverLine e;
  EXPECT_EQ(e.pa.thom_poly(), R("y^3", e.xy));
  EXPECT_EQ(e.pb.thom_poly(), R("u*v^2", e.uv));
  auto fp = fibered_product_structural(e.pa, e.pb);
  EXPECT_EQ(fp.hilbert(), HilbertFunction({1, 3, 5, 4, 2}));
  EXPECT_EQ(fp.hilbert(), e.A->hilbert() + e.B->hilbert() - e.T->hilbert());
  EXPECT_TRUE(fp.algebra().is_level());
  EXPECT_EQ(fp.algebra().socle_dim(), 2);
  auto cs = connected_sum_structural(fp);
  EXPECT_EQ(cs.hilbert(), HilbertFunction({1, 3, 5, 3, 1}));
  EXPECT_EQ(cs.hilbert(), e.A->hilbert() + e.B->hilbert() - e.T->hilbert() - e.T->hilbert().shifted(3));
  EXPECT_EQ(cs.algebra().socle_dim(), 1);
  EXPECT_TRUE(cs.algebra().pairing_nondegenerate());
}

TEST(Structural, WeightedCubicAgreesWithDualRoute) {
  WeightedCubic e;
  EXPECT_EQ(e.pa.thom_poly(), R("x^2", e.x));
  auto fp = fibered_product_structural(e.pa, e.pb);
  EXPECT_EQ(fp.hilbert(), HilbertFunction({1, 2, 3, 2}));
  auto cs = connected_sum_structural(fp);
  EXPECT_EQ(cs.hilbert(), HilbertFunction({1, 2, 2, 1}));

  // Re-presenting the fibered product finds generators in degrees 1, 1, 2.
  auto pres = dual_presentation(fp.algebra());
  EXPECT_EQ(pres.generator_degrees, (std::vector<int>{1, 1, 2}));
  auto qd = InverseSystem::build(pres.grading, pres.duals);
  EXPECT_EQ(qd.hilbert(), fp.hilbert());
  auto pc = dual_presentation(cs.algebra());
  EXPECT_EQ(InverseSystem::build(pc.grading, pc.duals).hilbert(), cs.hilbert());

  VarTable w = make_vars({"z1", "z2", "z3"}, {1, 1, 2});
  auto dual = InverseSystem::build(w.grading, {D("Z1^3 - Z1^2*Z2 - Z2*Z3", w)});
  EXPECT_EQ(dual.hilbert(), cs.hilbert());
}

TEST(Structural, MixedCubicsHaveNoTotalThomClass) {
  VarTable v = make_vars({"x", "y"});
  auto A = sys(v, "X^2*Y"), B = sys(v, "X*Y^2"), T = sys(v, "X*Y");
  auto pa = OrientedSurjection::natural(A, T), pb = OrientedSurjection::natural(B, T);
  auto fp = fibered_product_structural(pa, pb);
  EXPECT_EQ(fp.hilbert(), InverseSystem::build(v.grading, {D("X^2*Y", v), D("X*Y^2", v)}).hilbert());
  try {
    connected_sum_structural(fp);
    FAIL() << "expected a refusal";
  } catch (const ThomMismatch& m) {
    EXPECT_EQ(T->coordinates(1, m.pi_a), T->coordinates(1, R("x", v)));
    EXPECT_EQ(T->coordinates(1, m.pi_b), T->coordinates(1, R("y", v)));
  }
}

TEST(Structural, Errors) {
  CiOverLine e;
  // Same Hilbert function as T but a different ring.
  VarTable w = make_vars({"w1", "w2"});
  auto other = sys(w, "W1");
  auto pc = OrientedSurjection::from_map(e.A, other, images(w, {"w1", "0"}));
  EXPECT_THROW(fibered_product_structural(pc, e.pb), Error);
  VarTable uv = make_vars({"u", "v"});
  auto B5 = sys(uv, "U^3*V^2");
  auto pb5 = OrientedSurjection::from_map(B5, e.T, images(e.z, {"z", "0"}));
  EXPECT_THROW(fibered_product_structural(e.pa, pb5), Error);
  auto fp = fibered_product_structural(e.pa, e.pb);
  auto cs = connected_sum_structural(fp);
  EXPECT_THROW(connected_sum_structural(cs), Error);
  EXPECT_THROW(fp.element(1, Vec{QQ.one(), QQ.zero()}, Vec{QQ.zero(), QQ.zero()}), Error);
}

// Connected-sum instances in one ring: structural sum over natural maps against Q/Ann(F-G).
TEST(Structural, DualRouteEquivalence) {
  struct Case {
    std::vector<std::string> names;
    std::vector<int> weights;
    const char *F, *G, *tau;
  };
  std::vector<Case> cases{
      {{"x", "y", "z"}, {}, "X^2*Y", "Y^2*Z", "x^2+y*z"},
      {{"x", "y", "z"}, {}, "X^3*Y", "X*Z^3", "x^2*y+z^3"},
      {{"x", "y", "z"}, {}, "X*Y", "Y*Z", "x+z"},
      {{"z1", "z2", "z3"}, {1, 1, 2}, "Z1^3", "Z1^2*Z2+Z2*Z3", "z1^2-z3+z1*z2"},
      {{"x", "u"}, {}, "X^3", "X*U^2", "x^2+u^2"},
  };
  for (const auto& c : cases) {
    VarTable v = make_vars(c.names, c.weights);
    Poly F = D(c.F, v), G = D(c.G, v), tau = R(c.tau, v);
    ASSERT_TRUE(check_connected_sum(v.grading, F, G, tau).verdict) << c.F;
    auto A = std::make_shared<InverseSystem>(InverseSystem::build(v.grading, {F}));
    auto B = std::make_shared<InverseSystem>(InverseSystem::build(v.grading, {G}));
    auto T = std::make_shared<InverseSystem>(InverseSystem::build(v.grading, {contract(tau, F)}));
    auto fp = fibered_product_structural(OrientedSurjection::natural(A, T), OrientedSurjection::natural(B, T));
    auto cs = connected_sum_structural(fp);
    auto dual = InverseSystem::build(v.grading, {F - G});
    auto dfp = InverseSystem::build(v.grading, {F, G});
    EXPECT_EQ(cs.hilbert(), dual.hilbert()) << c.F;
    EXPECT_EQ(fp.hilbert(), dfp.hilbert()) << c.F;
    // Exactness dimensions.
    for (int i = 0; i <= fp.d(); ++i) {
      EXPECT_EQ(fp.algebra().dim(i), A->dim(i) + B->dim(i) - T->dim(i));
      EXPECT_EQ(cs.algebra().dim(i), fp.algebra().dim(i) - T->dim(i - (fp.d() - fp.k())));
    }
    // x ell fingerprints for the variables and their sum.
    GradedAlgebra dalg = dual.algebra();
    std::vector<Poly> probes;
    Poly sum(QQ, v.nvars());
    for (int i = 0; i < v.nvars(); ++i)
      if (v.grading.weights[i] == 1) {
        probes.push_back(Poly::monomial(QQ, Monomial::var(v.nvars(), i), Side::Ring, QQ.one()));
        sum = sum + probes.back().scaled(QQ.from_int(i + 1));
      }
    probes.push_back(sum);
    for (const auto& ell : probes) {
      EXPECT_EQ(ell_ranks(cs.algebra(), cs.element_of(ell)), ell_ranks(dalg, dual.coordinates(1, ell)))
          << c.F << " " << to_string(ell, v.grading, v.names);
    }
  }
}

TEST(ThomGysinProperties, RandomSurjections) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> c(-3, 3);
  VarTable v = make_vars({"x", "y", "z"});
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 12; ++trial) {
    int d = 3 + trial % 3, s = 1 + trial % 2;
    Poly F(QQ, 3, Side::Dual), tau(QQ, 3, Side::Ring);
    for (const auto& m : monomials_of_degree(v.grading, d)) F.add_term(m, QQ.from_int(c(rng)));
    for (const auto& m : monomials_of_degree(v.grading, s)) tau.add_term(m, QQ.from_int(c(rng)));
    if (F.is_zero() || tau.is_zero() || contract(tau, F).is_zero()) continue;
    ++checked;
    auto A = std::make_shared<InverseSystem>(InverseSystem::build(v.grading, {F}));
    auto T = std::make_shared<InverseSystem>(InverseSystem::build(v.grading, {contract(tau, F)}));
    auto pi = OrientedSurjection::natural(A, T);
    const int k = T->socle_degree();
    // Pairing-route Thom class equals tau modulo Ann(F).
    EXPECT_EQ(pi.thom_coords(), A->coordinates(d - k, tau));
    GradedAlgebra ga = A->algebra();
    for (int p = 0; p < A->dim(k); ++p) {
      Vec a = unit_vec(QQ, A->dim(k), p);
      Scalar lhs = ga.integral(ga.multiply(d - k, pi.thom_coords(), k, a))[0];
      Scalar rhs = T->orientation(T->from_coordinates(k, pi.apply(k, a)))[0];
      EXPECT_EQ(lhs, rhs);
    }
    for (int j = 0; j <= k; ++j) {
      // Injectivity of iota.
      std::vector<Vec> img;
      for (int q = 0; q < T->dim(j); ++q) img.push_back(gysin_apply(pi, j, unit_vec(QQ, T->dim(j), q)));
      const int deg = j + d - k;
      EXPECT_EQ(span_rank(QQ, A->dim(deg), img), T->dim(j));
      // Image equals (0 : ker pi) in degree deg.
      std::vector<Vec> rows;
      for (int i = 0; i + deg <= d; ++i)
        for (const auto& kv : kernel_basis(pi.matrix(i))) {
          Matrix m = ga.mult_by(i, kv, deg);
          for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
        }
      std::vector<Vec> colon;
      if (rows.empty()) {
        for (int q = 0; q < A->dim(deg); ++q) colon.push_back(unit_vec(QQ, A->dim(deg), q));
      } else {
        colon = kernel_basis(Matrix::from_rows(QQ, A->dim(deg), rows));
      }
      std::vector<Vec> both = img;
      both.insert(both.end(), colon.begin(), colon.end());
      EXPECT_EQ(span_rank(QQ, A->dim(deg), both), static_cast<int>(colon.size()));
      EXPECT_EQ(static_cast<int>(colon.size()), T->dim(j));
    }
  }
  EXPECT_GE(checked, 10);
}
