// Copyright 2026 The agsum Authors.
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <gtest/gtest.h>

#include "agsum/lefschetz.hpp"
#include "agsum/poly_parse.hpp"
#include "oracle.hpp"

using namespace agsum;

namespace {

const Field QQ = Field::rationals();

Poly R(const char* s, const VarTable& v, const Field& f = QQ) { return poly_of(s, v, Side::Ring, f); }
Poly D(const char* s, const VarTable& v, const Field& f = QQ) { return poly_of(s, v, Side::Dual, f); }

std::shared_ptr<const InverseSystem> sys(const VarTable& v, const char* dual, const Field& f = QQ) {
  return std::make_shared<InverseSystem>(InverseSystem::build(v.grading, {D(dual, v, f)}));
}

oracle::Dual to_oracle(const Poly& p) {
  oracle::Dual out;
  for (const auto& [m, c] : p.terms()) out[m.exps] = c.rational();
  return out;
}

}  // namespace

TEST(MultMap, Examples) {
  VarTable v = make_vars({"x"});
  GradedAlgebra a = sys(v, "X^3")->algebra();
  Vec x{QQ.one()};
  Matrix m = mult_map(a, x, 1, 1);
  ASSERT_EQ(m.rows(), 1);
  EXPECT_EQ(m.at(0, 0), QQ.one());
  EXPECT_TRUE(mult_map(a, Vec{QQ.zero()}, 2, 0).is_zero());

  InverseSystem c = nonslp_family(5, 2);
  GradedAlgebra ca = c.algebra();
  Vec z1 = linear_form(c, R("z1", make_vars({"z1", "z2"}, {1, 2})));
  EXPECT_TRUE(mult_map(ca, z1, 4, 0).is_zero());
  EXPECT_THROW(mult_map(ca, Vec{}, 1, 0), Error);
}

TEST(SlpCheck, Examples) {
  VarTable v = make_vars({"x"});
  for (int n = 2; n <= 7; ++n) {
    Poly F = Poly::monomial(QQ, Monomial({n - 1}), Side::Dual, QQ.one());
    auto r = slp_check(InverseSystem::build(v.grading, {F}).algebra(), Vec{QQ.one()});
    EXPECT_TRUE(r.slp) << n;
    EXPECT_TRUE(r.wlp);
    ASSERT_TRUE(r.narrow_sense_slp.has_value());
    EXPECT_TRUE(*r.narrow_sense_slp);
  }
  VarTable z = make_vars({"z1", "z2"}, {1, 2});
  InverseSystem c52 = nonslp_family(5, 2);
  auto r = slp_check(c52.algebra(), linear_form(c52, R("z1", z)));
  EXPECT_TRUE(r.wlp);
  EXPECT_FALSE(r.slp);
  ASSERT_TRUE(r.slp_failure.has_value());
  InverseSystem c42 = nonslp_family(4, 2);
  auto r2 = slp_check(c42.algebra(), linear_form(c42, R("z1", z)));
  EXPECT_FALSE(r2.wlp);
  // z1^(m-t-1) = z1 in C_1 goes to zero in C_2.
  EXPECT_EQ(*r2.wlp_failure, std::make_pair(1, 1));
  EXPECT_FALSE(wlp_check(c42.algebra(), linear_form(c42, R("z1", z))));
}

TEST(SlpCheck, NoLinearFormsAndCharacteristic) {
  InverseSystem c = nonslp_family(4, 3);  // H = (1,0,0,1)
  EXPECT_EQ(c.hilbert(), HilbertFunction({1, 0, 0, 1}));
  auto r = slp_check(c.algebra(), Vec{});
  EXPECT_TRUE(r.no_linear_forms);
  EXPECT_TRUE(r.wlp);
  EXPECT_FALSE(r.slp);
  EXPECT_THROW(generic_lefschetz(c.algebra()), Error);

  VarTable v = make_vars({"x"});
  Field f3 = Field::prime(3);
  auto r3 = slp_check(sys(v, "X^4", f3)->algebra(), Vec{f3.one()});
  EXPECT_TRUE(r3.char_sensitive);
  EXPECT_FALSE(r3.warnings.empty());
  // x^3 = 0 in char 3 for the form x: F_3[x]/(x^5) still has SLP with l = x
  // because contraction has no factorials.
  EXPECT_TRUE(r3.slp);
}

TEST(Jordan, Examples) {
  VarTable v = make_vars({"x"});
  GradedAlgebra a = sys(v, "X^3")->algebra();
  auto j = jordan_type(a, Vec{QQ.one()});
  EXPECT_EQ(j.partition, (Partition{4}));
  EXPECT_TRUE(j.conjugate_of_hilbert);
  auto z = jordan_type(a, Vec{QQ.zero()});
  EXPECT_EQ(z.partition, (Partition{1, 1, 1, 1}));
  EXPECT_FALSE(z.conjugate_of_hilbert);

  VarTable w = make_vars({"z1", "z2"}, {1, 2});
  InverseSystem c = nonslp_family(5, 2);
  EXPECT_EQ(c.hilbert(), HilbertFunction({1, 1, 2, 1, 1}));
  auto jc = jordan_type(c.algebra(), linear_form(c, R("z1", w)));
  EXPECT_EQ(jc.partition, (Partition{3, 3}));
  EXPECT_FALSE(jc.conjugate_of_hilbert);
  EXPECT_EQ(conjugate(Partition{2, 1, 1, 1, 1}), (Partition{5, 1}));
}

TEST(Jordan, AgreesWithOracleRandom) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-2, 2);
  for (const auto& weights : {std::vector<int>{1, 1, 1}, std::vector<int>{1, 1, 2}}) {
    Grading g(weights);
    for (int d = 2; d <= 5; ++d)
      for (int trial = 0; trial < 6; ++trial) {
        Poly F(QQ, 3, Side::Dual);
        for (const auto& m : monomials_of_degree(g, d))
          if (c(rng) > 0) F.add_term(m, QQ.from_int(c(rng) == 0 ? 1 : c(rng) + 3));
        if (F.is_zero()) continue;
        InverseSystem A = InverseSystem::build(g, {F});
        Poly ell(QQ, 3);
        for (int i = 0; i < 3; ++i)
          if (weights[i] == 1) ell.add_term(Monomial::var(3, i), QQ.from_int(c(rng)));
        GradedAlgebra alg = A.algebra();
        JordanType j = jordan_type(alg, linear_form(A, ell));
        EXPECT_EQ(j.partition, oracle::jordan(weights, to_oracle(F), to_oracle(ell))) << "d=" << d;
        long sum = 0;
        for (std::size_t i = 0; i < j.partition.size(); ++i) {
          sum += j.partition[i];
          if (i > 0) EXPECT_LE(j.partition[i], j.partition[i - 1]);
        }
        EXPECT_EQ(sum, alg.total_dim());
        for (std::size_t s = 1; s < j.ranks.size(); ++s) EXPECT_LE(j.ranks[s], j.ranks[s - 1]);
        // Per-degree rank monotonicity.
        Vec l = linear_form(A, ell);
        for (int i = 0; i <= d; ++i)
          for (int e = 0; i + e < d; ++e)
            EXPECT_LE(rank(mult_map(alg, l, e + 1, i)), rank(mult_map(alg, l, e, i)));
      }
  }
}

TEST(Generic, Examples) {
  VarTable v = make_vars({"x", "y"});
  auto g = generic_lefschetz(*sys(v, "X*Y"));
  EXPECT_EQ(g.jordan.partition, (Partition{3, 1}));
  EXPECT_TRUE(g.jordan.observed_generic);
  EXPECT_EQ(g.jordan.trials, kDefaultTrials);
  EXPECT_TRUE(g.report.slp);
  // Brute force with l = x + y: l^2 = 2xy != 0.
  auto j = jordan_type(sys(v, "X*Y")->algebra(), linear_form(*sys(v, "X*Y"), R("x+y", v)));
  EXPECT_EQ(j.partition, (Partition{3, 1}));

  VarTable x = make_vars({"x"});
  EXPECT_EQ(generic_lefschetz(*sys(x, "X^4")).jordan.partition, (Partition{5}));

  for (auto [m, t] : {std::pair{5, 2}, {7, 3}, {6, 3}, {8, 2}}) {
    InverseSystem c = nonslp_family(m, t);
    GradedAlgebra ca = c.algebra();
    auto gc = generic_lefschetz(c, 6, 99);
    for (const Vec& l : gc.sampled) EXPECT_EQ(jordan_type(ca, l).partition, (Partition{m - t, m - t}));
    EXPECT_FALSE(gc.report.slp);
  }
}

TEST(Generic, DeterministicAndMonotoneInTrials) {
  VarTable v = make_vars({"x", "y", "z"});
  auto A = sys(v, "X^2*Y + Y^2*Z + Z^3");
  GradedAlgebra alg = A->algebra();
  auto a1 = generic_lefschetz(alg, 4, 5), a2 = generic_lefschetz(alg, 4, 5);
  EXPECT_EQ(a1.sampled, a2.sampled);
  EXPECT_EQ(a1.jordan.partition, a2.jordan.partition);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    Partition prev;
    for (int n = 1; n <= 6; ++n) {
      auto g = generic_lefschetz(alg, n, seed);
      if (n > 1) EXPECT_TRUE(dominates(g.jordan.partition, prev));
      prev = g.jordan.partition;
    }
  }
  // Basis coordinates of structural algebras are drawn directly.
  for (const Vec& l : a1.sampled) EXPECT_FALSE(is_zero(l));
}

TEST(NonSlp, StructuralMatchesDualAndFormula) {
  for (int m = 3; m <= 7; ++m)
    for (int t = 2; t < m; ++t) {
      InverseSystem c = nonslp_family(m, t);
      GradedSubquotient s = nonslp_structural(m, t);
      EXPECT_EQ(c.hilbert(), nonslp_hilbert(m, t)) << m << "," << t;
      EXPECT_EQ(s.hilbert(), nonslp_hilbert(m, t)) << m << "," << t;
    }
  EXPECT_THROW(nonslp_family(3, 1), Error);
  EXPECT_THROW(nonslp_family(3, 3), Error);
}

TEST(MiddleCheck, Examples) {
  // z1^3 z2 and z2^2 z3^2 over Q/Ann(Z2): d = 4, k = 1 is outside the bound.
  VarTable v = make_vars({"z1", "z2", "z3"});
  auto A = sys(v, "Z1^3*Z2"), B = sys(v, "Z2^2*Z3^2"), T = sys(v, "Z2");
  auto pa = OrientedSurjection::natural(A, T), pb = OrientedSurjection::natural(B, T);
  GradedSubquotient fp = fibered_product_structural(pa, pb);
  EXPECT_THROW(wlp_middle_check(connected_sum_structural(fp), generic_lefschetz(fp.algebra()).report.ell), Error);

  // A = B = F[x,y]/(x^3,y^3) over T = F.
  VarTable xy = make_vars({"x", "y"});
  auto A2 = sys(xy, "X^2*Y^2"), B2 = sys(xy, "X^2*Y^2");
  auto T0 = std::make_shared<InverseSystem>(InverseSystem::build(xy.grading, {Poly::constant(QQ, 2, Side::Dual, QQ.one())}));
  auto p2a = OrientedSurjection::natural(A2, T0), p2b = OrientedSurjection::natural(B2, T0);
  GradedSubquotient fp2 = fibered_product_structural(p2a, p2b);
  GradedSubquotient cs2 = connected_sum_structural(fp2);
  for (const GradedSubquotient* D : {&fp2, &cs2}) {
    auto g = generic_lefschetz(D->algebra());
    auto m = wlp_middle_check(*D, g.report.ell);
    EXPECT_TRUE(m.result);
    EXPECT_EQ(m.result, m.full_wlp);
    EXPECT_EQ(m.u, 2);
    EXPECT_EQ(m.v, 3);
  }

  // Odd d = 5, k = 1 over T = F[x]/(x^2).
  auto A3 = sys(xy, "X^3*Y^2"), B3 = sys(xy, "X^4*Y"), T3 = sys(xy, "X");
  GradedSubquotient fp3 =
      fibered_product_structural(OrientedSurjection::natural(A3, T3), OrientedSurjection::natural(B3, T3));
  GradedSubquotient cs3 = connected_sum_structural(fp3);
  for (const GradedSubquotient* D : {&fp3, &cs3}) {
    auto g = generic_lefschetz(D->algebra());
    auto m = wlp_middle_check(*D, g.report.ell);
    EXPECT_EQ(m.u, 3);
    EXPECT_TRUE(m.result);
    EXPECT_EQ(m.result, m.full_wlp);
    // A non-generic form: the zero form fails both checks.
    auto z = wlp_middle_check(*D, zero_vec(QQ, D->algebra().dim(1)));
    EXPECT_FALSE(z.result);
    EXPECT_FALSE(z.full_wlp);
  }
}

TEST(Blowup, HeightThreeInstance) {
  VarTable sy = make_vars({"s", "y"}), y = make_vars({"y"});
  auto A = sys(sy, "S^2*Y^3");
  auto T = sys(y, "Y");
  auto pa = std::make_shared<OrientedSurjection>(OrientedSurjection::from_map(A, T, {Poly(QQ, 1), R("y", y)}));
  BlowupResult r = blowup_cs(pa);
  EXPECT_EQ(r.b->hilbert(), HilbertFunction({1, 2, 2, 2, 2, 1}));
  EXPECT_EQ(r.sum.hilbert(), HilbertFunction({1, 3, 5, 5, 3, 1}));
  EXPECT_TRUE(r.fiber_lefschetz.report.slp);
  EXPECT_TRUE(r.sum_lefschetz.report.slp);
  // Matches the catalecticant route on S^2 Y^3 - X^4 Y.
  EXPECT_EQ(heightthree_family(2, 5, 1).c.hilbert(), r.sum.hilbert());
}

TEST(Blowup, OverTheField) {
  VarTable sy = make_vars({"s", "y"}), y = make_vars({"y"});
  auto A = sys(sy, "S^2*Y^2");
  auto T = std::make_shared<InverseSystem>(InverseSystem::build(y.grading, {Poly::constant(QQ, 1, Side::Dual, QQ.one())}));
  auto pa = std::make_shared<OrientedSurjection>(OrientedSurjection::from_map(A, T, {Poly(QQ, 1), Poly(QQ, 1)}));
  BlowupResult r = blowup_cs(pa);
  // A #_F F[x]/(x^5)
  EXPECT_EQ(r.sum.hilbert(), HilbertFunction({1, 3, 3, 4, 1}) - HilbertFunction({0, 0, 0, 1}) + HilbertFunction({0, 0, 1}));
  EXPECT_TRUE(r.sum_lefschetz.report.slp);
  EXPECT_TRUE(r.fiber_lefschetz.report.slp);
}

TEST(Blowup, Preconditions) {
  VarTable x = make_vars({"x"});
  auto A = sys(x, "X^2"), T = sys(x, "X");
  // tau_A = x survives in T.
  auto pa = std::make_shared<OrientedSurjection>(OrientedSurjection::natural(A, T));
  EXPECT_THROW(blowup_cs(pa), Error);
}

TEST(Closure, PowersOfOneVariable) {
  VarTable x = make_vars({"x"});
  for (int d = 2; d <= 6; ++d)
    for (int k = 0; 2 * k < d; ++k) {
      Poly F = Poly::monomial(QQ, Monomial({d}), Side::Dual, QQ.one());
      auto A = std::make_shared<InverseSystem>(InverseSystem::build(x.grading, {F}));
      ClosureResult r = closure_add(A, R("x", x), k);
      EXPECT_EQ(r.sum.hilbert(), A->hilbert() + closure_increment(k, d));
      EXPECT_TRUE(r.lefschetz.report.slp) << d << "," << k;
    }
  EXPECT_EQ(closure_increment(0, 5), HilbertFunction({0, 1, 1, 1, 1, 0}));
}

TEST(Closure, Preconditions) {
  VarTable xy = make_vars({"x", "y"});
  auto A = sys(xy, "X^2*Y^2");
  EXPECT_THROW(closure_add(A, R("x", xy), 1), Error);  // x^4 = 0: not strong Lefschetz
  EXPECT_THROW(closure_add(A, R("x+y", xy), 2), Error);  // 2k = d
  ClosureResult r = closure_add(A, R("x+y", xy), 1);
  EXPECT_EQ(r.sum.hilbert(), HilbertFunction({1, 3, 5, 3, 1}));
  EXPECT_TRUE(r.lefschetz.report.slp);
  Vec bad{QQ.one(), QQ.one()};
  EXPECT_THROW(closure_add(A, R("x+y", xy), 1, bad), Error);  // lambda(l) = 2
}

TEST(TwoBlock, Examples) {
  InverseSystem c = nonslp_family(5, 2);
  auto r = two_block_classify(c.algebra());
  EXPECT_EQ(r.type, 2);
  EXPECT_EQ(r.t, 2);
  EXPECT_EQ(r.a, 3);
  EXPECT_FALSE(r.slp);
  EXPECT_FALSE(r.standard_graded);

  VarTable uv = make_vars({"u", "v"}, {1, 3});
  auto c1 = sys(uv, "U^3*V");
  auto r1 = two_block_classify(c1->algebra());
  EXPECT_EQ(r1.type, 1);
  EXPECT_EQ(r1.t, 3);
  EXPECT_FALSE(r1.slp);

  // Standard graded F[u,v]/(u^4, v^2) with the form u: t = 1, SLP.
  VarTable s = make_vars({"u", "v"});
  auto c2 = sys(s, "U^3*V");
  auto r2 = two_block_classify(c2->algebra(), linear_form(*c2, R("u", s)));
  EXPECT_EQ(r2.t, 1);
  EXPECT_TRUE(r2.slp);
  EXPECT_TRUE(r2.standard_graded);
  EXPECT_TRUE(r2.t_is_one);
  // Its generic Jordan type is (5,3), not two equal parts.
  EXPECT_THROW(two_block_classify(c2->algebra()), Error);

  // a > 2t, both splittings.
  InverseSystem c83 = nonslp_family(8, 2);  // a = 6, t = 2
  auto r83 = two_block_classify(c83.algebra());
  EXPECT_EQ(r83.type, 2);
  VarTable w = make_vars({"u", "v"}, {1, 2});
  auto c3 = sys(w, "U^5*V");  // F[u,v]/(u^6, v^2)
  EXPECT_EQ(two_block_classify(c3->algebra()).type, 1);
}

TEST(TwoBlock, FieldDependence) {
  // Q[u,v]/(u^5, v^2 + u^4 - u^2 v), deg v = 2: v^2 = u^2 v - u^4, disc = -3.
  VarTable w = make_vars({"u", "v"}, {1, 2});
  auto c = sys(w, "U^4*V + U^2*V^2");
  auto r = two_block_classify(c->algebra());
  EXPECT_EQ(r.type, 0);
  EXPECT_TRUE(r.extension_required);
  // -3 = 4 = 2^2 in F_7.
  Field f7 = Field::prime(7);
  auto c7 = sys(w, "U^4*V + U^2*V^2", f7);
  auto r7 = two_block_classify(c7->algebra());
  EXPECT_EQ(r7.type, 2);
  EXPECT_FALSE(r7.extension_required);
}

TEST(HeightThree, SmallGrid) {
  for (int d = 3; d <= 6; ++d)
    for (int a = 1; 2 * a <= d; ++a)
      for (int k = 1; 2 * k < d; ++k) {
        HeightThree h = heightthree_family(a, d, k);
        EXPECT_EQ(h.c.hilbert(), h.predicted) << a << "," << d << "," << k;
        EXPECT_TRUE(generic_lefschetz(h.c).report.slp) << a << "," << d << "," << k;
      }
}

TEST(ProductOverField, RescalingFallback) {
  VarTable x = make_vars({"x"}), u = make_vars({"u"});
  auto A = sys(x, "X^3"), B = sys(u, "U^3");
  Vec one{QQ.one()};
  // (x+u)^3 o (X^3 - U^3) = 0, so the unscaled form is not SL on the sum.
  ProductSlp p = slp_over_field(*A, one, *B, one);
  EXPECT_TRUE(p.fiber_slp);
  EXPECT_FALSE(p.sum_slp_unscaled);
  EXPECT_TRUE(p.sum_slp);
  EXPECT_EQ(p.b, QQ.from_int(2));
  EXPECT_EQ(p.fiber_hilbert, HilbertFunction({1, 2, 2, 2}));
  EXPECT_EQ(p.sum_hilbert, HilbertFunction({1, 2, 2, 1}));

  VarTable xy = make_vars({"x", "y"});
  auto C = sys(xy, "X^2*Y");
  ProductSlp q = slp_over_field(*C, C->coordinates(1, R("x+y", xy)), *B, one);
  EXPECT_TRUE(q.fiber_slp);
  EXPECT_TRUE(q.sum_slp_unscaled);
  EXPECT_EQ(q.b, QQ.one());
}
