// Copyright 2026 The agsum Authors.
// SPDX-License-Identifier: Apache-2.0

#include "agsum/decompose.hpp"

#include <algorithm>
#include <set>

namespace agsum {

namespace {

void divisors_rec(const std::vector<int>& top, std::size_t v, std::vector<int>& cur, std::vector<Monomial>& out) {
  if (v == top.size()) {
    out.emplace_back(cur);
    return;
  }
  for (int e = 0; e <= top[v]; ++e) {
    cur[v] = e;
    divisors_rec(top, v + 1, cur, out);
  }
  cur[v] = 0;
}

Poly ring_monomial(const Field& f, const Monomial& m) { return Poly::monomial(f, m, Side::Ring, f.one()); }

// Same ideal component: span(u) == span(v).
bool same_span(const Field& f, int n, const std::vector<Vec>& u, const std::vector<Vec>& v) {
  std::vector<Vec> both = u;
  both.insert(both.end(), v.begin(), v.end());
  int r = span_rank(f, n, both);
  return span_rank(f, n, u) == r && span_rank(f, n, v) == r;
}

Poly embed(const Poly& p, int nvars, int offset) {
  Poly out(p.field(), nvars, p.side());
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e(nvars, 0);
    for (int i = 0; i < m.nvars(); ++i) e[offset + i] = m.exps[i];
    out.add_term(Monomial(e), c);
  }
  return out;
}

Vec coeff_vec(const Poly& f, const std::vector<Monomial>& basis) {
  std::map<Monomial, int> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], static_cast<int>(i));
  return coefficients(f, basis, idx);
}

}  // namespace

std::optional<MonomialSplit> monomial_cs_criterion(const Grading& g, const Monomial& F, const Monomial& G,
                                                   const Field& f) {
  if (F.nvars() != g.nvars() || G.nvars() != g.nvars()) throw Error("monomials have the wrong number of variables");
  if (F.degree(g) != G.degree(g)) throw Error("monomials must have the same degree");
  if (F == G) throw Error("monomial criterion needs two distinct monomials");
  std::vector<int> gcd(g.nvars());
  for (int v = 0; v < g.nvars(); ++v) gcd[v] = std::min(F.exps[v], G.exps[v]);
  std::vector<Monomial> divs;
  std::vector<int> cur(g.nvars(), 0);
  divisors_rec(gcd, 0, cur, divs);
  std::sort(divs.begin(), divs.end(), [&](const Monomial& a, const Monomial& b) {
    int da = a.degree(g), db = b.degree(g);
    if (da != db) return da > db;
    return grevlex_greater(g, a, b);
  });
  for (const auto& m0 : divs) {
    Monomial mf = m0.quotient_of(F), mg = m0.quotient_of(G);
    bool disjoint = true;
    for (int v = 0; v < g.nvars(); ++v)
      if (mf.exps[v] > 0 && mg.exps[v] > 0) disjoint = false;
    if (!disjoint || mf.divides(m0) || mg.divides(m0)) continue;
    return MonomialSplit{m0, mf, mg, ring_monomial(f, mf) + ring_monomial(f, mg)};
  }
  return std::nullopt;
}

ProbeReport probe_decomposability(const Grading& g, const Poly& F0) {
  Poly F = F0.with_side(Side::Dual);
  auto A = InverseSystem::build(g, {F});
  const int d = A.socle_degree();
  ProbeReport r;
  r.generator_degrees = A.min_generator_degrees();
  std::set<int> ks;
  for (int j : r.generator_degrees)
    if (j <= d && d - j < d) ks.insert(d - j);
  // Over T = F both summands contribute to C_1 when 1 < d.
  if (g.is_standard() && d >= 2 && A.dim(1) < 2) {
    r.k0_ruled_out = true;
    ks.erase(0);
  }
  r.candidates.assign(ks.begin(), ks.end());
  r.totally_indecomposable = r.candidates.empty();

  if (F.terms().size() == 2) {
    r.binomial_attempted = true;
    auto terms = F.sorted_terms(g);
    const auto& [m1, c1] = terms[0];
    const auto& [m2, c2] = terms[1];
    const Field& f = F.field();
    if (auto s = monomial_cs_criterion(g, m1, m2, f)) {
      BinomialDecomposition b;
      b.F = Poly::monomial(f, m1, Side::Dual, c1);
      b.G = Poly::monomial(f, m2, Side::Dual, -c2);
      b.tau = Poly::monomial(f, s->mf, Side::Ring, c1.inverse()) + Poly::monomial(f, s->mg, Side::Ring, (-c2).inverse());
      b.split = *s;
      b.k = s->m0.degree(g);
      if (!check_connected_sum(g, b.F, b.G, b.tau).verdict)
        throw InternalError("monomial split does not pass the connected-sum check");
      r.binomial = b;
    }
  }
  if (r.totally_indecomposable) {
    r.note = "no admissible minimal-generator degree: totally indecomposable";
  } else if (r.binomial) {
    r.note = "decomposition found by the binomial search";
  } else if (r.binomial_attempted) {
    r.note = "binomial search failed in the given coordinates; this is not a proof of indecomposability";
  } else {
    r.note = "candidate degrees are a necessary condition only; no decomposition was searched for";
  }
  return r;
}

QuadraticDiagonal diagonalize_quadratic(const Grading& g, const Poly& F0) {
  if (!g.is_standard()) throw Error("quadratic diagonalization needs the standard grading");
  const Field& f = F0.field();
  if (f.characteristic() == 2) throw Error("quadratic diagonalization needs characteristic other than 2");
  if (F0.is_zero() || !F0.is_homogeneous(g) || F0.degree(g) != 2) throw Error("form must be a nonzero quadratic");
  Poly F = F0.with_side(Side::Dual);
  const int n = g.nvars();
  // Bilinear form of F under contraction: S_ij = (x_i x_j) o F.
  auto var = [&](int i) { return Poly::monomial(f, Monomial::var(n, i), Side::Ring, f.one()); };
  Matrix S(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) S.at(i, j) = eval_at_zero(contract(var(i) * var(j), F));
  Matrix P = Matrix::identity(f, n);
  auto congruence = [&](const Matrix& E) {
    S = E.transpose() * S * E;
    P = P * E;
  };
  for (int i = 0; i < n; ++i) {
    if (S.at(i, i).is_zero()) {
      int j = i + 1;
      while (j < n && S.at(j, j).is_zero()) ++j;
      if (j < n) {
        Matrix E(f, n, n);
        for (int r = 0; r < n; ++r) E.at(r, r == i ? j : r == j ? i : r) = f.one();
        congruence(E);
      } else {
        j = i + 1;
        while (j < n && S.at(i, j).is_zero()) ++j;
        if (j == n) continue;
        Matrix E = Matrix::identity(f, n);
        E.at(j, i) = f.one();  // y_i = x_i + x_j, so S_ii becomes 2 S_ij
        congruence(E);
      }
    }
    Matrix E = Matrix::identity(f, n);
    for (int j = i + 1; j < n; ++j) E.at(i, j) = -(S.at(i, j) / S.at(i, i));
    congruence(E);
  }
  QuadraticDiagonal out;
  out.P = P;
  out.form = Poly(f, n, Side::Dual);
  for (int i = 0; i < n; ++i) {
    out.diagonal.push_back(S.at(i, i));
    if (!S.at(i, i).is_zero()) {
      ++out.blocks;
      out.form.add_term(Monomial::var(n, i, 2), S.at(i, i));
    }
  }
  // Recheck by contraction with the new linear forms y_j = sum_i P_ij x_i.
  std::vector<Poly> y;
  for (int j = 0; j < n; ++j) {
    Poly yj(f, n, Side::Ring);
    for (int i = 0; i < n; ++i)
      if (!P.at(i, j).is_zero()) yj.add_term(Monomial::var(n, i), P.at(i, j));
    y.push_back(yj);
  }
  for (int j = 0; j < n; ++j)
    for (int l = j; l < n; ++l) {
      Scalar v = eval_at_zero(contract(y[j] * y[l], F));
      if (!(v == (j == l ? out.diagonal[j] : f.zero())))
        throw InternalError("diagonalization does not reproduce the form");
    }
  return out;
}

bool verify_generalized_thom(const InverseSystem& L, const InverseSystem& K, const Vec& psi, const Poly& tau) {
  if (!(L.grading() == K.grading())) throw Error("generalized Thom check needs one ring");
  if (static_cast<int>(psi.size()) != L.type()) throw Error("need one weight per dual generator of L");
  if (tau.is_zero() || !tau.is_homogeneous(L.grading()) ||
      tau.degree(L.grading()) != L.socle_degree() - K.socle_degree())
    throw Error("tau must be homogeneous of degree d - k");
  Poly sum(L.field(), L.nvars(), Side::Dual);
  for (int i = 0; i < L.type(); ++i) sum = sum + contract(tau, L.duals()[i]).scaled(psi[i]);
  if (sum.is_zero()) return false;
  return sum.normalized(L.grading()) == K.duals()[0].normalized(K.grading());
}

ProductPresentation product_presentation_over_F(const InverseSystem& A, const InverseSystem& B) {
  if (!(A.field() == B.field())) throw FieldError("A and B over different fields");
  if (A.type() != 1 || B.type() != 1) throw Error("product over F needs Gorenstein A and B");
  const int d = A.socle_degree();
  if (B.socle_degree() != d) throw Error("A and B must have the same socle degree");
  if (d < 1) throw Error("socle degree must be positive");
  const Field& f = A.field();
  const int na = A.nvars(), nb = B.nvars(), n = na + nb;
  std::vector<int> w = A.grading().weights;
  w.insert(w.end(), B.grading().weights.begin(), B.grading().weights.end());

  ProductPresentation out;
  out.grading = Grading(w);
  out.F = embed(A.duals()[0], n, 0);
  out.G = embed(B.duals()[0], n, na);
  Poly one_a = Poly::constant(f, na, Side::Dual, f.one()), one_b = Poly::constant(f, nb, Side::Dual, f.one());
  auto ta = thom_class(A.grading(), A.duals()[0], one_a);
  auto tb = thom_class(B.grading(), B.duals()[0], one_b);
  if (!ta || !tb) throw InternalError("no top-degree Thom class");
  out.tau = embed(ta->tau, n, 0) + embed(tb->tau, n, na);

  auto D = InverseSystem::build(out.grading, {out.F, out.G});
  auto C = InverseSystem::build(out.grading, {out.F - out.G});
  out.fiber_matches = out.sum_matches = true;
  for (int j = 0; j <= d; ++j) {
    auto basis = monomials_of_degree(out.grading, j);
    const int nj = static_cast<int>(basis.size());
    std::vector<Vec> pres;
    for (int p = 0; p < nj; ++p) {
      bool in_a = false, in_b = false;
      for (int v = 0; v < n; ++v)
        if (basis[p].exps[v] > 0) (v < na ? in_a : in_b) = true;
      if (in_a && in_b) pres.push_back(unit_vec(f, nj, p));
    }
    for (const auto& q : A.ann_component(j)) pres.push_back(coeff_vec(embed(q, n, 0), basis));
    for (const auto& q : B.ann_component(j)) pres.push_back(coeff_vec(embed(q, n, na), basis));
    out.fiber_matches = out.fiber_matches && same_span(f, nj, pres, D.ann_coords(j));
    if (j == d) pres.push_back(coeff_vec(out.tau, basis));
    out.sum_matches = out.sum_matches && same_span(f, nj, pres, C.ann_coords(j));
  }
  out.fiber_hilbert = D.hilbert();
  out.sum_hilbert = C.hilbert();
  if (!(out.fiber_hilbert == A.hilbert() + B.hilbert() - HilbertFunction({1})))
    throw InternalError("fibered product over F has the wrong Hilbert function");
  out.fiber_generator_degrees = D.min_generator_degrees();
  out.sum_generator_degrees = C.min_generator_degrees();
  out.standard_graded = out.grading.is_standard() &&
                        D.algebra().generated_by_degree_one() == out.fiber_hilbert &&
                        C.algebra().generated_by_degree_one() == out.sum_hilbert;
  if (A.grading().is_standard() && B.grading().is_standard() && !out.standard_graded)
    throw InternalError("product of standard graded algebras is not standard graded");
  return out;
}

}  // namespace agsum
