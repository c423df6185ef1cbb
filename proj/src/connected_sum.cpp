// Copyright 2026 The agsum Authors.
// SPDX-License-Identifier: Apache-2.0

#include "agsum/connected_sum.hpp"

#include <functional>

namespace agsum {

namespace {

void require_form(const Grading& g, const Poly& F, const char* what) {
  if (F.nvars() != g.nvars()) throw Error(std::string(what) + " has the wrong number of variables");
  if (F.is_zero()) throw Error(std::string(what) + " is zero");
  if (!F.is_homogeneous(g)) throw Error(std::string(what) + " is not homogeneous");
}

Vec part(const Vec& v, int from, int n) { return Vec(v.begin() + from, v.begin() + from + n); }

Vec coeff_vec(const Poly& f, const std::vector<Monomial>& basis) {
  std::map<Monomial, int> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], static_cast<int>(i));
  return coefficients(f, basis, idx);
}

std::string show(const Poly& p, const Grading& g) {
  if (p.is_zero()) return "0";
  return to_string(p, g, VarNames::defaults(g.nvars()));
}

}  // namespace

std::optional<ThomSolution> thom_class(const Grading& g, const Poly& F, const Poly& H) {
  require_form(g, F, "dual generator F");
  require_form(g, H, "dual generator H");
  const Field& f = F.field();
  const int d = F.degree(g), k = H.degree(g);
  if (k > d) throw Error("thom class needs deg H <= deg F (got " + std::to_string(k) + " > " + std::to_string(d) + ")");
  auto cols = monomials_of_degree(g, d - k);
  auto rows = monomials_of_degree(g, k);
  std::map<Monomial, int> ridx;
  for (std::size_t r = 0; r < rows.size(); ++r) ridx.emplace(rows[r], static_cast<int>(r));
  Matrix m(f, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [b, coef] : F.terms())
      if (cols[c].divides(b)) m.at(ridx.at(cols[c].quotient_of(b)), static_cast<int>(c)) += coef;
  auto x = solve(m, coefficients(H.with_side(Side::Dual), rows, ridx));
  if (!x) return std::nullopt;
  ThomSolution s;
  s.tau = from_coefficients(f, Side::Ring, cols, *x);
  if (s.tau.nvars() != g.nvars()) s.tau = Poly(f, g.nvars());
  for (const auto& v : kernel_basis(m)) s.coset.push_back(from_coefficients(f, Side::Ring, cols, v));
  return s;
}

OrientedSurjection OrientedSurjection::natural(std::shared_ptr<const InverseSystem> a,
                                               std::shared_ptr<const InverseSystem> t) {
  if (!(a->grading() == t->grading())) throw Error("natural projection needs one ring for source and target");
  std::vector<Poly> images;
  for (int v = 0; v < a->nvars(); ++v)
    images.push_back(Poly::monomial(a->field(), Monomial::var(a->nvars(), v), Side::Ring, a->field().one()));
  return from_map(std::move(a), std::move(t), std::move(images));
}

OrientedSurjection OrientedSurjection::from_map(std::shared_ptr<const InverseSystem> a,
                                                std::shared_ptr<const InverseSystem> t,
                                                std::vector<Poly> images) {
  const InverseSystem& A = *a;
  const InverseSystem& T = *t;
  const Field& f = A.field();
  if (!(T.field() == f)) throw FieldError("source and target of a map are over different fields");
  if (static_cast<int>(images.size()) != A.nvars())
    throw Error("map needs one image per source variable (" + std::to_string(A.nvars()) + ")");
  for (int v = 0; v < A.nvars(); ++v) {
    Poly& p = images[v];
    if (p.nvars() != T.nvars()) throw Error("image of variable " + std::to_string(v + 1) + " is not in the target ring");
    p = p.with_side(Side::Ring);
    if (!p.is_zero() && (!p.is_homogeneous(T.grading()) || p.degree(T.grading()) != A.grading().weights[v]))
      throw Error("image of variable " + std::to_string(v + 1) + " does not have degree " +
                  std::to_string(A.grading().weights[v]));
  }
  const int d = A.socle_degree(), k = T.socle_degree();
  if (k > d) throw Error("target socle degree exceeds source socle degree");

  OrientedSurjection pi;
  pi.a_ = a;
  pi.t_ = t;
  pi.images_ = std::move(images);

  // Well defined: Ann(F)_j lands in Ann(H)_j.  Only j <= k matters, T_j = 0 above.
  for (int j = 0; j <= k; ++j)
    for (const auto& gen : A.ann_component(j)) {
      Poly img = substitute(gen, pi.images_);
      if (!T.element(j, img).is_zero())
        throw Error("map is not well defined: " + show(gen, A.grading()) + " is zero in the source but not in the target");
    }

  pi.mats_.resize(d + 1);
  for (int i = 0; i <= d; ++i) {
    const auto& basis = A.standard_monomials(i);
    Matrix m(f, T.dim(i), static_cast<int>(basis.size()));
    if (i <= k)
      for (std::size_t c = 0; c < basis.size(); ++c) {
        Vec col = T.coordinates(i, substitute(Poly::monomial(f, basis[c], Side::Ring, f.one()), pi.images_));
        for (int r = 0; r < m.rows(); ++r) m.at(r, static_cast<int>(c)) = col[r];
      }
    if (rank(m) != T.dim(i)) throw Error("map is not surjective in degree " + std::to_string(i));
    pi.mats_[i] = m;
  }

  // Pairing route: solve int_A(tau * a_p) = int_T(pi(a_p)) for basis a_p of A_k.
  pi.alg_a_ = A.algebra();
  const int nk = A.dim(k), nt = A.dim(d - k);
  Matrix pairing(f, nk, nt);
  Vec rhs;
  for (int p = 0; p < nk; ++p) {
    Vec ap = unit_vec(f, nk, p);
    for (int q = 0; q < nt; ++q)
      pairing.at(p, q) = pi.alg_a_.integral(pi.alg_a_.multiply(k, ap, d - k, unit_vec(f, nt, q)))[0];
    Vec img = pi.mats_[k] * ap;
    rhs.push_back(T.orientation(T.from_coordinates(k, img))[0]);
  }
  auto tau = solve(pairing, rhs);
  if (!tau) throw InternalError("pairing A_k x A_(d-k) is degenerate");
  pi.thom_ = *tau;
  return pi;
}

Vec OrientedSurjection::apply(int i, const Vec& a) const {
  if (i < 0 || i > d()) return {};
  return mats_[i] * a;
}

Vec OrientedSurjection::lift(int i, const Vec& t) const {
  auto x = solve(mats_[i], t);
  if (!x) throw InternalError("surjection has no preimage in degree " + std::to_string(i));
  return *x;
}

Vec gysin_apply(const OrientedSurjection& pi, int j, const Vec& t) {
  if (j < 0 || j > pi.k()) throw Error("gysin map is defined on T_0 .. T_k");
  return pi.alg_a_.multiply(pi.d() - pi.k(), pi.thom_, j, pi.lift(j, t));
}

CsCertificate check_connected_sum(const Grading& g, const Poly& F0, const Poly& G0, const Poly& tau0) {
  require_form(g, F0, "F");
  require_form(g, G0, "G");
  require_form(g, tau0, "tau");
  Poly F = F0.with_side(Side::Dual), G = G0.with_side(Side::Dual), tau = tau0.with_side(Side::Ring);
  const Field& f = F.field();
  const int d = F.degree(g);
  if (G.degree(g) != d) throw Error("F and G must have the same degree");
  const int dt = tau.degree(g);
  if (dt < 1 || dt > d) throw Error("tau must have degree between 1 and deg F = " + std::to_string(d));
  auto D = InverseSystem::build(g, {F, G});  // throws on dependence
  auto A = InverseSystem::build(g, {F});
  auto B = InverseSystem::build(g, {G});

  CsCertificate c;
  c.tau = tau;
  c.k = d - dt;
  Poly hf = contract(tau, F), hg = contract(tau, G);
  c.condition_a = hf == hg && !hf.is_zero();
  c.hilbert_actual = InverseSystem::build(g, {F - G}).hilbert();

  if (!hf.is_zero()) {
    c.H = hf;
    auto T = InverseSystem::build(g, {hf});
    c.hilbert_predicted = A.hilbert() + B.hilbert() - T.hilbert() - T.hilbert().shifted(d - T.socle_degree());
    c.condition_b = true;
    for (int j = 0; j <= d; ++j) {
      const int n = static_cast<int>(D.q_basis(j).size());
      auto s = subspace_dims(f, n, A.ann_coords(j), B.ann_coords(j));
      const int h = static_cast<int>(T.ann_coords(j).size());
      if (s.dim_sum != h) {
        c.condition_b = false;
        c.failing_degree = j;
        c.dim_sum_at_failure = s.dim_sum;
        c.dim_ann_h_at_failure = h;
        break;
      }
    }
  }
  c.verdict = c.condition_a && c.condition_b;

  if (c.verdict) {
    auto C = InverseSystem::build(g, {F - G});
    for (int j = 0; j <= d; ++j) {
      auto basis = D.q_basis(j);
      const int n = static_cast<int>(basis.size());
      std::vector<Vec> u = D.ann_coords(j);
      for (const auto& m : monomials_of_degree(g, j - dt))
        u.push_back(coeff_vec(tau * Poly::monomial(f, m, Side::Ring, f.one()), basis));
      std::vector<Vec> v = C.ann_coords(j), both = u;
      both.insert(both.end(), v.begin(), v.end());
      int ru = span_rank(f, n, u), rv = span_rank(f, n, v), rb = span_rank(f, n, both);
      if (ru != rv || rv != rb)
        throw InternalError("Ann(F-G) differs from Ann(F,G) + (tau) in degree " + std::to_string(j));
    }
  }
  return c;
}

InverseSystem fibered_product_dual(const Grading& g, const Poly& F, const Poly& G) {
  require_form(g, F, "F");
  require_form(g, G, "G");
  return InverseSystem::build(g, {F, G});
}

InverseSystem connected_sum_dual(const Grading& g, const Poly& F, const Poly& G, const Poly& tau) {
  auto c = check_connected_sum(g, F, G, tau);
  if (!c.verdict) {
    std::string why = !c.condition_a ? "condition (a) fails: tau o F != tau o G or both vanish"
                                     : "condition (b) fails at degree " + std::to_string(*c.failing_degree);
    throw Error("not a connected sum: " + why);
  }
  return InverseSystem::build(g, {F.with_side(Side::Dual) - G.with_side(Side::Dual)});
}

Vec GradedSubquotient::fiber_coords(int i, const Vec& ab) const {
  auto c = fiber_space_[i].coordinates(ab);
  if (!c) throw Error("pair is not in the fibered product: pi_A(a) != pi_B(b)");
  return *c;
}

Vec GradedSubquotient::element(int i, const Vec& a, const Vec& b) const {
  if (i < 0 || i > d()) return {};
  Vec fc = fiber_coords(i, concat(a, b));
  if (kind_ == Kind::FiberedProduct) return fc;
  Vec all = *quotient_space_[i].coordinates(fc);
  const int ni = static_cast<int>(ideal_[i].size());
  return part(all, ni, static_cast<int>(all.size()) - ni);
}

Vec GradedSubquotient::element_of(const Poly& f) const {
  if (a().nvars() != b().nvars() || f.nvars() != a().nvars())
    throw Error("element_of needs A and B in one ring");
  if (f.is_zero()) throw Error("element_of needs a nonzero form");
  const int i = f.degree(a().grading());
  return element(i, a().coordinates(i, f), b().coordinates(i, f));
}

Vec GradedSubquotient::thom_pair() const {
  return fiber_coords(d() - k(), concat(pa_->thom_coords(), pb_->thom_coords()));
}

GradedSubquotient fibered_product_structural(const OrientedSurjection& pa, const OrientedSurjection& pb) {
  const InverseSystem& A = pa.source();
  const InverseSystem& B = pb.source();
  const InverseSystem& T = pa.target();
  const InverseSystem& T2 = pb.target();
  if (pa.target_ptr() != pb.target_ptr() && !(T.grading() == T2.grading() && T.duals() == T2.duals()))
    throw Error("fibered product needs both maps onto the same T");
  if (A.socle_degree() != B.socle_degree())
    throw Error("fibered product needs equal socle degrees (" + std::to_string(A.socle_degree()) + " vs " +
                std::to_string(B.socle_degree()) + ")");
  const int d = A.socle_degree(), k = T.socle_degree();
  if (k >= d) throw Error("fibered product needs socle degree of T below that of A and B");
  const Field& f = A.field();

  GradedSubquotient D;
  D.kind_ = GradedSubquotient::Kind::FiberedProduct;
  D.pa_ = std::make_shared<OrientedSurjection>(pa);
  D.pb_ = std::make_shared<OrientedSurjection>(pb);
  D.fiber_.resize(d + 1);
  D.fiber_space_.resize(d + 1);
  D.ideal_.resize(d + 1);
  std::vector<int> dims(d + 1);
  for (int i = 0; i <= d; ++i) {
    const int na = A.dim(i), nb = B.dim(i), nt = T.dim(i);
    std::vector<Vec> basis;
    if (nt == 0) {
      for (int p = 0; p < na + nb; ++p) basis.push_back(unit_vec(f, na + nb, p));
    } else {
      Matrix m(f, nt, na + nb);
      for (int r = 0; r < nt; ++r) {
        for (int c = 0; c < na; ++c) m.at(r, c) = pa.matrix(i).at(r, c);
        for (int c = 0; c < nb; ++c) m.at(r, na + c) = -pb.matrix(i).at(r, c);
      }
      basis = kernel_basis(m);
    }
    if (static_cast<int>(basis.size()) != na + nb - nt)
      throw InternalError("fibered product has the wrong dimension in degree " + std::to_string(i));
    D.fiber_[i] = basis;
    D.fiber_space_[i] = ColumnSpace(f, na + nb, basis);
    dims[i] = static_cast<int>(basis.size());
  }

  GradedAlgebra ga = A.algebra(), gb = B.algebra();
  auto product = [&](int i, int p, int j, int q) {
    const Vec& u = D.fiber_[i][p];
    const Vec& v = D.fiber_[j][q];
    Vec x = ga.multiply(i, part(u, 0, A.dim(i)), j, part(v, 0, A.dim(j)));
    Vec y = gb.multiply(i, part(u, A.dim(i), B.dim(i)), j, part(v, A.dim(j), B.dim(j)));
    return D.fiber_coords(i + j, concat(x, y));
  };
  Matrix orient(f, dims[d], 2);
  for (int p = 0; p < dims[d]; ++p) {
    const Vec& w = D.fiber_[d][p];
    orient.at(p, 0) = ga.integral(part(w, 0, A.dim(d)))[0];
    orient.at(p, 1) = gb.integral(part(w, A.dim(d), B.dim(d)))[0];
  }
  D.alg_ = GradedAlgebra(f, dims, product, orient);
  return D;
}

GradedSubquotient connected_sum_structural(const GradedSubquotient& D) {
  if (D.kind() != GradedSubquotient::Kind::FiberedProduct) throw Error("connected sum needs a fibered product");
  const OrientedSurjection& pa = D.pi_a();
  const OrientedSurjection& pb = D.pi_b();
  const InverseSystem& T = D.t();
  const int d = D.d(), k = D.k(), s = d - k;
  const Field& f = T.field();

  Vec ta = pa.apply(s, pa.thom_coords()), tb = pb.apply(s, pb.thom_coords());
  if (ta != tb) {
    Poly pa_img = T.lift(s, ta), pb_img = T.lift(s, tb);
    throw ThomMismatch(pa_img, pb_img,
                       "no total Thom class: pi_A(tau_A) = " + show(pa_img, T.grading()) +
                           " differs from pi_B(tau_B) = " + show(pb_img, T.grading()));
  }

  GradedSubquotient C = D;
  C.kind_ = GradedSubquotient::Kind::ConnectedSum;
  const GradedAlgebra& dalg = D.algebra();
  Vec t = D.thom_pair();
  C.reps_.assign(d + 1, {});
  C.quotient_space_.assign(d + 1, {});
  std::vector<int> dims(d + 1);
  for (int i = 0; i <= d; ++i) {
    const int n = dalg.dim(i);
    std::vector<Vec> gens;
    if (i >= s)
      for (int q = 0; q < dalg.dim(i - s); ++q) gens.push_back(dalg.multiply(s, t, i - s, unit_vec(f, dalg.dim(i - s), q)));
    C.ideal_[i] = independent_subset(f, n, gens);
    if (static_cast<int>(C.ideal_[i].size()) != T.dim(i - s))
      throw InternalError("principal ideal of the Thom pair has the wrong dimension in degree " + std::to_string(i));
    std::vector<Vec> cols = C.ideal_[i];
    for (int u : complement_units(f, n, C.ideal_[i])) {
      C.reps_[i].push_back(unit_vec(f, n, u));
      cols.push_back(unit_vec(f, n, u));
    }
    C.quotient_space_[i] = ColumnSpace(f, n, cols);
    dims[i] = static_cast<int>(C.reps_[i].size());
  }
  auto reduce = [&](int i, const Vec& v) {
    Vec all = *C.quotient_space_[i].coordinates(v);
    const int ni = static_cast<int>(C.ideal_[i].size());
    return part(all, ni, dims[i]);
  };
  auto product = [&](int i, int p, int j, int q) {
    return reduce(i + j, dalg.multiply(i, C.reps_[i][p], j, C.reps_[j][q]));
  };
  if (dims[d] != 1) throw InternalError("connected sum top degree is not one-dimensional");
  Matrix orient(f, 1, 1);
  Vec top = dalg.integral(C.reps_[d][0]);
  orient.at(0, 0) = top[0] - top[1];
  C.alg_ = GradedAlgebra(f, dims, product, orient);
  return C;
}

DualPresentation dual_presentation(const GradedAlgebra& a) {
  if (!a.pairing_nondegenerate()) throw Error("re-presentation needs a level algebra with nondegenerate pairing");
  const Field& f = a.field();
  const int d = a.top_degree();
  DualPresentation out;
  for (int i = 1; i <= d; ++i) {
    std::vector<Vec> span;
    for (std::size_t g = 0; g < out.generators.size(); ++g) {
      int w = out.generator_degrees[g];
      if (w >= i) continue;
      for (int q = 0; q < a.dim(i - w); ++q)
        span.push_back(a.multiply(w, out.generators[g], i - w, unit_vec(f, a.dim(i - w), q)));
    }
    for (int u : complement_units(f, a.dim(i), independent_subset(f, a.dim(i), span))) {
      out.generators.push_back(unit_vec(f, a.dim(i), u));
      out.generator_degrees.push_back(i);
    }
  }
  out.grading = Grading(out.generator_degrees);
  const int n = out.grading.nvars();

  // Image of a monomial: peel off the first variable present.
  std::map<Monomial, Vec> memo;
  std::function<Vec(const Monomial&)> image = [&](const Monomial& m) -> Vec {
    if (m.is_one()) return a.one();
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    int v = 0;
    while (m.exps[v] == 0) ++v;
    Monomial rest = m;
    rest.exps[v] -= 1;
    const int dr = rest.degree(out.grading);
    Vec r = a.multiply(dr, image(rest), out.generator_degrees[v], out.generators[v]);
    memo.emplace(m, r);
    return r;
  };
  for (int c = 0; c < a.orientation_rank(); ++c) out.duals.emplace_back(f, n, Side::Dual);
  for (const auto& m : monomials_of_degree(out.grading, d)) {
    Vec v = a.integral(image(m));
    for (int c = 0; c < a.orientation_rank(); ++c)
      if (!v[c].is_zero()) out.duals[c].add_term(m, v[c]);
  }
  return out;
}

}  // namespace agsum
