// Copyright 2026 The agsum Authors.
// SPDX-License-Identifier: Apache-2.0

#include "agsum/inverse_system.hpp"

namespace agsum {

namespace {

std::map<Monomial, int> index_of(const std::vector<Monomial>& basis) {
  std::map<Monomial, int> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], static_cast<int>(i));
  return idx;
}

// Coordinates over q_basis(j) of the product m * g, with g given over q_basis(j - deg m).
Vec shift_coords(const Field& f, const Monomial& m, const std::vector<Monomial>& from,
                 const Vec& g, const std::map<Monomial, int>& to_index, int to_size) {
  Vec out = zero_vec(f, to_size);
  for (std::size_t k = 0; k < from.size(); ++k)
    if (!g[k].is_zero()) out[to_index.at(from[k] * m)] = g[k];
  return out;
}

}  // namespace

bool AlgebraElement::is_zero() const {
  for (const auto& p : normal_form)
    if (!p.is_zero()) return false;
  return true;
}

InverseSystem InverseSystem::build(const Grading& g, std::vector<Poly> duals) {
  if (duals.empty()) throw Error("inverse system needs at least one dual generator");
  InverseSystem a;
  a.grading_ = g;
  a.field_ = duals[0].field();
  for (auto& G : duals) {
    if (G.nvars() != g.nvars()) throw Error("dual generator has the wrong number of variables");
    if (!(G.field() == a.field_)) throw FieldError("dual generators over different fields");
    if (G.is_zero()) throw Error("dual generator is zero");
    if (!G.is_homogeneous(g)) throw Error("dual generator is not homogeneous");
    G = G.with_side(Side::Dual);
  }
  a.d_ = duals[0].degree(g);
  for (const auto& G : duals)
    if (G.degree(g) != a.d_) throw Error("dual generators must share one degree");
  a.duals_ = std::move(duals);

  const int m = a.type();
  const int d = a.d_;
  a.pieces_.resize(d + 1);
  for (int i = 0; i <= d; ++i) {
    Piece& pc = a.pieces_[i];
    pc.q_basis = monomials_of_degree(g, i);
    pc.q_index = index_of(pc.q_basis);
    pc.r_basis = monomials_of_degree(g, d - i);
    pc.r_index = index_of(pc.r_basis);
    const int nr = static_cast<int>(pc.r_basis.size());
    pc.catalecticant = Matrix(a.field_, m * nr, static_cast<int>(pc.q_basis.size()));
    for (std::size_t col = 0; col < pc.q_basis.size(); ++col) {
      const Monomial& q = pc.q_basis[col];
      for (int c = 0; c < m; ++c)
        for (const auto& [b, coef] : a.duals_[c].terms())
          if (q.divides(b)) pc.catalecticant.at(c * nr + pc.r_index.at(q.quotient_of(b)), static_cast<int>(col)) += coef;
    }
    Rref r = rref(pc.catalecticant, true);
    pc.rank = r.rank;
    pc.kernel = kernel_basis(pc.catalecticant);
    for (int p : r.pivots) pc.standard.push_back(pc.q_basis[p]);
    pc.coord_map = Matrix(a.field_, r.rank, pc.catalecticant.rows());
    for (int row = 0; row < r.rank; ++row)
      for (int c = 0; c < pc.catalecticant.rows(); ++c) pc.coord_map.at(row, c) = r.transform.at(row, c);
  }
  if (a.pieces_[d].rank != m) throw Error("dual generators are linearly dependent");
  return a;
}

HilbertFunction InverseSystem::hilbert() const {
  std::vector<long> h;
  for (const auto& p : pieces_) h.push_back(p.rank);
  return HilbertFunction(h);
}

int InverseSystem::dim(int i) const { return i >= 0 && i <= d_ ? pieces_[i].rank : 0; }

std::vector<Monomial> InverseSystem::q_basis(int i) const {
  if (i >= 0 && i <= d_) return pieces_[i].q_basis;
  return monomials_of_degree(grading_, i);
}

const std::vector<Monomial>& InverseSystem::standard_monomials(int i) const {
  static const std::vector<Monomial> empty;
  return i >= 0 && i <= d_ ? pieces_[i].standard : empty;
}

std::vector<Vec> InverseSystem::ann_coords(int i) const {
  if (i < 0) return {};
  if (i <= d_) return pieces_[i].kernel;
  int n = static_cast<int>(monomials_of_degree(grading_, i).size());
  std::vector<Vec> out;
  for (int k = 0; k < n; ++k) out.push_back(unit_vec(field_, n, k));
  return out;
}

std::vector<Poly> InverseSystem::ann_component(int i) const {
  std::vector<Poly> out;
  auto basis = q_basis(i);
  for (const auto& v : ann_coords(i)) out.push_back(from_coefficients(field_, Side::Ring, basis, v));
  return out;
}

bool InverseSystem::annihilates(const Poly& f) const {
  for (const auto& G : duals_)
    if (!contract(f, G).is_zero()) return false;
  return true;
}

namespace {

struct GeneratorScan {
  std::vector<int> degrees;
  std::vector<Poly> generators;
};

GeneratorScan scan_generators(const InverseSystem& a) {
  const Grading& g = a.grading();
  const Field& f = a.field();
  const int top = a.socle_degree() + g.max_weight();
  GeneratorScan out;
  for (int j = 1; j <= top + 1; ++j) {
    auto basis_j = a.q_basis(j);
    auto index_j = index_of(basis_j);
    const int n = static_cast<int>(basis_j.size());
    std::vector<Vec> span;  // (Q_+ I)_j
    for (int v = 0; v < g.nvars(); ++v) {
      int lower = j - g.weights[v];
      if (lower < 0) continue;
      auto basis_l = a.q_basis(lower);
      Monomial xv = Monomial::var(g.nvars(), v);
      for (const auto& k : a.ann_coords(lower)) span.push_back(shift_coords(f, xv, basis_l, k, index_j, n));
    }
    span = independent_subset(f, n, span);
    auto ideal = a.ann_coords(j);
    if (j == top + 1) {
      if (static_cast<int>(span.size()) != n)
        throw InternalError("annihilator not generated below degree " + std::to_string(j));
      break;
    }
    for (const auto& k : ideal) {
      std::vector<Vec> trial = span;
      trial.push_back(k);
      if (span_rank(f, n, trial) > static_cast<int>(span.size())) {
        span.push_back(k);
        out.degrees.push_back(j);
        out.generators.push_back(from_coefficients(f, Side::Ring, basis_j, k));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<int> InverseSystem::min_generator_degrees() const { return scan_generators(*this).degrees; }

std::vector<Poly> InverseSystem::min_generators() const { return scan_generators(*this).generators; }

Vec InverseSystem::normal_vector(int i, const Poly& f) const {
  const Piece& pc = pieces_[i];
  return pc.catalecticant * coefficients(f, pc.q_basis, pc.q_index);
}

std::vector<Poly> InverseSystem::normal_polys(int i, const Vec& nv) const {
  const Piece& pc = pieces_[i];
  const int nr = static_cast<int>(pc.r_basis.size());
  std::vector<Poly> out;
  for (int c = 0; c < type(); ++c) {
    Vec part(nv.begin() + c * nr, nv.begin() + (c + 1) * nr);
    out.push_back(from_coefficients(field_, Side::Dual, pc.r_basis, part));
    if (out.back().nvars() != nvars()) out.back() = Poly(field_, nvars(), Side::Dual);
  }
  return out;
}

AlgebraElement InverseSystem::element(const Poly& f) const {
  return element(f.degree(grading_), f);
}

AlgebraElement InverseSystem::element(int i, const Poly& f) const {
  if (!f.is_zero() && f.degree(grading_) != i) throw Error("element has the wrong degree");
  AlgebraElement a;
  a.degree = i;
  a.representative = f.with_side(Side::Ring);
  if (i < 0 || i > d_) {
    a.normal_form.assign(type(), Poly(field_, nvars(), Side::Dual));
    return a;
  }
  a.normal_form = normal_polys(i, normal_vector(i, f));
  return a;
}

Vec InverseSystem::coordinates(int i, const Poly& f) const {
  if (i < 0 || i > d_) return {};
  return pieces_[i].coord_map * normal_vector(i, f);
}

Vec InverseSystem::coordinates(const AlgebraElement& a) const {
  return coordinates(a.degree, lift(a));
}

Poly InverseSystem::lift(int i, const Vec& c) const {
  if (i < 0 || i > d_) return Poly(field_, nvars());
  Poly p = from_coefficients(field_, Side::Ring, pieces_[i].standard, c);
  return p.nvars() == nvars() ? p : Poly(field_, nvars());
}

Poly InverseSystem::lift(const AlgebraElement& a) const {
  if (a.representative) return *a.representative;
  if (a.degree < 0 || a.degree > d_) return Poly(field_, nvars());
  // Solve catalecticant * x = normal form over the standard columns.
  const Piece& pc = pieces_[a.degree];
  Vec nv;
  for (int c = 0; c < type(); ++c) {
    Vec part = coefficients(a.normal_form[c], pc.r_basis, pc.r_index);
    nv.insert(nv.end(), part.begin(), part.end());
  }
  return lift(a.degree, pc.coord_map * nv);
}

AlgebraElement InverseSystem::from_coordinates(int i, const Vec& c) const {
  return element(i, lift(i, c));
}

AlgebraElement InverseSystem::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  return element(a.degree + b.degree, lift(a) * lift(b));
}

Vec InverseSystem::orientation(const AlgebraElement& a) const {
  Vec out = zero_vec(field_, type());
  if (a.degree != d_) return out;
  for (int c = 0; c < type(); ++c) out[c] = eval_at_zero(a.normal_form[c]);
  return out;
}

GradedAlgebra InverseSystem::algebra() const {
  std::vector<int> dims;
  for (const auto& p : pieces_) dims.push_back(p.rank);
  auto product = [this](int i, int p, int j, int q) {
    Monomial m = pieces_[i].standard[p] * pieces_[j].standard[q];
    return coordinates(i + j, Poly::monomial(field_, m, Side::Ring, field_.one()));
  };
  Matrix orient(field_, dims[d_], type());
  for (int p = 0; p < dims[d_]; ++p) {
    AlgebraElement e = element(d_, Poly::monomial(field_, pieces_[d_].standard[p], Side::Ring, field_.one()));
    Vec v = orientation(e);
    for (int c = 0; c < type(); ++c) orient.at(p, c) = v[c];
  }
  return GradedAlgebra(field_, dims, product, orient);
}

std::vector<std::vector<AlgebraElement>> InverseSystem::socle() const {
  auto s = algebra().socle();
  std::vector<std::vector<AlgebraElement>> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (const auto& v : s[i]) out[i].push_back(from_coordinates(static_cast<int>(i), v));
  return out;
}

bool InverseSystem::level_pairing_nondegenerate() const { return algebra().pairing_nondegenerate(); }

}  // namespace agsum
