// Copyright 2026 The agsum Authors.
// SPDX-License-Identifier: Apache-2.0

#include "agsum/graded_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace agsum {

Grading::Grading(std::vector<int> w) : weights(std::move(w)) {
  for (int x : weights)
    if (x < 1) throw Error("variable weights must be positive");
}

bool Grading::is_standard() const {
  return std::all_of(weights.begin(), weights.end(), [](int w) { return w == 1; });
}

int Grading::max_weight() const {
  return weights.empty() ? 1 : *std::max_element(weights.begin(), weights.end());
}

Monomial Monomial::var(int n, int i, int e) {
  Monomial m = one(n);
  m.exps[i] = e;
  return m;
}

int Monomial::degree(const Grading& g) const {
  int d = 0;
  for (int i = 0; i < nvars(); ++i) d += g.weights[i] * exps[i];
  return d;
}

bool Monomial::divides(const Monomial& o) const {
  for (int i = 0; i < nvars(); ++i)
    if (exps[i] > o.exps[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (int i = 0; i < nvars(); ++i) r.exps[i] += o.exps[i];
  return r;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r = o;
  for (int i = 0; i < nvars(); ++i) r.exps[i] -= exps[i];
  return r;
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < nvars(); ++i)
    if (exps[i] > 0) s.push_back(i);
  return s;
}

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

bool grevlex_greater(const Grading& g, const Monomial& a, const Monomial& b) {
  int da = a.degree(g), db = b.degree(g);
  if (da != db) return da > db;
  for (int i = a.nvars() - 1; i >= 0; --i)
    if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i];
  return false;
}

namespace {

void enumerate(const Grading& g, int var, int left, std::vector<int>& cur,
               std::vector<Monomial>& out) {
  if (var == g.nvars()) {
    if (left == 0) out.emplace_back(cur);
    return;
  }
  for (int e = 0; e * g.weights[var] <= left; ++e) {
    cur[var] = e;
    enumerate(g, var + 1, left - e * g.weights[var], cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const Grading& g, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<int> cur(g.nvars(), 0);
  enumerate(g, 0, d, cur, out);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return grevlex_greater(g, a, b); });
  return out;
}

Poly Poly::monomial(Field f, const Monomial& m, Side side, const Scalar& c) {
  Poly p(f, m.nvars(), side);
  p.add_term(m, c);
  return p;
}

Poly Poly::constant(Field f, int nvars, Side side, const Scalar& c) {
  return monomial(f, Monomial::one(nvars), side, c);
}

Poly Poly::with_side(Side s) const {
  Poly p = *this;
  p.side_ = s;
  return p;
}

Scalar Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (m.nvars() != nvars_) throw Error("monomial has the wrong number of variables");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Poly::is_homogeneous(const Grading& g) const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree(g);
  for (const auto& [m, c] : terms_)
    if (m.degree(g) != d) return false;
  return true;
}

int Poly::degree(const Grading& g) const {
  if (terms_.empty()) throw Error("degree of the zero polynomial");
  if (!is_homogeneous(g)) throw Error("polynomial is not homogeneous");
  return terms_.begin()->first.degree(g);
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator-() const { return scaled(-field_.one()); }

Poly Poly::operator*(const Poly& o) const {
  Poly r(field_, nvars_, side_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly r(field_, nvars_, side_);
  if (c.is_zero()) return r;
  for (const auto& [m, a] : terms_) r.terms_.emplace(m, a * c);
  return r;
}

Poly Poly::pow(int e) const {
  Poly r = constant(field_, nvars_, side_, field_.one());
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::vector<std::pair<Monomial, Scalar>> Poly::sorted_terms(const Grading& g) const {
  std::vector<std::pair<Monomial, Scalar>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(),
            [&](const auto& a, const auto& b) { return grevlex_greater(g, a.first, b.first); });
  return v;
}

Poly Poly::normalized(const Grading& g) const {
  if (is_zero()) return *this;
  return scaled(sorted_terms(g).front().second.inverse());
}

Poly contract(const Poly& f, const Poly& F) {
  Poly r(F.field(), F.nvars(), Side::Dual);
  for (const auto& [a, c] : f.terms())
    for (const auto& [b, C] : F.terms())
      if (a.divides(b)) r.add_term(a.quotient_of(b), c * C);
  return r;
}

Scalar eval_at_zero(const Poly& F) { return F.coeff(Monomial::one(F.nvars())); }

Poly dual_monomial(const Poly& m) {
  return m.with_side(m.side() == Side::Ring ? Side::Dual : Side::Ring);
}

Poly substitute(const Poly& f, const std::vector<Poly>& images) {
  if (static_cast<int>(images.size()) != f.nvars())
    throw Error("substitution needs one image per variable");
  int n = images.empty() ? 0 : images[0].nvars();
  Poly r(f.field(), n, f.side());
  for (const auto& [m, c] : f.terms()) {
    Poly t = Poly::constant(f.field(), n, f.side(), c);
    for (int i = 0; i < m.nvars(); ++i)
      if (m.exps[i] > 0) t = t * images[i].with_side(f.side()).pow(m.exps[i]);
    r = r + t;
  }
  return r;
}

std::vector<Scalar> coefficients(const Poly& f, const std::vector<Monomial>& basis,
                                 const std::map<Monomial, int>& index) {
  std::vector<Scalar> v(basis.size(), f.field().zero());
  for (const auto& [m, c] : f.terms()) {
    auto it = index.find(m);
    if (it == index.end()) throw Error("polynomial has a term outside the expected degree");
    v[it->second] = c;
  }
  return v;
}

Poly from_coefficients(Field f, Side side, const std::vector<Monomial>& basis,
                       const std::vector<Scalar>& c) {
  int n = basis.empty() ? 0 : basis[0].nvars();
  Poly p(f, n, side);
  for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], c[i]);
  return p;
}

VarNames VarNames::defaults(int n) {
  VarNames v;
  for (int i = 1; i <= n; ++i) v.names.push_back("x" + std::to_string(i));
  return v;
}

std::string to_string(const Monomial& m, const VarNames& names, Side side) {
  std::string out;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m.exps[i] == 0) continue;
    std::string n = names.names.at(i);
    for (char& ch : n)
      ch = static_cast<char>(side == Side::Dual ? std::toupper(static_cast<unsigned char>(ch))
                                                : std::tolower(static_cast<unsigned char>(ch)));
    if (!out.empty()) out += "*";
    out += n;
    if (m.exps[i] > 1) out += "^" + std::to_string(m.exps[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Poly& f, const Grading& g, const VarNames& names) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.sorted_terms(g)) {
    bool neg = f.field().is_rational() && sgn(c.rational()) < 0;
    Scalar a = neg ? -c : c;
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    first = false;
    if (m.is_one()) {
      out += a.to_string();
    } else {
      if (!a.is_one()) out += a.to_string() + "*";
      out += to_string(m, names, f.side());
    }
  }
  return out;
}

}  // namespace agsum
