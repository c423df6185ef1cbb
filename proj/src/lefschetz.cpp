// Copyright 2026 The agsum Authors.
// SPDX-License-Identifier: Apache-2.0

#include "agsum/lefschetz.hpp"

#include <algorithm>
#include <random>

#include "agsum/decompose.hpp"

namespace agsum {

namespace {

bool full_rank(const Matrix& m) { return rank(m) == std::min(m.rows(), m.cols()); }

void check_form(const GradedAlgebra& a, const Vec& ell) {
  if (static_cast<int>(ell.size()) != a.dim(1))
    throw Error("linear form has " + std::to_string(ell.size()) + " coordinates, A_1 has dimension " +
                std::to_string(a.dim(1)));
}

Poly var_poly(const Field& f, int n, int i) {
  return Poly::monomial(f, Monomial::var(n, i), Side::Ring, f.one());
}

Partition sorted_hilbert(const HilbertFunction& h) {
  Partition p;
  for (long x : h.values())
    if (x > 0) p.push_back(static_cast<int>(x));
  std::sort(p.rbegin(), p.rend());
  return p;
}

bool better(const LefschetzReport& a, const LefschetzReport& b) {
  if (a.slp != b.slp) return a.slp;
  return a.wlp && !b.wlp;
}

}  // namespace

Matrix mult_map(const GradedAlgebra& a, const Vec& ell, int e, int i) {
  check_form(a, ell);
  if (e == 0) return Matrix::identity(a.field(), a.dim(i));
  return a.mult_by(e, a.power(1, ell, e), i);
}

Vec linear_form(const InverseSystem& a, const Poly& ell) {
  if (ell.is_zero()) return zero_vec(a.field(), a.dim(1));
  if (!ell.is_homogeneous(a.grading()) || ell.degree(a.grading()) != 1)
    throw Error("linear form must be homogeneous of degree 1");
  return a.coordinates(1, ell.with_side(Side::Ring));
}

LefschetzReport slp_check(const GradedAlgebra& a, const Vec& ell) {
  check_form(a, ell);
  LefschetzReport r;
  r.ell = ell;
  const int d = a.top_degree();
  if (a.dim(1) == 0) {
    r.no_linear_forms = true;
    r.warnings.push_back("no linear forms: A_1 = 0");
  }
  const Field& f = a.field();
  if (!f.is_rational() && f.characteristic() <= static_cast<std::uint64_t>(d)) {
    r.char_sensitive = true;
    r.warnings.push_back("characteristic " + std::to_string(f.characteristic()) + " <= socle degree " +
                         std::to_string(d) + ": verdict is char-sensitive");
  }
  r.wlp = r.slp = true;
  for (int i = 0; i <= d; ++i) {
    Vec p = a.one();
    for (int e = 1; i + e <= d; ++e) {
      p = a.multiply(e - 1, p, 1, ell);
      if (full_rank(a.mult_by(e, p, i))) continue;
      if (e == 1 && r.wlp) {
        r.wlp = false;
        r.wlp_failure = {i, 1};
      }
      if (r.slp) {
        r.slp = false;
        r.slp_failure = {i, e};
      }
    }
  }
  if (a.hilbert().is_symmetric()) {
    bool narrow = true;
    for (int i = 0; 2 * i <= d && narrow; ++i) {
      Matrix m = mult_map(a, ell, d - 2 * i, i);
      narrow = a.dim(i) == a.dim(d - i) && rank(m) == a.dim(i);
    }
    r.narrow_sense_slp = narrow;
    if (narrow != r.slp) throw InternalError("narrow-sense SLP disagrees with the full rank check");
  }
  return r;
}

bool wlp_check(const GradedAlgebra& a, const Vec& ell) {
  check_form(a, ell);
  for (int i = 0; i < a.top_degree(); ++i)
    if (!full_rank(a.mult_by(1, ell, i))) return false;
  return true;
}

JordanType jordan_type(const GradedAlgebra& a, const Vec& ell) {
  check_form(a, ell);
  JordanType j;
  j.ell = ell;
  const int d = a.top_degree();
  j.ranks.push_back(a.total_dim());
  for (int s = 1; j.ranks.back() > 0; ++s) {
    long r = 0;
    if (s <= d) {
      Vec p = a.power(1, ell, s);
      for (int i = 0; i + s <= d; ++i) r += rank(a.mult_by(s, p, i));
    }
    j.ranks.push_back(r);
  }
  // at_least[s] = number of parts of size >= s
  const int n = static_cast<int>(j.ranks.size());
  for (int s = n - 1; s >= 1; --s) {
    long at_least = j.ranks[s - 1] - j.ranks[s];
    long longer = s + 1 < n ? j.ranks[s] - j.ranks[s + 1] : 0;
    for (long c = 0; c < at_least - longer; ++c) j.partition.push_back(s);
  }
  j.conjugate_of_hilbert = j.partition == conjugate(sorted_hilbert(a.hilbert()));
  if (j.conjugate_of_hilbert != slp_check(a, ell).slp)
    throw InternalError("Jordan type criterion disagrees with the SLP rank check");
  return j;
}

namespace {

template <class Draw>
GenericLefschetz sample(const GradedAlgebra& a, int trials, std::uint64_t seed, Draw draw) {
  if (a.dim(1) == 0) throw Error("no linear forms: A_1 = 0");
  if (trials < 1) throw Error("need at least one trial");
  std::mt19937_64 rng(seed);
  GenericLefschetz g;
  for (int t = 0; t < trials; ++t) {
    Vec ell = draw(rng);
    g.sampled.push_back(ell);
    LefschetzReport r = slp_check(a, ell);
    JordanType j = jordan_type(a, ell);
    if (t == 0 || better(r, g.report)) g.report = r;
    if (t == 0 || (dominates(j.partition, g.jordan.partition) && j.partition != g.jordan.partition))
      g.jordan = j;
  }
  g.jordan.trials = trials;
  g.jordan.seed = seed;
  g.jordan.observed_generic = true;
  return g;
}

}  // namespace

GenericLefschetz generic_lefschetz(const GradedAlgebra& a, int trials, std::uint64_t seed) {
  const Field& f = a.field();
  return sample(a, trials, seed, [&](std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-10, 10);
    for (;;) {
      Vec ell;
      for (int i = 0; i < a.dim(1); ++i) ell.push_back(f.from_int(c(rng)));
      if (!is_zero(ell)) return ell;
    }
  });
}

GenericLefschetz generic_lefschetz(const InverseSystem& a, int trials, std::uint64_t seed) {
  GradedAlgebra alg = a.algebra();
  const Field& f = a.field();
  const int n = a.nvars();
  std::vector<int> linear;
  for (int i = 0; i < n; ++i)
    if (a.grading().weights[i] == 1) linear.push_back(i);
  return sample(alg, trials, seed, [&](std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-10, 10);
    for (;;) {
      Poly ell(f, n);
      for (int i : linear) ell.add_term(Monomial::var(n, i), f.from_int(c(rng)));
      if (!ell.is_zero()) return linear_form(a, ell);
    }
  });
}

MiddleCheck wlp_middle_check(const GradedSubquotient& D, const Vec& ell) {
  if (!D.a().grading().is_standard() || !D.b().grading().is_standard())
    throw Error("middle-degree WLP check needs standard-graded A and B");
  const int d = D.d(), k = D.k();
  if (!(k < (d - 1) / 2))
    throw Error("middle-degree WLP check needs k < floor((d-1)/2); here k = " + std::to_string(k) +
                ", d = " + std::to_string(d));
  const GradedAlgebra& a = D.algebra();
  check_form(a, ell);
  MiddleCheck m;
  // For odd d the middle map is D_{(d-1)/2} -> D_{(d+1)/2}.
  if (d % 2 == 0) {
    m.u = d / 2;
    m.v = d / 2 + 1;
  } else {
    m.u = m.v = (d + 1) / 2;
  }
  m.injective_u = rank(a.mult_by(1, ell, m.u - 1)) == a.dim(m.u - 1);
  m.surjective_v = rank(a.mult_by(1, ell, m.v - 1)) == a.dim(m.v);
  m.result = m.injective_u && m.surjective_v;
  m.full_wlp = wlp_check(a, ell);
  // Generators in degree <= k+1 <= v and socle in degree d propagate both checks.
  if (m.result && !m.full_wlp) throw InternalError("middle-degree WLP check passed but the full check failed");
  return m;
}

BlowupResult blowup_cs(std::shared_ptr<const OrientedSurjection> pi_a, int trials, std::uint64_t seed) {
  const InverseSystem& A = pi_a->source();
  const InverseSystem& T = pi_a->target();
  if (A.type() != 1 || T.type() != 1) throw Error("blowup needs Gorenstein A and T");
  const int d = pi_a->d(), k = pi_a->k();
  if (!is_zero(pi_a->apply(d - k, pi_a->thom_coords())))
    throw Error("blowup needs pi_A(tau_A) = 0");
  if (!generic_lefschetz(A, trials, seed).report.slp) throw Error("blowup needs A with the SLP (no witness found)");
  if (T.dim(1) > 0) {
    if (!generic_lefschetz(T, trials, seed).report.slp)
      throw Error("blowup needs T with the SLP (no witness found)");
  } else if (k > 0) {
    throw Error("blowup needs T with the SLP; T_1 = 0");
  }

  const Field& f = A.field();
  const int nt = T.nvars();
  std::vector<int> w = T.grading().weights;
  w.push_back(1);
  Grading gb(w);
  Poly hx(f, nt + 1, Side::Dual);
  for (const auto& [m, c] : T.duals()[0].terms()) {
    std::vector<int> e = m.exps;
    e.push_back(d - k);
    hx.add_term(Monomial(e), c);
  }
  std::vector<Poly> images;
  for (int i = 0; i < nt; ++i) images.push_back(var_poly(f, nt, i));
  images.push_back(Poly(f, nt));

  BlowupResult r;
  r.b = std::make_shared<InverseSystem>(InverseSystem::build(gb, {hx}));
  r.pi_b = std::make_shared<OrientedSurjection>(OrientedSurjection::from_map(r.b, pi_a->target_ptr(), images));
  r.fiber = fibered_product_structural(*pi_a, *r.pi_b);
  r.sum = connected_sum_structural(r.fiber);
  r.fiber_lefschetz = generic_lefschetz(r.fiber.algebra(), trials, seed);
  r.sum_lefschetz = generic_lefschetz(r.sum.algebra(), trials, seed);
  return r;
}

ClosureResult closure_add(std::shared_ptr<const InverseSystem> a, const Poly& ell, int k, std::optional<Vec> lambda,
                          int trials, std::uint64_t seed) {
  const InverseSystem& A = *a;
  const Field& f = A.field();
  const int d = A.socle_degree(), n = A.nvars();
  if (!A.grading().is_standard()) throw Error("closure needs a standard-graded A");
  if (A.type() != 1) throw Error("closure needs a Gorenstein A");
  if (k < 0 || 2 * k >= d) throw Error("closure needs 0 <= k and 2k < d");
  if (!f.is_rational() && f.characteristic() <= static_cast<std::uint64_t>(d))
    throw Error("closure needs characteristic 0 or > d");
  if (!slp_check(A.algebra(), linear_form(A, ell)).slp) throw Error("the given form is not strong Lefschetz");

  std::vector<Vec> candidates;
  if (lambda) {
    if (static_cast<int>(lambda->size()) != n) throw Error("lambda needs one entry per variable");
    candidates.push_back(*lambda);
  } else {
    for (int i = 0; i < n; ++i) {
      Scalar li = ell.coeff(Monomial::var(n, i));
      if (!li.is_zero()) candidates.push_back(scale(unit_vec(f, n, i), li.inverse()));
    }
  }

  Grading gy = Grading::standard(1);
  Poly yk = Poly::monomial(f, Monomial::var(1, 0, k), Side::Dual, f.one());
  auto T = std::make_shared<InverseSystem>(InverseSystem::build(gy, {yk}));
  Poly y = var_poly(f, 1, 0);

  ClosureResult r;
  std::string last;
  for (const Vec& lam : candidates) {
    Scalar pairing = f.zero();
    for (int i = 0; i < n; ++i) pairing += lam[i] * ell.coeff(Monomial::var(n, i));
    if (!pairing.is_one()) {
      last = "lambda(l) != 1";
      continue;
    }
    std::vector<Poly> images;
    for (int i = 0; i < n; ++i) images.push_back(y.scaled(lam[i]));
    try {
      r.pi_a = std::make_shared<OrientedSurjection>(OrientedSurjection::from_map(a, T, images));
      r.lambda = lam;
      break;
    } catch (const InternalError&) {
      throw;
    } catch (const Error& e) {
      last = e.what();
    }
  }
  if (!r.pi_a) throw Error("no substitution x_i -> lambda_i y is well defined on A (" + last + ")");

  Grading gxy = Grading::standard(2);
  Poly bd = Poly::monomial(f, Monomial({d - k, k}), Side::Dual, f.one());
  auto B = std::make_shared<InverseSystem>(InverseSystem::build(gxy, {bd}));
  r.pi_b = std::make_shared<OrientedSurjection>(OrientedSurjection::from_map(B, T, {Poly(f, 1), y}));
  r.sum = connected_sum_structural(fibered_product_structural(*r.pi_a, *r.pi_b));
  r.predicted = A.hilbert() + closure_increment(k, d);
  if (!(r.sum.hilbert() == r.predicted))
    throw InternalError("closure Hilbert function " + r.sum.hilbert().to_string() + " differs from H(A) + W(k,d) = " +
                        r.predicted.to_string());
  r.lefschetz = generic_lefschetz(r.sum.algebra(), trials, seed);
  return r;
}

TwoBlockClass two_block_classify(const GradedAlgebra& c, std::optional<Vec> u_in, int trials, std::uint64_t seed) {
  if (c.orientation_rank() != 1 || c.socle_dim() != 1) throw Error("two-block classification needs a Gorenstein C");
  if (c.dim(1) == 0) throw Error("two-block classification needs C_1 != 0");
  const Field& f = c.field();
  const int s = c.top_degree();
  if (!f.is_rational() && f.characteristic() <= static_cast<std::uint64_t>(s))
    throw Error("two-block classification needs characteristic 0 or > socle degree");

  TwoBlockClass r;
  GenericLefschetz gen = generic_lefschetz(c, trials, seed);
  JordanType jt = u_in ? jordan_type(c, *u_in) : gen.jordan;
  const Partition& p = jt.partition;
  if (p.size() != 2 || p[0] != p[1])
    throw Error("Jordan type " + to_string(p) + " is not two equal parts");
  r.a = p[0];
  r.u = jt.ell;
  const int a = r.a;

  std::vector<Vec> upow{c.one()};
  for (int i = 1; i <= s; ++i) upow.push_back(c.multiply(i - 1, upow.back(), 1, r.u));
  r.t = -1;
  for (int i = 0; i <= s && r.t < 0; ++i)
    if (c.dim(i) > (is_zero(upow[i]) ? 0 : 1)) r.t = i;
  if (r.t < 1) throw InternalError("no degree where C leaves the powers of u");
  const int t = r.t;
  std::vector<Vec> tu;
  if (!is_zero(upow[t])) tu.push_back(upow[t]);
  r.v = unit_vec(f, c.dim(t), complement_units(f, c.dim(t), tu).at(0));

  // Basis u^i, u^i v for 0 <= i < a.
  std::vector<std::vector<Vec>> by_degree(s + 1);
  for (int i = 0; i < a; ++i) {
    if (i <= s) by_degree[i].push_back(upow[i]);
    if (t + i <= s) by_degree[t + i].push_back(c.multiply(i, upow[i], t, r.v));
  }
  if (t + a - 1 != s) throw Error("block degrees do not end at the socle degree");
  for (int j = 0; j <= s; ++j)
    if (static_cast<int>(by_degree[j].size()) != c.dim(j) || span_rank(f, c.dim(j), by_degree[j]) != c.dim(j))
      throw Error("u^i, u^i v is not a basis of C in degree " + std::to_string(j));

  auto sq = [&](const Vec& v) { return c.multiply(t, v, t, v); };
  auto utv = [&](const Vec& v) { return c.multiply(t, upow[t], t, v); };
  r.alpha = r.beta = f.zero();
  if (a <= t) {
    r.type = 1;
    r.note = "a <= t: C_{2t} = 0, so v^2 = 0";
  } else if (a <= 2 * t) {
    // C_{2t} is spanned by u^t v.
    auto sol = solve(Matrix::from_columns(f, c.dim(2 * t), {utv(r.v)}), sq(r.v));
    if (!sol) throw InternalError("v^2 is not a multiple of u^t v");
    r.alpha = (*sol)[0];
    if (r.alpha.is_zero()) {
      r.type = 1;
    } else {
      r.type = 2;
      r.v = scale(r.v, r.alpha.inverse());
    }
    r.note = "t < a <= 2t: both models are isomorphic here (v - u^t/2 squares to 0)";
  } else {
    auto sol = solve(Matrix::from_columns(f, c.dim(2 * t), {utv(r.v), upow[2 * t]}), sq(r.v));
    if (!sol) throw InternalError("v^2 is not in the span of u^t v and u^2t");
    r.alpha = (*sol)[0];
    r.beta = (*sol)[1];
    Scalar two = f.from_int(2);
    Scalar disc = r.alpha * r.alpha + f.from_int(4) * r.beta;
    if (disc.is_zero()) {
      r.type = 1;
      r.v = sub(r.v, scale(upow[t], r.alpha / two));
    } else if (auto root = disc.sqrt()) {
      // y^2 - alpha y - beta = (y - delta)(y - eps)
      Scalar delta = (r.alpha + *root) / two, eps = (r.alpha - *root) / two;
      Vec v1 = sub(r.v, scale(upow[t], delta));
      r.type = 2;
      r.v = scale(v1, (eps - delta).inverse());
    } else {
      r.type = 0;
      r.extension_required = true;
      r.note = "extension required: alpha^2 + 4 beta = " + disc.to_string() + " is not a square in " + f.to_string();
    }
  }
  if (r.type != 0) {
    Vec rel = r.type == 1 ? sq(r.v) : sub(sq(r.v), utv(r.v));
    if (!is_zero(rel)) throw InternalError("classified relation does not hold in C");
    if (!is_zero(c.power(1, r.u, a))) throw InternalError("u^a != 0");
  }

  r.slp = gen.report.slp;
  r.standard_graded = c.generated_by_degree_one() == c.hilbert();
  r.t_is_one = t == 1;
  if (r.standard_graded != r.t_is_one) throw InternalError("standard graded and t = 1 disagree");
  if (r.slp != r.t_is_one) {
    r.note += (r.note.empty() ? "" : "; ") + std::string("sampled SLP verdict disagrees with t = 1 (sampling miss?)");
  }
  return r;
}

InverseSystem nonslp_family(int m, int t, const Field& f) {
  if (!(t >= 2 && t < m)) throw Error("nonslp family needs 2 <= t < m");
  Grading g({1, t});
  Poly F(f, 2, Side::Dual);
  for (int j = 1; j * t <= m - 1; ++j) F.add_term(Monomial({m - 1 - j * t, j}), f.one());
  return InverseSystem::build(g, {F});
}

GradedSubquotient nonslp_structural(int m, int t, const Field& f) {
  if (!(t >= 2 && t < m)) throw Error("nonslp family needs 2 <= t < m");
  Grading g1 = Grading::standard(1);
  auto power_ring = [&](int e) {
    return std::make_shared<InverseSystem>(
        InverseSystem::build(g1, {Poly::monomial(f, Monomial::var(1, 0, e), Side::Dual, f.one())}));
  };
  auto A = power_ring(m - 1), B = power_ring(m - 1), T = power_ring(t - 1);
  Poly z = var_poly(f, 1, 0);
  auto pa = OrientedSurjection::from_map(A, T, {z});
  auto pb = OrientedSurjection::from_map(B, T, {z});
  return connected_sum_structural(fibered_product_structural(pa, pb));
}

HilbertFunction nonslp_hilbert(int m, int t) {
  std::vector<long> h;
  if (2 * t < m) {
    h.assign(t, 1);
    h.insert(h.end(), m - 2 * t, 2);
    h.insert(h.end(), t, 1);
  } else if (2 * t == m) {
    h.assign(m, 1);
  } else {
    h.assign(m - t, 1);
    h.insert(h.end(), 2 * t - m, 0);
    h.insert(h.end(), m - t, 1);
  }
  return HilbertFunction(h);
}

HeightThree heightthree_family(int a, int d, int k, const Field& f) {
  const int b = d - a;
  if (a < 1 || a > b || k < 0 || 2 * k >= d) throw Error("height-three family needs 1 <= a <= d-a and 0 <= 2k < d");
  Grading g = Grading::standard(3);  // s, x, y
  auto mono = [&](int es, int ex, int ey) { return Poly::monomial(f, Monomial({es, ex, ey}), Side::Dual, f.one()); };
  Poly FA = mono(a, 0, b), FB = mono(0, d - k, k);
  InverseSystem A = InverseSystem::build(g, {FA});
  InverseSystem B = InverseSystem::build(g, {FB});
  InverseSystem T = InverseSystem::build(g, {mono(0, 0, k)});
  return {InverseSystem::build(g, {FA - FB}),
          A.hilbert() + B.hilbert() - T.hilbert() - T.hilbert().shifted(d - k)};
}

ProductSlp slp_over_field(const InverseSystem& a, const Vec& ell_a, const InverseSystem& b, const Vec& ell_b) {
  ProductPresentation pres = product_presentation_over_F(a, b);
  const Field& f = a.field();
  const int na = a.nvars(), n = pres.grading.nvars(), d = a.socle_degree();
  auto shift = [&](const Poly& p, int off) {
    std::vector<Poly> images;
    for (int v = 0; v < p.nvars(); ++v)
      images.push_back(Poly::monomial(f, Monomial::var(n, off + v), Side::Ring, f.one()));
    return substitute(p, images);
  };
  Poly la = shift(a.lift(1, ell_a), 0), lb = shift(b.lift(1, ell_b), na);
  InverseSystem fiber = InverseSystem::build(pres.grading, {pres.F, pres.G});
  InverseSystem sum = InverseSystem::build(pres.grading, {pres.F - pres.G});

  ProductSlp out;
  out.fiber_hilbert = fiber.hilbert();
  out.sum_hilbert = sum.hilbert();
  out.fiber_slp = slp_check(fiber.algebra(), linear_form(fiber, la + lb)).slp;
  GradedAlgebra cs = sum.algebra();
  out.b = f.one();
  out.sum_slp = out.sum_slp_unscaled = slp_check(cs, linear_form(sum, la + lb)).slp;
  for (int c = 2; !out.sum_slp && c < 2 + 2 * (d + 1); ++c) {
    Scalar s = f.from_int(c), sd = f.one();
    for (int e = 0; e < d; ++e) sd = sd * s;
    if (s.is_zero() || sd == f.one()) continue;
    if (slp_check(cs, linear_form(sum, la + lb.scaled(s))).slp) {
      out.sum_slp = true;
      out.b = s;
    }
  }
  return out;
}

}  // namespace agsum
