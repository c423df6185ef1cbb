// Copyright 2026 The agsum Authors.
// SPDX-License-Identifier: Apache-2.0

#include "agsum/poly_parse.hpp"

#include <cctype>

namespace agsum {

namespace {

bool same_ci(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(a[i])) != std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  return true;
}

class Parser {
 public:
  Parser(std::string_view text, const VarTable& vars, const Field& f, SourcePos start, Side side)
      : s_(text), vars_(vars), f_(f), start_(start), side_(side) {}

  Poly run() {
    skip();
    if (at_end()) fail("empty polynomial");
    Poly p = expr();
    skip();
    if (!at_end()) fail(std::string("unexpected '") + s_[i_] + "'");
    return p;
  }

 private:
  bool at_end() const { return i_ >= s_.size(); }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  SourcePos pos_at(std::size_t k) const {
    SourcePos p = start_;
    for (std::size_t j = 0; j < k && j < s_.size(); ++j) {
      if (s_[j] == '\n') {
        ++p.line;
        p.col = 1;
      } else {
        ++p.col;
      }
    }
    return p;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_at(i_), msg); }

  Poly constant(const Scalar& c) const { return Poly::constant(f_, vars_.nvars(), side_, c); }

  Poly expr() {
    skip();
    bool neg = false;
    if (!at_end() && (s_[i_] == '+' || s_[i_] == '-')) {
      neg = s_[i_] == '-';
      ++i_;
    }
    Poly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip();
      if (at_end() || (s_[i_] != '+' && s_[i_] != '-')) break;
      bool minus = s_[i_] == '-';
      ++i_;
      Poly t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      skip();
      if (at_end() || s_[i_] != '*') break;
      ++i_;
      acc = acc * factor();
    }
    return acc;
  }

  long long integer() {
    skip();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected an integer");
    std::size_t b = i_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ - b > 17) fail("integer too large");
    return std::stoll(std::string(s_.substr(b, i_ - b)));
  }

  Poly factor() {
    Poly base = atom();
    skip();
    if (!at_end() && s_[i_] == '^') {
      ++i_;
      long long e = integer();
      if (e > 1000) fail("exponent too large");
      base = base.pow(static_cast<int>(e));
    }
    return base;
  }

  Poly atom() {
    skip();
    if (at_end()) fail("unexpected end of polynomial");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      Poly p = expr();
      skip();
      if (at_end() || s_[i_] != ')') fail("expected ')'");
      ++i_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t b = i_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      mpz_class num(std::string(s_.substr(b, i_ - b)));
      mpz_class den = 1;
      skip();
      if (!at_end() && s_[i_] == '/') {
        ++i_;
        skip();
        std::size_t b2 = i_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (b2 == i_) fail("expected a denominator");
        den = mpz_class(std::string(s_.substr(b2, i_ - b2)));
        if (den == 0) fail("zero denominator");
      }
      return constant(f_.from_mpq(mpq_class(num, den)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t b = i_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      std::string_view name = s_.substr(b, i_ - b);
      int v = vars_.lookup(name);
      if (v < 0) {
        i_ = b;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Poly::monomial(f_, Monomial::var(vars_.nvars(), v), side_, f_.one());
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  const VarTable& vars_;
  Field f_;
  SourcePos start_;
  Side side_;
  std::size_t i_ = 0;
};

}  // namespace

int VarTable::lookup(std::string_view name) const {
  for (std::size_t i = 0; i < names.names.size(); ++i)
    if (same_ci(names.names[i], name)) return static_cast<int>(i);
  return -1;
}

std::string VarTable::declaration() const {
  std::string s = "vars";
  for (int i = 0; i < nvars(); ++i)
    s += " " + names.names[i] + ":" + std::to_string(grading.weights[i]);
  return s;
}

Poly parse_poly(std::string_view text, const VarTable& vars, const Field& f, SourcePos start, Side side) {
  return Parser(text, vars, f, start, side).run();
}

Poly poly_of(std::string_view text, const VarTable& vars, Side side, const Field& f) {
  return parse_poly(text, vars, f, {}, side);
}

VarTable make_vars(const std::vector<std::string>& names, const std::vector<int>& weights) {
  VarTable t;
  t.names.names = names;
  t.grading = Grading(weights.empty() ? std::vector<int>(names.size(), 1) : weights);
  if (t.grading.nvars() != static_cast<int>(names.size())) throw Error("one weight per variable");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (same_ci(names[i], names[j])) throw Error("duplicate variable '" + names[i] + "'");
  return t;
}

}  // namespace agsum
