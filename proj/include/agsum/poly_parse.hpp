// Copyright 2026 The agsum Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "agsum/graded_poly.hpp"

namespace agsum {

struct SourcePos {
  int line = 1;
  int col = 1;
};

struct ParseError : Error {
  ParseError(SourcePos p, const std::string& msg)
      : Error(std::to_string(p.line) + ":" + std::to_string(p.col) + ": " + msg), pos(p) {}
  SourcePos pos;
};

// Declared variables.  Lookup ignores case: x and X name the same variable.
struct VarTable {
  VarNames names;
  Grading grading;

  int lookup(std::string_view name) const;  // -1 if unknown
  int nvars() const { return grading.nvars(); }
  std::string declaration() const;          // "vars x:1 y:1"
};

// poly := ['+'|'-'] term {('+'|'-') term};  term := factor {'*' factor};
// factor := atom ['^' int];  atom := int ['/' int] | name | '(' poly ')'
Poly parse_poly(std::string_view text, const VarTable& vars, const Field& f,
                SourcePos start = {}, Side side = Side::Ring);

// Shorthand for tests and examples: variables x1..xn or given names.
Poly poly_of(std::string_view text, const VarTable& vars, Side side = Side::Ring,
             const Field& f = Field::rationals());

VarTable make_vars(const std::vector<std::string>& names, const std::vector<int>& weights = {});

}  // namespace agsum
