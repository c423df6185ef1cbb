// Copyright 2026 The agsum Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agsum/lefschetz.hpp"
#include "agsum/poly_parse.hpp"

namespace agsum::cli {

inline constexpr int kSchemaVersion = 1;

struct Options {
  std::string script;
  std::optional<std::string> field;  // "rat" or "fp:<p>"
  bool json = false;
  int trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::string> ell;
  bool generic = false;
  std::optional<int> max_degree;
};

// One ';'- or newline-terminated piece of the script, comments stripped.
struct Statement {
  SourcePos pos;
  std::string text;
};
std::vector<Statement> split_script(std::string_view text);

Field parse_field(std::string_view spec);

// Runs every statement in order.  Returns the process exit status.
int run(const Options& opt, std::ostream& out, std::ostream& err);

}  // namespace agsum::cli
