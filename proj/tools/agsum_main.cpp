// Copyright 2026 The agsum Authors.
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "agsum/cli.hpp"

int main(int argc, char** argv) {
  agsum::cli::Options opt;
  std::string expr, file;
  CLI::App app{"agsum: connected sums and Lefschetz properties of Artinian Gorenstein algebras"};
  app.add_option("-e,--expr", expr, "script text (statements separated by ';' or newlines)");
  auto* fopt = app.add_option("-f,--file,script", file, "script file ('-' for stdin)");
  app.add_option("--field", opt.field, "default field: rat or fp:<p>");
  app.add_flag("--json", opt.json, "emit one JSON document");
  app.add_option("--trials", opt.trials, "random forms tried by generic checks")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "seed for generic checks");
  app.add_option("--ell", opt.ell, "explicit linear form, e.g. x+2y");
  app.add_flag("--generic", opt.generic, "sample generic forms even if --ell is given");
  app.add_option("--max-degree", opt.max_degree, "cap on printed generator degrees");
  CLI11_PARSE(app, argc, argv);

  if (!expr.empty()) {
    opt.script = expr;
  } else if (*fopt) {
    std::stringstream ss;
    if (file == "-") {
      ss << std::cin.rdbuf();
    } else {
      std::ifstream in(file);
      if (!in) {
        std::cerr << "error: cannot open '" << file << "'\n";
        return 1;
      }
      ss << in.rdbuf();
    }
    opt.script = ss.str();
  } else {
    std::cerr << "error: give a script with -e or a file\n";
    return 1;
  }
  return agsum::cli::run(opt, std::cout, std::cerr);
}
