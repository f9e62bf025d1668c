#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parind/weyl.hpp"

namespace parind {

struct SuiteResult {
  std::string name;
  bool ok = true;
  std::size_t checks = 0;
  std::optional<std::string> counterexample;  // first failure, with parameters
};

/// Suite names in the order `run_suites` executes them.
const std::vector<std::string>& suite_names();

/// Runs one named suite exhaustively on W; throws InputError on an unknown name.
SuiteResult run_suite(const WeylGroup& W, const std::string& name);

/// "all" or a single suite name.
std::vector<SuiteResult> run_suites(const WeylGroup& W, const std::string& which);

}  // namespace parind
