#pragma once

#include "report.hpp"

#include "homzero/homology.hpp"

#include <string>

namespace homzero::cli {

struct Options {
  std::size_t max_dim = kDefaultMaxDim;
  int jobs = 1;
  std::size_t rewrite_budget = 100000;
  std::size_t nu_budget = 10000;
  std::size_t nu_max_length = 12;
  std::string via = "ideal";
};

/// Applies HOMZERO_BUDGET, when set, to both search budgets.
void apply_environment(Options& o);

enum ExitCode { kOk = 0, kInvalid = 1, kUndecided = 2, kUsage = 3 };

struct Outcome {
  Report report;
  int exit_code = kOk;
  std::string error;  // set when the command failed before producing a report
};

Outcome cmd_validate(const std::string& table_path);
Outcome cmd_cat0(const std::string& path, const Options& o);
Outcome cmd_h0(const std::string& semigroup_path, const std::string& module_path, const Options& o);
Outcome cmd_bar(const std::string& semigroup_path, const std::string& module_path, const Options& o);
Outcome cmd_pipeline(const std::string& presentation_path, const std::string& module_path, const Options& o);
Outcome cmd_reflector_eq(const std::string& semigroup_path, const std::string& x, const std::string& y,
                         const Options& o);
Outcome cmd_reflector_mul(const std::string& semigroup_path, const std::string& x, const std::string& y);

}  // namespace homzero::cli
