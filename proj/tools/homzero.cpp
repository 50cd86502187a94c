#include "cli/commands.hpp"
#include "cli/report.hpp"

#include "homzero/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace homzero::cli;

int main(int argc, char** argv) {
  CLI::App app{"0-homology of finite semigroups with zero and of presented semigroups"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  Options opts;
  std::optional<std::size_t> budget;
  app.add_flag("--json", json, "Print the report as JSON");

  std::string first, second, seq1, seq2;

  auto* validate = app.add_subcommand("validate", "Check a multiplication table");
  validate->add_option("table", first, "Semigroup JSON")->required()->check(CLI::ExistingFile);

  auto* cat0 = app.add_subcommand("cat0", "Categoricity at zero of a table or a presentation");
  cat0->add_option("input", first, "Semigroup JSON or presentation text")->required()->check(CLI::ExistingFile);
  cat0->add_option("--budget", budget, "Rewriting budget (words)");

  auto add_homology_options = [&](CLI::App* c) {
    c->add_option("semigroup", first)->required()->check(CLI::ExistingFile);
    c->add_option("module", second)->required()->check(CLI::ExistingFile);
    c->add_option("--max-dim", opts.max_dim, "Highest dimension reported")->capture_default_str();
    c->add_option("--jobs", opts.jobs, "Threads for the matrix kernels")->check(CLI::PositiveNumber);
  };
  auto* h0 = app.add_subcommand("h0", "0-homology of a finite semigroup with zero");
  add_homology_options(h0);
  auto* bar = app.add_subcommand("bar", "Bar-complex homology of a finite semigroup");
  add_homology_options(bar);

  auto* pipeline = app.add_subcommand("pipeline", "Homology of a presented semigroup through a finite model");
  pipeline->add_option("presentation", first)->required()->check(CLI::ExistingFile);
  pipeline->add_option("module", second)->required()->check(CLI::ExistingFile);
  pipeline->add_option("--max-dim", opts.max_dim)->capture_default_str();
  pipeline->add_option("--jobs", opts.jobs)->check(CLI::PositiveNumber);
  pipeline->add_option("--via", opts.via, "ideal or graph")->check(CLI::IsMember({"ideal", "graph"}))->capture_default_str();
  pipeline->add_option("--budget", budget, "Rewriting budget (words)");

  auto* reflector = app.add_subcommand("reflector", "Computations in the 0-reflector");
  reflector->require_subcommand(1);
  reflector->fallthrough();
  auto* eq = reflector->add_subcommand("eq", "Decide whether two sequences name the same element");
  eq->add_option("semigroup", first)->required()->check(CLI::ExistingFile);
  eq->add_option("x", seq1, "Comma-separated element names")->required();
  eq->add_option("y", seq2)->required();
  eq->add_option("--budget", budget, "Visited-sequence budget");
  eq->add_option("--max-length", opts.nu_max_length)->capture_default_str();
  auto* mul = reflector->add_subcommand("mul", "Product of two sequences");
  mul->add_option("semigroup", first)->required()->check(CLI::ExistingFile);
  mul->add_option("x", seq1)->required();
  mul->add_option("y", seq2)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    apply_environment(opts);
  } catch (const homzero::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (budget) {
    opts.rewrite_budget = *budget;
    opts.nu_budget = *budget;
  }

  Outcome out;
  if (validate->parsed()) {
    out = cmd_validate(first);
  } else if (cat0->parsed()) {
    out = cmd_cat0(first, opts);
  } else if (h0->parsed()) {
    out = cmd_h0(first, second, opts);
  } else if (bar->parsed()) {
    out = cmd_bar(first, second, opts);
  } else if (pipeline->parsed()) {
    out = cmd_pipeline(first, second, opts);
  } else if (eq->parsed()) {
    out = cmd_reflector_eq(first, seq1, seq2, opts);
  } else {
    out = cmd_reflector_mul(first, seq1, seq2);
  }

  if (!out.error.empty()) {
    std::cerr << "error: " << out.error << '\n';
    if (json) std::cout << error_to_json(out) << '\n';
    return out.exit_code;
  }
  if (json) {
    std::cout << report_to_json(out.report) << '\n';
  } else {
    print_report(std::cout, out.report);
  }
  return out.exit_code;
}
