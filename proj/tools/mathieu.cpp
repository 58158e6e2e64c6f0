#include <iostream>

#include <CLI11.hpp>

#include "mathieu/cli.hpp"

int main(int argc, char** argv) {
  mathieu::RunConfig cfg;
  CLI::App app{"Head characters of the K3 elliptic genus under M24, and the checks around them"};
  app.require_subcommand(1);

  for (const auto& name : mathieu::commands()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--n-max", cfg.n_max, "largest n for head characters")->capture_default_str();
    sub->add_option("--prec24", cfg.prec24, "series precision in units of q^(1/24); 0 picks 24 (n_max + 2)");
    sub->add_option("--c-max", cfg.c_max, "largest c in Kloosterman and Rademacher sums");
    sub->add_option("--k", cfg.k, "single index k");
    sub->add_option("--class", cfg.class_label, "conjugacy class, e.g. 2A or 23AB");
    sub->add_option("--mode", cfg.mode, "exact or analytic");
    sub->add_option("--format", cfg.format, "json, csv or text")->capture_default_str();
    sub->add_option("--output", cfg.output, "report path; stdout if omitted");
    sub->callback([&cfg, sub] { cfg.command = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    mathieu::Report r = mathieu::run(cfg);
    mathieu::export_report(r, mathieu::parse_format(cfg.format), cfg.output);
    if (!r.passed && !cfg.output.empty()) std::cerr << "FAIL: " << r.first_failure.value_or("") << '\n';
    return mathieu::exit_status(r);
  } catch (const mathieu::ConfigError& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
