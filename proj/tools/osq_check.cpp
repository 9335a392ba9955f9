// Command line driver: runs verification suites against a configuration
// and emits machine-readable reports.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "osq/checks.hpp"
#include "osq/config.hpp"
#include "osq/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"operator-theory verification harness"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "run a verification suite");
  std::string suite = "all";
  std::string config_path;
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 0;
  bool seed_set = false;
  int jobs = -1;
  bool timings = false;
  check->add_option("--suite", suite, "suite name (rphs, dilation, hardy, measures, lightcone, kernels, groups, all)");
  check->add_option("--config", config_path, "JSON configuration file");
  check->add_option("--seed", seed, "random seed override")->each([&](const std::string&) { seed_set = true; });
  check->add_option("--jobs", jobs, "worker threads (default: hardware)");
  check->add_option("--out", out_path, "report output path");
  check->add_option("--format", format, "report format: json | csv");
  check->add_flag("--timings", timings, "emit measured runtimes (reports stop being byte-stable)");

  auto* list = app.add_subcommand("list-checks", "print the check and anchor registry");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      for (const auto& def : osq::check_registry())
        std::printf("%-42s %-10s %s\n", def.id.c_str(), def.suite.c_str(), def.anchor.c_str());
      return 0;
    }

    osq::SuiteConfig cfg;
    if (!config_path.empty()) cfg = osq::load_config(config_path);
    if (seed_set) cfg.seed = seed;
    if (jobs >= 0) cfg.jobs = jobs;
    if (suite == "all" && cfg.suite != "all" && !cfg.suite.empty()) suite = cfg.suite;

    const auto records = osq::run_suite(cfg, suite);
    std::size_t passed = 0;
    for (const auto& r : records) {
      if (r.verdict == "pass") ++passed;
      else std::fprintf(stderr, "FAIL %s (computed %g, expected %g, tol %g)\n", r.check_id.c_str(),
                        std::abs(r.computed), std::abs(r.expected), r.tolerance);
    }
    double total_ms = 0.0;
    for (const auto& r : records) total_ms += r.runtime_ms;
    std::fprintf(stderr, "%zu/%zu checks passed (%.1f ms total)\n", passed, records.size(), total_ms);

    if (!out_path.empty())
      osq::emit_report(records, osq::parse_format(format), out_path, timings);
    else
      std::fputs(osq::render_report(records, osq::parse_format(format), timings).c_str(), stdout);
    return osq::all_passed(records) ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
