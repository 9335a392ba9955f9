#pragma once

#include <functional>
#include <string>
#include <vector>

#include "osq/config.hpp"
#include "osq/random.hpp"
#include "osq/types.hpp"

namespace osq {

// One verification outcome: the checked identity, the computed and
// expected values, and the verdict at the applied tolerance.
struct CheckRecord {
  std::string check_id;
  std::string paper_anchor;
  cdouble computed{0.0, 0.0};
  cdouble expected{0.0, 0.0};
  double tolerance = 0.0;
  std::string verdict = "skipped";  // pass | fail | skipped
  double runtime_ms = 0.0;
};

struct CheckContext {
  SuiteConfig cfg;
  CheckRng rng(const std::string& label) const { return CheckRng(cfg.seed, label); }
};

struct CheckDef {
  std::string id;
  std::string suite;
  std::string anchor;
  // computes (computed, expected, default tolerance); the runner fills the
  // verdict, identity and timing fields
  std::function<void(const CheckContext&, CheckRecord&)> run;
};

const std::vector<CheckDef>& check_registry();
std::vector<std::string> suite_names();

// Runs every check of the suite ("all" for the full registry); checks
// execute concurrently on `jobs` threads and the records are returned
// sorted by check_id. A check that throws is reported as failed with the
// diagnostic in the anchor field suffix.
std::vector<CheckRecord> run_suite(const SuiteConfig& cfg, const std::string& suite);

bool all_passed(const std::vector<CheckRecord>& records);

// record helpers used by the check implementations
void set_result(CheckRecord& rec, cdouble computed, cdouble expected, double tol);
void set_residual(CheckRecord& rec, double residual, double tol);
void set_flag(CheckRecord& rec, bool ok);

// registration hooks, one per module suite
void register_dilation_checks(std::vector<CheckDef>& defs);
void register_rphs_checks(std::vector<CheckDef>& defs);
void register_hardy_checks(std::vector<CheckDef>& defs);
void register_measures_checks(std::vector<CheckDef>& defs);
void register_lightcone_checks(std::vector<CheckDef>& defs);
void register_kernels_checks(std::vector<CheckDef>& defs);
void register_groups_checks(std::vector<CheckDef>& defs);

}  // namespace osq
