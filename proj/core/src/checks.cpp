#include "osq/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace osq {

void set_result(CheckRecord& rec, cdouble computed, cdouble expected, double tol) {
  rec.computed = computed;
  rec.expected = expected;
  rec.tolerance = tol;
  rec.verdict = std::abs(computed - expected) <= tol ? "pass" : "fail";
}

void set_residual(CheckRecord& rec, double residual, double tol) {
  set_result(rec, cdouble(residual, 0.0), cdouble(0.0, 0.0), tol);
}

void set_flag(CheckRecord& rec, bool ok) {
  set_result(rec, cdouble(ok ? 1.0 : 0.0, 0.0), cdouble(1.0, 0.0), 0.5);
}

const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> d;
    register_dilation_checks(d);
    register_rphs_checks(d);
    register_hardy_checks(d);
    register_measures_checks(d);
    register_lightcone_checks(d);
    register_kernels_checks(d);
    register_groups_checks(d);
    return d;
  }();
  return defs;
}

std::vector<std::string> suite_names() {
  return {"rphs", "dilation", "hardy", "measures", "lightcone", "kernels", "groups", "all"};
}

std::vector<CheckRecord> run_suite(const SuiteConfig& cfg, const std::string& suite) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw std::invalid_argument("run_suite: unknown suite '" + suite + "'");

  std::vector<const CheckDef*> todo;
  for (const auto& def : check_registry())
    if (suite == "all" || def.suite == suite) todo.push_back(&def);

  CheckContext ctx{cfg};
  std::vector<CheckRecord> records(todo.size());
  std::atomic<std::size_t> next{0};
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers =
      cfg.jobs > 0 ? static_cast<unsigned>(cfg.jobs) : std::min<unsigned>(hw, 8);

  auto work = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= todo.size()) return;
      const CheckDef& def = *todo[i];
      CheckRecord rec;
      rec.check_id = def.id;
      rec.paper_anchor = def.anchor;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        def.run(ctx, rec);
        const double tol_override = cfg.tol(def.id, rec.tolerance);
        if (tol_override != rec.tolerance) {
          rec.tolerance = tol_override;
          rec.verdict = std::abs(rec.computed - rec.expected) <= rec.tolerance ? "pass" : "fail";
        }
      } catch (const std::exception& e) {
        rec.verdict = "fail";
        rec.paper_anchor += std::string(" [error: ") + e.what() + "]";
      }
      const auto t1 = std::chrono::steady_clock::now();
      rec.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      records[i] = std::move(rec);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  std::sort(records.begin(), records.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.check_id < b.check_id; });
  return records;
}

bool all_passed(const std::vector<CheckRecord>& records) {
  for (const auto& r : records)
    if (r.verdict != "pass") return false;
  return !records.empty();
}

}  // namespace osq
