#include <doctest.h>

#include "osq/checks.hpp"
#include "osq/config.hpp"
#include "osq/report.hpp"

using namespace osq;

TEST_CASE("config defaults and parsing") {
  auto empty = parse_config("");
  CHECK(empty.half_width == doctest::Approx(256.0));
  CHECK(empty.n == (1u << 14));
  CHECK(empty.seed == 42);
  CHECK(empty.atoms.size() == 1);

  auto cfg = parse_config(R"({
    "suite": "dilation",
    "atoms": [{"lambda": 1.0, "weight": 1.0}, {"lambda": 2.0}],
    "grid": {"half_width": 128.0, "n": 4096},
    "seed": 7,
    "jobs": 2,
    "tolerances": {"dilation.semigroup_identity": 2e-4}
  })");
  CHECK(cfg.suite == "dilation");
  CHECK(cfg.atoms.size() == 2);
  CHECK(cfg.atoms[1].lambda == doctest::Approx(2.0));
  CHECK(cfg.atoms[1].weight == doctest::Approx(1.0));
  CHECK(cfg.n == 4096);
  CHECK(cfg.seed == 7);
  CHECK(cfg.tol("dilation.semigroup_identity", 1e-4) == doctest::Approx(2e-4));
  CHECK(cfg.tol("other", 1e-4) == doctest::Approx(1e-4));

  CHECK_THROWS_WITH_AS(parse_config(R"({"grid": {"n": 1000}})"),
                       "config: grid.n must be a power of two", std::runtime_error);
  CHECK_THROWS_AS(parse_config("{broken"), std::runtime_error);
  CHECK_THROWS_AS(parse_config(R"({"atoms": [{"lambda": 1.0, "weight": -1.0}]})"),
                  std::runtime_error);
}

TEST_CASE("report rendering and round trip") {
  std::vector<CheckRecord> records(2);
  records[0].check_id = "a.first";
  records[0].paper_anchor = "some, \"quoted\" anchor";
  records[0].computed = cdouble(1.25, -0.5);
  records[0].expected = cdouble(1.25, 0.0);
  records[0].tolerance = 1e-3;
  records[0].verdict = "fail";
  records[0].runtime_ms = 12.5;
  records[1].check_id = "b.second";
  records[1].paper_anchor = "plain";
  records[1].computed = cdouble(2.0, 0.0);
  records[1].expected = cdouble(2.0, 0.0);
  records[1].tolerance = 1e-6;
  records[1].verdict = "pass";
  records[1].runtime_ms = 3.25;

  const std::string jl = render_report(records, ReportFormat::JsonLines);
  auto parsed = parse_json_lines(jl);
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0].check_id == "a.first");
  CHECK(parsed[0].computed == records[0].computed);
  CHECK(parsed[0].expected == records[0].expected);
  CHECK(parsed[0].tolerance == records[0].tolerance);
  CHECK(parsed[0].verdict == "fail");
  CHECK(parsed[0].runtime_ms == 0.0);  // timings suppressed by default
  CHECK(parsed[1].computed == cdouble(2.0, 0.0));

  const std::string csv = render_report(records, ReportFormat::Csv);
  CHECK(csv.find("check_id,paper_anchor,computed,expected,tolerance,verdict,runtime_ms\n") == 0);
  CHECK(csv.find("1.25-0.5i") != std::string::npos);
  CHECK(csv.find("\"some, \"\"quoted\"\" anchor\"") != std::string::npos);

  // timings appear only on request
  const std::string with_times = render_report(records, ReportFormat::JsonLines, true);
  CHECK(with_times.find("12.5") != std::string::npos);
  CHECK(jl.find("12.5") == std::string::npos);
}

TEST_CASE("registry names and the unknown-suite error") {
  const auto names = suite_names();
  CHECK(names.size() == 8);
  SuiteConfig cfg;
  CHECK_THROWS_AS(run_suite(cfg, "bogus"), std::invalid_argument);
  for (const auto& def : check_registry()) {
    CHECK(!def.anchor.empty());
    CHECK(def.id.find(def.suite + ".") == 0);
  }
}

TEST_CASE("suite runs are deterministic and order-independent") {
  SuiteConfig cfg;
  cfg.n = 1 << 12;
  cfg.half_width = 256.0;
  cfg.jobs = 4;
  auto first = run_suite(cfg, "kernels");
  cfg.jobs = 1;
  auto second = run_suite(cfg, "kernels");
  CHECK(render_report(first, ReportFormat::JsonLines) ==
        render_report(second, ReportFormat::JsonLines));
  CHECK(first.size() >= 5);
}
