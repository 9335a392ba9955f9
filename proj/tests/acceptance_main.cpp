// Acceptance suite: runs the full verification registry and scores the
// shipped acceptance criteria, one printed line per criterion.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "osq/checks.hpp"
#include "osq/config.hpp"
#include "osq/report.hpp"

namespace {

struct Criterion {
  std::string name;
  std::vector<std::string> check_ids;
};

}  // namespace

int main() {
  using namespace osq;

  SuiteConfig cfg;  // spec-level defaults: half_width 256, n = 2^14, seed 42
  const auto t0 = std::chrono::steady_clock::now();
  const auto records = run_suite(cfg, "all");
  const auto t1 = std::chrono::steady_clock::now();
  const double wall_s = std::chrono::duration<double>(t1 - t0).count();

  std::map<std::string, const CheckRecord*> by_id;
  for (const auto& r : records) by_id[r.check_id] = &r;

  const std::vector<Criterion> criteria{
      {"01 Poisson-Fourier pair to 1e-5 on the (lambda, t) range",
       {"dilation.poisson_fourier_pair"}},
      {"02 dilation identity residual <= 1e-4 on the (lambda, t) matrix",
       {"dilation.semigroup_identity", "dilation.atom_mass"}},
      {"03 quantized contraction bound on 200 random instances",
       {"rphs.os_contraction_random"}},
      {"04 involutive unitaries quantize to involutions (50 instances)",
       {"rphs.involution_quantization"}},
      {"05 Markov condition <=> q(E_0) onto, including the two-atom counterexample",
       {"rphs.markov_flag_equivalence", "rphs.markov_multiplicity_free", "rphs.markov_dilation",
        "rphs.markov_hardy"}},
      {"06 half-line positivity identity and the fixed exponential",
       {"hardy.theta_identity_random", "hardy.theta_fixed_exponential"}},
      {"07 outgoing realization: isometry, translation intertwining, constant profile",
       {"dilation.outgoing_isometry", "dilation.outgoing_translation",
        "dilation.outgoing_constant_profile"}},
      {"08 spectral subspaces: idempotent projection, reflection form, membership",
       {"dilation.project_plus_idempotent", "dilation.theta_energy_random",
        "dilation.spectral_membership", "dilation.theta_positivity_random"}},
      {"09 measure calculus: mass asymptotics, integrability matrix, Gram positivity, extension",
       {"measures.asymptotic_mass", "measures.laplace_integrability_matrix",
        "measures.rp_gram_oracle", "measures.rp_gram_families", "measures.rp_extension"}},
      {"10 cone measures: temperedness matrix, time-zero consistency, homothety factors",
       {"lightcone.temperedness_matrix", "lightcone.time_zero_consistency",
        "lightcone.homothety"}},
      {"11 free and generalized free fields: densities, ratios, conformal exponents",
       {"lightcone.free_field_density", "lightcone.free_field_derivation",
        "lightcone.gff_ratio_single_mass", "lightcone.conformal_density"}},
      {"12 kernel lemmas: exponential dichotomy, multiplicativity, pushforward temperedness",
       {"kernels.exp_kernel_random", "kernels.exp_kernel_designed",
        "kernels.multiplicativity_dichotomy", "kernels.pushforward_temperedness"}},
      {"13 nilpotent model: Weyl phase, projection identity, one-sided invariance",
       {"groups.heisenberg_weyl", "groups.heisenberg_p0_identity",
        "groups.heisenberg_invariance_z", "groups.heisenberg_invariance_p_fails"}},
  };

  int failures = 0;
  for (const auto& crit : criteria) {
    bool pass = true;
    std::string detail;
    for (const auto& id : crit.check_ids) {
      auto it = by_id.find(id);
      if (it == by_id.end()) {
        pass = false;
        detail = id + " missing";
        break;
      }
      if (it->second->verdict != "pass") {
        pass = false;
        detail = id + " " + it->second->verdict;
        break;
      }
    }
    if (!pass) ++failures;
    std::printf("criterion %s: %s%s%s\n", crit.name.c_str(), pass ? "PASS" : "FAIL",
                detail.empty() ? "" : " — ", detail.c_str());
  }

  // 14: determinism and runtime of the full run
  {
    const auto again = run_suite(cfg, "all");
    const bool bytes_equal = render_report(records, ReportFormat::JsonLines) ==
                             render_report(again, ReportFormat::JsonLines);
    const bool all_pass = all_passed(records);
    const bool in_budget = wall_s < 120.0;
    const bool pass = bytes_equal && all_pass && in_budget;
    if (!pass) ++failures;
    std::printf(
        "criterion 14 full suite: %s — %zu checks, %.1f s, %s, %s\n", pass ? "PASS" : "FAIL",
        records.size(), wall_s, bytes_equal ? "byte-identical reruns" : "rerun bytes differ",
        all_pass ? "zero failures" : "failures present");
  }

  if (failures > 0) {
    for (const auto& r : records)
      if (r.verdict != "pass")
        std::printf("  failing check: %s (computed %g, expected %g, tol %g)\n", r.check_id.c_str(),
                    std::abs(r.computed), std::abs(r.expected), r.tolerance);
  }
  return failures == 0 ? 0 : 1;
}
