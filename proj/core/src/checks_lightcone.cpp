#include <cmath>

#include "osq/checks.hpp"
#include "osq/lightcone.hpp"
#include "osq/measures.hpp"
#include "osq/quadrature.hpp"

namespace osq {

namespace {

void add(std::vector<CheckDef>& defs, std::string id, std::string anchor,
         std::function<void(const CheckContext&, CheckRecord&)> fn) {
  defs.push_back(CheckDef{std::move(id), "lightcone", std::move(anchor), std::move(fn)});
}

}  // namespace

void register_lightcone_checks(std::vector<CheckDef>& defs) {
  add(defs, "lightcone.mass_shell_point",
      "the one-dimensional mass shell is the point mass (1/m) delta_m",
      [](const CheckContext&, CheckRecord& rec) {
        const double v = integrate_mu_m([](double p0, double) { return p0 * p0; }, 2.0, 1);
        set_result(rec, v, 2.0, 1e-12);
      });

  add(defs, "lightcone.mass_shell_quadrature",
      "mass-shell integrals against an independent adaptive quadrature (d = 2)",
      [](const CheckContext&, CheckRecord& rec) {
        const double lhs =
            integrate_mu_m([](double p0, double) { return std::exp(-p0); }, 1.0, 2);
        const double rhs = 2.0 * integrate_to_infinity(
                                     [](double p) {
                                       const double e = std::sqrt(1.0 + p * p);
                                       return std::exp(-e) / e;
                                     },
                                     0.0, 1e-12);
        set_result(rec, lhs, rhs, 1e-6);
      });

  add(defs, "lightcone.temperedness_matrix",
      "temperedness of the cone measure: rho tempered plus near-zero mass conditions",
      [](const CheckContext&, CheckRecord& rec) {
        bool ok = true;
        // atoms, d = 4: tempered
        ok = ok && lightcone_temperedness({0.0, SpectralMeasure::dirac(1.0), 4}).tempered;
        // d = 1 with mass approaching 0: the near-zero 1/m condition fails
        const auto f1 = lightcone_temperedness({0.0, SpectralMeasure::power_density(0.5, 1.0), 1});
        ok = ok && !f1.tempered && f1.condition.find("1/m") != std::string::npos;
        ok = ok && lightcone_temperedness({0.0, SpectralMeasure::power_density(1.5, 1.0), 1}).tempered;
        // d = 2 log condition holds for every positive power
        ok = ok && lightcone_temperedness({0.0, SpectralMeasure::power_density(1.0, 1.0), 2}).tempered;
        // atom at zero obstructs d = 2
        ok = ok && !lightcone_temperedness(
                        {0.0, SpectralMeasure::from_atoms({{0.0, 1.0}, {1.0, 1.0}}), 2})
                        .tempered;
        set_flag(rec, ok);
      });

  add(defs, "lightcone.time_zero_density",
      "time-zero density Int drho(m)/sqrt(m^2 + p^2) and the projectability dichotomy",
      [](const CheckContext&, CheckRecord& rec) {
        double worst = 0.0;
        const auto a = time_zero_density({0.0, SpectralMeasure::dirac(1.0), 4}, 0.0);
        worst = std::max(worst, std::abs(a.theta_tilde - 1.0));
        if (!a.projectable) worst = std::max(worst, 1.0);
        const auto b = time_zero_density({0.0, SpectralMeasure::power_density(1.5), 4}, 1.0);
        if (b.projectable || b.verdict.empty()) worst = std::max(worst, 1.0);
        const auto c = time_zero_density({0.0, SpectralMeasure::power_density(0.5, 1.0), 4}, 0.7);
        if (!c.projectable) worst = std::max(worst, 1.0);
        set_residual(rec, worst, 1e-10);
      });

  add(defs, "lightcone.time_zero_consistency",
      "projection consistency: the x0-integrated kernel density matches Int drho/sqrt(m^2+p^2)",
      [](const CheckContext&, CheckRecord& rec) {
        double worst = 0.0;
        for (double m : {0.5, 1.0, 2.0})
          for (double pr : {0.0, 0.7, 2.0}) {
            const auto cc = free_field_time_zero_crosscheck(m, pr);
            worst = std::max(worst, std::abs(cc.quadrature - cc.closed_form));
          }
        // superposition over atoms
        const auto rho = SpectralMeasure::from_atoms({{0.5, 1.0}, {2.0, 0.5}});
        for (double pr : {0.0, 1.0}) {
          const double lhs = rho.integrate([pr](double m) {
            return integrate_real_line(
                [m, pr](double x0) {
                  return (1.0 / kPi) / (m * m + pr * pr + x0 * x0);
                },
                1e-12);
          });
          const auto tz = time_zero_density({0.0, rho, 4}, pr);
          worst = std::max(worst, std::abs(lhs - tz.theta_tilde));
        }
        set_residual(rec, worst, 1e-6);
      });

  add(defs, "lightcone.free_field_density",
      "euclidean two-point density of the mass-m field: (1/pi)/(m^2 + p^2)",
      [](const CheckContext&, CheckRecord& rec) {
        double worst = std::abs(free_field_density(1.0, 0.0, 4) - 1.0 / kPi);
        worst = std::max(worst, std::abs(free_field_density(1.0, 1.0, 4) - 0.5 / kPi));
        set_residual(rec, worst, 1e-12);
      });

  add(defs, "lightcone.free_field_derivation",
      "two-factor derivation of the free density cross-checked by p0 quadrature",
      [](const CheckContext&, CheckRecord& rec) {
        const auto cc = free_field_time_zero_crosscheck(2.0, 0.7);
        set_result(rec, cc.quadrature, cc.closed_form, 1e-6);
      });

  add(defs, "lightcone.gff_ratio_single_mass",
      "single-mass covariance ratio: Theta_t/Theta_0 = e^{-|t| sqrt(m^2 + x^2)}",
      [](const CheckContext&, CheckRecord& rec) {
        double worst = 0.0;
        for (double m : {0.5, 1.0, 2.0})
          for (double t : {0.5, 1.0, 2.0})
            for (double xr : {0.0, 1.0}) {
              const auto g = gff_covariance(SpectralMeasure::dirac(m), t, xr);
              worst = std::max(worst,
                               std::abs(g.phi_ratio - std::exp(-t * std::sqrt(m * m + xr * xr))));
            }
        const auto unit = gff_covariance(SpectralMeasure::dirac(1.0), 0.0, 0.5);
        worst = std::max(worst, std::abs(unit.phi_ratio - 1.0));
        set_residual(rec, worst, 1e-6);
      });

  add(defs, "lightcone.gff_ratio_properties",
      "covariance ratios lie in [0,1], decrease and stay log-convex in t",
      [](const CheckContext&, CheckRecord& rec) {
        const auto rho = SpectralMeasure::from_atoms({{0.5, 1.0}, {1.0, 0.7}, {3.0, 0.4}});
        double worst = 0.0;
        double prev = 1.0;
        std::vector<double> vals;
        for (double t = 0.0; t <= 3.0 + 1e-9; t += 0.25) {
          const auto g = gff_covariance(rho, t, 0.7);
          worst = std::max(worst, std::max(0.0, g.phi_ratio - 1.0));
          worst = std::max(worst, std::max(0.0, -g.phi_ratio));
          worst = std::max(worst, std::max(0.0, g.phi_ratio - prev - 1e-12));
          prev = g.phi_ratio;
          vals.push_back(g.phi_ratio);
        }
        for (std::size_t i = 1; i + 1 < vals.size(); ++i)
          worst = std::max(worst, std::max(0.0, vals[i] * vals[i] - vals[i - 1] * vals[i + 1] - 1e-12));
        set_residual(rec, worst, 1e-10);
      });

  add(defs, "lightcone.gff_semigroup_failure",
      "two-atom ratios are not multiplicative (no time-zero semigroup)",
      [](const CheckContext&, CheckRecord& rec) {
        const auto rho = SpectralMeasure::from_atoms({{1.0, 1.0}, {2.0, 1.0}});
        const double p1 = gff_covariance(rho, 1.0, 0.0).phi_ratio;
        const double p2 = gff_covariance(rho, 2.0, 0.0).phi_ratio;
        set_flag(rec, std::abs(p1 * p1 - p2) > 1e-3);
      });

  add(defs, "lightcone.homothety",
      "scaling covariance of the mass shell: (h_a)_* mu_m = a^{2-d} mu_{am}",
      [](const CheckContext&, CheckRecord& rec) {
        auto f = [](double p0, double pr) { return std::exp(-(p0 * p0 + pr * pr)); };
        double worst = 0.0;
        for (double a : {0.5, 2.0})
          for (int d : {2, 3, 4}) worst = std::max(worst, homothety_check(1.0, a, d, f));
        worst = std::max(worst, homothety_check(1.0, 1.0, 3, f));
        set_residual(rec, worst, 1e-6);
      });

  add(defs, "lightcone.boost_invariance",
      "mass-shell integrals are invariant under rapidity boosts (d = 2)",
      [](const CheckContext&, CheckRecord& rec) {
        double worst = 0.0;
        for (double chi : {0.3, 0.7}) {
          auto f = [](double p0, double p1) { return std::exp(-(p0 * p0 + p1 * p1)); };
          const double base = integrate_to_infinity(
              [&](double p) {
                const double e = std::sqrt(1.0 + p * p);
                return (f(e, p) + f(e, -p)) / e;
              },
              0.0, 1e-12);
          const double boosted = integrate_to_infinity(
              [&](double p) {
                const double e = std::sqrt(1.0 + p * p);
                auto bf = [&](double q0, double q1) {
                  return f(std::cosh(chi) * q0 + std::sinh(chi) * q1,
                           std::sinh(chi) * q0 + std::cosh(chi) * q1);
                };
                return (bf(e, p) + bf(e, -p)) / e;
              },
              0.0, 1e-12);
          worst = std::max(worst, std::abs(base - boosted));
        }
        set_residual(rec, worst, 1e-5);
      });

  add(defs, "lightcone.conformal_density",
      "homogeneous densities: power fit s-2 and the Riesz transform constant",
      [](const CheckContext&, CheckRecord& rec) {
        double worst = 0.0;
        for (double s : {0.5, 1.0, 1.5}) {
          const auto cd = conformal_density_riesz(s, 3, 1.0);
          if (!cd.tempered_range) worst = std::max(worst, 1.0);
          worst = std::max(worst, std::abs(cd.power_fit_exponent - (s - 2.0)));
          // closed form of the homogeneous integral at p = 1
          const double closed = 0.5 * kPi / std::sin(0.5 * kPi * s);
          worst = std::max(worst, std::abs(cd.theta_s - closed) * 1e-3 / closed);
        }
        // pinned constant: a = 1, d = 3 gives 1/pi
        const auto unit = conformal_density_riesz(1.0, 3, 1.0);
        worst = std::max(worst, std::abs(unit.riesz_constant - 1.0 / kPi));
        // out-of-range verdicts
        if (conformal_density_riesz(2.5, 3, 1.0).tempered_range) worst = std::max(worst, 1.0);
        if (conformal_density_riesz(1.0, 1, 1.0).tempered_range) worst = std::max(worst, 1.0);
        if (!conformal_density_riesz(1.5, 1, 1.0).tempered_range) worst = std::max(worst, 1.0);
        set_residual(rec, worst, 1e-3);
      });

  add(defs, "lightcone.free_field_appendix_tie",
      "the free density matches the Poisson-form density at the shifted mass",
      [](const CheckContext&, CheckRecord& rec) {
        double worst = 0.0;
        for (double m : {0.5, 1.0}) {
          for (double pr : {0.0, 0.7}) {
            const double shifted = std::sqrt(m * m + pr * pr);
            for (double p0 : {0.0, 0.5, 2.0}) {
              const double lhs = free_field_density(m, std::sqrt(p0 * p0 + pr * pr), 4) /
                                 (1.0 / std::sqrt(m * m + pr * pr));
              const double rhs =
                  theta_density_eval({SpectralMeasure::dirac(shifted), ThetaForm::Poisson, 1}, p0);
              worst = std::max(worst, std::abs(lhs - rhs));
            }
          }
        }
        set_residual(rec, worst, 1e-6);
      });
}

}  // namespace osq
