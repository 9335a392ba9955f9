#include <cmath>

#include "osq/checks.hpp"
#include "osq/measures.hpp"
#include "osq/quadrature.hpp"

namespace osq {

namespace {

void add(std::vector<CheckDef>& defs, std::string id, std::string anchor,
         std::function<void(const CheckContext&, CheckRecord&)> fn) {
  defs.push_back(CheckDef{std::move(id), "measures", std::move(anchor), std::move(fn)});
}

ComplexSamples positive_bump(const Grid& g, double center, double width) {
  return ComplexSamples::from_function(g, [=](double x) {
    const double u = (x - center) / width;
    return std::abs(u) < 1.0 ? cdouble(std::exp(-1.0 / (1.0 - u * u)), 0.0) : cdouble(0.0, 0.0);
  });
}

ComplexSamples clamped_gaussian(const Grid& g, double center, double sigma) {
  return ComplexSamples::from_function(g, [=](double x) {
    const double v = std::exp(-0.5 * (x - center) * (x - center) / (sigma * sigma));
    return v > 1e-14 ? cdouble(v, 0.0) : cdouble(0.0, 0.0);
  });
}

}  // namespace

void register_measures_checks(std::vector<CheckDef>& defs) {
  add(defs, "measures.theta_eval_values",
      "Poisson-type densities: point values of Int 1/(y^2+x^2) drho and (1/pi) Int y/(y^2+x^2) drho",
      [](const CheckContext&, CheckRecord& rec) {
        double worst = std::abs(
            theta_density_eval({SpectralMeasure::dirac(1.0), ThetaForm::Poisson, 1}, 0.0) - 1.0 / kPi);
        worst = std::max(worst, std::abs(theta_density_eval(
                                             {SpectralMeasure::dirac(1.0), ThetaForm::Cauchy, 1}, 1.0) -
                                         0.5));
        set_residual(rec, worst, 1e-10);
      });

  add(defs, "measures.theta_power_slope",
      "homogeneous density: Int m^{s-1}/(m^2+x^2) dm = (pi/2)/|x| at s = 1, slope -1",
      [](const CheckContext&, CheckRecord& rec) {
        ThetaDensity td{SpectralMeasure::power_density(1.0), ThetaForm::Cauchy, 1};
        const int npts = 9;
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        double vworst = 0.0;
        for (int i = 0; i < npts; ++i) {
          const double x = 0.5 * std::pow(16.0, static_cast<double>(i) / (npts - 1));
          const double v = theta_density_eval(td, x);
          vworst = std::max(vworst, std::abs(v - 0.5 * kPi / x) / (0.5 * kPi / x));
          sx += std::log(x);
          sy += std::log(v);
          sxx += std::log(x) * std::log(x);
          sxy += std::log(x) * std::log(v);
        }
        const double slope = (npts * sxy - sx * sy) / (npts * sxx - sx * sx);
        set_residual(rec, std::max(std::abs(slope + 1.0), vworst), 1e-4);
      });

  add(defs, "measures.tameness",
      "tameness Int drho/(1+y^2) < inf: atom lists always, power tails iff s < 2",
      [](const CheckContext&, CheckRecord& rec) {
        bool ok = tameness_check(SpectralMeasure::from_atoms({{1.0, 1.0}, {7.0, 2.0}}));
        ok = ok && tameness_check(SpectralMeasure::power_density(1.0));
        ok = ok && !tameness_check(SpectralMeasure::power_density(3.0));
        ok = ok && tameness_check(SpectralMeasure::power_density(3.0, 1.0));  // bounded support
        set_flag(rec, ok);
      });

  add(defs, "measures.temperedness",
      "temperedness of Theta dx: free above d = 2, near-zero conditions at d = 1, 2",
      [](const CheckContext&, CheckRecord& rec) {
        bool ok = temperedness_check(SpectralMeasure::from_atoms({{1.0, 1.0}}), 3).tempered;
        ok = ok && temperedness_check(SpectralMeasure::power_density(0.5, 1.0), 3).tempered;
        const auto v1 = temperedness_check(SpectralMeasure::dirac(0.0), 1);
        ok = ok && !v1.tempered && !v1.failing_condition.empty();
        ok = ok && temperedness_check(SpectralMeasure::power_density(0.5, 1.0), 2).tempered;
        ok = ok && !temperedness_check(SpectralMeasure::power_density(0.5, 1.0), 1).tempered;
        ok = ok && temperedness_check(SpectralMeasure::power_density(1.5, 1.0), 1).tempered;
        set_flag(rec, ok);
      });

  add(defs, "measures.asymptotic_mass",
      "mass recovery lim Theta(x) x^2 = rho-mass and nu(R) = pi Int drho/y",
      [](const CheckContext&, CheckRecord& rec) {
        double worst = 0.0;
        const auto a = asymptotic_mass({SpectralMeasure::dirac(1.0), ThetaForm::Cauchy, 1});
        worst = std::max(worst, std::abs(a.limit_estimate - 1.0));
        worst = std::max(worst, std::abs(a.total_mass - kPi));
        const auto b = asymptotic_mass({SpectralMeasure::dirac(2.0, 2.0), ThetaForm::Cauchy, 1});
        worst = std::max(worst, std::abs(b.limit_estimate - 2.0));
        worst = std::max(worst, std::abs(b.total_mass - kPi));
        const auto c = asymptotic_mass(
            {SpectralMeasure::from_atoms({{1.0, 1.0}, {3.0, 1.0}}), ThetaForm::Cauchy, 1});
        worst = std::max(worst, std::abs(c.limit_estimate - 2.0));
        worst = std::max(worst, std::abs(c.total_mass - kPi * (1.0 + 1.0 / 3.0)));
        set_residual(rec, worst, 1e-3);
      });

  add(defs, "measures.rp_gram_oracle",
      "reflection form against the closed form sum_i w_i |L(psi)(y_i)|^2 / (2 y_i)",
      [](const CheckContext&, CheckRecord& rec) {
        Grid g = Grid::uniform(32.0, 1 << 12);
        const auto rho = SpectralMeasure::from_atoms({{1.0, 1.0}, {2.0, 0.5}});
        double worst = 0.0;
        for (double center : {1.5, 2.5, 4.0}) {
          const auto psi = positive_bump(g, center, 0.8);
          const auto gram = reflection_positivity_gram({rho, ThetaForm::Cauchy, 1}, {psi}, 1);
          const auto oracle = reflection_form_atom_oracle(rho, psi);
          worst = std::max(worst, std::abs(gram.gram(0, 0) - oracle) / std::abs(oracle));
          worst = std::max(worst, std::max(0.0, -gram.min_eig));
        }
        set_residual(rec, worst, 1e-8);
      });

  add(defs, "measures.rp_gram_families",
      "reflection positivity of the Gram over random bump families",
      [](const CheckContext& ctx, CheckRecord& rec) {
        auto rng = ctx.rng("measures.rp_gram_families");
        Grid g = Grid::uniform(32.0, 1 << 12);
        const std::vector<SpectralMeasure> rhos{
            SpectralMeasure::dirac(1.0), SpectralMeasure::from_atoms({{1.0, 1.0}, {2.0, 1.0}}),
            SpectralMeasure::power_density(1.0, 4.0)};
        double worst = 0.0;
        for (const auto& rho : rhos) {
          for (int fam = 0; fam < 16; ++fam) {
            std::vector<ComplexSamples> tests;
            const int nf = rng.uniform_int(2, 3);
            for (int i = 0; i < nf; ++i)
              tests.push_back(positive_bump(g, rng.uniform(1.2, 6.0), rng.uniform(0.4, 1.0)));
            const auto gram = reflection_positivity_gram({rho, ThetaForm::Cauchy, 1}, tests, 1);
            worst = std::min(worst, gram.min_eig / std::max(1.0, gram.gram_norm));
          }
        }
        set_residual(rec, std::max(0.0, -worst), 1e-6);
      });

  add(defs, "measures.rp_gram_higher_d",
      "reflection positivity in d = 2, 3 through the transverse reduction",
      [](const CheckContext& ctx, CheckRecord& rec) {
        auto rng = ctx.rng("measures.rp_gram_higher_d");
        Grid g = Grid::uniform(32.0, 1 << 11);
        double worst = 0.0;
        for (int d : {2, 3}) {
          std::vector<ComplexSamples> tests;
          for (int i = 0; i < 2; ++i)
            tests.push_back(positive_bump(g, rng.uniform(1.2, 4.0), rng.uniform(0.4, 0.8)));
          const auto gram = reflection_positivity_gram(
              {SpectralMeasure::from_atoms({{1.0, 1.0}, {2.0, 1.0}}), ThetaForm::Cauchy, d}, tests, d);
          worst = std::min(worst, gram.min_eig / std::max(1.0, gram.gram_norm));
        }
        set_residual(rec, std::max(0.0, -worst), 1e-6);
      });

  add(defs, "measures.laplace_integrability_matrix",
      "Laplace integrability equivalence flags across the (s, l) matrix",
      [](const CheckContext&, CheckRecord& rec) {
        bool agree = true;
        for (double s : {0.5, 1.0, 1.5, 2.0, 3.0}) {
          for (int l = 0; l <= 3; ++l) {
            const auto eq =
                laplace_integrability_equivalence(SpectralMeasure::power_density_from(s, 1.0), l);
            agree = agree && (eq.lhs_finite == eq.rhs_finite);
            // pinned corner values of the truth table
            if (s == 2.0 && l == 0) agree = agree && !eq.lhs_finite;
            if (s == 2.0 && l == 2) agree = agree && eq.lhs_finite;
          }
        }
        const auto atom = laplace_integrability_equivalence(SpectralMeasure::dirac(2.0), 0);
        agree = agree && atom.lhs_finite && atom.rhs_finite;
        set_flag(rec, agree);
      });

  add(defs, "measures.rp_extension",
      "the reflection positive extension restricts to L(rho) on right-half-line bumps",
      [](const CheckContext&, CheckRecord& rec) {
        Grid g = Grid::uniform(8.0, 1 << 12);
        double worst = 0.0;
        {
          const auto phi = clamped_gaussian(g, 2.5, 0.25);
          const auto d = rp_extension_eval(SpectralMeasure::dirac(1.0), 1, phi);
          cdouble want(0.0, 0.0);
          for (std::size_t j = 0; j < g.size(); ++j)
            if (g.node(j) > 0.0) want += g.weight(j) * std::exp(-g.node(j)) * phi.values[j];
          worst = std::max(worst, std::abs(d - want) / std::abs(want));
        }
        {
          const auto phi = clamped_gaussian(g, 1.5, 0.0625);  // inside [1, 2]
          const auto d = rp_extension_eval(SpectralMeasure::power_density(2.0), 1, phi);
          cdouble want(0.0, 0.0);
          for (std::size_t j = 0; j < g.size(); ++j)
            if (g.node(j) > 0.0)
              want += g.weight(j) * phi.values[j] / (g.node(j) * g.node(j));
          worst = std::max(worst, std::abs(d - want) / std::abs(want));
        }
        {
          const auto zero = ComplexSamples::from_function(g, [](double) { return cdouble(0.0, 0.0); });
          worst = std::max(worst, std::abs(rp_extension_eval(SpectralMeasure::dirac(1.0), 1, zero)));
        }
        set_residual(rec, worst, 1e-4);
      });

  add(defs, "measures.extension_order_independence",
      "extensions built at different orders agree away from the origin",
      [](const CheckContext&, CheckRecord& rec) {
        Grid g = Grid::uniform(16.0, 1 << 12);
        const auto phi = clamped_gaussian(g, 8.0, 0.9);
        const auto d1 = rp_extension_eval(SpectralMeasure::dirac(1.0), 1, phi);
        const auto d2 = rp_extension_eval(SpectralMeasure::dirac(1.0), 2, phi);
        set_residual(rec, std::abs(d1 - d2) / std::abs(d1), 1e-4);
      });

  add(defs, "measures.fourier_loop_closure",
      "the transform of Theta dx restricted to the right half line recovers L(rho)",
      [](const CheckContext&, CheckRecord& rec) {
        // nu-hat(x) = sum_i w_i e^{-y_i |x|} by the Poisson pair, evaluated
        // by quadrature and compared against the Laplace transform
        const auto rho = SpectralMeasure::from_atoms({{0.5, 1.0}, {1.0, 0.5}, {3.0, 2.0}});
        double worst = 0.0;
        for (double x : {0.25, 0.5, 1.0, 2.0, 4.0}) {
          double nu_hat = 0.0;
          for (const auto& a : rho.atoms()) nu_hat += a.weight * poisson_fourier(a.lambda, x);
          worst = std::max(worst, std::abs(nu_hat - rho.laplace(x)));
        }
        set_residual(rec, worst, 1e-4);
      });
}

}  // namespace osq
