#include <doctest.h>

#include <cmath>

#include "osq/measures.hpp"
#include "osq/quadrature.hpp"
#include "osq/random.hpp"

using namespace osq;

namespace {
ComplexSamples bump(const Grid& g, double center, double width) {
  return ComplexSamples::from_function(g, [=](double x) {
    const double u = (x - center) / width;
    return std::abs(u) < 1.0 ? cdouble(std::exp(-1.0 / (1.0 - u * u)), 0.0) : cdouble(0.0, 0.0);
  });
}
}  // namespace

TEST_CASE("theta density evaluation and evenness") {
  ThetaDensity poisson{SpectralMeasure::dirac(1.0), ThetaForm::Poisson, 1};
  CHECK(theta_density_eval(poisson, 0.0) == doctest::Approx(1.0 / kPi).epsilon(1e-12));
  ThetaDensity cauchy{SpectralMeasure::dirac(1.0), ThetaForm::Cauchy, 1};
  CHECK(theta_density_eval(cauchy, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(theta_density_eval(cauchy, -1.7) == theta_density_eval(cauchy, 1.7));
  CHECK(theta_density_eval(cauchy, 0.3) > 0.0);
  // divergent configurations are rejected analytically
  ThetaDensity div{SpectralMeasure::power_density(1.5), ThetaForm::Poisson, 1};
  CHECK_THROWS_AS(theta_density_eval(div, 1.0), std::invalid_argument);
  ThetaDensity zero_mass{SpectralMeasure::dirac(0.0), ThetaForm::Cauchy, 1};
  CHECK_THROWS_AS(theta_density_eval(zero_mass, 0.0), std::invalid_argument);
}

TEST_CASE("tameness and temperedness verdicts") {
  CHECK(tameness_check(SpectralMeasure::from_atoms({{2.0, 3.0}})));
  CHECK(tameness_check(SpectralMeasure::power_density(1.0)));
  CHECK(!tameness_check(SpectralMeasure::power_density(3.0)));

  CHECK(temperedness_check(SpectralMeasure::power_density(0.5, 1.0), 3).tempered);
  const auto bad = temperedness_check(SpectralMeasure::dirac(0.0), 1);
  CHECK(!bad.tempered);
  CHECK(temperedness_check(SpectralMeasure::power_density(0.5, 1.0), 2).tempered);
  CHECK(!temperedness_check(SpectralMeasure::power_density(0.5, 1.0), 1).tempered);
}

TEST_CASE("asymptotic mass recovery") {
  auto a = asymptotic_mass({SpectralMeasure::dirac(1.0), ThetaForm::Cauchy, 1});
  CHECK(std::abs(a.limit_estimate - 1.0) <= 1e-3);
  CHECK(a.total_mass == doctest::Approx(kPi));
  auto b = asymptotic_mass(
      {SpectralMeasure::from_atoms({{1.0, 1.0}, {3.0, 1.0}}), ThetaForm::Cauchy, 1});
  CHECK(std::abs(b.limit_estimate - 2.0) <= 1e-3);
  CHECK(b.total_mass == doctest::Approx(kPi * (1.0 + 1.0 / 3.0)));
}

TEST_CASE("reflection gram: closed-form oracle and support guard") {
  Grid g = Grid::uniform(32.0, 1 << 12);
  const auto psi = bump(g, 2.0, 1.0);
  const auto rho = SpectralMeasure::dirac(1.0);
  auto gram = reflection_positivity_gram({rho, ThetaForm::Cauchy, 1}, {psi}, 1);
  auto oracle = reflection_form_atom_oracle(rho, psi);
  CHECK(std::abs(gram.gram(0, 0) - oracle) <= 1e-8 * std::abs(oracle));
  CHECK(gram.min_eig >= -1e-8);

  // two translates of a bump give a PSD 2x2 gram
  auto gram2 = reflection_positivity_gram({rho, ThetaForm::Cauchy, 1},
                                          {bump(g, 2.0, 0.7), bump(g, 3.2, 0.7)}, 1);
  CHECK(gram2.min_eig >= -1e-6 * std::max(1.0, gram2.gram_norm));

  const auto straddling = bump(g, 0.2, 1.0);
  CHECK_THROWS_AS(
      reflection_positivity_gram({rho, ThetaForm::Cauchy, 1}, {straddling}, 1),
      std::invalid_argument);
}

TEST_CASE("laplace integrability equivalence flags and values") {
  // rho = delta_2: both sides finite, the finite value stabilizes
  auto atom = laplace_integrability_equivalence(SpectralMeasure::dirac(2.0), 0);
  CHECK(atom.lhs_finite);
  CHECK(atom.rhs_finite);
  const double direct = integrate_adaptive(
      [](double x) { return std::exp(-2.0 * x); }, 0.0, 1.0, 1e-12);
  CHECK(std::abs(atom.lhs_value - direct) <= 1e-6);

  for (double s : {0.5, 1.0, 1.5, 2.0, 3.0})
    for (int l = 0; l <= 3; ++l) {
      auto eq = laplace_integrability_equivalence(SpectralMeasure::power_density_from(s, 1.0), l);
      CHECK(eq.lhs_finite == eq.rhs_finite);
      CHECK(eq.lhs_finite == (static_cast<double>(l) + 1.0 > s));
    }

  CHECK_THROWS_AS(laplace_integrability_equivalence(SpectralMeasure::dirac(0.5), 0),
                  std::invalid_argument);
}

TEST_CASE("reflection positive extension evaluation") {
  Grid g = Grid::uniform(8.0, 1 << 12);
  auto phi = ComplexSamples::from_function(g, [](double x) {
    const double v = std::exp(-0.5 * (x - 2.5) * (x - 2.5) / (0.25 * 0.25));
    return v > 1e-14 ? cdouble(v, 0.0) : cdouble(0.0, 0.0);
  });
  const auto d = rp_extension_eval(SpectralMeasure::dirac(1.0), 1, phi);
  cdouble want(0.0, 0.0);
  for (std::size_t j = 0; j < g.size(); ++j)
    if (g.node(j) > 0.0) want += g.weight(j) * std::exp(-g.node(j)) * phi.values[j];
  CHECK(std::abs(d - want) <= 1e-5 * std::abs(want));

  auto zero = ComplexSamples::from_function(g, [](double) { return cdouble(0.0, 0.0); });
  CHECK(std::abs(rp_extension_eval(SpectralMeasure::dirac(1.0), 1, zero)) == 0.0);

  // support touching the origin with a transform that is non-integrable at 0
  auto near_zero = ComplexSamples::from_function(g, [&](double x) {
    return (x > 0.0 && x < 0.006) ? cdouble(1.0, 0.0) : cdouble(0.0, 0.0);
  });
  CHECK_THROWS_AS(rp_extension_eval(SpectralMeasure::power_density(2.0), 1, near_zero),
                  std::invalid_argument);
}
