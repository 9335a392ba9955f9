#include <doctest.h>

#include <cmath>

#include "osq/lightcone.hpp"
#include "osq/quadrature.hpp"

using namespace osq;

TEST_CASE("mass shell integrals") {
  CHECK(integrate_mu_m([](double p0, double) { return p0 * p0; }, 2.0, 1) == doctest::Approx(2.0));
  CHECK_THROWS_AS(integrate_mu_m([](double, double) { return 1.0; }, 0.0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate_mu_m([](double, double) { return 1.0; }, 0.0, 2),
                  std::invalid_argument);
  const double lhs = integrate_mu_m([](double p0, double) { return std::exp(-p0); }, 1.0, 2);
  const double rhs = 2.0 * integrate_to_infinity(
                               [](double p) {
                                 const double e = std::sqrt(1.0 + p * p);
                                 return std::exp(-e) / e;
                               },
                               0.0, 1e-12);
  CHECK(std::abs(lhs - rhs) <= 1e-6);
  CHECK(integrate_mu_m([](double, double) { return 0.0; }, 1.0, 3) == 0.0);
}

TEST_CASE("temperedness conditions across dimensions") {
  CHECK(lightcone_temperedness({0.0, SpectralMeasure::dirac(1.0), 4}).tempered);
  CHECK(!lightcone_temperedness({0.0, SpectralMeasure::power_density(0.5, 1.0), 1}).tempered);
  CHECK(lightcone_temperedness({0.0, SpectralMeasure::power_density(1.0, 1.0), 2}).tempered);
  CHECK_THROWS_AS(validate_lightcone({0.0, SpectralMeasure::dirac(0.0), 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_lightcone({-1.0, SpectralMeasure::dirac(1.0), 4}),
                  std::invalid_argument);
}

TEST_CASE("time zero density and projectability") {
  auto a = time_zero_density({0.0, SpectralMeasure::dirac(1.0), 4}, 0.0);
  CHECK(a.theta_tilde == doctest::Approx(1.0));
  CHECK(a.projectable);
  auto b = time_zero_density({0.0, SpectralMeasure::power_density(1.5), 4}, 1.0);
  CHECK(!b.projectable);
  CHECK(b.verdict.find("all-or-nothing") != std::string::npos);
}

TEST_CASE("free field density values and the p0 cross check") {
  CHECK(free_field_density(1.0, 0.0, 4) == doctest::Approx(1.0 / kPi).epsilon(1e-14));
  CHECK(free_field_density(1.0, 1.0, 4) == doctest::Approx(0.5 / kPi).epsilon(1e-14));
  CHECK_THROWS_AS(free_field_density(0.0, 1.0, 2), std::invalid_argument);
  auto cc = free_field_time_zero_crosscheck(2.0, 0.7);
  CHECK(std::abs(cc.quadrature - cc.closed_form) <= 1e-6);
}

TEST_CASE("covariance ratios of superpositions") {
  auto single = gff_covariance(SpectralMeasure::dirac(1.0), 1.0, 0.0);
  CHECK(std::abs(single.phi_ratio - std::exp(-1.0)) <= 1e-8);
  auto at_zero = gff_covariance(SpectralMeasure::dirac(1.0), 0.0, 1.3);
  CHECK(at_zero.phi_ratio == doctest::Approx(1.0));
  auto two = gff_covariance(SpectralMeasure::from_atoms({{1.0, 1.0}, {2.0, 1.0}}), 1.0, 0.0);
  const double p2 = gff_covariance(SpectralMeasure::from_atoms({{1.0, 1.0}, {2.0, 1.0}}), 2.0, 0.0)
                        .phi_ratio;
  CHECK(std::abs(two.phi_ratio * two.phi_ratio - p2) > 1e-3);
  CHECK_THROWS_AS(gff_covariance(SpectralMeasure::power_density(1.0), 1.0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("homothety scaling factors") {
  auto f = [](double p0, double pr) { return std::exp(-(p0 * p0 + pr * pr)); };
  CHECK(homothety_check(1.0, 1.0, 3, f) <= 1e-12);
  CHECK(homothety_check(1.0, 2.0, 2, f) <= 1e-6);
  CHECK(homothety_check(1.0, 2.0, 4, f) <= 1e-6);
  CHECK(homothety_check(1.0, 0.5, 3, f) <= 1e-6);
}

TEST_CASE("conformal densities: closed form and range verdicts") {
  auto cd = conformal_density_riesz(1.0, 3, 1.0);
  REQUIRE(cd.tempered_range);
  CHECK(std::abs(cd.theta_s - 0.5 * kPi) <= 1e-8);
  CHECK(std::abs(cd.power_fit_exponent + 1.0) <= 1e-3);
  CHECK(cd.riesz_constant == doctest::Approx(1.0 / kPi).epsilon(1e-12));
  CHECK(!conformal_density_riesz(2.5, 3, 1.0).tempered_range);
  CHECK(!conformal_density_riesz(0.5, 1, 1.0).tempered_range);
  CHECK(conformal_density_riesz(1.5, 1, 1.0).tempered_range);
  // closed form at s = 1/2: (pi/2)/sin(pi/4) scaled by p^{-3/2}
  auto half = conformal_density_riesz(0.5, 3, 2.0);
  const double closed = 0.5 * kPi / std::sin(0.25 * kPi) * std::pow(2.0, -1.5);
  CHECK(std::abs(half.theta_s - closed) <= 1e-6 * closed);
}
