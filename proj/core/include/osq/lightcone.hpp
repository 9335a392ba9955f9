#pragma once

#include <functional>
#include <string>

#include "osq/spectral_measure.hpp"
#include "osq/types.hpp"

namespace osq {

// Lorentz invariant measure on the closed forward cone in R^d, decomposed
// as c delta_0 plus a superposition of mass-shell measures against rho.
struct LightConeMeasure {
  double c = 0.0;
  SpectralMeasure rho;
  int d = 4;
};

void validate_lightcone(const LightConeMeasure& mu);

// integral of f(p0, |p-transverse|) against the mass-shell measure:
// reduces to a radial quadrature with the sphere surface factor; for d = 1
// the measure is the point mass (1/m) delta_m.
double integrate_mu_m(const std::function<double(double, double)>& f, double m, int d);

struct LightConeTemperedness {
  bool tempered = false;
  std::string condition;  // first failing condition tag, empty if tempered
};

LightConeTemperedness lightcone_temperedness(const LightConeMeasure& mu);

struct TimeZeroDensity {
  double theta_tilde = 0.0;
  bool projectable = false;
  std::string verdict;  // "all-or-nothing" note when not projectable
};

TimeZeroDensity time_zero_density(const LightConeMeasure& mu, double p_radius);

// density of the euclidean two-point measure of the mass-m field
double free_field_density(double m, double p_norm, int d);

struct TimeZeroCrossCheck {
  double quadrature = 0.0;  // Int (1/pi) dp0 / (m^2 + p^2 + p0^2)
  double closed_form = 0.0; // 1/sqrt(m^2 + p^2)
};

TimeZeroCrossCheck free_field_time_zero_crosscheck(double m, double p_transverse);

struct GffCovariance {
  double theta_t = 0.0;
  double theta_0 = 0.0;
  double phi_ratio = 0.0;
};

GffCovariance gff_covariance(const SpectralMeasure& rho, double t, double x_radius);

// residual of (h_a)_* mu_m = a^{2-d} mu_{am} on a radial test function
double homothety_check(double m, double a, int d,
                       const std::function<double(double, double)>& f);

struct ConformalDensity {
  bool tempered_range = false;
  double theta_s = 0.0;
  double power_fit_exponent = 0.0;
  double riesz_constant = 0.0;  // pi^{a-d/2} Gamma((d-a)/2)/Gamma(a/2) at a = 2-s
};

ConformalDensity conformal_density_riesz(double s, int d, double p_radius);

}  // namespace osq
