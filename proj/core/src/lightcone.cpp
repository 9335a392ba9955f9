#include "osq/lightcone.hpp"

#include <cmath>
#include <stdexcept>

#include "osq/quadrature.hpp"

namespace osq {

namespace {

double sphere_surface(int k) {
  // surface measure of S^k; S^0 is two points
  return 2.0 * std::pow(kPi, 0.5 * (k + 1)) / std::tgamma(0.5 * (k + 1));
}

}  // namespace

void validate_lightcone(const LightConeMeasure& mu) {
  if (mu.c < 0.0) throw std::invalid_argument("LightConeMeasure: c must be >= 0");
  if (mu.d < 1) throw std::invalid_argument("LightConeMeasure: d must be >= 1");
  if (mu.d == 1 && mu.rho.has_zero_atom())
    throw std::invalid_argument("LightConeMeasure: rho may not charge 0 for d = 1");
}

double integrate_mu_m(const std::function<double(double, double)>& f, double m, int d) {
  if (d < 1) throw std::invalid_argument("integrate_mu_m: d must be >= 1");
  if (d == 1) {
    if (!(m > 0.0)) throw std::invalid_argument("integrate_mu_m: empty mass shell for d = 1, m = 0");
    return f(m, 0.0) / m;
  }
  if (!(m > 0.0) && d <= 2)
    throw std::invalid_argument("integrate_mu_m: m = 0 requires d > 2");
  const double surface = sphere_surface(d - 2);
  auto radial = [&](double r) {
    const double p0 = std::sqrt(m * m + r * r);
    const double jac = d == 2 ? 1.0 : std::pow(r, d - 2);
    return f(p0, r) * jac / p0;
  };
  // integrands in scope decay; march panels outward until negligible
  return surface * integrate_to_infinity(radial, 0.0, 1e-12);
}

LightConeTemperedness lightcone_temperedness(const LightConeMeasure& mu) {
  validate_lightcone(mu);
  LightConeTemperedness out;
  if (!mu.rho.tempered()) {
    out.condition = "C1: rho not tempered";
    return out;
  }
  if (mu.d == 1 && !mu.rho.near_zero_inverse_integrable()) {
    out.condition = "C2: near-zero 1/m integral (d = 1)";
    return out;
  }
  if (mu.d == 2 && !mu.rho.near_zero_log_integrable()) {
    out.condition = "C3: near-zero log(1/m) integral (d = 2)";
    return out;
  }
  out.tempered = true;
  return out;
}

TimeZeroDensity time_zero_density(const LightConeMeasure& mu, double p_radius) {
  validate_lightcone(mu);
  TimeZeroDensity out;
  out.projectable = lightcone_temperedness(mu).tempered && mu.rho.tail_power_integrable(0);
  if (!out.projectable) out.verdict = "projected measure is all-or-nothing: mu-tilde(E) in {0, inf}";
  const bool evaluable = p_radius > 0.0 || mu.rho.near_zero_inverse_integrable();
  if (evaluable && mu.rho.tail_power_integrable(0)) {
    out.theta_tilde = mu.rho.integrate(
        [p_radius](double m) { return 1.0 / std::sqrt(m * m + p_radius * p_radius); });
  }
  return out;
}

double free_field_density(double m, double p_norm, int d) {
  if (!(m > 0.0) && d <= 2)
    throw std::invalid_argument("free_field_density: m = 0 requires d > 2");
  return (1.0 / kPi) / (m * m + p_norm * p_norm);
}

TimeZeroCrossCheck free_field_time_zero_crosscheck(double m, double p_transverse) {
  TimeZeroCrossCheck out;
  const double c2 = m * m + p_transverse * p_transverse;
  out.closed_form = 1.0 / std::sqrt(c2);
  out.quadrature = integrate_real_line(
      [c2](double p0) { return (1.0 / kPi) / (c2 + p0 * p0); }, 1e-12);
  return out;
}

GffCovariance gff_covariance(const SpectralMeasure& rho, double t, double x_radius) {
  // Theta_0 finite requires a finite total mass for the families in scope
  if (rho.density() && rho.density()->form == DensityForm::Power && std::isinf(rho.density()->upper))
    throw std::invalid_argument("gff_covariance: Theta_0 divergent for unbounded power densities");
  GffCovariance out;
  auto kernel = [x_radius](double lam, double at) {
    const double e = std::sqrt(lam * lam + x_radius * x_radius);
    return e > 0.0 ? lam / e * std::exp(-at * e) : 0.0;
  };
  out.theta_t = rho.integrate([&](double lam) { return kernel(lam, std::abs(t)); });
  out.theta_0 = rho.integrate([&](double lam) { return kernel(lam, 0.0); });
  out.phi_ratio = out.theta_0 > 0.0 ? out.theta_t / out.theta_0 : 0.0;
  return out;
}

double homothety_check(double m, double a, int d,
                       const std::function<double(double, double)>& f) {
  if (!(a > 0.0)) throw std::invalid_argument("homothety_check: a must be positive");
  auto scaled = [&](double p0, double pr) { return f(a * p0, a * pr); };
  const double lhs = integrate_mu_m(scaled, m, d);
  const double rhs = std::pow(a, 2 - d) * integrate_mu_m(f, a * m, d);
  return std::abs(lhs - rhs);
}

ConformalDensity conformal_density_riesz(double s, int d, double p_radius) {
  ConformalDensity out;
  out.tempered_range = d > 1 ? (s > 0.0 && s < 2.0) : (s > 1.0 && s < 2.0);
  const double a = 2.0 - s;
  out.riesz_constant = std::pow(kPi, a - 0.5 * d) * std::tgamma(0.5 * (d - a)) / std::tgamma(0.5 * a);
  if (!out.tempered_range) return out;

  auto theta = [s](double p) {
    // Int_0^inf m^{s-1}/(m^2 + p^2) dm, singularity removed by m = u^{1/s};
    // the far tail is a geometric expansion in (p/M)^2
    const double M = 16.0 * std::max(1.0, p);
    const double body = integrate_adaptive(
        [s, p](double u) {
          const double m = std::pow(u, 1.0 / s);
          return (1.0 / s) / (m * m + p * p);
        },
        0.0, std::pow(M, s), 1e-12);
    double tail = 0.0;
    double sign = 1.0;
    for (int k = 0; k < 6; ++k) {
      tail += sign * std::pow(p, 2.0 * k) * std::pow(M, s - 2.0 - 2.0 * k) /
              (2.0 + 2.0 * static_cast<double>(k) - s);
      sign = -sign;
    }
    return body + tail;
  };
  out.theta_s = theta(p_radius > 0.0 ? p_radius : 1.0);

  // log-log least squares fit of the exponent over p in [0.5, 8]
  const int npts = 12;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < npts; ++i) {
    const double p = 0.5 * std::pow(16.0, static_cast<double>(i) / (npts - 1));
    const double lx = std::log(p);
    const double ly = std::log(theta(p));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  out.power_fit_exponent = (npts * sxy - sx * sy) / (npts * sxx - sx * sx);
  return out;
}

}  // namespace osq
