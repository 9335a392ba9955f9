#include "osq/measures.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "osq/fft.hpp"
#include "osq/quadrature.hpp"

namespace osq {

bool theta_finite_off_zero(const ThetaDensity& td) {
  const auto& dens = td.rho.density();
  if (!dens) return true;
  if (!std::isinf(dens->upper) || dens->form == DensityForm::PowerExpCutoff) return true;
  // tail y^{s-1} / (y^2 + x^2) integrable iff s < 2; the Poisson form has an
  // extra factor y, so s < 1 there
  return td.form == ThetaForm::Cauchy ? dens->s < 2.0 : dens->s < 1.0;
}

double theta_density_eval(const ThetaDensity& td, double x) {
  if (!theta_finite_off_zero(td))
    throw std::invalid_argument("theta_density_eval: density diverges (analytic flag)");
  if (x == 0.0) {
    // finite at 0 only when the measure does not charge a neighborhood of 0
    // too strongly; atoms at positive locations are always fine
    if (td.rho.has_zero_atom())
      throw std::invalid_argument("theta_density_eval: x = 0 with mass at 0");
    const auto& dens = td.rho.density();
    if (dens && td.rho.density_lower() == 0.0) {
      const double s = dens->s;
      const bool ok = td.form == ThetaForm::Cauchy ? s > 2.0 : s > 1.0;
      if (!ok) throw std::invalid_argument("theta_density_eval: divergent at x = 0");
    }
  }
  if (td.form == ThetaForm::Cauchy)
    return td.rho.integrate([x](double y) { return 1.0 / (y * y + x * x); });
  return td.rho.integrate([x](double y) { return (y / kPi) / (y * y + x * x); });
}

bool tameness_check(const SpectralMeasure& rho) { return rho.tame(); }

TemperednessVerdict temperedness_check(const SpectralMeasure& rho, int d) {
  TemperednessVerdict out;
  if (!rho.tame()) {
    out.failing_condition = "tameness";
    return out;
  }
  if (d > 2) {
    out.tempered = true;
    return out;
  }
  if (d == 1) {
    if (!rho.near_zero_inverse_integrable()) {
      out.failing_condition = "near-zero 1/y integral (d = 1)";
      return out;
    }
  } else if (d == 2) {
    if (!rho.near_zero_log_integrable()) {
      out.failing_condition = "near-zero log(1/y) integral (d = 2)";
      return out;
    }
  } else {
    throw std::invalid_argument("temperedness_check: d must be >= 1");
  }
  out.tempered = true;
  return out;
}

AsymptoticMass asymptotic_mass(const ThetaDensity& td) {
  if (td.form != ThetaForm::Cauchy)
    throw std::invalid_argument("asymptotic_mass: Cauchy form expected");
  if (td.rho.density()) throw std::invalid_argument("asymptotic_mass: atoms only");
  AsymptoticMass out;
  auto value = [&](double x) { return theta_density_eval(td, x) * x * x; };
  // Theta(x) x^2 = M - C/x^2 + O(x^-4): eliminate the leading correction
  const double f100 = value(100.0);
  const double f200 = value(200.0);
  out.limit_estimate = f200 + (f200 - f100) / 3.0;
  double mass = 0.0;
  for (const auto& a : td.rho.atoms()) {
    if (a.lambda == 0.0) throw std::invalid_argument("asymptotic_mass: atom at 0 not allowed");
    mass += a.weight / a.lambda;
  }
  out.total_mass = kPi * mass;
  return out;
}

namespace {

// Cauchy density of rho with a transverse mass shift, tabulated on a grid
std::vector<double> theta_table(const SpectralMeasure& rho, const Grid& dual, double mass_shift) {
  std::vector<double> out(dual.size());
  for (std::size_t k = 0; k < dual.size(); ++k) {
    const double p = dual.node(k);
    out[k] = rho.integrate([p, mass_shift](double y) {
      const double m2 = y * y + mass_shift * mass_shift;
      return 1.0 / (m2 + p * p);
    });
  }
  return out;
}

// one-dimensional reflection form against a tabulated density
cdouble reflection_form_1d(const std::vector<double>& theta, const ComplexSamples& a_hat,
                           const ComplexSamples& b_hat) {
  const Grid& dual = a_hat.grid;
  cdouble acc(0.0, 0.0);
  for (std::size_t k = 0; k < dual.size(); ++k)
    acc += dual.spacing() * a_hat.values[dual.reflect_index(k)] * std::conj(b_hat.values[k]) * theta[k];
  return acc;
}

}  // namespace

ReflectionGram reflection_positivity_gram(const ThetaDensity& td,
                                          const std::vector<ComplexSamples>& test_functions,
                                          int d, double transverse_sigma) {
  if (test_functions.empty()) throw std::invalid_argument("reflection_positivity_gram: no test functions");
  for (const auto& f : test_functions) {
    // supports must lie strictly inside the positive half line
    for (std::size_t j = 0; j < f.grid.size(); ++j)
      if (f.grid.node(j) <= 0.0 && std::abs(f.values[j]) > 0.0)
        throw std::invalid_argument("reflection_positivity_gram: support not in x0 > 0");
  }
  std::vector<ComplexSamples> hats;
  hats.reserve(test_functions.size());
  for (const auto& f : test_functions) hats.push_back(fourier_transform(f));

  const Eigen::Index n = static_cast<Eigen::Index>(test_functions.size());
  const Grid& dual0 = hats.front().grid;
  MatC gram(n, n);
  if (d == 1) {
    const auto theta = theta_table(td.rho, dual0, 0.0);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        gram(k, j) = reflection_form_1d(theta, hats[static_cast<std::size_t>(j)],
                                        hats[static_cast<std::size_t>(k)]);
  } else {
    // transverse Gaussian profile: the squared profile transform weights a
    // radial superposition of shifted-mass one-dimensional forms
    const double sigma = transverse_sigma;
    const std::size_t radial_nodes = 24;
    const auto rule = gauss_legendre(radial_nodes);
    const double rmax = 6.0 / sigma;
    const double area = d >= 2 ? 2.0 * std::pow(kPi, 0.5 * (d - 1)) / std::tgamma(0.5 * (d - 1)) : 1.0;
    gram.setZero();
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double r = 0.5 * rmax * (rule.nodes[q] + 1.0);
      const double w = 0.5 * rmax * rule.weights[q];
      const double profile2 = std::exp(-sigma * sigma * r * r);  // |profile-hat|^2
      const double surface = d == 2 ? 1.0 : std::pow(r, d - 2);
      const auto theta = theta_table(td.rho, dual0, r);
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k)
          gram(k, j) += w * area * profile2 * surface *
                        reflection_form_1d(theta, hats[static_cast<std::size_t>(j)],
                                           hats[static_cast<std::size_t>(k)]);
    }
  }
  ReflectionGram out;
  out.gram = 0.5 * (gram + MatC(gram.adjoint()));
  Eigen::SelfAdjointEigenSolver<MatC> es(out.gram);
  out.min_eig = es.eigenvalues().minCoeff();
  out.gram_norm = es.eigenvalues().cwiseAbs().maxCoeff();
  return out;
}

cdouble reflection_form_atom_oracle(const SpectralMeasure& rho, const ComplexSamples& psi) {
  if (rho.density()) throw std::invalid_argument("reflection_form_atom_oracle: atoms only");
  cdouble acc(0.0, 0.0);
  for (const auto& a : rho.atoms()) {
    cdouble lap(0.0, 0.0);
    for (std::size_t j = 0; j < psi.grid.size(); ++j) {
      const double x = psi.grid.node(j);
      if (x > 0.0) lap += psi.grid.weight(j) * psi.values[j] * std::exp(-a.lambda * x);
    }
    acc += a.weight * std::norm(lap) / (2.0 * a.lambda);
  }
  return acc;
}

IntegrabilityEquivalence laplace_integrability_equivalence(const SpectralMeasure& rho, int l) {
  if (l < 0) throw std::invalid_argument("laplace_integrability_equivalence: l >= 0 required");
  for (const auto& a : rho.atoms())
    if (a.lambda < 1.0)
      throw std::invalid_argument("laplace_integrability_equivalence: support must lie in [1, inf)");
  if (rho.density() && rho.density_lower() < 1.0)
    throw std::invalid_argument("laplace_integrability_equivalence: support must lie in [1, inf)");

  IntegrabilityEquivalence out;
  // right side: tail integrability of the measure, analytic
  out.rhs_finite = rho.tail_power_integrable(l);
  // left side: the near-zero exponent of L(rho). Atom measures have a
  // bounded transform; the power family behaves like Gamma(s) x^{-s}.
  if (!rho.density()) {
    out.lhs_finite = true;
  } else {
    out.lhs_finite = static_cast<double>(l) + 1.0 > rho.density()->s;
  }
  // ladder delta -> 0: for a convergent integral the increments decay
  // geometrically, for a divergent one they stay level or grow
  double prev = 0.0, inc_prev = 0.0, inc_last = 0.0;
  for (int k = 2; k <= 12; ++k) {
    const double delta = std::pow(2.0, -k);
    const double val = integrate_adaptive(
        [&](double x) { return std::pow(x, l) * rho.laplace(x); }, delta, 1.0, 1e-10);
    inc_prev = inc_last;
    inc_last = std::abs(val - prev);
    prev = val;
  }
  const bool converging =
      inc_last <= 1e-9 * std::max(1.0, std::abs(prev)) || inc_last <= 0.9 * inc_prev;
  if (converging != out.lhs_finite)
    throw std::runtime_error("laplace_integrability_equivalence: quadrature ladder contradicts the analytic verdict");
  out.lhs_value = out.lhs_finite ? prev : 0.0;
  return out;
}

cdouble rp_extension_eval(const SpectralMeasure& rho, int N, const ComplexSamples& phi) {
  if (N < 1) throw std::invalid_argument("rp_extension_eval: N >= 1 required");
  if (phi.grid.kind() != GridKind::Uniform)
    throw std::invalid_argument("rp_extension_eval: uniform grid required");
  const Grid& g = phi.grid;
  const double h = g.spacing();

  // support window of phi
  std::size_t lo = g.size(), hi = 0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (std::abs(phi.values[j]) > 0.0) {
      lo = std::min(lo, j);
      hi = std::max(hi, j);
    }
  }
  if (lo > hi) return cdouble(0.0, 0.0);
  if (!rho.tail_power_integrable(0)) {
    // L(rho) is non-integrable at 0: an unresolved boundary layer at the
    // origin cannot be certified
    const double margin = std::min(std::abs(g.node(lo)), std::abs(g.node(hi)));
    if (margin < 2.0 * h)
      throw std::invalid_argument("rp_extension_eval: support touches the origin boundary layer");
  }

  // spectral derivative of order 4N; bins at the relative noise floor are
  // zeroed first so the high-order multiplier cannot amplify round-off
  ComplexSamples hat = fourier_transform(phi);
  double peak = 0.0;
  for (const auto& v : hat.values) peak = std::max(peak, std::abs(v));
  for (std::size_t k = 0; k < hat.values.size(); ++k) {
    if (std::abs(hat.values[k]) <= 1e-13 * peak) hat.values[k] = cdouble(0.0, 0.0);
    else hat.values[k] *= std::pow(hat.grid.node(k), 4 * N);
  }
  ComplexSamples deriv = fourier_transform(hat, true);

  auto laplace_tilde = [&](double x) {
    return rho.integrate([x, N](double y) {
      return std::exp(-x * y) / (1.0 + std::pow(y, 4 * N));
    });
  };
  cdouble acc(0.0, 0.0);
  const std::size_t pad = 2;
  const std::size_t a = lo > pad ? lo - pad : 0;
  const std::size_t b = std::min(g.size() - 1, hi + pad);
  for (std::size_t j = a; j <= b; ++j)
    acc += h * laplace_tilde(std::abs(g.node(j))) * (phi.values[j] + deriv.values[j]);
  return acc;
}

}  // namespace osq
