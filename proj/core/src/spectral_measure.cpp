#include "osq/spectral_measure.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "osq/quadrature.hpp"

namespace osq {

namespace {

// regularized upper incomplete gamma: Gamma(s, x) (series below s+1,
// continued fraction above)
double upper_incomplete_gamma(double s, double x) {
  if (x < 0.0 || s <= 0.0) throw std::invalid_argument("upper_incomplete_gamma: bad arguments");
  if (x == 0.0) return std::tgamma(s);
  if (x < s + 1.0) {
    // lower series, then complement
    double term = 1.0 / s;
    double sum = term;
    for (int n = 1; n < 500; ++n) {
      term *= x / (s + n);
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    const double lower = sum * std::exp(-x + s * std::log(x));
    return std::tgamma(s) - lower;
  }
  // Lentz continued fraction
  const double tiny = 1e-300;
  double b = x + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x + s * std::log(x)) * h;
}

}  // namespace

SpectralMeasure SpectralMeasure::from_atoms(std::vector<Atom> atoms) {
  SpectralMeasure m;
  m.atoms_ = std::move(atoms);
  m.validate();
  return m;
}

SpectralMeasure SpectralMeasure::dirac(double lambda, double weight) {
  return from_atoms({Atom{lambda, weight}});
}

SpectralMeasure SpectralMeasure::power_density(double s, double upper) {
  SpectralMeasure m;
  m.density_ = Density{DensityForm::Power, s, 1.0, upper};
  m.validate();
  return m;
}

SpectralMeasure SpectralMeasure::power_density_from(double s, double lower) {
  SpectralMeasure m;
  m.density_ = Density{DensityForm::Power, s, 1.0, std::numeric_limits<double>::infinity()};
  m.density_lower_ = lower;
  m.validate();
  return m;
}

SpectralMeasure SpectralMeasure::power_exp_cutoff(double s, double c) {
  SpectralMeasure m;
  m.density_ = Density{DensityForm::PowerExpCutoff, s, c, std::numeric_limits<double>::infinity()};
  m.validate();
  return m;
}

void SpectralMeasure::validate() const {
  int zero_atoms = 0;
  for (const auto& a : atoms_) {
    if (a.lambda < 0.0) throw std::invalid_argument("SpectralMeasure: atom location must be >= 0");
    if (!(a.weight > 0.0)) throw std::invalid_argument("SpectralMeasure: atom weight must be positive");
    if (a.lambda == 0.0) ++zero_atoms;
  }
  if (zero_atoms > 1) throw std::invalid_argument("SpectralMeasure: at most one atom at 0");
  if (density_) {
    if (!(density_->s > 0.0)) throw std::invalid_argument("SpectralMeasure: power exponent must be positive");
    if (density_->form == DensityForm::PowerExpCutoff && !(density_->cutoff > 0.0))
      throw std::invalid_argument("SpectralMeasure: cutoff rate must be positive");
    if (density_lower_ < 0.0) throw std::invalid_argument("SpectralMeasure: density support must be in [0, inf)");
  }
}

bool SpectralMeasure::has_zero_atom() const {
  for (const auto& a : atoms_)
    if (a.lambda == 0.0) return true;
  return false;
}

double SpectralMeasure::zero_atom_weight() const {
  for (const auto& a : atoms_)
    if (a.lambda == 0.0) return a.weight;
  return 0.0;
}

std::vector<Atom> SpectralMeasure::positive_atoms() const {
  std::vector<Atom> out;
  for (const auto& a : atoms_)
    if (a.lambda > 0.0) out.push_back(a);
  return out;
}

double SpectralMeasure::total_atom_mass() const {
  double acc = 0.0;
  for (const auto& a : atoms_) acc += a.weight;
  return acc;
}

double SpectralMeasure::integrate(const std::function<double(double)>& f) const {
  double acc = 0.0;
  for (const auto& a : atoms_) acc += a.weight * f(a.lambda);
  if (density_) {
    const double s = density_->s;
    const double lo = density_lower_;
    auto target = [&](double y) {
      double w = std::pow(y, s - 1.0);
      if (density_->form == DensityForm::PowerExpCutoff) w *= std::exp(-density_->cutoff * y);
      return w * f(y);
    };
    if (lo > 0.0) {
      if (std::isinf(density_->upper)) {
        acc += integrate_to_infinity(target, lo);
      } else {
        acc += integrate_adaptive(target, lo, density_->upper);
      }
    } else {
      // substitute y = u^{1/s} to remove the endpoint singularity on (0, 1]
      const double cap = std::isinf(density_->upper) ? 1.0 : std::min(1.0, density_->upper);
      auto smooth = [&](double u) {
        const double y = std::pow(u, 1.0 / s);
        double v = f(y) / s;
        if (density_->form == DensityForm::PowerExpCutoff) v *= std::exp(-density_->cutoff * y);
        return v;
      };
      acc += integrate_adaptive(smooth, 0.0, std::pow(cap, s));
      if (std::isinf(density_->upper)) {
        acc += integrate_to_infinity(target, cap);
      } else if (density_->upper > cap) {
        acc += integrate_adaptive(target, cap, density_->upper);
      }
    }
  }
  return acc;
}

double SpectralMeasure::laplace(double x) const {
  if (!(x > 0.0)) throw std::invalid_argument("SpectralMeasure::laplace: x must be positive");
  double acc = 0.0;
  for (const auto& a : atoms_) acc += a.weight * std::exp(-x * a.lambda);
  if (density_) {
    const double s = density_->s;
    if (density_->form == DensityForm::PowerExpCutoff) {
      // Int_0^inf y^{s-1} e^{-(x+c) y} dy = Gamma(s) (x + c)^{-s}
      acc += std::tgamma(s) * std::pow(x + density_->cutoff, -s);
    } else {
      // Int_L^U y^{s-1} e^{-xy} dy = x^{-s} (Gamma(s, xL) - Gamma(s, xU))
      const double lo = density_lower_ > 0.0 ? upper_incomplete_gamma(s, x * density_lower_)
                                             : std::tgamma(s);
      const double hi = std::isinf(density_->upper)
                            ? 0.0
                            : upper_incomplete_gamma(s, x * density_->upper);
      acc += std::pow(x, -s) * (lo - hi);
    }
  }
  return acc;
}

bool SpectralMeasure::tame() const {
  // atoms never obstruct; power densities on unbounded support need s < 2
  if (!density_) return true;
  if (!std::isinf(density_->upper) || density_->form == DensityForm::PowerExpCutoff) return true;
  return density_->s < 2.0;
}

bool SpectralMeasure::tempered() const {
  // finite atom lists are tempered; y^{s-1} dy is tempered iff s > 0
  // (validated at construction) and the exponential cutoff only helps.
  return true;
}

bool SpectralMeasure::near_zero_inverse_integrable() const {
  if (has_zero_atom()) return false;
  if (density_ && density_lower_ < 1.0) return density_->s > 1.0;
  return true;
}

bool SpectralMeasure::near_zero_log_integrable() const {
  if (has_zero_atom()) return false;
  // Int_0^1 log(1/y) y^{s-1} dy = 1/s^2 < infinity for every s > 0.
  return true;
}

bool SpectralMeasure::tail_power_integrable(int l) const {
  if (l < 0) throw std::invalid_argument("tail_power_integrable: l must be >= 0");
  if (!density_ || !std::isinf(density_->upper)) return true;
  if (density_->form == DensityForm::PowerExpCutoff) return true;
  // Int_1^inf y^{s-1-(l+1)} dy < infinity iff s - l - 2 < -1.
  return density_->s < static_cast<double>(l) + 1.0;
}

}  // namespace osq
