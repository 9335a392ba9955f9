#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "osq/types.hpp"

namespace osq {

struct Atom {
  double lambda = 0.0;  // location, >= 0
  double weight = 1.0;  // mass, > 0
};

// Parametric densities on (0, upper] (upper may be infinity).
enum class DensityForm {
  Power,              // y^{s-1} dy
  PowerExpCutoff,     // y^{s-1} e^{-c y} dy
};

struct Density {
  DensityForm form = DensityForm::Power;
  double s = 1.0;       // power exponent, > 0
  double cutoff = 1.0;  // exponential rate c (PowerExpCutoff only)
  double upper = std::numeric_limits<double>::infinity();
};

// Finite nonnegative measure on [0, infinity): atoms plus an optional
// parametric density. Analytic convergence verdicts (tameness,
// temperedness, ...) are derived from the parameters, never from
// numerically extrapolated divergent integrals.
class SpectralMeasure {
 public:
  SpectralMeasure() = default;
  static SpectralMeasure from_atoms(std::vector<Atom> atoms);
  static SpectralMeasure dirac(double lambda, double weight = 1.0);
  static SpectralMeasure power_density(double s, double upper = std::numeric_limits<double>::infinity());
  static SpectralMeasure power_density_from(double s, double lower);  // support [lower, upper=inf)
  static SpectralMeasure power_exp_cutoff(double s, double c);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::optional<Density>& density() const { return density_; }
  double density_lower() const { return density_lower_; }

  bool has_zero_atom() const;
  double zero_atom_weight() const;
  // atoms with lambda > 0 only
  std::vector<Atom> positive_atoms() const;
  double total_atom_mass() const;

  // Int e^{-x y} drho(y); requires x > 0.
  double laplace(double x) const;

  // Int f(y) drho(y) over the positive part, f supplied pointwise; the
  // density contribution is integrated adaptively with a substitution that
  // removes the y^{s-1} endpoint singularity.
  double integrate(const std::function<double(double)>& f) const;

  // Analytic flags -----------------------------------------------------
  // Int drho(y) / (1 + y^2) < infinity.
  bool tame() const;
  // rho is a tempered measure on [0, infinity).
  bool tempered() const;
  // Int_0^1 (1/y) drho(y) < infinity.
  bool near_zero_inverse_integrable() const;
  // Int_0^1 log(1/y) drho(y) < infinity.
  bool near_zero_log_integrable() const;
  // Int_1^inf y^{-(l+1)} drho(y) < infinity.
  bool tail_power_integrable(int l) const;

 private:
  void validate() const;
  std::vector<Atom> atoms_;
  std::optional<Density> density_;
  double density_lower_ = 0.0;
};

}  // namespace osq
