#pragma once

#include <string>
#include <vector>

#include "osq/grid.hpp"
#include "osq/spectral_measure.hpp"
#include "osq/types.hpp"

namespace osq {

// The two Poisson-type densities built from a measure on [0, infinity):
//   Cauchy  : Theta(x) = Int 1/(y^2 + x^2) drho(y)
//   Poisson : Theta(x) = (1/pi) Int y/(y^2 + x^2) drho(y)
enum class ThetaForm { Cauchy, Poisson };

struct ThetaDensity {
  SpectralMeasure rho;
  ThetaForm form = ThetaForm::Cauchy;
  int dimension = 1;
};

// Analytic finiteness of Theta(x) for x != 0.
bool theta_finite_off_zero(const ThetaDensity& td);

double theta_density_eval(const ThetaDensity& td, double x);

bool tameness_check(const SpectralMeasure& rho);

struct TemperednessVerdict {
  bool tempered = false;
  std::string failing_condition;  // empty when tempered
};

// Temperedness of nu = Theta dx on R^d (Cauchy form): automatic for d > 2,
// near-zero conditions for d = 1, 2.
TemperednessVerdict temperedness_check(const SpectralMeasure& rho, int d);

struct AsymptoticMass {
  double limit_estimate = 0.0;  // Richardson estimate of lim Theta(x) x^2
  double total_mass = 0.0;      // nu(R) = pi Int drho(y)/y
};

AsymptoticMass asymptotic_mass(const ThetaDensity& td);

// Gram of the reflection form Int theta(psi-hat) conj(psi-hat) dnu over
// test functions supported in the open right half line (d = 1), reduced to
// shifted-mass one-dimensional problems through a Gaussian transverse
// profile for d > 1. Returns the minimal eigenvalue (relative to the Gram
// norm) plus the Gram itself.
struct ReflectionGram {
  MatC gram;
  double min_eig = 0.0;
  double gram_norm = 0.0;
};

ReflectionGram reflection_positivity_gram(const ThetaDensity& td,
                                          const std::vector<ComplexSamples>& test_functions,
                                          int d = 1, double transverse_sigma = 1.0);

// closed-form value of the reflection form for a single test function
// against an atom measure: sum_i w_i |L(psi)(y_i)|^2 / (2 y_i)
cdouble reflection_form_atom_oracle(const SpectralMeasure& rho, const ComplexSamples& psi);

struct IntegrabilityEquivalence {
  bool lhs_finite = false;  // Int_0^1 x^l L(rho)(x) dx
  bool rhs_finite = false;  // Int_1^inf y^{-(l+1)} drho(y)
  double lhs_value = 0.0;   // stabilized quadrature value when finite
};

// Both sides of the Laplace integrability equivalence for measures
// supported in [1, infinity); the verdicts are analytic, the finite side is
// confirmed by a stabilizing quadrature ladder.
IntegrabilityEquivalence laplace_integrability_equivalence(const SpectralMeasure& rho, int l);

// Evaluates the reflection positive extension of L(rho) on a test function:
//   D(phi) = Int L(rho-tilde)(|x|) (phi + phi^(4N))(x) dx,
// rho-tilde = (1 + y^{4N})^{-1} rho, derivatives taken spectrally. For phi
// supported in the open right half line this agrees with Int L(rho) phi.
cdouble rp_extension_eval(const SpectralMeasure& rho, int N, const ComplexSamples& phi);

}  // namespace osq
