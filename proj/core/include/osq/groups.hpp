#pragma once

#include <functional>

#include "osq/dilation.hpp"
#include "osq/grid.hpp"
#include "osq/quadrature.hpp"
#include "osq/types.hpp"

namespace osq {

// Element (t, a) of the affine group of the line, a > 0, with
// (t1, a1)(t2, a2) = (t1 + a1 t2, a1 a2).
struct AxbPoint {
  double t = 0.0;
  double a = 1.0;
};

AxbPoint axb_mul(const AxbPoint& g1, const AxbPoint& g2);

// L^2(R_+, y^{s-1} dy) sampled on a rule whose weights absorb the measure
// (substitution y = u^{1/s} removes the endpoint singularity).
struct WeightedHalfLine {
  double s = 1.0;
  HalfLineRule rule;  // weights include y^{s-1} dy
  static WeightedHalfLine make(double s, double upper = 48.0, std::size_t panels = 64);
};

struct AxbFunction {
  const WeightedHalfLine* space = nullptr;
  std::vector<cdouble> values;
};

cdouble axb_inner(const AxbFunction& f, const AxbFunction& g);

// (pi(t, a) f)(x) = e^{itx} a^{s/2} f(a x); the rescaled argument is
// evaluated by spline interpolation with an out-of-range guard.
AxbFunction axb_act(const AxbPoint& g, const AxbFunction& f);

struct AxbConstantReport {
  double fitted_constant = 0.0;       // in the e^{-2 pi i x xi} convention
  double fitted_exponent = 0.0;
  double paper_constant = 0.0;        // pi^{(1-4s)/2} Gamma(1/4 + s)/Gamma(1/2 - s)
  double riesz_constant = 0.0;        // pi^{(1-4s)/2} Gamma(s)/Gamma(1/2 - s)
  int matches = 0;                    // 1 or 2 when the fit lands within 1e-2 of a candidate
};

// Computes the Fourier transform of |x|^{2s-1} numerically (exponential
// regularization, two-level extrapolation) and reports which closed-form
// constant the power-law fit supports.
AxbConstantReport axb_fourier_constant_check(double s);

// minimal eigenvalue of the Gram of the kernel (x + y)^{-2s} over bump
// test functions on the right half line
double axb_reflection_gram_min_eig(double s, int bumps = 4);

// Field on the tensor grid of the three-dimensional nilpotent group model:
// x carries the dilation variable, y the base variable.
struct TensorField {
  Grid x;
  Grid y;
  MatC values;  // x.size() x y.size()
};

enum class HeisenbergGenerator { P, Q, Z };

TensorField heisenberg_act(const TensorField& f, HeisenbergGenerator gen, double t);
// full exponential coordinates (p, q, z)
TensorField heisenberg_act_element(const TensorField& f, double p, double q, double z);
// group law in exponential coordinates
void heisenberg_mul(double p1, double q1, double z1, double p2, double q2, double z2,
                    double& p, double& q, double& z);

double tensor_norm(const TensorField& f);

// Weyl pair on the y grid: U_t = translation (band-limited), V_s =
// multiplication by e^{-isy}; returns || U_t V_s f - e^{ist} V_s U_t f ||.
double weyl_commutation_residual(const TensorField& f, double t, double s);

// x-projection against the Cauchy weight (1/pi)/(1+x^2), with tail
// correction; returns a function of y.
std::vector<cdouble> heisenberg_p0(const TensorField& f);

// energy fraction of the x spectrum of f on the open positive axis
double positive_x_spectrum_fraction(const TensorField& f);

// projection onto nonpositive x frequencies, columnwise in y
TensorField project_plus_x(const TensorField& f);

struct HeisenbergP0Report {
  double residual = 0.0;       // ||P0(i x f) - P0(f)|| relative to ||f||
  double spectrum_fraction = 0.0;
};

HeisenbergP0Report heisenberg_p0_check(const TensorField& f);

struct CovariantDilationReport {
  double intertwine_residual = 0.0;   // V_a U_t V_a^{-1} vs U_{at}
  double projection_residual = 0.0;   // P_H V_a vs relabeled P_H'
};

// Scaling covariance of the dilation model: V_a maps the space with atoms
// {a lambda_i} onto the base space by x -> a x resampling.
CovariantDilationReport covariant_dilation_check(const SpectralMeasure& rho, double a, double t,
                                                 const std::function<cdouble(double)>& bump);

}  // namespace osq
