#pragma once

#include <vector>

#include "osq/grid.hpp"
#include "osq/quadrature.hpp"
#include "osq/types.hpp"

namespace osq {

// Function on [0, infinity) sampled on a composite Gauss-Legendre rule.
struct HalfLineFunction {
  HalfLineRule rule;
  std::vector<cdouble> values;

  static HalfLineRule default_rule();
  static HalfLineFunction from_function(const std::function<cdouble(double)>& f,
                                        HalfLineRule rule = default_rule());
};

// Reproducing kernel of the right half plane, K(z, w) = 1/(z + conj(w)).
cdouble hardy_kernel(cdouble z, cdouble w);

// L(f)(z) = Int_0^inf f(x) e^{-zx} dx for Re z > 0.
cdouble laplace_unitary(const HalfLineFunction& f, cdouble z);

// samples of (U_t f)(x) = f(x - t), extended by zero, t >= 0
HalfLineFunction shift_half_line(const HalfLineFunction& f, double t);

struct HardyThetaReport {
  double lhs = 0.0;  // <f, theta f> via the Fourier-side multiplier
  double rhs = 0.0;  // 2 lambda |L(f)(lambda)|^2
};

// Verifies the positivity identity behind the theta-positivity of
// L^2(R_+): both sides are computed by independent routes. The multiplier
// route embeds f into a uniform grid (half-value at the jump node 0) and
// splits off the exponential part c e^{-lambda x} with c = f(0) so that
// every Fourier-side piece converges fast.
HardyThetaReport hardy_theta_check(const HalfLineFunction& f, double lambda,
                                   double half_width = 64.0, std::size_t n = 1 << 16);

// Relative band-limited residual of m_lambda(xi) F(e^lambda)(-xi) against
// F(e^lambda)(xi); the transform uses an endpoint Euler-Maclaurin corrected
// trapezoid; the comparison window is |xi| <= Xi/4.
double theta_fixed_exponential_residual(double lambda, double half_width = 64.0,
                                        std::size_t n = 1 << 16);

// Numerical dimension of the theta-fixed subspace of a sampled model of
// L^2(R_+) (span of decaying basis functions), at the given eigenvalue
// threshold.
int theta_fixed_subspace_dimension(double lambda, int basis_size, double threshold = 1e-6,
                                   double half_width = 64.0, std::size_t n = 1 << 16);

cdouble hardy_multiplier(double lambda, double xi);

}  // namespace osq
