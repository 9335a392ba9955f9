#pragma once

#include <functional>
#include <vector>

#include "osq/types.hpp"

namespace osq {

struct QuadratureRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;  // sum to 2
};

// Gauss-Legendre rule with n nodes (Golub-Welsch via Eigen's tridiagonal solver).
const QuadratureRule& gauss_legendre(std::size_t n);

// Composite Gauss-Legendre integration of f over [a, b].
double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    std::size_t panels, std::size_t nodes_per_panel = 10);
cdouble integrate_gl_c(const std::function<cdouble(double)>& f, double a, double b,
                       std::size_t panels, std::size_t nodes_per_panel = 10);

// Adaptive Simpson with Richardson correction.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-10, int max_depth = 28);

// Integral of f over the whole line via the substitution x = tan(theta).
double integrate_real_line(const std::function<double(double)>& f, double tol = 1e-10);

// Semi-infinite integral of a decaying integrand over [a, infinity):
// adaptive on growing panels until the increment falls below tol.
double integrate_to_infinity(const std::function<double(double)>& f, double a,
                             double tol = 1e-11);

// Oscillatory Fourier integral of the Poisson kernel,
//   (1/pi) Int_R e^{-itx} lambda / (lambda^2 + x^2) dx,
// computed by windowed composite Gauss-Legendre panels (panel density scales
// with |t|) plus a two-term integration-by-parts tail correction. Serves as
// the quadrature side of the e^{-lambda |t|} pair.
double poisson_fourier(double lambda, double t);

// Generic windowed oscillatory integral Int_{-X}^{X} g(x) e^{-itx} dx with
// panel density proportional to 1 + |t|.
cdouble oscillatory_window(const std::function<double(double)>& g, double t, double window,
                           double feature_scale = 1.0);

// Gauss-Legendre composite rule on [0, upper] as explicit nodes/weights.
struct HalfLineRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
HalfLineRule half_line_rule(double upper, std::size_t panels, std::size_t nodes_per_panel = 10);

}  // namespace osq
