#pragma once

#include <utility>
#include <vector>

#include "osq/grid.hpp"
#include "osq/spectral_measure.hpp"
#include "osq/types.hpp"

namespace osq {

class DilationSpace;

// Element of the discretized L^2(R, Q; H): complex samples indexed by
// (grid node, atom).
struct DilationVector {
  const DilationSpace* space = nullptr;
  MatC values;  // grid.size() x h_dim
};

// Discretization of the vector-valued L^2 space carrying the minimal
// unitary dilation of the hermitian contraction semigroup e^{-tA}, where A
// is diagonal with the measure's atoms as eigenvalues. The density is
//   q(x, lambda) = (1/pi) lambda / (lambda^2 + x^2),
// of unit mass per atom, and the one-parameter group acts by
// (U_t f)(x) = e^{-itx} f(x) with the reflection (theta f)(x) = f(-x).
class DilationSpace {
 public:
  DilationSpace(SpectralMeasure rho, Grid grid);

  const Grid& grid() const { return grid_; }
  const SpectralMeasure& rho() const { return rho_; }
  Eigen::Index h_dim() const { return static_cast<Eigen::Index>(atoms_.size()); }
  const std::vector<Atom>& atoms() const { return atoms_; }
  double density(std::size_t node, std::size_t atom) const { return density_(static_cast<Eigen::Index>(node), static_cast<Eigen::Index>(atom)); }
  // per-atom quadrature mass including the analytic arctan tail
  double atom_mass(std::size_t atom) const;

  DilationVector embed(const VecC& v) const;  // constants from H
  DilationVector zero() const;

  cdouble inner(const DilationVector& f, const DilationVector& g) const;
  double norm(const DilationVector& f) const;
  // inner product on H = l^2 with the atom weights
  cdouble inner_h(const VecC& u, const VecC& v) const;
  double norm_h(const VecC& u) const;

  DilationVector evolve(const DilationVector& f, double t) const;
  DilationVector reflect(const DilationVector& f) const;

  // P_H f with the boundary-mean tail correction (exact on constants)
  VecC project_to_h(const DilationVector& f) const;

  // P_H U_t restricted to the embedded copy of H, as an h_dim x h_dim
  // matrix; the x-quadrature carries an oscillatory tail correction.
  MatC compressed_evolution(double t) const;

 private:
  SpectralMeasure rho_;
  Grid grid_;
  std::vector<Atom> atoms_;
  MatR density_;  // grid.size() x h_dim
};

struct CheckOutcome {
  double computed = 0.0;
  double expected = 0.0;
  double residual = 0.0;
  bool pass = false;
};

// Residual of P_H U_t iota against diag(e^{-lambda_i t}) in the max norm.
CheckOutcome verify_semigroup_identity(const DilationSpace& space, double t, double tol = 1e-4);

using IntervalUnion = std::vector<std::pair<double, double>>;

struct SpectralMembership {
  double outside_energy_fraction = 0.0;
  bool member = false;
};

// Tests whether the distributional Fourier support of f lies in -F (so the
// time-zero subspace is F = {0} and the positive subspace is F = [0, inf)).
SpectralMembership spectral_membership(const DilationVector& f, const IntervalUnion& F,
                                       double tol = 1e-8);

// Orthogonal projection onto the spectral subspace for F = [0, inf):
// zeroes the open positive frequency half-line per atom.
DilationVector project_plus(const DilationVector& f);

struct ThetaEnergy {
  cdouble lhs;   // <theta f, f>
  double rhs;    // ||P_H f||^2
  bool in_plus = false;
};

ThetaEnergy theta_energy(const DilationVector& f);

// Outgoing realization S = F^{-1} T with (Tf)(x) = (1/sqrt(pi)) sqrt(A) (A + ix)^{-1} f(x).
// Returns one translation-variable sample set per atom, on the dual grid.
std::vector<ComplexSamples> outgoing_transform(const DilationVector& f);

// Norm of an outgoing image in the plain L^2(R, H) norm (trapezoid in the
// translation variable, atom weights in H).
double outgoing_norm(const DilationSpace& space, const std::vector<ComplexSamples>& sf);

// Pointwise evaluation of (S iota(v))_atom at translation time tau by
// direct oscillatory quadrature (independent of the FFT path).
cdouble outgoing_constant_value(const DilationSpace& space, std::size_t atom, double tau);

// Hardy-side involution (theta-tilde f)(x) = m_lambda(x) f(-x) with
// m_lambda(x) = (lambda - ix)/(lambda + ix), acting on uniform-grid samples.
std::vector<cdouble> twisted_involution(const Grid& grid, const std::vector<cdouble>& samples,
                                        double lambda);

}  // namespace osq
