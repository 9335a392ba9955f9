#pragma once

#include <optional>
#include <string>

#include "osq/grid.hpp"
#include "osq/spectral_measure.hpp"
#include "osq/types.hpp"

namespace osq {

// Finite-dimensional Hilbert space with a unitary involution theta and a
// distinguished closed subspace spanned by plus_basis. The metric is an
// optional Hermitian positive definite Gram; the inner product is
// <u, v> = v^H M u (linear in the first argument).
class ReflectionSpace {
 public:
  ReflectionSpace(MatC theta, MatC plus_basis, std::optional<MatC> metric = std::nullopt);

  Eigen::Index dim() const { return theta_.rows(); }
  Eigen::Index plus_dim() const { return plus_basis_.cols(); }
  const MatC& theta() const { return theta_; }
  const MatC& plus_basis() const { return plus_basis_; }
  const MatC& metric() const { return metric_; }

  cdouble inner(const VecC& u, const VecC& v) const { return (v.adjoint() * metric_ * u)(0, 0); }
  double norm(const VecC& u) const { return std::sqrt(std::abs(inner(u, u).real())); }

  // twisted Gram G_{jk} = <theta b_j, b_k> over the plus basis
  MatC twisted_gram() const;
  // plain Gram of the plus basis (identity when orthonormal)
  MatC plus_gram() const;

 private:
  MatC theta_;
  MatC plus_basis_;
  MatC metric_;
};

struct PositivityReport {
  double min_eig = 0.0;
  double gram_norm = 0.0;
  bool pass = false;
};

PositivityReport check_theta_positive(const ReflectionSpace& space, double tol_rel = 1e-10);

struct QuotientData {
  MatC twisted_gram;   // k x k Hermitian
  MatC null_basis;     // ambient-coordinates basis of N = E+ cap theta(E+)^perp
  MatC null_coords;    // same, in plus-basis coordinates
  Eigen::Index hat_dim = 0;
  MatC q_matrix;       // hat_dim x k map from E+ coordinates to quotient coordinates
  MatC q_section;      // k x hat_dim right inverse through the retained eigenbasis
  MatC e0_basis;       // ambient-coordinates basis of E0 = E+^theta
  MatC e0_coords;      // same, in plus-basis coordinates
};

QuotientData quotient_space(const ReflectionSpace& space, double tol_rel = 1e-10);

struct StructuralDecomposition {
  bool applicable = false;   // requires q(E0) = E-hat
  std::string diagnostic;    // set when not applicable
  MatC n_basis;
  MatC e0_basis;
  MatC theta_n_basis;
  double ortho_residual = 0.0;
};

StructuralDecomposition structural_decomposition(const ReflectionSpace& space);

struct QuantizedOperator {
  MatC op_hat;       // operator on quotient coordinates
  double norm_hat = 0.0;
  double norm_ambient = 0.0;  // norm of T as an operator on (E+, ambient norm)
  double symmetry_residual = 0.0;
  double null_invariance_residual = 0.0;
};

// OS quantization of an operator T on plus-basis coordinates. The symmetry
// partner U (default U = T) must satisfy <theta T v, w> = <theta v, U w> on
// E+; T must map the null space N into itself.
QuantizedOperator os_quantize(const ReflectionSpace& space, const MatC& T,
                              std::optional<MatC> symmetry_partner = std::nullopt,
                              double tol = 1e-8);

struct MarkovReport {
  bool markov_holds = false;
  bool q_e0_onto = false;
  double markov_residual = 0.0;
  Eigen::Index hat_dim = 0;
  Eigen::Index e0_dim = 0;
};

MarkovReport check_markov(const ReflectionSpace& space, double tol = 1e-8);

struct FixedPointReduction {
  Eigen::Index e_fix_dim = 0;
  Eigen::Index hat_fix_dim = 0;
  double isometry_residual = 0.0;
};

// Splits a measure with an optional atom at zero into a fixed block plus a
// dilation block over the strictly positive atoms, and verifies that the
// quotient map restricted to the fixed block is isometric.
FixedPointReduction reduce_fixed_points(const SpectralMeasure& rho, const Grid& grid);

}  // namespace osq
