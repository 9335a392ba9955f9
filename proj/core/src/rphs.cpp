#include "osq/rphs.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "osq/dilation.hpp"

namespace osq {

namespace {

double op_norm(const MatC& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<MatC> svd(a);
  return svd.singularValues()(0);
}

}  // namespace

ReflectionSpace::ReflectionSpace(MatC theta, MatC plus_basis, std::optional<MatC> metric)
    : theta_(std::move(theta)), plus_basis_(std::move(plus_basis)) {
  const Eigen::Index n = theta_.rows();
  if (theta_.cols() != n) throw std::invalid_argument("ReflectionSpace: theta must be square");
  if (plus_basis_.rows() != n) throw std::invalid_argument("ReflectionSpace: plus basis dimension mismatch");
  metric_ = metric ? std::move(*metric) : MatC(MatC::Identity(n, n));
  if (metric_.rows() != n || metric_.cols() != n)
    throw std::invalid_argument("ReflectionSpace: metric dimension mismatch");

  const double scale = std::max(1.0, metric_.norm());
  if ((metric_ - metric_.adjoint()).norm() > 1e-10 * scale)
    throw std::invalid_argument("ReflectionSpace: metric must be Hermitian");
  // theta unitary w.r.t. the metric and involutive
  if ((theta_.adjoint() * metric_ * theta_ - metric_).norm() > 1e-8 * scale)
    throw std::invalid_argument("ReflectionSpace: theta is not metric-unitary");
  if ((theta_ * theta_ - MatC::Identity(n, n)).norm() > 1e-8 * std::max(1.0, theta_.norm()))
    throw std::invalid_argument("ReflectionSpace: theta is not involutive");
  // columns orthonormal in the metric
  MatC gram = plus_basis_.adjoint() * metric_ * plus_basis_;
  if ((gram - MatC::Identity(gram.rows(), gram.cols())).norm() > 1e-8)
    throw std::invalid_argument("ReflectionSpace: plus basis must be metric-orthonormal");
}

MatC ReflectionSpace::twisted_gram() const {
  // G_{jk} = <theta b_j, b_k> = b_k^H M theta b_j
  MatC g = (plus_basis_.adjoint() * metric_ * theta_ * plus_basis_).transpose();
  // Hermitian up to round-off because theta^H M = M theta; symmetrize.
  return 0.5 * (g + MatC(g.adjoint()));
}

MatC ReflectionSpace::plus_gram() const { return plus_basis_.adjoint() * metric_ * plus_basis_; }

PositivityReport check_theta_positive(const ReflectionSpace& space, double tol_rel) {
  const MatC g = space.twisted_gram();
  Eigen::SelfAdjointEigenSolver<MatC> es(g);
  PositivityReport rep;
  rep.gram_norm = g.size() == 0 ? 0.0 : es.eigenvalues().cwiseAbs().maxCoeff();
  rep.min_eig = g.size() == 0 ? 0.0 : es.eigenvalues().minCoeff();
  rep.pass = rep.min_eig >= -tol_rel * std::max(1.0, rep.gram_norm);
  return rep;
}

QuotientData quotient_space(const ReflectionSpace& space, double tol_rel) {
  const auto rep = check_theta_positive(space, tol_rel);
  if (!rep.pass) throw std::runtime_error("quotient_space: theta-positivity fails on E+");

  const MatC g = space.twisted_gram();
  Eigen::SelfAdjointEigenSolver<MatC> es(g);
  const double cutoff = tol_rel * std::max(1.0, rep.gram_norm);

  QuotientData out;
  out.twisted_gram = g;
  const Eigen::Index k = g.rows();
  std::vector<Eigen::Index> keep, null;
  for (Eigen::Index i = 0; i < k; ++i) {
    if (es.eigenvalues()(i) > cutoff) keep.push_back(i);
    else null.push_back(i);
  }
  out.hat_dim = static_cast<Eigen::Index>(keep.size());
  out.q_matrix = MatC(out.hat_dim, k);
  out.q_section = MatC(k, out.hat_dim);
  for (Eigen::Index r = 0; r < out.hat_dim; ++r) {
    const double lam = es.eigenvalues()(keep[static_cast<std::size_t>(r)]);
    const VecC v = es.eigenvectors().col(keep[static_cast<std::size_t>(r)]);
    out.q_matrix.row(r) = std::sqrt(lam) * v.adjoint();
    out.q_section.col(r) = v / std::sqrt(lam);
  }
  out.null_coords = MatC(k, static_cast<Eigen::Index>(null.size()));
  for (std::size_t c = 0; c < null.size(); ++c) out.null_coords.col(static_cast<Eigen::Index>(c)) = es.eigenvectors().col(null[c]);
  out.null_basis = space.plus_basis() * out.null_coords;

  // E0 = theta-fixed vectors inside E+: kernel of (theta - I) B
  const MatC fix = (space.theta() - MatC::Identity(space.dim(), space.dim())) * space.plus_basis();
  Eigen::JacobiSVD<MatC> svd(fix, Eigen::ComputeFullV);
  const double smax = svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
  const double fix_cut = 1e-8 * std::max(1.0, smax);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > fix_cut) ++rank;
  const Eigen::Index e0_dim = k - rank;
  out.e0_coords = svd.matrixV().rightCols(e0_dim);
  out.e0_basis = space.plus_basis() * out.e0_coords;
  return out;
}

StructuralDecomposition structural_decomposition(const ReflectionSpace& space) {
  const QuotientData q = quotient_space(space);
  StructuralDecomposition out;
  if (q.hat_dim != q.e0_coords.cols()) {
    out.applicable = false;
    out.diagnostic = "q(E0) != E-hat (hat_dim " + std::to_string(q.hat_dim) + ", dim E0 " +
                     std::to_string(q.e0_coords.cols()) + ")";
    return out;
  }
  out.applicable = true;
  out.n_basis = q.null_basis;
  out.e0_basis = q.e0_basis;
  out.theta_n_basis = space.theta() * q.null_basis;

  auto block_inner = [&](const MatC& a, const MatC& b) -> double {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < a.cols(); ++i) {
      const double ni = space.norm(a.col(i));
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        const double nj = space.norm(b.col(j));
        if (ni == 0.0 || nj == 0.0) continue;
        worst = std::max(worst, std::abs(space.inner(a.col(i), b.col(j))) / (ni * nj));
      }
    }
    return worst;
  };
  out.ortho_residual = std::max({block_inner(out.n_basis, out.e0_basis),
                                 block_inner(out.n_basis, out.theta_n_basis),
                                 block_inner(out.e0_basis, out.theta_n_basis)});
  return out;
}

QuantizedOperator os_quantize(const ReflectionSpace& space, const MatC& T,
                              std::optional<MatC> symmetry_partner, double tol) {
  const Eigen::Index k = space.plus_dim();
  if (T.rows() != k || T.cols() != k)
    throw std::invalid_argument("os_quantize: operator must act on E+ coordinates");
  const MatC U = symmetry_partner ? *symmetry_partner : T;
  const MatC g = space.twisted_gram();
  const double scale = std::max(1.0, g.norm()) * std::max(1.0, T.norm());

  QuantizedOperator out;
  out.symmetry_residual = (g * T - U.adjoint() * g).norm() / scale;
  if (out.symmetry_residual > tol)
    throw std::invalid_argument("os_quantize: symmetry relation <theta T v, w> = <theta v, U w> fails");

  const QuotientData q = quotient_space(space);
  if (q.null_coords.cols() > 0) {
    out.null_invariance_residual = (q.q_matrix * T * q.null_coords).norm() / std::max(1.0, T.norm());
    if (out.null_invariance_residual > tol)
      throw std::invalid_argument("os_quantize: T does not preserve the null space N");
  }
  out.op_hat = q.q_matrix * T * q.q_section;
  out.norm_hat = op_norm(out.op_hat);
  out.norm_ambient = op_norm(T);  // plus basis is metric-orthonormal
  return out;
}

MarkovReport check_markov(const ReflectionSpace& space, double tol) {
  const auto rep = check_theta_positive(space);
  if (!rep.pass) throw std::runtime_error("check_markov: theta-positivity fails on E+");
  const QuotientData q = quotient_space(space);

  MarkovReport out;
  out.hat_dim = q.hat_dim;
  out.e0_dim = q.e0_coords.cols();
  out.q_e0_onto = (out.hat_dim == out.e0_dim);

  // orthogonal projections (metric inner product) onto E+, E0, theta(E+)
  const MatC& M = space.metric();
  auto projector = [&](const MatC& basis) -> MatC {
    if (basis.cols() == 0) return MatC::Zero(space.dim(), space.dim());
    const MatC gram = basis.adjoint() * M * basis;
    return basis * gram.ldlt().solve(MatC(basis.adjoint() * M));
  };
  const MatC p_plus = projector(space.plus_basis());
  const MatC p_zero = projector(q.e0_basis);
  const MatC p_minus = projector(space.theta() * space.plus_basis());
  const MatC lhs = p_plus * p_zero * p_minus;
  const MatC rhs = p_plus * p_minus;
  out.markov_residual = op_norm(lhs - rhs);
  out.markov_holds = out.markov_residual <= tol;
  return out;
}

FixedPointReduction reduce_fixed_points(const SpectralMeasure& rho, const Grid& grid) {
  FixedPointReduction out;
  out.e_fix_dim = rho.has_zero_atom() ? 1 : 0;
  out.hat_fix_dim = out.e_fix_dim;
  out.isometry_residual = 0.0;

  const auto positive = rho.positive_atoms();
  if (!positive.empty()) {
    // the dilation block contributes no fixed vectors; verify that the
    // twisted form evaluates to the plain norm on the embedded constants
    DilationSpace dil(SpectralMeasure::from_atoms(positive), grid);
    for (std::size_t i = 0; i < positive.size(); ++i) {
      VecC v = VecC::Zero(static_cast<Eigen::Index>(positive.size()));
      v(static_cast<Eigen::Index>(i)) = 1.0;
      DilationVector f = dil.embed(v);
      const double lhs = dil.inner(dil.reflect(f), f).real();
      const double rhs = dil.inner(f, f).real();
      out.isometry_residual = std::max(out.isometry_residual, std::abs(lhs - rhs));
    }
  }
  if (out.e_fix_dim == 1) {
    // the fixed block is a one-dimensional summand on which theta acts as
    // the identity, so q is exactly isometric there
    out.isometry_residual = std::max(out.isometry_residual, 0.0);
  }
  return out;
}

}  // namespace osq
