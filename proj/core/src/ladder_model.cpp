#include "osq/ladder_model.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace osq {

namespace {

// metric-orthonormal basis of the span of the given coordinate columns
MatC orthonormalize(const MatC& cols, const MatC& metric) {
  const MatC gram = cols.adjoint() * metric * cols;
  Eigen::SelfAdjointEigenSolver<MatC> es(gram);
  const double cut = 1e-12 * std::max(1.0, es.eigenvalues().maxCoeff());
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > cut) keep.push_back(i);
  MatC out(cols.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c)
    out.col(static_cast<Eigen::Index>(c)) =
        cols * es.eigenvectors().col(keep[c]) / std::sqrt(es.eigenvalues()(keep[c]));
  return out;
}

std::vector<double> full_ladder(const std::vector<double>& nonneg) {
  std::vector<double> ts;
  for (double t : nonneg) {
    if (t < 0.0) throw std::invalid_argument("ladder: entries must be >= 0");
    if (t > 0.0) ts.push_back(-t);
  }
  std::sort(ts.begin(), ts.end());
  std::vector<double> pos = nonneg;
  std::sort(pos.begin(), pos.end());
  ts.insert(ts.end(), pos.begin(), pos.end());
  return ts;
}

MatC flip_matrix(const std::vector<double>& ts) {
  const Eigen::Index n = static_cast<Eigen::Index>(ts.size());
  MatC theta = MatC::Zero(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    // find index of -t_a (ladders are sign-symmetric by construction)
    Eigen::Index b = n - 1 - a;
    theta(b, a) = 1.0;
  }
  return theta;
}

ReflectionSpace build_from_kernel(const std::vector<double>& nonneg,
                                  const std::function<double(double, double)>& kernel) {
  const auto ts = full_ladder(nonneg);
  const Eigen::Index n = static_cast<Eigen::Index>(ts.size());
  MatC metric(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) metric(a, b) = kernel(ts[static_cast<std::size_t>(a)], ts[static_cast<std::size_t>(b)]);
  const MatC theta = flip_matrix(ts);

  // plus span: ladder vectors with t >= 0
  std::size_t first_nonneg = 0;
  while (first_nonneg < ts.size() && ts[first_nonneg] < 0.0) ++first_nonneg;
  MatC cols = MatC::Zero(n, n - static_cast<Eigen::Index>(first_nonneg));
  for (Eigen::Index c = 0; c + static_cast<Eigen::Index>(first_nonneg) < n; ++c)
    cols(c + static_cast<Eigen::Index>(first_nonneg), c) = 1.0;
  return ReflectionSpace(theta, orthonormalize(cols, metric), metric);
}

}  // namespace

ReflectionSpace multiplicity_free_ladder(const SpectralMeasure& rho,
                                         const std::vector<double>& nonneg_ladder) {
  const auto atoms = rho.positive_atoms();
  if (atoms.empty()) throw std::invalid_argument("multiplicity_free_ladder: need positive atoms");
  auto kernel = [atoms](double s, double t) {
    // <U_s 1, U_t 1> = Int Theta(x) e^{i(t-s)x} dx summed over atoms
    double acc = 0.0;
    for (const auto& a : atoms) acc += a.weight * std::exp(-a.lambda * std::abs(t - s));
    return acc;
  };
  return build_from_kernel(nonneg_ladder, kernel);
}

ReflectionSpace dilation_ladder(const SpectralMeasure& rho,
                                const std::vector<double>& nonneg_ladder) {
  const auto atoms = rho.positive_atoms();
  if (atoms.empty()) throw std::invalid_argument("dilation_ladder: need positive atoms");
  const auto ts = full_ladder(nonneg_ladder);
  const Eigen::Index L = static_cast<Eigen::Index>(ts.size());
  const Eigen::Index m = static_cast<Eigen::Index>(atoms.size());
  const Eigen::Index n = L * m;

  MatC metric = MatC::Zero(n, n);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& atom = atoms[static_cast<std::size_t>(i)];
    for (Eigen::Index a = 0; a < L; ++a)
      for (Eigen::Index b = 0; b < L; ++b)
        metric(i * L + a, i * L + b) =
            atom.weight * std::exp(-atom.lambda * std::abs(ts[static_cast<std::size_t>(a)] - ts[static_cast<std::size_t>(b)]));
  }
  MatC theta = MatC::Zero(n, n);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index a = 0; a < L; ++a) theta(i * L + (L - 1 - a), i * L + a) = 1.0;

  std::size_t first_nonneg = 0;
  while (first_nonneg < ts.size() && ts[first_nonneg] < 0.0) ++first_nonneg;
  const Eigen::Index kplus = L - static_cast<Eigen::Index>(first_nonneg);
  MatC cols = MatC::Zero(n, m * kplus);
  Eigen::Index c = 0;
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index a = static_cast<Eigen::Index>(first_nonneg); a < L; ++a)
      cols(i * L + a, c++) = 1.0;
  return ReflectionSpace(theta, orthonormalize(cols, metric), metric);
}

ReflectionSpace hardy_ladder(double lambda, const std::vector<double>& nonneg_ladder) {
  if (!(lambda > 0.0)) throw std::invalid_argument("hardy_ladder: lambda must be positive");
  auto kernel = [lambda](double s, double t) {
    // <U_s e^lambda, U_t e^lambda> = e^{-lambda |s-t|} / (2 lambda)
    return std::exp(-lambda * std::abs(s - t)) / (2.0 * lambda);
  };
  return build_from_kernel(nonneg_ladder, kernel);
}

}  // namespace osq
