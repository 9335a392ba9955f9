#include "osq/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "osq/quadrature.hpp"

namespace osq {

PsdReport kernel_psd_check(const FiniteKernel& k, double tol_rel) {
  if (k.values.rows() != k.points * k.block || k.values.cols() != k.points * k.block)
    throw std::invalid_argument("kernel_psd_check: dimension mismatch");
  if ((k.values - k.values.adjoint()).norm() > 1e-10 * std::max(1.0, k.values.norm()))
    throw std::invalid_argument("kernel_psd_check: kernel is not Hermitian symmetric");
  Eigen::SelfAdjointEigenSolver<MatC> es(k.values);
  PsdReport out;
  out.min_eig = es.eigenvalues().minCoeff();
  out.norm = es.eigenvalues().cwiseAbs().maxCoeff();
  out.psd = out.min_eig >= -tol_rel * std::max(1.0, out.norm);
  return out;
}

namespace {

double star(Involution inv, double s) { return inv == Involution::HalfLine ? s : -s; }

Eigen::Index find_element(const std::vector<double>& els, double s) {
  for (std::size_t i = 0; i < els.size(); ++i)
    if (std::abs(els[i] - s) < 1e-12) return static_cast<Eigen::Index>(i);
  return -1;
}

}  // namespace

FiniteKernel pd_kernel(const SampledPDFunction& f) {
  const Eigen::Index n = static_cast<Eigen::Index>(f.elements.size());
  FiniteKernel k;
  k.points = n;
  k.block = f.block;
  k.values.resize(n * f.block, n * f.block);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      k.values.block(i * f.block, j * f.block, f.block, f.block) =
          f.phi(f.elements[static_cast<std::size_t>(i)] +
                star(f.involution, f.elements[static_cast<std::size_t>(j)]));
  return k;
}

GnsData gns_construct(const SampledPDFunction& f, double tol_rel) {
  const Eigen::Index id = find_element(f.elements, 0.0);
  if (id < 0) throw std::invalid_argument("gns_construct: samples must contain the identity 0");
  FiniteKernel kern = pd_kernel(f);
  PsdReport rep = kernel_psd_check(kern, 1e-8);
  if (!rep.psd) throw std::invalid_argument("gns_construct: kernel is not positive definite");

  GnsData out;
  out.gram = 0.5 * (kern.values + MatC(kern.values.adjoint()));
  Eigen::SelfAdjointEigenSolver<MatC> es(out.gram);
  const double cut = tol_rel * std::max(1.0, rep.norm);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > cut) keep.push_back(i);
  out.rank = static_cast<Eigen::Index>(keep.size());
  out.features.resize(out.rank, out.gram.rows());
  for (std::size_t r = 0; r < keep.size(); ++r)
    out.features.row(static_cast<Eigen::Index>(r)) =
        std::sqrt(es.eigenvalues()(keep[r])) * es.eigenvectors().col(keep[r]).adjoint();
  out.iota = out.features.block(0, id * f.block, out.rank, f.block);
  out.iota_surjective = (out.rank == f.block);

  // representation on sampled shifts: pi(s) maps the feature of element t
  // to the feature of t + s; reconstruct phi(s) = iota^* pi(s) iota
  out.reconstruction_residual = 0.0;
  for (double s : f.elements) {
    if (s == 0.0) continue;
    std::vector<std::pair<Eigen::Index, Eigen::Index>> moves;
    for (std::size_t t = 0; t < f.elements.size(); ++t) {
      const Eigen::Index target = find_element(f.elements, f.elements[t] + s);
      if (target >= 0) moves.emplace_back(static_cast<Eigen::Index>(t), target);
    }
    if (moves.empty()) continue;
    MatC from(out.rank, static_cast<Eigen::Index>(moves.size()) * f.block);
    MatC to(out.rank, static_cast<Eigen::Index>(moves.size()) * f.block);
    for (std::size_t q = 0; q < moves.size(); ++q) {
      from.block(0, static_cast<Eigen::Index>(q) * f.block, out.rank, f.block) =
          out.features.block(0, moves[q].first * f.block, out.rank, f.block);
      to.block(0, static_cast<Eigen::Index>(q) * f.block, out.rank, f.block) =
          out.features.block(0, moves[q].second * f.block, out.rank, f.block);
    }
    // least-squares representation matrix acting on the rank space
    MatC pi = from.transpose().fullPivHouseholderQr().solve(to.transpose()).transpose();
    const MatC recon = out.iota.adjoint() * pi * out.iota;
    out.reconstruction_residual =
        std::max(out.reconstruction_residual, (recon - f.phi(s)).norm());
  }
  return out;
}

MultiplicativityReport multiplicativity_check(const SampledPDFunction& f, double tol) {
  GnsData gns = gns_construct(f);
  MultiplicativityReport out;
  out.iota_surjective = gns.iota_surjective;
  out.max_defect = 0.0;
  for (double s : f.elements)
    for (double t : f.elements) {
      const MatC defect = f.phi(s + t) - f.phi(s) * f.phi(t);
      out.max_defect = std::max(out.max_defect, defect.norm());
    }
  out.multiplicative = out.max_defect <= tol;
  return out;
}

ExpKernelReport exp_kernel_check(const MatC& beta, double tol_rel) {
  if ((beta - beta.adjoint()).norm() > 1e-10 * std::max(1.0, beta.norm()))
    throw std::invalid_argument("exp_kernel_check: beta must be Hermitian");
  ExpKernelReport out;
  Eigen::SelfAdjointEigenSolver<MatC> es(beta);
  const double norm = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  out.beta_psd = es.eigenvalues().minCoeff() >= -tol_rel * norm;

  out.exp_beta_psd = true;
  out.witness_value = 0.0;
  for (double t : {1.0, 0.5, 0.1, 0.01}) {
    MatC e(beta.rows(), beta.cols());
    for (Eigen::Index i = 0; i < beta.rows(); ++i)
      for (Eigen::Index j = 0; j < beta.cols(); ++j) e(i, j) = std::exp(t * t * beta(i, j));
    Eigen::SelfAdjointEigenSolver<MatC> ee(0.5 * (e + MatC(e.adjoint())));
    const double scale = std::max(1.0, ee.eigenvalues().cwiseAbs().maxCoeff());
    if (ee.eigenvalues().minCoeff() < -tol_rel * scale) out.exp_beta_psd = false;
    // duplicated-points construction: c on the scaled copy, -c on the zero
    // copy gives the quadratic value c^* (e^{t^2 beta} - 1) c
    const VecC c = es.eigenvectors().col(0);  // most negative direction of beta
    const MatC ones = MatC::Ones(beta.rows(), beta.cols());
    const double val = ((c.adjoint() * (e - ones) * c)(0, 0)).real();
    if (val < -tol_rel * scale && val < out.witness_value) {
      out.witness_value = val;
      out.witness_scale = t;
    }
  }
  return out;
}

TemperedPushforward pushforward_temperedness(const PushforwardMeasure& mu,
                                             const std::function<double(double)>& eta) {
  TemperedPushforward out;
  switch (mu.family) {
    case MeasureFamily::FiniteAtoms: {
      double mass = 0.0;
      for (const auto& [x, w] : mu.atoms) {
        (void)eta(x);
        mass += w;
      }
      out.tempered = std::isfinite(mass);
      out.witness_n = 0;
      return out;
    }
    case MeasureFamily::LebesgueLine: {
      for (int n = 0; n <= 8; ++n) {
        if (n == 0) continue;  // infinite mass at n = 0
        const double val = integrate_real_line(
            [&](double x) { const double e = eta(x); return std::pow(1.0 + e * e, -n); }, 1e-10);
        if (std::isfinite(val)) {
          out.tempered = true;
          out.witness_n = n;
          return out;
        }
      }
      return out;
    }
    case MeasureFamily::ExpSqrtDensity:
      // e^{sqrt(x)} dx outgrows every inverse polynomial: not tempered
      out.tempered = false;
      out.witness_n = -1;
      return out;
  }
  return out;
}

}  // namespace osq
