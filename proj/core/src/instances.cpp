#include "osq/instances.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "osq/fft.hpp"

namespace osq {

ReflectionSpace random_reflection_space(CheckRng& rng, Eigen::Index plus_dim,
                                        Eigen::Index minus_dim, Eigen::Index null_dirs) {
  const Eigen::Index k = plus_dim;
  const Eigen::Index m = std::max(minus_dim, k);
  const Eigen::Index n = k + m;

  // contraction with prescribed singular values; pinned values give N
  MatC u = random_unitary(rng, m);
  MatC v = random_unitary(rng, k);
  MatC sig = MatC::Zero(m, k);
  for (Eigen::Index i = 0; i < k; ++i)
    sig(i, i) = i < null_dirs ? 1.0 : rng.uniform(0.1, 0.9);
  MatC kc = u * sig * v.adjoint();

  MatC braw = MatC::Zero(n, k);
  braw.topRows(k) = MatC::Identity(k, k);
  braw.bottomRows(m) = kc;
  const MatC gram = MatC::Identity(k, k) + kc.adjoint() * kc;
  Eigen::SelfAdjointEigenSolver<MatC> es(gram);
  const MatC gram_inv_sqrt = es.operatorInverseSqrt();

  MatC theta = MatC::Zero(n, n);
  theta.topLeftCorner(k, k) = MatC::Identity(k, k);
  theta.bottomRightCorner(m, m) = -MatC::Identity(m, m);

  const MatC rot = random_unitary(rng, n);
  return ReflectionSpace(rot * theta * rot.adjoint(), rot * braw * gram_inv_sqrt);
}

MatC random_symmetric_operator(CheckRng& rng, const ReflectionSpace& space, double scale) {
  const MatC g = space.twisted_gram();
  Eigen::SelfAdjointEigenSolver<MatC> es(g);
  const double cutoff = 1e-10 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  std::vector<Eigen::Index> keep, nul;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    (es.eigenvalues()(i) > cutoff ? keep : nul).push_back(i);

  const Eigen::Index r = static_cast<Eigen::Index>(keep.size());
  const Eigen::Index z = static_cast<Eigen::Index>(nul.size());
  MatC perm(g.rows(), g.cols());
  for (Eigen::Index i = 0; i < r; ++i) perm.col(i) = es.eigenvectors().col(keep[static_cast<std::size_t>(i)]);
  for (Eigen::Index i = 0; i < z; ++i) perm.col(r + i) = es.eigenvectors().col(nul[static_cast<std::size_t>(i)]);

  VecR lam(r);
  for (Eigen::Index i = 0; i < r; ++i) lam(i) = es.eigenvalues()(keep[static_cast<std::size_t>(i)]);
  const MatC hhat = random_hermitian(rng, r, scale);
  MatC tprime = MatC::Zero(g.rows(), g.cols());
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j)
      tprime(i, j) = hhat(i, j) * std::sqrt(lam(j) / lam(i));
  if (z > 0) {
    tprime.block(r, 0, z, r) = random_complex_matrix(rng, z, r, scale);
    tprime.block(r, r, z, z) = random_complex_matrix(rng, z, z, scale);
  }
  return perm * tprime * perm.adjoint();
}

InvolutiveUnitaryInstance random_involutive_unitary(CheckRng& rng, int fixed_dim, int flip_dim,
                                                    int rotation_pairs) {
  const Eigen::Index m = fixed_dim + flip_dim + 2 * rotation_pairs;
  const Eigen::Index n = 2 * m;

  MatC a = MatC::Zero(m, m);
  MatC s = MatC::Zero(m, m);
  Eigen::Index pos = 0;
  {
    // block with A = I and a strictly accretive S
    const Eigen::Index d = fixed_dim;
    if (d > 0) {
      MatC w = random_complex_matrix(rng, d, d);
      a.block(pos, pos, d, d) = MatC::Identity(d, d);
      s.block(pos, pos, d, d) = w * w.adjoint() + 0.2 * MatC::Identity(d, d) +
                                cdouble(0.0, 1.0) * random_hermitian(rng, d);
      pos += d;
    }
  }
  {
    // block with A = -I
    const Eigen::Index d = flip_dim;
    if (d > 0) {
      MatC w = random_complex_matrix(rng, d, d);
      a.block(pos, pos, d, d) = -MatC::Identity(d, d);
      s.block(pos, pos, d, d) = w * w.adjoint() + 0.2 * MatC::Identity(d, d) +
                                cdouble(0.0, 1.0) * random_hermitian(rng, d);
      pos += d;
    }
  }
  for (int p = 0; p < rotation_pairs; ++p) {
    // rotation pair: contributes only null directions to E+
    const double phi = rng.uniform(0.2, 3.0);
    const cdouble alpha = rng.complex_normal();
    a(pos, pos) = std::exp(cdouble(0.0, phi));
    a(pos + 1, pos + 1) = std::exp(cdouble(0.0, -phi));
    s(pos, pos + 1) = alpha;
    s(pos + 1, pos) = -std::conj(alpha);
    pos += 2;
  }

  MatC theta = MatC::Zero(n, n);
  theta.block(0, m, m, m) = MatC::Identity(m, m);
  theta.block(m, 0, m, m) = MatC::Identity(m, m);

  MatC braw = MatC::Zero(n, m);
  braw.topRows(m) = MatC::Identity(m, m);
  braw.bottomRows(m) = s;
  const MatC gram = MatC::Identity(m, m) + s.adjoint() * s;
  Eigen::SelfAdjointEigenSolver<MatC> es(gram);

  const MatC rot = random_unitary(rng, n);
  InvolutiveUnitaryInstance out{
      ReflectionSpace(rot * theta * rot.adjoint(), rot * braw * es.operatorInverseSqrt()),
      MatC()};
  // in plus-basis coordinates U acts by A (A commutes with I + S^* S)
  out.unitary_plus = es.operatorInverseSqrt() * a * es.operatorSqrt();
  return out;
}

DilationVector random_plus_vector(CheckRng& rng, const DilationSpace& space) {
  const Grid& g = space.grid();
  const Grid dual = dual_grid(g);
  DilationVector out = space.zero();
  for (Eigen::Index i = 0; i < space.h_dim(); ++i) {
    ComplexSamples hat{dual, std::vector<cdouble>(dual.size(), cdouble(0.0, 0.0))};
    const int bumps = rng.uniform_int(1, 3);
    for (int b = 0; b < bumps; ++b) {
      const double center = -rng.uniform(1.0, 6.0);
      const double width = rng.uniform(0.1, 0.3);
      const cdouble amp = rng.complex_normal();
      for (std::size_t kk = 0; kk < dual.size(); ++kk) {
        const double xi = dual.node(kk);
        if (xi > 0.0) continue;
        const double u = (xi - center) / width;
        if (std::abs(u) < 12.0) hat.values[kk] += amp * std::exp(-0.5 * u * u);
      }
    }
    ComplexSamples x = fourier_transform(hat, true);
    for (std::size_t j = 0; j < g.size(); ++j)
      out.values(static_cast<Eigen::Index>(j), i) = x.values[j];
  }
  const double nrm = space.norm(out);
  if (nrm > 0.0) out.values /= nrm;
  return out;
}

}  // namespace osq
