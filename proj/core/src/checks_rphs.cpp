#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "osq/checks.hpp"
#include "osq/fft.hpp"
#include "osq/hardy.hpp"
#include "osq/instances.hpp"
#include "osq/ladder_model.hpp"
#include "osq/rphs.hpp"

namespace osq {

namespace {

void add(std::vector<CheckDef>& defs, std::string id, std::string anchor,
         std::function<void(const CheckContext&, CheckRecord&)> fn) {
  defs.push_back(CheckDef{std::move(id), "rphs", std::move(anchor), std::move(fn)});
}

std::vector<double> ladder9() { return {0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0}; }

// Hardy space model on a uniform grid: a family of decaying functions on
// the half line spanned together with its theta image, theta acting as the
// Fourier multiplier m_lambda.
ReflectionSpace hardy_grid_space(double lambda, int basis_size) {
  Grid g = Grid::uniform(64.0, 1 << 14);
  const Grid dual = dual_grid(g);
  std::vector<std::vector<cdouble>> hats;
  {
    ComplexSamples s{g, std::vector<cdouble>(g.size(), cdouble(0.0, 0.0))};
    for (std::size_t j = 0; j < g.size(); ++j) {
      const double x = g.node(j);
      if (x > 0.0) s.values[j] = std::exp(-lambda * x);
      else if (x == 0.0) s.values[j] = 0.5;
    }
    hats.push_back(fourier_transform(s).values);
  }
  for (int b = 1; b < basis_size; ++b) {
    const double center = 1.0 + 1.25 * static_cast<double>(b - 1);
    ComplexSamples s{g, std::vector<cdouble>(g.size(), cdouble(0.0, 0.0))};
    for (std::size_t j = 0; j < g.size(); ++j) {
      const double x = g.node(j);
      if (x > 0.0) s.values[j] = x * std::exp(-0.6 * (x - center) * (x - center));
    }
    hats.push_back(fourier_transform(s).values);
  }
  // apply theta on the Fourier side to double the family
  const int m = basis_size;
  std::vector<std::vector<cdouble>> all = hats;
  for (int b = 0; b < m; ++b) {
    std::vector<cdouble> th(dual.size());
    for (std::size_t k = 0; k < dual.size(); ++k)
      th[k] = hardy_multiplier(lambda, dual.node(k)) * hats[static_cast<std::size_t>(b)][dual.reflect_index(k)];
    all.push_back(std::move(th));
  }
  const Eigen::Index n = static_cast<Eigen::Index>(all.size());
  MatC metric(n, n);
  const double dxi = dual.spacing();
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) {
      cdouble acc(0.0, 0.0);
      for (std::size_t k = 0; k < dual.size(); ++k)
        acc += dxi * all[static_cast<std::size_t>(a)][k] * std::conj(all[static_cast<std::size_t>(b)][k]);
      metric(b, a) = acc;  // <phi_a, phi_b> as quadratic-form coefficient
    }
  metric = 0.5 * (metric + MatC(metric.adjoint()));
  // theta swaps the two halves of the family (involution, exact)
  MatC theta = MatC::Zero(n, n);
  theta.block(0, m, m, m) = MatC::Identity(m, m);
  theta.block(m, 0, m, m) = MatC::Identity(m, m);
  // metric-orthonormal basis of the first half
  MatC cols = MatC::Zero(n, m);
  cols.topLeftCorner(m, m) = MatC::Identity(m, m);
  const MatC gram = cols.adjoint() * metric * cols;
  Eigen::SelfAdjointEigenSolver<MatC> es(gram);
  std::vector<Eigen::Index> keep;
  const double cut = 1e-9 * es.eigenvalues().maxCoeff();
  for (Eigen::Index i = 0; i < m; ++i)
    if (es.eigenvalues()(i) > cut) keep.push_back(i);
  MatC basis(n, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c)
    basis.col(static_cast<Eigen::Index>(c)) =
        cols * es.eigenvectors().col(keep[c]) / std::sqrt(es.eigenvalues()(keep[c]));
  return ReflectionSpace(theta, basis, metric);
}

}  // namespace

void register_rphs_checks(std::vector<CheckDef>& defs) {
  add(defs, "rphs.theta_positive_examples",
      "theta-positivity certificates on two-dimensional examples",
      [](const CheckContext&, CheckRecord& rec) {
        // swap involution, E+ = span(e1): <theta e1, e1> = 0
        MatC swap(2, 2);
        swap << 0, 1, 1, 0;
        MatC e1 = MatC::Zero(2, 1);
        e1(0, 0) = 1.0;
        const auto r1 = check_theta_positive(ReflectionSpace(swap, e1));
        // diag(1,-1), E+ = span(e2): min eigenvalue -1, fails
        MatC refl = MatC::Zero(2, 2);
        refl(0, 0) = 1.0;
        refl(1, 1) = -1.0;
        MatC e2 = MatC::Zero(2, 1);
        e2(1, 0) = 1.0;
        const auto r2 = check_theta_positive(ReflectionSpace(refl, e2));
        bool ok = r1.pass && std::abs(r1.min_eig) <= 1e-12;
        ok = ok && !r2.pass && std::abs(r2.min_eig + 1.0) <= 1e-12;
        set_flag(rec, ok);
      });

  add(defs, "rphs.hardy_grid_positivity",
      "theta-positivity of the sampled half-line space under the Hardy multiplier",
      [](const CheckContext&, CheckRecord& rec) {
        double worst = 0.0;
        for (double lam : {0.5, 1.0, 2.0}) {
          const auto rep = check_theta_positive(hardy_grid_space(lam, 6), 1e-7);
          worst = std::min(worst, rep.min_eig / std::max(1.0, rep.gram_norm));
        }
        set_residual(rec, std::max(0.0, -worst), 1e-8);
      });

  add(defs, "rphs.quotient_examples", "quotient constructions on closed-form examples",
      [](const CheckContext& ctx, CheckRecord& rec) {
        double worst = 0.0;
        // identity involution: N = 0, q unitary
        auto rng = ctx.rng("rphs.quotient_examples");
        {
          const Eigen::Index n = 4, k = 2;
          MatC basis = random_complex_matrix(rng, n, k);
          Eigen::HouseholderQR<MatC> qr(basis);
          MatC q = MatC(qr.householderQ()).leftCols(k);
          const auto data = quotient_space(ReflectionSpace(MatC::Identity(n, n), q));
          worst = std::max(worst, static_cast<double>(data.null_coords.cols()));
          worst = std::max(worst, (data.q_matrix.adjoint() * data.q_matrix - MatC::Identity(k, k)).norm());
        }
        // swap involution, E+ = span(e1): totally null
        {
          MatC swap(2, 2);
          swap << 0, 1, 1, 0;
          MatC e1 = MatC::Zero(2, 1);
          e1(0, 0) = 1.0;
          const auto data = quotient_space(ReflectionSpace(swap, e1));
          worst = std::max(worst, std::abs(static_cast<double>(data.hat_dim)));
          worst = std::max(worst, std::abs(static_cast<double>(data.null_coords.cols()) - 1.0));
        }
        // diag(1,-1) with E+ = span((2,1)/sqrt(5)): ||q v||^2 = 3/5
        {
          MatC refl = MatC::Zero(2, 2);
          refl(0, 0) = 1.0;
          refl(1, 1) = -1.0;
          MatC b(2, 1);
          b(0, 0) = 2.0 / std::sqrt(5.0);
          b(1, 0) = 1.0 / std::sqrt(5.0);
          const auto data = quotient_space(ReflectionSpace(refl, b));
          worst = std::max(worst, std::abs(static_cast<double>(data.hat_dim) - 1.0));
          const double qn = (data.q_matrix * VecC::Ones(1)).squaredNorm();
          worst = std::max(worst, std::abs(qn - 3.0 / 5.0));
        }
        set_residual(rec, worst, 1e-10);
      });

  add(defs, "rphs.quotient_form_identity",
      "<q u, q v> = <theta u, v> on the plus space, random instances",
      [](const CheckContext& ctx, CheckRecord& rec) {
        auto rng = ctx.rng("rphs.quotient_form_identity");
        double worst = 0.0;
        for (int trial = 0; trial < 25; ++trial) {
          ReflectionSpace space =
              random_reflection_space(rng, 4 + trial % 3, 5 + trial % 2, trial % 3);
          const auto q = quotient_space(space);
          const MatC lhs = q.q_matrix.adjoint() * q.q_matrix;
          worst = std::max(worst, (lhs - q.twisted_gram).norm() / std::max(1.0, q.twisted_gram.norm()));
          // contractivity of q on random plus vectors
          for (int v = 0; v < 5; ++v) {
            VecC c(space.plus_dim());
            for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = rng.complex_normal();
            const double qv = (q.q_matrix * c).norm();
            worst = std::max(worst, std::max(0.0, qv - c.norm()));
          }
        }
        set_residual(rec, worst, 1e-8);
      });

  add(defs, "rphs.os_contraction_random",
      "quantized operators contract: ||T-hat|| <= ||T|| for symmetric pairs",
      [](const CheckContext& ctx, CheckRecord& rec) {
        auto rng = ctx.rng("rphs.os_contraction_random");
        double worst = 0.0;
        for (int trial = 0; trial < 200; ++trial) {
          ReflectionSpace space =
              random_reflection_space(rng, 3 + trial % 4, 4 + trial % 3, trial % 3);
          const MatC t = random_symmetric_operator(rng, space);
          const auto quant = os_quantize(space, t);
          worst = std::max(worst, quant.norm_hat - quant.norm_ambient);
        }
        set_residual(rec, std::max(0.0, worst), 1e-10);
      });

  add(defs, "rphs.os_quantize_hermitian",
      "symmetric pairs quantize to Hermitian operators",
      [](const CheckContext& ctx, CheckRecord& rec) {
        auto rng = ctx.rng("rphs.os_quantize_hermitian");
        double worst = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
          ReflectionSpace space = random_reflection_space(rng, 4, 5, trial % 3);
          const auto quant = os_quantize(space, random_symmetric_operator(rng, space));
          worst = std::max(worst, (quant.op_hat - MatC(quant.op_hat.adjoint())).norm() /
                                      std::max(1.0, quant.op_hat.norm()));
        }
        set_residual(rec, worst, 1e-10);
      });

  add(defs, "rphs.os_adjoint_pair",
      "a symmetry partner quantizes into the adjoint: U-hat = T-hat^*",
      [](const CheckContext& ctx, CheckRecord& rec) {
        auto rng = ctx.rng("rphs.os_adjoint_pair");
        double worst = 0.0;
        for (int trial = 0; trial < 25; ++trial) {
          ReflectionSpace space = random_reflection_space(rng, 4, 5, 1);
          // build a non-symmetric pair: T with partner U solved from the form
          const MatC g = space.twisted_gram();
          Eigen::SelfAdjointEigenSolver<MatC> es(g);
          const double cut = 1e-10 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
          std::vector<Eigen::Index> keep, nul;
          for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
            (es.eigenvalues()(i) > cut ? keep : nul).push_back(i);
          const Eigen::Index r = static_cast<Eigen::Index>(keep.size());
          const Eigen::Index z = static_cast<Eigen::Index>(nul.size());
          MatC perm(g.rows(), g.cols());
          for (Eigen::Index i = 0; i < r; ++i) perm.col(i) = es.eigenvectors().col(keep[static_cast<std::size_t>(i)]);
          for (Eigen::Index i = 0; i < z; ++i) perm.col(r + i) = es.eigenvectors().col(nul[static_cast<std::size_t>(i)]);
          VecR lam(r);
          for (Eigen::Index i = 0; i < r; ++i) lam(i) = es.eigenvalues()(keep[static_cast<std::size_t>(i)]);
          const MatC ahat = random_complex_matrix(rng, r, r);
          MatC tprime = MatC::Zero(g.rows(), g.cols());
          MatC uprime = MatC::Zero(g.rows(), g.cols());
          for (Eigen::Index i = 0; i < r; ++i)
            for (Eigen::Index j = 0; j < r; ++j) {
              tprime(i, j) = ahat(i, j) * std::sqrt(lam(j) / lam(i));
              uprime(i, j) = std::conj(ahat(j, i)) * std::sqrt(lam(j) / lam(i));
            }
          if (z > 0) {
            tprime.block(r, r, z, z) = random_complex_matrix(rng, z, z);
            uprime.block(r, r, z, z) = random_complex_matrix(rng, z, z);
          }
          const MatC t = perm * tprime * perm.adjoint();
          const MatC u = perm * uprime * perm.adjoint();
          const auto qt = os_quantize(space, t, u);
          const auto qu = os_quantize(space, u, t);
          worst = std::max(worst, (MatC(qt.op_hat.adjoint()) - qu.op_hat).norm() /
                                      std::max(1.0, qt.op_hat.norm()));
        }
        set_residual(rec, worst, 1e-8);
      });

  add(defs, "rphs.involution_quantization",
      "unitaries with theta U theta = U^{-1}, U E+ = E+ quantize to involutions",
      [](const CheckContext& ctx, CheckRecord& rec) {
        auto rng = ctx.rng("rphs.involution_quantization");
        double worst = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
          auto inst = random_involutive_unitary(rng, 2 + trial % 2, 1 + trial % 2, 1 + trial % 2);
          const auto quant = os_quantize(inst.space, inst.unitary_plus, inst.unitary_plus, 1e-7);
          const Eigen::Index r = quant.op_hat.rows();
          worst = std::max(worst, (quant.op_hat * quant.op_hat - MatC::Identity(r, r)).norm());
          worst = std::max(worst, std::max(0.0, quant.norm_hat - 1.0));
        }
        set_residual(rec, worst, 1e-8);
      });

  add(defs, "rphs.unitary_commuting_quantization",
      "unitaries commuting with theta quantize to unitaries",
      [](const CheckContext& ctx, CheckRecord& rec) {
        auto rng = ctx.rng("rphs.unitary_commuting_quantization");
        double worst = 0.0;
        for (int trial = 0; trial < 25; ++trial) {
          // identity involution: E-hat = E+ and T-hat = T
          const Eigen::Index n = 5, k = 3;
          MatC basis = random_complex_matrix(rng, n, k);
          Eigen::HouseholderQR<MatC> qr(basis);
          MatC b = MatC(qr.householderQ()).leftCols(k);
          ReflectionSpace space(MatC::Identity(n, n), b);
          const MatC u = random_unitary(rng, k);
          const auto quant = os_quantize(space, u, MatC(u.adjoint()));
          const Eigen::Index r = quant.op_hat.rows();
          worst = std::max(worst,
                           (quant.op_hat.adjoint() * quant.op_hat - MatC::Identity(r, r)).norm());
        }
        set_residual(rec, worst, 1e-10);
      });

  add(defs, "rphs.markov_dilation",
      "time-zero model: Markov property and q(E_0) = E-hat on the dilation ladder",
      [](const CheckContext& ctx, CheckRecord& rec) {
        const auto mk = check_markov(dilation_ladder(ctx.cfg.rho(), ladder9()));
        set_flag(rec, mk.markov_holds && mk.q_e0_onto);
      });

  add(defs, "rphs.markov_hardy",
      "Hardy ladder: one-dimensional quotient with E_0 = C e^lambda, Markov holds",
      [](const CheckContext&, CheckRecord& rec) {
        const auto mk = check_markov(hardy_ladder(1.0, ladder9()));
        set_flag(rec, mk.markov_holds && mk.q_e0_onto && mk.hat_dim == 1 && mk.e0_dim == 1);
      });

  add(defs, "rphs.markov_multiplicity_free",
      "two-atom multiplicity-free model: both Markov and q(E_0)-onto fail",
      [](const CheckContext&, CheckRecord& rec) {
        const auto mk = check_markov(
            multiplicity_free_ladder(SpectralMeasure::from_atoms({{1.0, 1.0}, {2.0, 1.0}}), ladder9()));
        set_flag(rec, !mk.markov_holds && !mk.q_e0_onto && mk.hat_dim == 2 && mk.e0_dim == 1);
      });

  add(defs, "rphs.markov_flag_equivalence",
      "the Markov condition is equivalent to q(E_0) = E-hat across the instance set",
      [](const CheckContext& ctx, CheckRecord& rec) {
        bool agree = true;
        const std::vector<std::vector<Atom>> instances{
            {{1.0, 1.0}}, {{1.0, 1.0}, {2.0, 1.0}}, {{0.5, 0.7}, {2.0, 1.3}, {4.0, 0.5}}};
        for (const auto& atoms : instances) {
          const auto rho = SpectralMeasure::from_atoms(atoms);
          const auto a = check_markov(dilation_ladder(rho, ladder9()));
          agree = agree && (a.markov_holds == a.q_e0_onto);
          const auto b = check_markov(multiplicity_free_ladder(rho, ladder9()));
          agree = agree && (b.markov_holds == b.q_e0_onto);
        }
        const auto c = check_markov(hardy_ladder(0.5, ladder9()));
        agree = agree && (c.markov_holds == c.q_e0_onto);
        (void)ctx;
        set_flag(rec, agree);
      });

  add(defs, "rphs.structural_decomposition",
      "orthogonal splitting N + E_0 + theta(N) when q(E_0) = E-hat",
      [](const CheckContext& ctx, CheckRecord& rec) {
        double worst = 0.0;
        const auto hardy = structural_decomposition(hardy_ladder(1.0, ladder9()));
        if (!hardy.applicable) throw std::runtime_error("hardy ladder should decompose");
        worst = std::max(worst, hardy.ortho_residual);
        const auto dil = structural_decomposition(dilation_ladder(ctx.cfg.rho(), ladder9()));
        if (!dil.applicable) throw std::runtime_error("dilation ladder should decompose");
        worst = std::max(worst, dil.ortho_residual);
        const auto bad = structural_decomposition(
            multiplicity_free_ladder(SpectralMeasure::from_atoms({{1.0, 1.0}, {2.0, 1.0}}), ladder9()));
        if (bad.applicable || bad.diagnostic.empty())
          throw std::runtime_error("multiplicity-free model must return the diagnostic");
        set_residual(rec, worst, 1e-8);
      });

  add(defs, "rphs.reduce_fixed_points",
      "quantization commutes with reduction: fixed blocks split off isometrically",
      [](const CheckContext& ctx, CheckRecord& rec) {
        const Grid grid = ctx.cfg.grid();
        const auto a = reduce_fixed_points(SpectralMeasure::dirac(0.0), grid);
        const auto b = reduce_fixed_points(
            SpectralMeasure::from_atoms({{0.0, 1.0}, {1.0, 1.0}}), grid);
        const auto c = reduce_fixed_points(SpectralMeasure::dirac(1.0), grid);
        bool ok = a.e_fix_dim == 1 && a.hat_fix_dim == 1 && a.isometry_residual <= 1e-8;
        ok = ok && b.e_fix_dim == 1 && b.hat_fix_dim == 1 && b.isometry_residual <= 1e-8;
        ok = ok && c.e_fix_dim == 0 && c.hat_fix_dim == 0 && c.isometry_residual <= 1e-8;
        set_flag(rec, ok);
      });
}

}  // namespace osq
