#include <cmath>

#include <Eigen/Eigenvalues>

#include "osq/checks.hpp"
#include "osq/kernels.hpp"
#include "osq/quadrature.hpp"

namespace osq {

namespace {

void add(std::vector<CheckDef>& defs, std::string id, std::string anchor,
         std::function<void(const CheckContext&, CheckRecord&)> fn) {
  defs.push_back(CheckDef{std::move(id), "kernels", std::move(anchor), std::move(fn)});
}

MatC scalar(double v) { return (MatC(1, 1) << v).finished(); }

}  // namespace

void register_kernels_checks(std::vector<CheckDef>& defs) {
  add(defs, "kernels.psd_examples", "block kernel positivity on closed-form examples",
      [](const CheckContext&, CheckRecord& rec) {
        bool ok = true;
        {
          FiniteKernel ones{3, 1, MatC::Ones(3, 3)};
          const auto rep = kernel_psd_check(ones);
          ok = ok && rep.psd && std::abs(rep.min_eig) <= 1e-12;
        }
        {
          std::vector<double> pts{0.0, 1.0, 2.0};
          FiniteKernel exp_abs{3, 1, MatC(3, 3)};
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
              exp_abs.values(i, j) = std::exp(-std::abs(pts[static_cast<std::size_t>(i)] -
                                                        pts[static_cast<std::size_t>(j)]));
          ok = ok && kernel_psd_check(exp_abs).psd;
        }
        {
          FiniteKernel bad{2, 1, MatC(2, 2)};
          bad.values << 1, 2, 2, 1;
          const auto rep = kernel_psd_check(bad);
          ok = ok && !rep.psd && std::abs(rep.min_eig + 1.0) <= 1e-12;
        }
        set_flag(rec, ok);
      });

  add(defs, "kernels.gns_reconstruction",
      "GNS factorization: phi(s) agrees with ev pi(s) ev* on sampled shifts",
      [](const CheckContext&, CheckRecord& rec) {
        double worst = 0.0;
        {
          SampledPDFunction f{{0.0, 1.0, 2.0}, Involution::HalfLine, 1,
                              [](double t) { return scalar(std::exp(-t)); }};
          const auto gns = gns_construct(f);
          worst = std::max(worst, gns.reconstruction_residual);
          if (gns.rank != 1 || !gns.iota_surjective) worst = std::max(worst, 1.0);
        }
        {
          SampledPDFunction f{{-2.0, -1.0, 0.0, 1.0, 2.0}, Involution::Group, 1,
                              [](double t) { return scalar(std::exp(-std::abs(t))); }};
          const auto gns = gns_construct(f);
          worst = std::max(worst, gns.reconstruction_residual);
          if (gns.rank <= 1 || gns.iota_surjective) worst = std::max(worst, 1.0);
        }
        {
          SampledPDFunction f{{0.0, 1.0, 2.0}, Involution::HalfLine, 2,
                              [](double) { return MatC(MatC::Identity(2, 2)); }};
          const auto gns = gns_construct(f);
          worst = std::max(worst, gns.reconstruction_residual);
          if (gns.rank != 2 || !gns.iota_surjective) worst = std::max(worst, 1.0);
        }
        set_residual(rec, worst, 1e-8);
      });

  add(defs, "kernels.multiplicativity_dichotomy",
      "the base embedding is onto exactly for multiplicative functions",
      [](const CheckContext&, CheckRecord& rec) {
        bool ok = true;
        {
          SampledPDFunction f{{0.0, 0.5, 1.0, 1.5, 2.0}, Involution::HalfLine, 1,
                              [](double t) { return scalar(std::exp(-2.0 * t)); }};
          const auto m = multiplicativity_check(f);
          ok = ok && m.multiplicative && m.iota_surjective;
        }
        {
          SampledPDFunction f{{-2.0, -1.0, 0.0, 1.0, 2.0}, Involution::Group, 1,
                              [](double t) { return scalar(std::exp(-std::abs(t))); }};
          const auto m = multiplicativity_check(f);
          ok = ok && !m.multiplicative && !m.iota_surjective;
          // the defect shows at mixed signs: phi(1 + (-1)) = 1 vs e^{-2}
          ok = ok && m.max_defect > 0.5;
        }
        {
          SampledPDFunction f{{0.0, 1.0, 2.0}, Involution::HalfLine, 2, [](double t) {
                                MatC m = MatC::Zero(2, 2);
                                m(0, 0) = std::exp(-t);
                                m(1, 1) = std::exp(-3.0 * t);
                                return m;
                              }};
          const auto m = multiplicativity_check(f);
          ok = ok && m.multiplicative && m.iota_surjective;
        }
        set_flag(rec, ok);
      });

  add(defs, "kernels.exp_kernel_designed",
      "exponentiated-form positivity on designed witnesses",
      [](const CheckContext&, CheckRecord& rec) {
        bool ok = true;
        {
          MatC beta(2, 2);
          beta << 1, 1, 1, 1;
          const auto r = exp_kernel_check(beta);
          ok = ok && r.beta_psd && r.exp_beta_psd;
        }
        {
          MatC beta(2, 2);
          beta << 0, 1, 1, 0;
          const auto r = exp_kernel_check(beta);
          // det(e^beta) = 1 - e^2 < 0 at unit scale
          ok = ok && !r.beta_psd && !r.exp_beta_psd && r.witness_value < -1e-3;
        }
        set_flag(rec, ok);
      });

  add(defs, "kernels.exp_kernel_random",
      "positivity of the form and of its exponential agree on random Hermitian forms",
      [](const CheckContext& ctx, CheckRecord& rec) {
        auto rng = ctx.rng("kernels.exp_kernel_random");
        bool agree = true;
        for (int trial = 0; trial < 100; ++trial) {
          MatC beta;
          if (trial % 2 == 0) {
            const MatC a = random_complex_matrix(rng, 4, 4);
            beta = a * a.adjoint();  // PSD
          } else {
            beta = random_hermitian(rng, 4);
            Eigen::SelfAdjointEigenSolver<MatC> es(beta);
            if (es.eigenvalues().minCoeff() > -0.1)
              beta -= (es.eigenvalues().minCoeff() + 0.5) * MatC::Identity(4, 4);
          }
          const auto r = exp_kernel_check(beta);
          agree = agree && (r.beta_psd == r.exp_beta_psd);
          if (!r.beta_psd) agree = agree && r.witness_value < 0.0;
        }
        set_flag(rec, agree);
      });

  add(defs, "kernels.schur_product",
      "positivity is preserved under entrywise products of PSD forms",
      [](const CheckContext& ctx, CheckRecord& rec) {
        auto rng = ctx.rng("kernels.schur_product");
        double worst = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
          const MatC a = random_complex_matrix(rng, 5, 5);
          const MatC b = random_complex_matrix(rng, 5, 5);
          const MatC p = a * a.adjoint();
          const MatC q = b * b.adjoint();
          const MatC schur = p.cwiseProduct(q);
          Eigen::SelfAdjointEigenSolver<MatC> es(0.5 * (schur + MatC(schur.adjoint())));
          worst = std::min(worst, es.eigenvalues().minCoeff() /
                                      std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff()));
        }
        set_residual(rec, std::max(0.0, -worst), 1e-10);
      });

  add(defs, "kernels.pushforward_temperedness",
      "pushforward temperedness on the canonical measure families",
      [](const CheckContext&, CheckRecord& rec) {
        bool ok = true;
        {
          PushforwardMeasure mu{MeasureFamily::FiniteAtoms, {{0.0, 1.0}, {3.0, 2.0}}};
          const auto r = pushforward_temperedness(mu, [](double x) { return x; });
          ok = ok && r.tempered && r.witness_n == 0;
        }
        {
          PushforwardMeasure mu{MeasureFamily::LebesgueLine, {}};
          const auto r = pushforward_temperedness(mu, [](double x) { return x; });
          ok = ok && r.tempered && r.witness_n == 1;
        }
        {
          PushforwardMeasure mu{MeasureFamily::ExpSqrtDensity, {}};
          const auto r = pushforward_temperedness(mu, [](double x) { return x; });
          ok = ok && !r.tempered;
        }
        set_flag(rec, ok);
      });

  add(defs, "kernels.lebesgue_witness_value",
      "the first tempering witness integral evaluates to pi",
      [](const CheckContext&, CheckRecord& rec) {
        const double v = integrate_real_line([](double x) { return 1.0 / (1.0 + x * x); }, 1e-12);
        set_result(rec, v, kPi, 1e-8);
      });
}

}  // namespace osq
