#include <cmath>

#include <Eigen/Eigenvalues>

#include "osq/checks.hpp"
#include "osq/dilation.hpp"
#include "osq/instances.hpp"
#include "osq/interp.hpp"
#include "osq/ladder_model.hpp"
#include "osq/quadrature.hpp"

namespace osq {

namespace {

SpectralMeasure wide_atoms() {
  return SpectralMeasure::from_atoms({{0.5, 1.0}, {1.0, 1.0}, {2.0, 1.0}, {5.0, 1.0}});
}

double bin_time(const Grid& g, double t) {
  const double dxi = 2.0 * kPi / (static_cast<double>(g.size()) * g.spacing());
  return std::round(t / dxi) * dxi;
}

void add(std::vector<CheckDef>& defs, std::string id, std::string anchor,
         std::function<void(const CheckContext&, CheckRecord&)> fn) {
  defs.push_back(CheckDef{std::move(id), "dilation", std::move(anchor), std::move(fn)});
}

}  // namespace

void register_dilation_checks(std::vector<CheckDef>& defs) {
  add(defs, "dilation.poisson_fourier_pair",
      "Fourier pair of the Poisson kernel: (1/pi) Int e^{-itx} lam/(lam^2+x^2) dx = e^{-lam|t|}",
      [](const CheckContext&, CheckRecord& rec) {
        double worst = 0.0;
        for (double lam : {0.5, 1.0, 2.0})
          for (double t = -5.0; t <= 5.0 + 1e-12; t += 0.25)
            worst = std::max(worst, std::abs(poisson_fourier(lam, t) - std::exp(-lam * std::abs(t))));
        set_residual(rec, worst, 1e-5);
      });

  add(defs, "dilation.atom_mass", "unit mass of the kernel: Int (1/pi) lam/(lam^2+x^2) dx = 1",
      [](const CheckContext& ctx, CheckRecord& rec) {
        DilationSpace sp(ctx.cfg.rho(), ctx.cfg.grid());
        double worst = 0.0;
        for (Eigen::Index i = 0; i < sp.h_dim(); ++i)
          worst = std::max(worst, std::abs(sp.atom_mass(static_cast<std::size_t>(i)) - 1.0));
        set_residual(rec, worst, 1e-6);
      });

  add(defs, "dilation.embedding_isometry",
      "the inclusion of H as constant functions is isometric",
      [](const CheckContext& ctx, CheckRecord& rec) {
        DilationSpace sp(ctx.cfg.rho(), ctx.cfg.grid());
        auto rng = ctx.rng("dilation.embedding_isometry");
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
          VecC v(sp.h_dim());
          for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.complex_normal();
          const double lhs = sp.norm(sp.embed(v));
          const double rhs = sp.norm_h(v);
          worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, rhs));
        }
        set_residual(rec, worst, 1e-6);
      });

  add(defs, "dilation.group_involution_algebra",
      "theta^2 = id, theta U_t theta = U_{-t}, U_t U_s = U_{t+s} at sample level",
      [](const CheckContext& ctx, CheckRecord& rec) {
        DilationSpace sp(ctx.cfg.rho(), ctx.cfg.grid());
        auto rng = ctx.rng("dilation.group_involution_algebra");
        DilationVector f = random_plus_vector(rng, sp);
        double worst = 0.0;
        auto diff = [&](const DilationVector& a, const DilationVector& b) {
          return (a.values - b.values).cwiseAbs().maxCoeff();
        };
        worst = std::max(worst, diff(sp.reflect(sp.reflect(f)), f));
        worst = std::max(worst, diff(sp.evolve(sp.evolve(f, 1.0), -1.0), f));
        worst = std::max(worst, diff(sp.evolve(sp.evolve(f, 0.7), 0.9), sp.evolve(f, 1.6)));
        worst = std::max(worst, diff(sp.reflect(sp.evolve(sp.reflect(f), 0.8)), sp.evolve(f, -0.8)));
        set_residual(rec, worst, 1e-13);
      });

  add(defs, "dilation.semigroup_identity",
      "dilation identity: C_t = P_H U_t P_H^* with C_t = e^{-tA}",
      [](const CheckContext& ctx, CheckRecord& rec) {
        DilationSpace sp(wide_atoms(), ctx.cfg.grid());
        DilationSpace cfg_sp(ctx.cfg.rho(), ctx.cfg.grid());
        double worst = 0.0;
        for (double t : {0.25, 0.5, 1.0, 2.0, 5.0}) {
          worst = std::max(worst, verify_semigroup_identity(sp, t).residual);
          worst = std::max(worst, verify_semigroup_identity(cfg_sp, t).residual);
        }
        set_residual(rec, worst, 1e-4);
      });

  add(defs, "dilation.semigroup_identity_small_t",
      "strong continuity of the compressed semigroup at t -> 0+",
      [](const CheckContext& ctx, CheckRecord& rec) {
        DilationSpace sp(ctx.cfg.rho(), ctx.cfg.grid());
        set_residual(rec, verify_semigroup_identity(sp, 1e-3, 2e-3).residual, 2e-3);
      });

  add(defs, "dilation.evolved_inner",
      "matrix coefficient <U_t 1, 1> = e^{-lam |t|} (grid-commensurable t near 1)",
      [](const CheckContext& ctx, CheckRecord& rec) {
        DilationSpace sp(SpectralMeasure::dirac(1.0), ctx.cfg.grid());
        const double t = bin_time(sp.grid(), 1.0);
        DilationVector one = sp.embed(VecC::Ones(1));
        const double lhs = sp.inner(sp.evolve(one, t), one).real();
        set_result(rec, lhs, std::exp(-t), 1e-5);
      });

  add(defs, "dilation.spectral_membership",
      "spectral subspaces: E_0 = constants, E_+ = nonpositive-frequency members",
      [](const CheckContext& ctx, CheckRecord& rec) {
        DilationSpace sp(ctx.cfg.rho(), ctx.cfg.grid());
        const double inf = std::numeric_limits<double>::infinity();
        const double t = bin_time(sp.grid(), 1.0);
        DilationVector one = sp.embed(VecC::Ones(sp.h_dim()));
        DilationVector ut = sp.evolve(one, t);
        auto rng = ctx.rng("dilation.spectral_membership");
        DilationVector shifted_bump = sp.evolve(random_plus_vector(rng, sp), -8.0);  // pushed to xi > 0
        bool ok = spectral_membership(one, {{0.0, 0.0}}).member;
        ok = ok && spectral_membership(ut, {{0.0, inf}}).member;
        ok = ok && !spectral_membership(ut, {{0.0, 0.0}}).member;
        ok = ok && !spectral_membership(shifted_bump, {{0.0, inf}}).member;
        // shift covariance: members of E_F move to E_{F+t}
        DilationVector f0 = random_plus_vector(rng, sp);
        DilationVector moved = sp.evolve(f0, bin_time(sp.grid(), 0.5));
        ok = ok && spectral_membership(moved, {{0.5, inf}}).member;
        set_flag(rec, ok);
      });

  add(defs, "dilation.project_plus_idempotent",
      "the positive spectral projection is idempotent",
      [](const CheckContext& ctx, CheckRecord& rec) {
        DilationSpace sp(ctx.cfg.rho(), ctx.cfg.grid());
        auto rng = ctx.rng("dilation.project_plus_idempotent");
        DilationVector f = sp.zero();
        for (Eigen::Index i = 0; i < sp.h_dim(); ++i)
          for (std::size_t j = 0; j < sp.grid().size(); ++j) {
            const double x = sp.grid().node(j);
            f.values(static_cast<Eigen::Index>(j), i) =
                rng.complex_normal() * std::exp(-0.002 * x * x);
          }
        DilationVector p1 = project_plus(f);
        DilationVector p2 = project_plus(p1);
        const double scale = std::max(1.0, p1.values.cwiseAbs().maxCoeff());
        set_residual(rec, (p2.values - p1.values).cwiseAbs().maxCoeff() / scale, 1e-10);
      });

  add(defs, "dilation.project_plus_fixes_members",
      "E_0 and evolved constants (t > 0) already lie in E_+",
      [](const CheckContext& ctx, CheckRecord& rec) {
        DilationSpace sp(ctx.cfg.rho(), ctx.cfg.grid());
        DilationVector one = sp.embed(VecC::Ones(sp.h_dim()));
        double worst = (project_plus(one).values - one.values).cwiseAbs().maxCoeff();
        DilationVector ut = sp.evolve(one, bin_time(sp.grid(), 0.75));
        worst = std::max(worst, (project_plus(ut).values - ut.values).cwiseAbs().maxCoeff());
        set_residual(rec, worst, 1e-8);
      });

  add(defs, "dilation.theta_energy_constants",
      "reflection form on constants: <theta iota(v), iota(v)> = ||v||^2",
      [](const CheckContext& ctx, CheckRecord& rec) {
        DilationSpace sp(ctx.cfg.rho(), ctx.cfg.grid());
        auto rng = ctx.rng("dilation.theta_energy_constants");
        VecC v(sp.h_dim());
        for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.complex_normal();
        auto te = theta_energy(sp.embed(v));
        const double want = sp.norm_h(v) * sp.norm_h(v);
        const double worst =
            std::max(std::abs(te.lhs.real() - want), std::abs(te.rhs - want));
        set_residual(rec, worst / std::max(1.0, want), 1e-5);
      });

  add(defs, "dilation.theta_energy_evolved",
      "reflection form on U_t constants: both sides equal e^{-2 lam t} ||v||^2",
      [](const CheckContext& ctx, CheckRecord& rec) {
        DilationSpace sp(SpectralMeasure::dirac(1.0), ctx.cfg.grid());
        const double t = bin_time(sp.grid(), 1.0);
        auto te = theta_energy(sp.evolve(sp.embed(VecC::Ones(1)), t));
        const double want = std::exp(-2.0 * t);
        const double worst = std::max(std::abs(te.lhs.real() - want), std::abs(te.rhs - want));
        set_residual(rec, worst, 1e-4);
      });

  add(defs, "dilation.theta_energy_random",
      "reflection form on E_+: <theta f, f> = ||P_H f||^2 on projected vectors",
      [](const CheckContext& ctx, CheckRecord& rec) {
        DilationSpace sp(ctx.cfg.rho(), ctx.cfg.grid());
        auto rng = ctx.rng("dilation.theta_energy_random");
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
          DilationVector f = random_plus_vector(rng, sp);
          auto te = theta_energy(f);
          worst = std::max(worst, std::abs(te.lhs.real() - te.rhs) / std::max(1.0, te.rhs));
        }
        set_residual(rec, worst, 1e-4);
      });

  add(defs, "dilation.theta_positivity_random",
      "theta-positivity of E_+: <theta f, f> >= 0 on random members",
      [](const CheckContext& ctx, CheckRecord& rec) {
        DilationSpace sp(ctx.cfg.rho(), ctx.cfg.grid());
        auto rng = ctx.rng("dilation.theta_positivity_random");
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
          DilationVector f = random_plus_vector(rng, sp);
          worst = std::min(worst, sp.inner(sp.reflect(f), f).real());
        }
        set_residual(rec, std::max(0.0, -worst), 1e-8);
      });

  add(defs, "dilation.outgoing_isometry",
      "translation realization: S = F^{-1} T is isometric into L^2(R, H)",
      [](const CheckContext& ctx, CheckRecord& rec) {
        DilationSpace sp(ctx.cfg.rho(), ctx.cfg.grid());
        auto rng = ctx.rng("dilation.outgoing_isometry");
        double worst = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
          DilationVector f = random_plus_vector(rng, sp);
          worst = std::max(worst, std::abs(outgoing_norm(sp, outgoing_transform(f)) - sp.norm(f)));
        }
        // the embedded constants exercise the kernel-tail path
        DilationVector one = sp.embed(VecC::Ones(sp.h_dim()));
        worst = std::max(worst, std::abs(outgoing_norm(sp, outgoing_transform(one)) - sp.norm(one)));
        set_residual(rec, worst, 1e-4);
      });

  add(defs, "dilation.outgoing_translation",
      "S intertwines U_t with translation of the realization variable",
      [](const CheckContext& ctx, CheckRecord& rec) {
        DilationSpace sp(ctx.cfg.rho(), ctx.cfg.grid());
        auto rng = ctx.rng("dilation.outgoing_translation");
        DilationVector f = random_plus_vector(rng, sp);
        const auto sf = outgoing_transform(f);
        double worst = 0.0;
        for (double t : {-2.0, -0.5, 0.5, 1.0, 2.0}) {
          const auto sut = outgoing_transform(sp.evolve(f, t));
          for (std::size_t i = 0; i < sf.size(); ++i) {
            CubicSplineC spline(sf[i].grid.nodes(), sf[i].values);
            // compare on the interior, away from the dual-grid edges
            double err = 0.0;
            for (std::size_t k = 0; k < sf[i].grid.size(); ++k) {
              const double tau = sf[i].grid.node(k);
              if (std::abs(tau) > 20.0) continue;
              const double src = tau - t;
              err = std::max(err, std::abs(sut[i].values[k] - spline(src)));
            }
            worst = std::max(worst, err);
          }
        }
        set_residual(rec, worst, 1e-3);
      });

  add(defs, "dilation.outgoing_constant_profile",
      "translation profile of constants: (S iota(v))(tau) = sqrt(2 lam) e^{-lam tau} 1_{tau >= 0}",
      [](const CheckContext& ctx, CheckRecord& rec) {
        DilationSpace sp(ctx.cfg.rho(), ctx.cfg.grid());
        double worst = 0.0;
        for (Eigen::Index i = 0; i < sp.h_dim(); ++i) {
          const double lam = sp.atoms()[static_cast<std::size_t>(i)].lambda;
          for (double tau : {-0.5, 0.25, 0.5, 1.0, 2.0}) {
            const cdouble v = outgoing_constant_value(sp, static_cast<std::size_t>(i), tau);
            const double want = tau >= 0.0 ? std::sqrt(2.0 * lam) * std::exp(-lam * tau) : 0.0;
            worst = std::max(worst, std::abs(v - want));
          }
        }
        set_residual(rec, worst, 1e-3);
      });

  add(defs, "dilation.outgoing_support",
      "S maps E_+ into functions supported on the right half line",
      [](const CheckContext& ctx, CheckRecord& rec) {
        DilationSpace sp(ctx.cfg.rho(), ctx.cfg.grid());
        auto rng = ctx.rng("dilation.outgoing_support");
        const double eps = 2.0 * dual_grid(sp.grid()).spacing();
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
          DilationVector f = random_plus_vector(rng, sp);
          const auto sf = outgoing_transform(f);
          double neg = 0.0, tot = 0.0;
          for (std::size_t i = 0; i < sf.size(); ++i) {
            const double w = sp.atoms()[i].weight;
            for (std::size_t k = 0; k < sf[i].grid.size(); ++k) {
              const double e = w * sf[i].grid.weight(k) * std::norm(sf[i].values[k]);
              tot += e;
              if (sf[i].grid.node(k) < -eps) neg += e;
            }
          }
          worst = std::max(worst, neg / tot);
        }
        set_residual(rec, worst, 1e-6);
      });

  add(defs, "dilation.twisted_involution",
      "Hardy-side involution (theta-tilde f)(x) = m_lam(x) f(-x): involutive and positive",
      [](const CheckContext& ctx, CheckRecord& rec) {
        const Grid g = ctx.cfg.grid();
        auto rng = ctx.rng("dilation.twisted_involution");
        double worst = 0.0;
        for (double lam : {0.5, 1.0, 2.0}) {
          // involution property on random samples
          std::vector<cdouble> f(g.size());
          for (std::size_t j = 0; j < g.size(); ++j)
            f[j] = rng.complex_normal() * std::exp(-0.001 * g.node(j) * g.node(j));
          const auto f2 = twisted_involution(g, twisted_involution(g, f, lam), lam);
          for (std::size_t j = 0; j < g.size(); ++j)
            worst = std::max(worst, std::abs(f2[j] - f[j]));
          // fixed multiplier-side exponential: 1/(lam + ix)
          std::vector<cdouble> gamma(g.size());
          for (std::size_t j = 0; j < g.size(); ++j) gamma[j] = 1.0 / cdouble(lam, g.node(j));
          const auto tg = twisted_involution(g, gamma, lam);
          for (std::size_t j = 0; j < g.size(); ++j)
            worst = std::max(worst, std::abs(tg[j] - gamma[j]));
        }
        set_residual(rec, worst, 1e-10);
      });

  add(defs, "dilation.twisted_positivity",
      "the translation-side positive subspace is theta-tilde positive",
      [](const CheckContext& ctx, CheckRecord& rec) {
        // members of L^2(R)_+ via nonpositive-frequency spectra
        DilationSpace sp(SpectralMeasure::dirac(1.0), ctx.cfg.grid());
        auto rng = ctx.rng("dilation.twisted_positivity");
        const Grid& g = sp.grid();
        const double h = g.spacing();
        std::vector<std::vector<cdouble>> members;
        for (int v = 0; v < 8; ++v) {
          DilationVector f = random_plus_vector(rng, sp);
          std::vector<cdouble> col(g.size());
          for (std::size_t j = 0; j < g.size(); ++j) col[j] = f.values(static_cast<Eigen::Index>(j), 0);
          members.push_back(std::move(col));
        }
        double worst = 0.0;
        for (double lam : {0.5, 1.0, 2.0}) {
          MatC gram(static_cast<Eigen::Index>(members.size()), static_cast<Eigen::Index>(members.size()));
          for (std::size_t a = 0; a < members.size(); ++a) {
            const auto tb = twisted_involution(g, members[a], lam);
            for (std::size_t b = 0; b < members.size(); ++b) {
              cdouble acc(0.0, 0.0);
              for (std::size_t j = 0; j < g.size(); ++j)
                acc += h * tb[j] * std::conj(members[b][j]);
              gram(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a)) = acc;
            }
          }
          Eigen::SelfAdjointEigenSolver<MatC> es(0.5 * (gram + MatC(gram.adjoint())));
          worst = std::min(worst, es.eigenvalues().minCoeff());
        }
        set_residual(rec, std::max(0.0, -worst), 1e-6);
      });

  add(defs, "dilation.cyclicity_rank",
      "E_0 is generated along the flow: the Gram rank of {U_t iota(e_i)} saturates",
      [](const CheckContext& ctx, CheckRecord& rec) {
        DilationSpace sp(ctx.cfg.rho(), ctx.cfg.grid());
        // Gram over the translate ladder, entries through the compressed
        // evolution path (sums plus analytic oscillatory tails)
        auto tone_gram_rank = [&](double T) {
          std::vector<double> ts;
          for (double t = -T; t <= T + 1e-9; t += 0.5) ts.push_back(t);
          const Eigen::Index L = static_cast<Eigen::Index>(ts.size());
          Eigen::Index rank = 0;
          for (Eigen::Index i = 0; i < sp.h_dim(); ++i) {
            DilationSpace one_atom(
                SpectralMeasure::dirac(sp.atoms()[static_cast<std::size_t>(i)].lambda,
                                       sp.atoms()[static_cast<std::size_t>(i)].weight),
                sp.grid());
            MatC gram(L, L);
            for (Eigen::Index a = 0; a < L; ++a)
              for (Eigen::Index b = 0; b <= a; ++b) {
                const double dt = std::max(
                    std::abs(ts[static_cast<std::size_t>(a)] - ts[static_cast<std::size_t>(b)]), 1e-12);
                const cdouble val = one_atom.compressed_evolution(dt)(0, 0) *
                                    sp.atoms()[static_cast<std::size_t>(i)].weight;
                gram(a, b) = val;
                gram(b, a) = std::conj(val);
              }
            Eigen::SelfAdjointEigenSolver<MatC> es(0.5 * (gram + MatC(gram.adjoint())));
            const double cut = 1e-10 * es.eigenvalues().cwiseAbs().maxCoeff();
            for (Eigen::Index q = 0; q < L; ++q)
              if (es.eigenvalues()(q) > cut) ++rank;
          }
          return std::make_pair(rank, L * sp.h_dim());
        };
        Eigen::Index prev = 0;
        bool monotone = true;
        Eigen::Index final_rank = 0, proxy = 0;
        for (double T : {1.0, 2.0, 4.0, 8.0}) {
          auto [rank, full] = tone_gram_rank(T);
          if (rank < prev) monotone = false;
          prev = rank;
          final_rank = rank;
          proxy = full;
        }
        const bool ok = monotone && final_rank >= static_cast<Eigen::Index>(
                                        std::ceil(0.95 * static_cast<double>(proxy)));
        set_flag(rec, ok);
      });

  add(defs, "dilation.maximal_positivity_witness",
      "E_+ is maximal theta-positive: appending a theta(N) direction breaks positivity",
      [](const CheckContext& ctx, CheckRecord& rec) {
        auto rng = ctx.rng("dilation.maximal_positivity_witness");
        std::vector<double> ladder{0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
        ReflectionSpace space = dilation_ladder(ctx.cfg.rho(), ladder);
        const QuotientData q = quotient_space(space);
        if (q.null_coords.cols() == 0) throw std::runtime_error("witness needs a nontrivial null space");
        double worst = 0.0;  // most positive minimum over trials, want < -1e-6
        for (int trial = 0; trial < 20; ++trial) {
          VecC c(q.null_coords.cols());
          for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = rng.complex_normal();
          VecC n_amb = space.plus_basis() * (q.null_coords * c);
          n_amb /= space.norm(n_amb);
          const VecC w = space.theta() * n_amb;
          // twisted Gram over E_+ basis extended by the theta(N) vector
          const Eigen::Index k = space.plus_dim();
          MatC ext(space.dim(), k + 1);
          ext.leftCols(k) = space.plus_basis();
          ext.col(k) = w;
          MatC tg(k + 1, k + 1);
          for (Eigen::Index a = 0; a < k + 1; ++a)
            for (Eigen::Index b = 0; b < k + 1; ++b)
              tg(b, a) = space.inner(space.theta() * ext.col(a), ext.col(b));
          Eigen::SelfAdjointEigenSolver<MatC> es(0.5 * (tg + MatC(tg.adjoint())));
          worst = std::max(worst, es.eigenvalues().minCoeff());
        }
        set_flag(rec, worst < -1e-6);
      });
}

}  // namespace osq
