#include <cmath>

#include "osq/checks.hpp"
#include "osq/groups.hpp"
#include "osq/quadrature.hpp"

namespace osq {

namespace {

void add(std::vector<CheckDef>& defs, std::string id, std::string anchor,
         std::function<void(const CheckContext&, CheckRecord&)> fn) {
  defs.push_back(CheckDef{std::move(id), "groups", std::move(anchor), std::move(fn)});
}

AxbFunction sample_axb(const WeightedHalfLine& sp, const std::function<cdouble(double)>& f) {
  AxbFunction out{&sp, std::vector<cdouble>(sp.rule.nodes.size())};
  for (std::size_t i = 0; i < sp.rule.nodes.size(); ++i) out.values[i] = f(sp.rule.nodes[i]);
  return out;
}

// tensor field with a strictly negative x spectrum and a Gaussian y profile
TensorField plus_tensor_field(double spectrum_center, double spectrum_width, double y_width) {
  TensorField f{Grid::uniform(32.0, 1 << 11), Grid::uniform(12.0, 1 << 8), MatC()};
  const Grid dual = dual_grid(f.x);
  std::vector<cdouble> hat(dual.size(), cdouble(0.0, 0.0));
  for (std::size_t k = 0; k < dual.size(); ++k) {
    const double xi = dual.node(k);
    if (xi > 0.0) continue;
    const double u = (xi - spectrum_center) / spectrum_width;
    if (std::abs(u) < 12.0) hat[k] = std::exp(-0.5 * u * u);
  }
  ComplexSamples xprof = fourier_transform(ComplexSamples{dual, hat}, true);
  f.values.resize(static_cast<Eigen::Index>(f.x.size()), static_cast<Eigen::Index>(f.y.size()));
  for (std::size_t i = 0; i < f.x.size(); ++i)
    for (std::size_t j = 0; j < f.y.size(); ++j) {
      const double y = f.y.node(j);
      f.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          xprof.values[i] * std::exp(-0.5 * y * y / (y_width * y_width));
    }
  const double n = tensor_norm(f);
  f.values /= n;
  return f;
}

}  // namespace

void register_groups_checks(std::vector<CheckDef>& defs) {
  add(defs, "groups.axb_identity", "the identity element acts trivially",
      [](const CheckContext&, CheckRecord& rec) {
        auto sp = WeightedHalfLine::make(1.0);
        auto f = sample_axb(sp, [](double x) { return cdouble(std::exp(-x) * x, 0.3 * std::exp(-2.0 * x)); });
        const auto g = axb_act(AxbPoint{0.0, 1.0}, f);
        double worst = 0.0;
        for (std::size_t i = 0; i < f.values.size(); ++i)
          worst = std::max(worst, std::abs(g.values[i] - f.values[i]));
        set_residual(rec, worst, 1e-9);
      });

  add(defs, "groups.axb_unitarity",
      "affine actions are unitary on the weighted half line",
      [](const CheckContext& ctx, CheckRecord& rec) {
        auto rng = ctx.rng("groups.axb_unitarity");
        double worst = 0.0;
        for (double s : {1.0, 2.0}) {
          auto sp = WeightedHalfLine::make(s);
          auto f = sample_axb(sp, [](double x) { return cdouble(std::exp(-x), 0.0); });
          const double base = std::sqrt(axb_inner(f, f).real());
          for (int trial = 0; trial < 8; ++trial) {
            const AxbPoint g{rng.uniform(-1.0, 1.0), rng.uniform(0.9, 2.2)};
            const auto pf = axb_act(g, f);
            worst = std::max(worst, std::abs(std::sqrt(axb_inner(pf, pf).real()) - base) / base);
          }
        }
        set_residual(rec, worst, 1e-4);
      });

  add(defs, "groups.axb_group_law",
      "pi(g1) pi(g2) = pi(g1 g2) with (t1,a1)(t2,a2) = (t1 + a1 t2, a1 a2)",
      [](const CheckContext& ctx, CheckRecord& rec) {
        auto rng = ctx.rng("groups.axb_group_law");
        auto sp = WeightedHalfLine::make(1.0);
        auto f = sample_axb(sp, [](double x) { return cdouble(x * std::exp(-x), 0.0); });
        const double base = std::sqrt(axb_inner(f, f).real());
        double worst = 0.0;
        for (int trial = 0; trial < 8; ++trial) {
          const AxbPoint g1{rng.uniform(-0.6, 0.6), rng.uniform(0.9, 1.4)};
          const AxbPoint g2{rng.uniform(-0.6, 0.6), rng.uniform(0.9, 1.4)};
          const auto lhs = axb_act(g1, axb_act(g2, f));
          const auto rhs = axb_act(axb_mul(g1, g2), f);
          double acc = 0.0;
          for (std::size_t i = 0; i < lhs.values.size(); ++i)
            acc += sp.rule.weights[i] * std::norm(lhs.values[i] - rhs.values[i]);
          worst = std::max(worst, std::sqrt(acc) / base);
        }
        set_residual(rec, worst, 1e-4);
      });

  add(defs, "groups.axb_laplace_profile",
      "matrix coefficients reproduce Gamma(s)/z^s on the Laplace side",
      [](const CheckContext&, CheckRecord& rec) {
        double worst = 0.0;
        for (double s : {1.0, 2.0}) {
          auto sp = WeightedHalfLine::make(s);
          auto f = sample_axb(sp, [](double x) { return cdouble(std::exp(-0.5 * x), 0.0); });
          for (double t : {0.25, 0.5, 1.0, 2.0}) {
            const auto pf = axb_act(AxbPoint{t, 1.0}, f);
            const cdouble lhs = axb_inner(pf, f);
            const cdouble want = std::tgamma(s) * std::pow(cdouble(1.0, -t), -s);
            worst = std::max(worst, std::abs(lhs - want));
          }
        }
        set_residual(rec, worst, 1e-6);
      });

  add(defs, "groups.axb_fourier_constant",
      "transform of |x|^{2s-1}: power fit and the closed-form constant it supports",
      [](const CheckContext&, CheckRecord& rec) {
        double worst = 0.0;
        for (double s : {0.25, 0.35}) {
          const auto rep = axb_fourier_constant_check(s);
          worst = std::max(worst, std::abs(rep.fitted_exponent + 2.0 * s) / (2.0 * s));
          if (rep.matches == 0) worst = std::max(worst, 1.0);
        }
        set_residual(rec, worst, 1e-2);
      });

  add(defs, "groups.axb_constant_pole_ratio",
      "small-s growth of the fitted constant follows the Riesz pole",
      [](const CheckContext&, CheckRecord& rec) {
        const auto a = axb_fourier_constant_check(0.05);
        const auto b = axb_fourier_constant_check(0.10);
        const double got = a.fitted_constant / b.fitted_constant;
        const double want = a.riesz_constant / b.riesz_constant;
        set_result(rec, got, want, 5e-2 * std::abs(want));
      });

  add(defs, "groups.axb_reflection_gram",
      "kernel (x+y)^{-2s} stays positive on right-half-line bumps for s <= 1/2",
      [](const CheckContext&, CheckRecord& rec) {
        double worst = 0.0;
        for (double s : {0.2, 0.35, 0.5})
          worst = std::min(worst, axb_reflection_gram_min_eig(s));
        set_residual(rec, std::max(0.0, -worst), 1e-6);
      });

  add(defs, "groups.heisenberg_weyl",
      "Weyl commutation U_t V_s = e^{ist} V_s U_t; at s = pi, t = 1 the phase is -1",
      [](const CheckContext&, CheckRecord& rec) {
        const auto f = plus_tensor_field(-1.5, 0.25, 1.0);
        double worst = weyl_commutation_residual(f, 1.0, kPi);
        worst = std::max(worst, weyl_commutation_residual(f, 0.7, 1.3));
        set_residual(rec, worst, 1e-8);
      });

  add(defs, "groups.heisenberg_group_law",
      "exponential coordinates compose by the nilpotent group law",
      [](const CheckContext& ctx, CheckRecord& rec) {
        auto rng = ctx.rng("groups.heisenberg_group_law");
        const auto f = plus_tensor_field(-1.5, 0.3, 1.0);
        double worst = 0.0;
        // identity
        {
          const auto g = heisenberg_act_element(f, 0.0, 0.0, 0.0);
          TensorField diff{f.x, f.y, g.values - f.values};
          worst = std::max(worst, tensor_norm(diff));
        }
        for (int trial = 0; trial < 6; ++trial) {
          const double p1 = rng.uniform(-0.2, 0.2), q1 = rng.uniform(-0.8, 0.8), z1 = rng.uniform(-0.8, 0.8);
          const double p2 = rng.uniform(-0.2, 0.2), q2 = rng.uniform(-0.8, 0.8), z2 = rng.uniform(-0.8, 0.8);
          double p, q, z;
          heisenberg_mul(p1, q1, z1, p2, q2, z2, p, q, z);
          const auto lhs = heisenberg_act_element(heisenberg_act_element(f, p2, q2, z2), p1, q1, z1);
          const auto rhs = heisenberg_act_element(f, p, q, z);
          TensorField diff{f.x, f.y, lhs.values - rhs.values};
          worst = std::max(worst, tensor_norm(diff));
          // unitarity
          worst = std::max(worst, std::abs(tensor_norm(lhs) - tensor_norm(f)));
        }
        set_residual(rec, worst, 1e-4);
      });

  add(defs, "groups.heisenberg_p0_identity",
      "projection identity P_0(i x f) = P_0(f) on negative-spectrum members",
      [](const CheckContext&, CheckRecord& rec) {
        const auto f = plus_tensor_field(-1.5, 0.25, 1.0);
        const auto rep = heisenberg_p0_check(f);
        set_residual(rec, rep.residual, 1e-6);
      });

  add(defs, "groups.heisenberg_p0_precondition",
      "the projection identity needs the spectral support condition",
      [](const CheckContext&, CheckRecord& rec) {
        // mirrored spectrum (positive axis): the precondition must reject
        auto f = plus_tensor_field(-1.5, 0.25, 1.0);
        TensorField flipped{f.x, f.y, MatC(f.values.rows(), f.values.cols())};
        for (Eigen::Index i = 0; i < f.values.rows(); ++i)
          flipped.values.row(i) = f.values.row(i).conjugate();
        bool rejected = false;
        try {
          (void)heisenberg_p0_check(flipped);
        } catch (const std::invalid_argument&) {
          rejected = true;
        }
        // and the forced residual is large: P_0(ix f) vs P_0(f) now differ
        const auto p0f = heisenberg_p0(flipped);
        TensorField xf{flipped.x, flipped.y, MatC(f.values.rows(), f.values.cols())};
        for (Eigen::Index i = 0; i < f.values.rows(); ++i)
          xf.values.row(i) =
              cdouble(0.0, 1.0) * flipped.x.node(static_cast<std::size_t>(i)) * flipped.values.row(i);
        const auto p0xf = heisenberg_p0(xf);
        double diff = 0.0;
        for (std::size_t j = 0; j < p0f.size(); ++j)
          diff += flipped.y.weight(j) * std::norm(p0xf[j] - p0f[j]);
        diff = std::sqrt(diff) / tensor_norm(flipped);
        set_flag(rec, rejected && diff > 1e-3);
      });

  add(defs, "groups.heisenberg_invariance_z",
      "the central flow preserves the positive spectral subspace",
      [](const CheckContext&, CheckRecord& rec) {
        const auto f = plus_tensor_field(-2.0, 0.25, 1.0);
        double worst = 0.0;
        for (double t : {0.25, 1.0}) {
          const auto uf = heisenberg_act(f, HeisenbergGenerator::Z, t);
          worst = std::max(worst, positive_x_spectrum_fraction(uf));
          const auto proj = project_plus_x(uf);
          TensorField diff{f.x, f.y, proj.values - uf.values};
          worst = std::max(worst, tensor_norm(diff));
        }
        set_residual(rec, worst, 1e-6);
      });

  add(defs, "groups.heisenberg_invariance_p_fails",
      "the shear flow does not preserve the positive spectral subspace",
      [](const CheckContext&, CheckRecord& rec) {
        const auto f = plus_tensor_field(-1.5, 0.3, 1.0);
        const auto uf = heisenberg_act(f, HeisenbergGenerator::P, 1.0);
        const auto proj = project_plus_x(uf);
        TensorField diff{f.x, f.y, proj.values - uf.values};
        set_flag(rec, tensor_norm(diff) > 1e-2);
      });

  add(defs, "groups.covariant_dilation",
      "scaling covariance of the dilation model and its compressed semigroup",
      [](const CheckContext&, CheckRecord& rec) {
        auto bump = [](double x) {
          return cdouble(std::exp(-0.02 * x * x), 0.0) * std::exp(cdouble(0.0, -0.5 * x));
        };
        double worst = 0.0;
        {
          const auto rep = covariant_dilation_check(SpectralMeasure::dirac(1.0), 1.0, 0.7, bump);
          worst = std::max(worst, std::max(rep.intertwine_residual, rep.projection_residual));
        }
        {
          const auto rep = covariant_dilation_check(SpectralMeasure::dirac(1.0), 2.0, 0.7, bump);
          // the intertwining is held to 1e-6, the projection to 1e-4;
          // rescale the tighter bound onto the shared tolerance
          worst = std::max(worst, rep.intertwine_residual * 100.0);
          worst = std::max(worst, rep.projection_residual);
        }
        set_residual(rec, worst, 1e-4);
      });

  add(defs, "groups.covariant_semigroup",
      "the scaled space carries the semigroup with atoms {a lambda_i}",
      [](const CheckContext& ctx, CheckRecord& rec) {
        std::vector<Atom> scaled;
        for (const auto& a : ctx.cfg.rho().positive_atoms()) scaled.push_back(Atom{2.0 * a.lambda, a.weight});
        DilationSpace sp(SpectralMeasure::from_atoms(scaled), ctx.cfg.grid());
        double worst = 0.0;
        for (double t : {0.25, 0.5, 1.0})
          worst = std::max(worst, verify_semigroup_identity(sp, t).residual);
        set_residual(rec, worst, 1e-4);
      });

  add(defs, "groups.euclidean_composition",
      "dilation of the discretized weighted half line composes with the affine action",
      [](const CheckContext& ctx, CheckRecord& rec) {
        // discretize y^{s-1} dy at s = 1 into quadrature atoms and dilate
        auto rule = half_line_rule(4.0, 8, 4);
        std::vector<Atom> atoms;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
          if (rule.nodes[i] < 0.05) continue;
          atoms.push_back(Atom{rule.nodes[i], rule.weights[i]});
        }
        DilationSpace sp(SpectralMeasure::from_atoms(atoms), ctx.cfg.grid());
        double worst = 0.0;
        for (double t : {0.5, 1.0})
          worst = std::max(worst, verify_semigroup_identity(sp, t).residual);
        set_residual(rec, worst, 1e-4);
      });
}

}  // namespace osq
