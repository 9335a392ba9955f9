#include <cmath>

#include "osq/checks.hpp"
#include "osq/hardy.hpp"

namespace osq {

namespace {

void add(std::vector<CheckDef>& defs, std::string id, std::string anchor,
         std::function<void(const CheckContext&, CheckRecord&)> fn) {
  defs.push_back(CheckDef{std::move(id), "hardy", std::move(anchor), std::move(fn)});
}

// random smooth decaying half-line function with a few exponential and
// oscillatory components
HalfLineFunction random_half_line(CheckRng& rng) {
  const int terms = rng.uniform_int(2, 4);
  std::vector<double> decay(terms), freq(terms);
  std::vector<cdouble> amp(terms);
  for (int i = 0; i < terms; ++i) {
    decay[i] = rng.uniform(0.4, 2.0);
    freq[i] = rng.uniform(-2.0, 2.0);
    amp[i] = rng.complex_normal();
  }
  return HalfLineFunction::from_function([=](double x) {
    cdouble acc(0.0, 0.0);
    for (int i = 0; i < terms; ++i)
      acc += amp[i] * std::exp(-decay[i] * x) * std::exp(cdouble(0.0, freq[i] * x));
    return acc;
  });
}

}  // namespace

void register_hardy_checks(std::vector<CheckDef>& defs) {
  add(defs, "hardy.kernel_values", "reproducing kernel of the half plane: K(z, w) = 1/(z + conj w)",
      [](const CheckContext&, CheckRecord& rec) {
        double worst = std::abs(hardy_kernel(1.0, 1.0) - cdouble(0.5, 0.0));
        worst = std::max(worst, std::abs(hardy_kernel(2.0, cdouble(1.0, 1.0)) -
                                         1.0 / cdouble(3.0, -1.0)));
        set_residual(rec, worst, 1e-14);
      });

  add(defs, "hardy.kernel_hermitian_quadrature",
      "kernel values agree with the quadrature of <Q_w, Q_z> and are Hermitian",
      [](const CheckContext& ctx, CheckRecord& rec) {
        auto rng = ctx.rng("hardy.kernel_hermitian_quadrature");
        const auto rule = HalfLineFunction::default_rule();
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
          const cdouble z(rng.uniform(0.4, 2.5), rng.uniform(-2.0, 2.0));
          const cdouble w(rng.uniform(0.4, 2.5), rng.uniform(-2.0, 2.0));
          cdouble quad(0.0, 0.0);
          for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double x = rule.nodes[i];
            // Q_w(x) conj(Q_z(x)) = e^{-x conj(w)} e^{-x z}
            quad += rule.weights[i] * std::exp(-x * (z + std::conj(w)));
          }
          worst = std::max(worst, std::abs(quad - hardy_kernel(z, w)));
          worst = std::max(worst, std::abs(hardy_kernel(z, w) - std::conj(hardy_kernel(w, z))));
        }
        set_residual(rec, worst, 1e-8);
      });

  add(defs, "hardy.laplace_values", "Laplace transform point values on closed forms",
      [](const CheckContext&, CheckRecord& rec) {
        auto e1 = HalfLineFunction::from_function(
            [](double x) { return cdouble(std::exp(-x), 0.0); });
        double worst = std::abs(laplace_unitary(e1, 1.0) - cdouble(0.5, 0.0));
        auto ind = HalfLineFunction::from_function(
            [](double x) { return cdouble(x <= 1.0 ? 1.0 : 0.0, 0.0); });
        worst = std::max(worst, std::abs(laplace_unitary(ind, 1.0) - (1.0 - std::exp(-1.0))));
        auto zero = HalfLineFunction::from_function([](double) { return cdouble(0.0, 0.0); });
        worst = std::max(worst, std::abs(laplace_unitary(zero, 1.0)));
        set_residual(rec, worst, 1e-6);
      });

  add(defs, "hardy.laplace_intertwining",
      "L(U_t f)(z) = e^{-tz} L(f)(z) for shifted supports",
      [](const CheckContext& ctx, CheckRecord& rec) {
        auto rng = ctx.rng("hardy.laplace_intertwining");
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
          // smooth with f(0) = 0 so the shifted function stays smooth
          const double a = rng.uniform(0.5, 1.5);
          auto f = HalfLineFunction::from_function(
              [a](double x) { return cdouble(x * std::exp(-a * x), 0.0); });
          const double t = rng.uniform(0.2, 2.0);
          const cdouble z(rng.uniform(0.5, 1.5), rng.uniform(-1.0, 1.0));
          const cdouble lhs = laplace_unitary(shift_half_line(f, t), z);
          const cdouble rhs = std::exp(-t * z) * laplace_unitary(f, z);
          worst = std::max(worst, std::abs(lhs - rhs));
        }
        set_residual(rec, worst, 1e-6);
      });

  add(defs, "hardy.theta_identity_exponential",
      "positivity identity at the fixed exponential: both sides equal 1/(2 lam)",
      [](const CheckContext&, CheckRecord& rec) {
        double worst = 0.0;
        for (double lam : {0.5, 1.0, 2.0}) {
          auto f = HalfLineFunction::from_function(
              [lam](double x) { return cdouble(std::exp(-lam * x), 0.0); });
          const auto rep = hardy_theta_check(f, lam);
          worst = std::max(worst, std::abs(rep.lhs - 0.5 / lam));
          worst = std::max(worst, std::abs(rep.rhs - 0.5 / lam));
        }
        set_residual(rec, worst, 1e-4);
      });

  add(defs, "hardy.theta_identity_random",
      "theta-positivity identity <f, theta f> = 2 lam |L(f)(lam)|^2 on random functions",
      [](const CheckContext& ctx, CheckRecord& rec) {
        auto rng = ctx.rng("hardy.theta_identity_random");
        double worst = 0.0;
        double most_negative = 0.0;
        for (double lam : {0.5, 1.0, 2.0}) {
          for (int trial = 0; trial < 50; ++trial) {
            const auto f = random_half_line(rng);
            const auto rep = hardy_theta_check(f, lam);
            worst = std::max(worst, std::abs(rep.lhs - rep.rhs) / std::max(1.0, rep.rhs));
            most_negative = std::min(most_negative, std::min(rep.lhs, rep.rhs));
          }
        }
        if (most_negative < -1e-8) worst = std::max(worst, 1.0);
        set_residual(rec, worst, 1e-4);
      });

  add(defs, "hardy.laplace_null_vector",
      "functions in the kernel of q: L(f)(lam) = 0 forces <f, theta f> = 0",
      [](const CheckContext&, CheckRecord& rec) {
        const double lam = 1.0;
        // e^{-x} minus the matched multiple of e^{-2x} is Laplace-null at lam
        const double c = (1.0 / (lam + 1.0)) / (1.0 / (lam + 2.0));
        auto f = HalfLineFunction::from_function(
            [c](double x) { return cdouble(std::exp(-x) - c * std::exp(-2.0 * x), 0.0); });
        const auto rep = hardy_theta_check(f, lam);
        set_residual(rec, std::max(std::abs(rep.lhs), std::abs(rep.rhs)), 1e-4);
      });

  add(defs, "hardy.theta_fixed_exponential",
      "the multiplier involution fixes e^lambda",
      [](const CheckContext&, CheckRecord& rec) {
        double worst = 0.0;
        for (double lam : {0.5, 1.0, 2.0})
          worst = std::max(worst, theta_fixed_exponential_residual(lam));
        set_residual(rec, worst, 1e-6);
      });

  add(defs, "hardy.fixed_subspace_dimension",
      "the theta-fixed subspace of the sampled half-line space is one dimensional",
      [](const CheckContext&, CheckRecord& rec) {
        bool ok = true;
        for (double lam : {0.5, 1.0, 2.0})
          ok = ok && theta_fixed_subspace_dimension(lam, 10) == 1;
        set_flag(rec, ok);
      });

  add(defs, "hardy.multiplier_identities",
      "pointwise multiplier algebra: m(-x) = 1/m(x) = conj(m(x))",
      [](const CheckContext& ctx, CheckRecord& rec) {
        auto rng = ctx.rng("hardy.multiplier_identities");
        double worst = 0.0;
        for (int trial = 0; trial < 200; ++trial) {
          const double lam = rng.uniform(0.2, 3.0);
          const double x = rng.uniform(-50.0, 50.0);
          const cdouble m = hardy_multiplier(lam, x);
          worst = std::max(worst, std::abs(hardy_multiplier(lam, -x) - 1.0 / m));
          worst = std::max(worst, std::abs(hardy_multiplier(lam, -x) - std::conj(m)));
          worst = std::max(worst, std::abs(std::abs(m) - 1.0));
        }
        set_residual(rec, worst, 1e-14);
      });
}

}  // namespace osq
