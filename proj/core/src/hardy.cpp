#include "osq/hardy.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "osq/fft.hpp"
#include "osq/interp.hpp"

namespace osq {

HalfLineRule HalfLineFunction::default_rule() { return half_line_rule(48.0, 48, 10); }

HalfLineFunction HalfLineFunction::from_function(const std::function<cdouble(double)>& f,
                                                 HalfLineRule rule) {
  HalfLineFunction out;
  out.values.resize(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) out.values[i] = f(rule.nodes[i]);
  out.rule = std::move(rule);
  return out;
}

cdouble hardy_kernel(cdouble z, cdouble w) {
  if (!(z.real() > 0.0) || !(w.real() > 0.0))
    throw std::invalid_argument("hardy_kernel: arguments must have positive real part");
  return 1.0 / (z + std::conj(w));
}

cdouble laplace_unitary(const HalfLineFunction& f, cdouble z) {
  if (!(z.real() > 0.0)) throw std::invalid_argument("laplace_unitary: Re z must be positive");
  cdouble acc(0.0, 0.0);
  for (std::size_t i = 0; i < f.rule.nodes.size(); ++i)
    acc += f.rule.weights[i] * f.values[i] * std::exp(-z * f.rule.nodes[i]);
  return acc;
}

HalfLineFunction shift_half_line(const HalfLineFunction& f, double t) {
  if (t < 0.0) throw std::invalid_argument("shift_half_line: t must be >= 0");
  CubicSplineC spline(f.rule.nodes, f.values);
  const double lo = f.rule.nodes.front();
  const double hi = f.rule.nodes.back();
  HalfLineFunction out;
  out.rule = f.rule;
  out.values.resize(f.values.size());
  for (std::size_t i = 0; i < f.rule.nodes.size(); ++i) {
    const double x = f.rule.nodes[i] - t;
    out.values[i] = (x < lo || x > hi) ? cdouble(0.0, 0.0) : spline(x);
  }
  return out;
}

cdouble hardy_multiplier(double lambda, double xi) {
  return cdouble(lambda, -xi) / cdouble(lambda, xi);
}

namespace {

// gamma_lambda = F(e^lambda), closed form under the unitary convention
cdouble gamma_lambda(double lambda, double xi) { return 1.0 / (kSqrt2Pi * cdouble(lambda, xi)); }

struct Embedded {
  Grid grid;
  Grid dual;
  std::vector<cdouble> hat;  // transform of the embedded samples
};

// embeds half-line samples into [-X, X) (zero on the negative axis, half
// value at the jump node) and returns the transform
Embedded embed_and_transform(const std::function<cdouble(double)>& f, double half_width,
                             std::size_t n, cdouble jump_value) {
  Grid g = Grid::uniform(half_width, n);
  ComplexSamples s{g, std::vector<cdouble>(g.size(), cdouble(0.0, 0.0))};
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double x = g.node(j);
    if (x > 0.0) s.values[j] = f(x);
    else if (x == 0.0) s.values[j] = 0.5 * jump_value;
  }
  ComplexSamples hat = fourier_transform(s);
  return Embedded{g, hat.grid, std::move(hat.values)};
}

}  // namespace

HardyThetaReport hardy_theta_check(const HalfLineFunction& f, double lambda,
                                   double half_width, std::size_t n) {
  if (!(lambda > 0.0)) throw std::invalid_argument("hardy_theta_check: lambda must be positive");

  CubicSplineC spline(f.rule.nodes, f.values);
  const double hi = f.rule.nodes.back();
  const cdouble c = spline(0.0);  // boundary value of f; the split below removes the jump

  // g = f - c e^{-lambda x} vanishes at 0, so its transform decays fast
  auto g_eval = [&](double x) -> cdouble {
    const cdouble base = x > hi ? cdouble(0.0, 0.0) : spline(x);
    return base - c * std::exp(-lambda * x);
  };
  Embedded emb = embed_and_transform(g_eval, half_width, n, cdouble(0.0, 0.0));
  const Grid& dual = emb.dual;
  const double dxi = dual.spacing();

  // Fourier-side pairings against theta g
  cdouble gg(0.0, 0.0), eg(0.0, 0.0);
  for (std::size_t k = 0; k < dual.size(); ++k) {
    const double xi = dual.node(k);
    const cdouble tg = hardy_multiplier(lambda, xi) * emb.hat[dual.reflect_index(k)];
    gg += dxi * emb.hat[k] * std::conj(tg);
    eg += dxi * gamma_lambda(lambda, xi) * std::conj(tg);
  }

  // <g, e^lambda> on the half-line rule
  cdouble ge(0.0, 0.0);
  for (std::size_t i = 0; i < f.rule.nodes.size(); ++i) {
    const double x = f.rule.nodes[i];
    ge += f.rule.weights[i] * (f.values[i] - c * std::exp(-lambda * x)) * std::exp(-lambda * x);
  }

  HardyThetaReport rep;
  const cdouble lhs = std::norm(c) / (2.0 * lambda) + c * eg + std::conj(c) * ge + gg;
  rep.lhs = lhs.real();
  const cdouble lf = laplace_unitary(f, cdouble(lambda, 0.0));
  rep.rhs = 2.0 * lambda * std::norm(lf);
  return rep;
}

double theta_fixed_exponential_residual(double lambda, double half_width, std::size_t n) {
  Grid g = Grid::uniform(half_width, n);
  ComplexSamples s{g, std::vector<cdouble>(g.size(), cdouble(0.0, 0.0))};
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double x = g.node(j);
    if (x > 0.0) s.values[j] = std::exp(-lambda * x);
    else if (x == 0.0) s.values[j] = 0.5;
  }
  ComplexSamples hat = fourier_transform(s);
  const double h = g.spacing();
  // endpoint Euler-Maclaurin correction of the half-line trapezoid
  for (std::size_t k = 0; k < hat.values.size(); ++k) {
    const cdouble z(lambda, hat.grid.node(k));
    hat.values[k] -= (h * h / 12.0 * z - std::pow(h, 4) / 720.0 * z * z * z) / kSqrt2Pi;
  }
  const double band = hat.grid.half_width() / 4.0;
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < hat.values.size(); ++k) {
    const double xi = hat.grid.node(k);
    if (std::abs(xi) > band) continue;
    const cdouble resid =
        hardy_multiplier(lambda, xi) * hat.values[hat.grid.reflect_index(k)] - hat.values[k];
    num += std::norm(resid);
    den += std::norm(hat.values[k]);
  }
  return std::sqrt(num / den);
}

int theta_fixed_subspace_dimension(double lambda, int basis_size, double threshold,
                                   double half_width, std::size_t n) {
  if (basis_size < 2) throw std::invalid_argument("theta_fixed_subspace_dimension: basis too small");
  Grid g = Grid::uniform(half_width, n);
  const Grid dual = dual_grid(g);
  const double dxi = dual.spacing();

  // spectra of e^lambda and of the jump-free family x e^{-beta x}
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
    // shifted Gaussian envelopes with an x factor: smooth, supported on the
    // half line, and well conditioned as a family
    const double center = 1.0 + 1.5 * static_cast<double>(b - 1);
    ComplexSamples s{g, std::vector<cdouble>(g.size(), cdouble(0.0, 0.0))};
    for (std::size_t j = 0; j < g.size(); ++j) {
      const double x = g.node(j);
      if (x > 0.0) s.values[j] = x * std::exp(-0.5 * (x - center) * (x - center));
    }
    hats.push_back(fourier_transform(s).values);
  }
  const Eigen::Index m = static_cast<Eigen::Index>(hats.size());

  // plain and twisted Grams on the Fourier side
  MatC gram(m, m), twisted(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index b = 0; b < m; ++b) {
      cdouble pg(0.0, 0.0), tg(0.0, 0.0);
      for (std::size_t k = 0; k < dual.size(); ++k) {
        const double xi = dual.node(k);
        const cdouble theta_b =
            hardy_multiplier(lambda, xi) * hats[static_cast<std::size_t>(b)][dual.reflect_index(k)];
        pg += dxi * hats[static_cast<std::size_t>(a)][k] * std::conj(hats[static_cast<std::size_t>(b)][k]);
        tg += dxi * theta_b * std::conj(hats[static_cast<std::size_t>(a)][k]);
      }
      gram(a, b) = pg;
      twisted(a, b) = tg;  // quadratic form coefficient of <theta v, v>
    }
  }
  // orthonormalize on the numerically independent span and count
  // twisted-Gram eigenvalues above the threshold
  Eigen::SelfAdjointEigenSolver<MatC> pg(0.5 * (gram + MatC(gram.adjoint())));
  const double cut = 1e-8 * pg.eigenvalues().maxCoeff();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < m; ++i)
    if (pg.eigenvalues()(i) > cut) keep.push_back(i);
  MatC w(m, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    w.col(static_cast<Eigen::Index>(i)) = pg.eigenvectors().col(keep[i]) / std::sqrt(pg.eigenvalues()(keep[i]));
  MatC t = w.adjoint() * 0.5 * (twisted + MatC(twisted.adjoint())) * w;
  Eigen::SelfAdjointEigenSolver<MatC> es(t);
  int count = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) >= threshold) ++count;
  return count;
}

}  // namespace osq
