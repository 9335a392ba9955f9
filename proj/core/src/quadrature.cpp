#include "osq/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace osq {

const QuadratureRule& gauss_legendre(std::size_t n) {
  static std::map<std::size_t, QuadratureRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n == 0) throw std::invalid_argument("gauss_legendre: n must be positive");

  // Golub-Welsch: Jacobi matrix of the Legendre recurrence.
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double b = kk / std::sqrt(4.0 * kk * kk - 1.0);
    J(static_cast<Eigen::Index>(k - 1), static_cast<Eigen::Index>(k)) = b;
    J(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k - 1)) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    rule.nodes[k] = es.eigenvalues()(static_cast<Eigen::Index>(k));
    const double v0 = es.eigenvectors()(0, static_cast<Eigen::Index>(k));
    rule.weights[k] = 2.0 * v0 * v0;
  }
  auto [pos, inserted] = cache.emplace(n, std::move(rule));
  return pos->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    std::size_t panels, std::size_t nodes_per_panel) {
  const auto& rule = gauss_legendre(nodes_per_panel);
  const double w = (b - a) / static_cast<double>(panels);
  double acc = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + w * static_cast<double>(p);
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      acc += 0.5 * w * rule.weights[k] * f(lo + 0.5 * w * (rule.nodes[k] + 1.0));
    }
  }
  return acc;
}

cdouble integrate_gl_c(const std::function<cdouble(double)>& f, double a, double b,
                       std::size_t panels, std::size_t nodes_per_panel) {
  const auto& rule = gauss_legendre(nodes_per_panel);
  const double w = (b - a) / static_cast<double>(panels);
  cdouble acc(0.0, 0.0);
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + w * static_cast<double>(p);
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      acc += 0.5 * w * rule.weights[k] * f(lo + 0.5 * w * (rule.nodes[k] + 1.0));
    }
  }
  return acc;
}

namespace {

double simpson_panel(double fa, double fm, double fb, double h) {
  return (h / 6.0) * (fa + 4.0 * fm + fb);
}

double adaptive_recur(const std::function<double(double)>& f, double a, double b,
                      double eps, int depth, double fa, double fm, double fb, double whole) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson_panel(fa, flm, fm, m - a);
  const double right = simpson_panel(fm, frm, fb, b - m);
  const double diff = (left + right) - whole;
  if (std::abs(diff) <= 15.0 * eps || depth <= 0) {
    return left + right + diff / 15.0;
  }
  return adaptive_recur(f, a, m, 0.5 * eps, depth - 1, fa, flm, fm, left) +
         adaptive_recur(f, m, b, 0.5 * eps, depth - 1, fm, frm, fb, right);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol, int max_depth) {
  if (a == b) return 0.0;
  if (b < a) return -integrate_adaptive(f, b, a, tol, max_depth);
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = simpson_panel(fa, fm, fb, b - a);
  return adaptive_recur(f, a, b, tol, max_depth, fa, fm, fb, whole);
}

double integrate_real_line(const std::function<double(double)>& f, double tol) {
  auto g = [&](double theta) {
    const double c = std::cos(theta);
    const double x = std::tan(theta);
    return f(x) / (c * c);
  };
  const double eps = 1e-9;
  return integrate_adaptive(g, -0.5 * kPi + eps, 0.5 * kPi - eps, tol);
}

double integrate_to_infinity(const std::function<double(double)>& f, double a, double tol) {
  double acc = 0.0;
  double lo = a;
  double len = std::max(1.0, std::abs(a));
  for (int k = 0; k < 80; ++k) {
    const double piece = integrate_adaptive(f, lo, lo + len, tol * 0.1);
    acc += piece;
    lo += len;
    len *= 2.0;
    if (std::abs(piece) < tol * std::max(1.0, std::abs(acc)) && k > 2) break;
  }
  return acc;
}

cdouble oscillatory_window(const std::function<double(double)>& g, double t, double window,
                           double feature_scale) {
  // Panel widths resolve both the oscillation e^{-itx} and the integrand's
  // own feature scale near the origin (panels grow ~|x| outward).
  const double osc_cap = 5.0 / (1.0 + std::abs(t));
  std::vector<double> edges{0.0};
  while (edges.back() < window) {
    const double x = edges.back();
    const double w = std::min(osc_cap, std::max(feature_scale, x) / 3.0);
    edges.push_back(std::min(window, x + w));
  }
  const auto& rule = gauss_legendre(10);
  cdouble acc(0.0, 0.0);
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    for (int side = 0; side < 2; ++side) {
      const double lo = side == 0 ? edges[p] : -edges[p + 1];
      const double hi = side == 0 ? edges[p + 1] : -edges[p];
      const double w = hi - lo;
      for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const double x = lo + 0.5 * w * (rule.nodes[k] + 1.0);
        acc += 0.5 * w * rule.weights[k] * g(x) * std::exp(cdouble(0.0, -t * x));
      }
    }
  }
  return acc;
}

double poisson_fourier(double lambda, double t) {
  if (lambda <= 0.0) throw std::invalid_argument("poisson_fourier: lambda must be positive");
  const double at = std::abs(t);
  auto q = [lambda](double x) { return (lambda / kPi) / (lambda * lambda + x * x); };
  if (at == 0.0) {
    // total mass; window plus exact arctan tail
    const double window = 512.0;
    const cdouble body = oscillatory_window(q, 0.0, window, lambda);
    return body.real() + (2.0 / kPi) * std::atan(lambda / window);
  }
  // window sized so the IBP remainder O(q''(X)/t^3) is negligible
  const double window = std::min(std::max(512.0, 32.0 / at), 65536.0);
  const cdouble body = oscillatory_window(q, t, window, lambda);
  // Int_{|x|>X} cos(tx) q(x) dx ~ -2 q(X) sin(tX)/t - 2 q'(X) cos(tX)/t^2
  const double X = window;
  const double qX = q(X);
  const double qpX = -(lambda / kPi) * 2.0 * X / std::pow(lambda * lambda + X * X, 2);
  const double tail = -2.0 * qX * std::sin(at * X) / at - 2.0 * qpX * std::cos(at * X) / (at * at);
  return body.real() + tail;
}

HalfLineRule half_line_rule(double upper, std::size_t panels, std::size_t nodes_per_panel) {
  HalfLineRule r;
  const auto& rule = gauss_legendre(nodes_per_panel);
  const double w = upper / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = w * static_cast<double>(p);
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      r.nodes.push_back(lo + 0.5 * w * (rule.nodes[k] + 1.0));
      r.weights.push_back(0.5 * w * rule.weights[k]);
    }
  }
  return r;
}

}  // namespace osq
