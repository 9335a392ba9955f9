#include "osq/grid.hpp"

#include <cmath>
#include <stdexcept>

#include "osq/fft.hpp"
#include "osq/quadrature.hpp"

namespace osq {

Grid Grid::uniform(double half_width, std::size_t n) {
  if (half_width <= 0.0) throw std::invalid_argument("Grid::uniform: half_width must be positive");
  if (!is_power_of_two(n)) throw std::invalid_argument("Grid::uniform: n must be a power of two");
  Grid g;
  g.kind_ = GridKind::Uniform;
  g.half_width_ = half_width;
  const double h = 2.0 * half_width / static_cast<double>(n);
  g.nodes_.resize(n);
  g.weights_.assign(n, h);
  for (std::size_t j = 0; j < n; ++j) g.nodes_[j] = -half_width + h * static_cast<double>(j);
  g.validate();
  return g;
}

Grid Grid::tan_substituted(double half_width, std::size_t panels, std::size_t nodes_per_panel) {
  if (half_width <= 0.0) throw std::invalid_argument("Grid::tan_substituted: half_width must be positive");
  if (panels == 0) throw std::invalid_argument("Grid::tan_substituted: need at least one panel");
  Grid g;
  g.kind_ = GridKind::TanSubstituted;
  g.half_width_ = half_width;
  const double theta_max = std::atan(half_width);
  const auto rule = gauss_legendre(nodes_per_panel);
  const double panel_width = 2.0 * theta_max / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const double a = -theta_max + panel_width * static_cast<double>(p);
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double theta = a + 0.5 * panel_width * (rule.nodes[k] + 1.0);
      const double c = std::cos(theta);
      g.nodes_.push_back(std::tan(theta));
      g.weights_.push_back(0.5 * panel_width * rule.weights[k] / (c * c));
    }
  }
  g.validate();
  return g;
}

void Grid::validate() const {
  if (nodes_.size() != weights_.size()) throw std::invalid_argument("Grid: node/weight size mismatch");
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
    if (!(nodes_[i] < nodes_[i + 1])) throw std::invalid_argument("Grid: nodes must be strictly increasing");
  }
  for (double w : weights_) {
    if (!(w > 0.0)) throw std::invalid_argument("Grid: weights must be positive");
  }
  if (kind_ == GridKind::Uniform && nodes_.size() >= 2) {
    const double h = nodes_[1] - nodes_[0];
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
      if (std::abs((nodes_[i + 1] - nodes_[i]) - h) > 1e-12 * std::max(1.0, std::abs(h)))
        throw std::invalid_argument("Grid: uniform grid spacing is not constant");
    }
  }
}

double Grid::spacing() const {
  if (kind_ != GridKind::Uniform) throw std::logic_error("Grid::spacing: only defined for uniform grids");
  return nodes_.size() >= 2 ? nodes_[1] - nodes_[0] : 2.0 * half_width_;
}

bool Grid::symmetric() const {
  if (kind_ == GridKind::Uniform) return true;  // [-X, X) with wrap
  const std::size_t n = nodes_.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (std::abs(nodes_[i] + nodes_[n - 1 - i]) > 1e-10 * half_width_) return false;
  }
  return true;
}

std::size_t Grid::reflect_index(std::size_t i) const {
  if (kind_ != GridKind::Uniform) throw std::logic_error("Grid::reflect_index: uniform grids only");
  const std::size_t n = nodes_.size();
  return (n - i) % n;
}

ComplexSamples ComplexSamples::from_function(const Grid& g, const std::function<cdouble(double)>& f) {
  ComplexSamples s{g, {}};
  s.values.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) s.values[i] = f(g.node(i));
  return s;
}

cdouble integrate(const ComplexSamples& f, std::optional<PoissonTail> tail) {
  if (f.values.size() != f.grid.size()) throw std::invalid_argument("integrate: sample/grid size mismatch");
  cdouble acc(0.0, 0.0);
  for (std::size_t i = 0; i < f.values.size(); ++i) acc += f.grid.weight(i) * f.values[i];
  if (tail && f.grid.kind() == GridKind::Uniform) {
    // mass of the Poisson kernel outside [-X, X] times the boundary mean
    const double lam = tail->lambda;
    const double mass = (2.0 / kPi) * std::atan(lam / f.grid.half_width());
    const cdouble boundary = 0.5 * (f.values.front() + f.values.back());
    acc += mass * boundary;
  }
  return acc;
}

ComplexSamples fourier_transform(const ComplexSamples& f, bool inverse) {
  const Grid& g = f.grid;
  if (g.kind() != GridKind::Uniform) throw std::invalid_argument("fourier_transform: uniform grid required");
  const std::size_t n = g.size();
  if (!is_power_of_two(n)) throw std::invalid_argument("fourier_transform: N must be a power of two");
  if (f.values.size() != n) throw std::invalid_argument("fourier_transform: sample/grid size mismatch");

  const double h = g.spacing();
  const double x0 = g.node(0);
  const double dxi = 2.0 * kPi / (static_cast<double>(n) * h);

  std::vector<cdouble> a = f.values;
  dft_pow2(a, inverse);

  // wrapped bin k corresponds to frequency xi_k = k*dxi (k < n/2) or (k-n)*dxi
  Grid dual = dual_grid(g);
  ComplexSamples out{dual, std::vector<cdouble>(n)};
  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const long long kk = static_cast<long long>(k) < static_cast<long long>(n / 2)
                             ? static_cast<long long>(k)
                             : static_cast<long long>(k) - static_cast<long long>(n);
    const double xi = dxi * static_cast<double>(kk);
    // continuum phase correction for the grid offset x0
    const cdouble phase = std::exp(cdouble(0.0, sign * xi * x0));
    const std::size_t unwrapped = static_cast<std::size_t>(kk + static_cast<long long>(n / 2));
    out.values[unwrapped] = (h / kSqrt2Pi) * phase * a[k];
  }
  return out;
}

Grid dual_grid(const Grid& g) {
  const std::size_t n = g.size();
  const double h = g.spacing();
  const double xi_max = kPi / h;
  return Grid::uniform(xi_max, n);
}

double l2_norm(const ComplexSamples& f) {
  double acc = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i) acc += f.grid.weight(i) * std::norm(f.values[i]);
  return std::sqrt(acc);
}

}  // namespace osq
