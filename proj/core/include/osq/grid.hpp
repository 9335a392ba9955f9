#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "osq/types.hpp"

namespace osq {

enum class GridKind { Uniform, TanSubstituted };

// Quadrature/sampling representation of a finite interval of the real line.
// Uniform grids cover [-X, X) with N (a power of two) equispaced nodes so
// they are FFT-ready; tan-substituted grids place Gauss-Legendre panels in
// the variable x = tan(theta) and serve as improper-integral rules.
class Grid {
 public:
  static Grid uniform(double half_width, std::size_t n);
  static Grid tan_substituted(double half_width, std::size_t panels, std::size_t nodes_per_panel = 10);

  GridKind kind() const { return kind_; }
  double half_width() const { return half_width_; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  double node(std::size_t i) const { return nodes_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }
  // spacing of a uniform grid
  double spacing() const;
  bool symmetric() const;
  // index of the node closest to -x for uniform grids (periodic wrap at -X)
  std::size_t reflect_index(std::size_t i) const;

 private:
  Grid() = default;
  void validate() const;

  GridKind kind_ = GridKind::Uniform;
  double half_width_ = 0.0;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

struct ComplexSamples {
  // non-owning conceptually, but stored by value for simplicity
  Grid grid;
  std::vector<cdouble> values;

  static ComplexSamples from_function(const Grid& g, const std::function<cdouble(double)>& f);
};

// Decay classes for the analytic tail beyond a uniform grid's window.
// `none` drops the tail, `poisson{lambda}` adds the exact mass of the
// Poisson kernel tail times the boundary mean of the samples.
struct PoissonTail {
  double lambda = 1.0;
};

cdouble integrate(const ComplexSamples& f, std::optional<PoissonTail> tail = std::nullopt);

// Unitary-convention Fourier transform of uniform-grid samples:
//   (F f)(xi) = (2 pi)^{-1/2} Int f(x) e^{-i xi x} dx,
// returned on the dual uniform grid (spacing 2 pi / (N h)), nodes in
// increasing order. The inverse flag applies the conjugate transform.
ComplexSamples fourier_transform(const ComplexSamples& f, bool inverse = false);

// Frequencies of the dual grid in increasing order.
Grid dual_grid(const Grid& g);

double l2_norm(const ComplexSamples& f);

}  // namespace osq
