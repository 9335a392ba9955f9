#include "osq/dilation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "osq/fft.hpp"
#include "osq/quadrature.hpp"

namespace osq {

namespace {

double poisson_density(double x, double lambda) {
  return (lambda / kPi) / (lambda * lambda + x * x);
}

// power series of the sine integral, adequate for arguments up to ~8
double sine_integral_series(double x) {
  double term = x;
  double acc = x;
  for (int k = 1; k < 60; ++k) {
    const double n = 2.0 * k;
    term *= -x * x / (n * (n + 1.0));
    acc += term / (n + 1.0);
    if (std::abs(term) < 1e-18 * std::abs(acc)) break;
  }
  return acc;
}

// Int_{|x| > X} e^{-itx} q(x, lambda) dx. For small t X the kernel tail is
// integrated against 1 - cos via the sine integral (the lambda^2/x^4 rest of
// q is negligible beyond X); for large t X two-term integration by parts.
double oscillatory_poisson_tail(double lambda, double X, double t) {
  const double at = std::abs(t);
  const double mass = (2.0 / kPi) * std::atan(lambda / X);
  const double a = at * X;
  if (a <= 8.0) {
    if (a == 0.0) return mass;
    const double c = 0.5 * kPi + (1.0 - std::cos(a)) / a - sine_integral_series(a);
    return mass - (2.0 * lambda * at / kPi) * c;
  }
  const double q = poisson_density(X, lambda);
  const double qp = -(lambda / kPi) * 2.0 * X / std::pow(lambda * lambda + X * X, 2);
  return -2.0 * q * std::sin(at * X) / at - 2.0 * qp * std::cos(at * X) / (at * at);
}

// Tail of Int p(x) q(x, lambda) dx beyond [-X, X) for sampled p, using the
// band-limited periodic model of p: sum of spectral coefficients against
// the kernel's oscillatory tails. Exact for constants and bin tones.
cdouble spectral_tail(const Grid& grid, const std::vector<cdouble>& p, double lambda) {
  ComplexSamples hat = fourier_transform(ComplexSamples{grid, p});
  const double dxi = hat.grid.spacing();
  cdouble acc(0.0, 0.0);
  for (std::size_t k = 0; k < hat.values.size(); ++k)
    acc += hat.values[k] * oscillatory_poisson_tail(lambda, grid.half_width(), hat.grid.node(k));
  return acc * dxi / kSqrt2Pi;
}

bool boundary_active(const MatC& values, Eigen::Index col, Eigen::Index window) {
  const Eigen::Index n = values.rows();
  double edge = 0.0, total = 0.0;
  for (Eigen::Index j = 0; j < window; ++j)
    edge += std::abs(values(j, col)) + std::abs(values(n - 1 - j, col));
  for (Eigen::Index j = 0; j < n; ++j) total += std::abs(values(j, col));
  return edge > 1e-10 * total;
}

}  // namespace

DilationSpace::DilationSpace(SpectralMeasure rho, Grid grid)
    : rho_(std::move(rho)), grid_(std::move(grid)) {
  if (grid_.kind() != GridKind::Uniform)
    throw std::invalid_argument("DilationSpace: uniform grid required");
  if (grid_.size() == 0) throw std::invalid_argument("DilationSpace: empty grid");
  if (rho_.has_zero_atom())
    throw std::invalid_argument("DilationSpace: zero atom present, reduce fixed points first");
  if (rho_.density())
    throw std::invalid_argument("DilationSpace: densities must be pre-discretized into atoms");
  atoms_ = rho_.positive_atoms();
  if (atoms_.empty()) throw std::invalid_argument("DilationSpace: need at least one atom");

  density_.resize(static_cast<Eigen::Index>(grid_.size()), static_cast<Eigen::Index>(atoms_.size()));
  for (std::size_t j = 0; j < grid_.size(); ++j)
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      density_(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) =
          poisson_density(grid_.node(j), atoms_[i].lambda);

  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const double mass = atom_mass(i);
    if (std::abs(mass - 1.0) > 1e-6)
      throw std::runtime_error("DilationSpace: per-atom quadrature mass deviates from 1");
  }
}

double DilationSpace::atom_mass(std::size_t atom) const {
  double acc = 0.0;
  for (std::size_t j = 0; j < grid_.size(); ++j)
    acc += grid_.weight(j) * density_(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(atom));
  acc += (2.0 / kPi) * std::atan(atoms_[atom].lambda / grid_.half_width());
  return acc;
}

DilationVector DilationSpace::embed(const VecC& v) const {
  if (v.size() != h_dim()) throw std::invalid_argument("DilationSpace::embed: dimension mismatch");
  DilationVector f{this, MatC(static_cast<Eigen::Index>(grid_.size()), h_dim())};
  for (Eigen::Index i = 0; i < h_dim(); ++i) f.values.col(i).setConstant(v(i));
  return f;
}

DilationVector DilationSpace::zero() const {
  return DilationVector{this, MatC::Zero(static_cast<Eigen::Index>(grid_.size()), h_dim())};
}

cdouble DilationSpace::inner(const DilationVector& f, const DilationVector& g) const {
  if (f.space != this || g.space != this) throw std::invalid_argument("DilationSpace::inner: foreign vector");
  cdouble acc(0.0, 0.0);
  const double h = grid_.spacing();
  const Eigen::Index n = static_cast<Eigen::Index>(grid_.size());
  const Eigen::Index window = std::max<Eigen::Index>(n / 16, 1);
  std::vector<cdouble> product(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < h_dim(); ++i) {
    cdouble col(0.0, 0.0);
    MatC prod(n, 1);
    for (Eigen::Index j = 0; j < n; ++j) {
      const cdouble p = f.values(j, i) * std::conj(g.values(j, i));
      prod(j, 0) = p;
      col += density_(j, i) * p;
    }
    col *= h;
    // kernel tail beyond the window; skipped when the integrand has
    // already decayed at the boundary
    const double lam = atoms_[static_cast<std::size_t>(i)].lambda;
    if (boundary_active(prod, 0, window)) {
      for (Eigen::Index j = 0; j < n; ++j) product[static_cast<std::size_t>(j)] = prod(j, 0);
      col += spectral_tail(grid_, product, lam);
    }
    acc += atoms_[static_cast<std::size_t>(i)].weight * col;
  }
  return acc;
}

double DilationSpace::norm(const DilationVector& f) const {
  return std::sqrt(std::max(0.0, inner(f, f).real()));
}

cdouble DilationSpace::inner_h(const VecC& u, const VecC& v) const {
  cdouble acc(0.0, 0.0);
  for (Eigen::Index i = 0; i < h_dim(); ++i)
    acc += atoms_[static_cast<std::size_t>(i)].weight * u(i) * std::conj(v(i));
  return acc;
}

double DilationSpace::norm_h(const VecC& u) const {
  return std::sqrt(std::max(0.0, inner_h(u, u).real()));
}

DilationVector DilationSpace::evolve(const DilationVector& f, double t) const {
  DilationVector out{this, MatC(f.values.rows(), f.values.cols())};
  for (Eigen::Index j = 0; j < f.values.rows(); ++j) {
    const cdouble phase = std::exp(cdouble(0.0, -t * grid_.node(static_cast<std::size_t>(j))));
    out.values.row(j) = phase * f.values.row(j);
  }
  return out;
}

DilationVector DilationSpace::reflect(const DilationVector& f) const {
  if (!grid_.symmetric()) throw std::invalid_argument("DilationSpace::reflect: grid not symmetric");
  DilationVector out{this, MatC(f.values.rows(), f.values.cols())};
  const std::size_t n = grid_.size();
  for (std::size_t j = 0; j < n; ++j) out.values.row(static_cast<Eigen::Index>(grid_.reflect_index(j))) = f.values.row(static_cast<Eigen::Index>(j));
  return out;
}

VecC DilationSpace::project_to_h(const DilationVector& f) const {
  VecC out(h_dim());
  const double h = grid_.spacing();
  const std::size_t n = grid_.size();
  const Eigen::Index window = std::max<Eigen::Index>(static_cast<Eigen::Index>(n) / 16, 1);
  std::vector<cdouble> column(n);
  for (Eigen::Index i = 0; i < h_dim(); ++i) {
    cdouble acc(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j)
      acc += h * density_(static_cast<Eigen::Index>(j), i) * f.values(static_cast<Eigen::Index>(j), i);
    if (boundary_active(f.values, i, window)) {
      for (std::size_t j = 0; j < n; ++j) column[j] = f.values(static_cast<Eigen::Index>(j), i);
      acc += spectral_tail(grid_, column, atoms_[static_cast<std::size_t>(i)].lambda);
    }
    out(i) = acc;
  }
  return out;
}

MatC DilationSpace::compressed_evolution(double t) const {
  MatC out = MatC::Zero(h_dim(), h_dim());
  const double h = grid_.spacing();
  const std::size_t n = grid_.size();
  for (Eigen::Index i = 0; i < h_dim(); ++i) {
    cdouble acc(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j)
      acc += h * density_(static_cast<Eigen::Index>(j), i) *
             std::exp(cdouble(0.0, -t * grid_.node(j)));
    acc += oscillatory_poisson_tail(atoms_[static_cast<std::size_t>(i)].lambda, grid_.half_width(), t);
    out(i, i) = acc;
  }
  return out;
}

CheckOutcome verify_semigroup_identity(const DilationSpace& space, double t, double tol) {
  if (!(t > 0.0) || t > 5.0)
    throw std::invalid_argument("verify_semigroup_identity: t must lie in (0, 5]");
  const MatC m = space.compressed_evolution(t);
  double residual = 0.0;
  for (Eigen::Index i = 0; i < space.h_dim(); ++i) {
    const double want = std::exp(-space.atoms()[static_cast<std::size_t>(i)].lambda * t);
    residual = std::max(residual, std::abs(m(i, i) - want));
    for (Eigen::Index j = 0; j < space.h_dim(); ++j)
      if (i != j) residual = std::max(residual, std::abs(m(i, j)));
  }
  CheckOutcome out;
  out.computed = residual;
  out.expected = 0.0;
  out.residual = residual;
  out.pass = residual <= tol;
  return out;
}

SpectralMembership spectral_membership(const DilationVector& f, const IntervalUnion& F, double tol) {
  const DilationSpace& sp = *f.space;
  const Grid& g = sp.grid();
  const Grid dual = dual_grid(g);
  const double guard = 0.5 * dual.spacing();
  double outside = 0.0;
  double total = 0.0;
  for (Eigen::Index i = 0; i < sp.h_dim(); ++i) {
    std::vector<cdouble> col(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) col[j] = f.values(static_cast<Eigen::Index>(j), i);
    ComplexSamples hat = fourier_transform(ComplexSamples{g, std::move(col)});
    for (std::size_t k = 0; k < hat.values.size(); ++k) {
      const double xi = hat.grid.node(k);
      const double e = std::norm(hat.values[k]);
      total += e;
      bool inside = false;
      for (const auto& [a, b] : F) {
        // support condition supp(hat f) subset of -F
        if (xi >= -b - guard && xi <= -a + guard) { inside = true; break; }
      }
      if (!inside) outside += e;
    }
  }
  SpectralMembership out;
  out.outside_energy_fraction = total > 0.0 ? outside / total : 0.0;
  out.member = out.outside_energy_fraction <= tol;
  return out;
}

DilationVector project_plus(const DilationVector& f) {
  const DilationSpace& sp = *f.space;
  const Grid& g = sp.grid();
  DilationVector out{&sp, MatC(f.values.rows(), f.values.cols())};
  for (Eigen::Index i = 0; i < sp.h_dim(); ++i) {
    std::vector<cdouble> col(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) col[j] = f.values(static_cast<Eigen::Index>(j), i);
    ComplexSamples hat = fourier_transform(ComplexSamples{g, std::move(col)});
    for (std::size_t k = 0; k < hat.values.size(); ++k)
      if (hat.grid.node(k) > 0.0) hat.values[k] = cdouble(0.0, 0.0);
    ComplexSamples back = fourier_transform(hat, true);
    for (std::size_t j = 0; j < g.size(); ++j) out.values(static_cast<Eigen::Index>(j), i) = back.values[j];
  }
  return out;
}

ThetaEnergy theta_energy(const DilationVector& f) {
  const DilationSpace& sp = *f.space;
  ThetaEnergy out;
  out.in_plus = spectral_membership(f, {{0.0, std::numeric_limits<double>::infinity()}}).member;
  out.lhs = sp.inner(sp.reflect(f), f);
  const VecC ph = sp.project_to_h(f);
  out.rhs = sp.inner_h(ph, ph).real();
  return out;
}

std::vector<ComplexSamples> outgoing_transform(const DilationVector& f) {
  const DilationSpace& sp = *f.space;
  const Grid& g = sp.grid();
  std::vector<ComplexSamples> out;
  out.reserve(static_cast<std::size_t>(sp.h_dim()));
  for (Eigen::Index i = 0; i < sp.h_dim(); ++i) {
    const double lam = sp.atoms()[static_cast<std::size_t>(i)].lambda;
    std::vector<cdouble> col(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
      const double x = g.node(j);
      const cdouble mult = std::sqrt(lam / kPi) / cdouble(lam, x);
      col[j] = mult * f.values(static_cast<Eigen::Index>(j), i);
    }
    out.push_back(fourier_transform(ComplexSamples{g, std::move(col)}, true));
  }
  return out;
}

double outgoing_norm(const DilationSpace& space, const std::vector<ComplexSamples>& sf) {
  double acc = 0.0;
  for (std::size_t i = 0; i < sf.size(); ++i) {
    const double w = space.atoms()[i].weight;
    for (std::size_t k = 0; k < sf[i].values.size(); ++k)
      acc += w * sf[i].grid.weight(k) * std::norm(sf[i].values[k]);
  }
  return std::sqrt(acc);
}

cdouble outgoing_constant_value(const DilationSpace& space, std::size_t atom, double tau) {
  const double lam = space.atoms()[atom].lambda;
  auto g_re = [lam](double x) { return std::sqrt(lam / kPi) * lam / (lam * lam + x * x); };
  auto g_im = [lam](double x) { return -std::sqrt(lam / kPi) * x / (lam * lam + x * x); };
  // (2 pi)^{-1/2} Int (sqrt(lam/pi)/(lam + ix)) e^{i tau x} dx
  const double window = 4096.0;
  const cdouble a = oscillatory_window(g_re, -tau, window, lam);
  const cdouble b = oscillatory_window(g_im, -tau, window, lam);
  cdouble val = (a + cdouble(0.0, 1.0) * b) / kSqrt2Pi;
  // IBP tail for the 1/(lam+ix) factor against e^{i tau x}
  if (std::abs(tau) > 8.0 / window) {
    const double X = window;
    auto gc = [lam](double x) { return std::sqrt(lam / kPi) / cdouble(lam, x); };
    auto gcp = [lam](double x) { return -cdouble(0.0, 1.0) * std::sqrt(lam / kPi) / (cdouble(lam, x) * cdouble(lam, x)); };
    const cdouble it(0.0, tau);
    const cdouble up = std::exp(it * X) * (-gc(X) / it + gcp(X) / (it * it));
    const cdouble lo = std::exp(-it * X) * (gc(-X) / it - gcp(-X) / (it * it));
    val += (up + lo) / kSqrt2Pi;
  }
  return val;
}

std::vector<cdouble> twisted_involution(const Grid& grid, const std::vector<cdouble>& samples,
                                        double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("twisted_involution: lambda must be positive");
  if (grid.kind() != GridKind::Uniform) throw std::invalid_argument("twisted_involution: uniform grid required");
  if (samples.size() != grid.size()) throw std::invalid_argument("twisted_involution: size mismatch");
  std::vector<cdouble> out(samples.size());
  for (std::size_t j = 0; j < samples.size(); ++j) {
    const double x = grid.node(j);
    const cdouble m = cdouble(lambda, -x) / cdouble(lambda, x);
    out[j] = m * samples[grid.reflect_index(j)];
  }
  return out;
}

}  // namespace osq
