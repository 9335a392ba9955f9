#include <doctest.h>

#include <cmath>

#include "osq/fft.hpp"
#include "osq/grid.hpp"
#include "osq/quadrature.hpp"
#include "osq/random.hpp"
#include "osq/spectral_measure.hpp"

using namespace osq;

TEST_CASE("grid invariants") {
  auto g = Grid::uniform(1.0, 8);
  CHECK(g.spacing() == doctest::Approx(0.25));
  CHECK(g.symmetric());
  CHECK_THROWS_AS(Grid::uniform(1.0, 1000), std::invalid_argument);  // not a power of two
  CHECK_THROWS_AS(Grid::uniform(-1.0, 8), std::invalid_argument);
  // reflection is an index involution
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(g.reflect_index(g.reflect_index(i)) == i);
}

TEST_CASE("integrate: constants, odd symmetry, Poisson mass") {
  auto g = Grid::uniform(1.0, 256);
  auto ones = ComplexSamples::from_function(g, [](double) { return cdouble(1.0, 0.0); });
  CHECK(std::abs(integrate(ones).real() - 2.0) <= 1e-12);

  auto odd = ComplexSamples::from_function(g, [](double x) { return cdouble(x, 0.0); });
  // the wrap node at -X is its own reflection; exclude it by oddness of the sum
  CHECK(std::abs(integrate(odd).real() + 1.0 * g.spacing()) <= 1e-12);

  auto tg = Grid::tan_substituted(1e9, 400, 10);
  auto pk = ComplexSamples::from_function(
      tg, [](double x) { return cdouble((1.0 / kPi) / (1.0 + x * x), 0.0); });
  CHECK(std::abs(integrate(pk).real() - 1.0) <= 1e-8);

  auto todd = ComplexSamples::from_function(tg, [](double x) { return cdouble(x / (1 + x * x * x * x), 0.0); });
  CHECK(std::abs(integrate(todd).real()) <= 1e-12);

  ComplexSamples bad{g, std::vector<cdouble>(3)};
  CHECK_THROWS_AS(integrate(bad), std::invalid_argument);
}

TEST_CASE("fourier transform: gaussian self-duality and impulse") {
  auto g = Grid::uniform(256.0, 1 << 14);
  auto f = ComplexSamples::from_function(g, [](double x) { return cdouble(std::exp(-0.5 * x * x), 0.0); });
  auto hat = fourier_transform(f);
  double worst = 0.0;
  for (std::size_t k = 0; k < hat.values.size(); ++k) {
    const double xi = hat.grid.node(k);
    worst = std::max(worst, std::abs(hat.values[k] - std::exp(-0.5 * xi * xi)));
  }
  CHECK(worst <= 1e-8);

  // delta-like impulse of mass sqrt(2 pi)/h transforms to the constant 1
  ComplexSamples imp{g, std::vector<cdouble>(g.size(), cdouble(0.0, 0.0))};
  std::size_t center = g.size() / 2;
  REQUIRE(g.node(center) == doctest::Approx(0.0));
  imp.values[center] = kSqrt2Pi / g.spacing();
  auto flat = fourier_transform(imp);
  for (std::size_t k = 0; k < flat.values.size(); k += 997)
    CHECK(std::abs(flat.values[k] - cdouble(1.0, 0.0)) <= 1e-12);

  CHECK_THROWS_AS(fourier_transform(ComplexSamples::from_function(
                      Grid::tan_substituted(10.0, 4), [](double) { return cdouble(1.0, 0.0); })),
                  std::invalid_argument);
}

TEST_CASE("fourier transform of the truncated exponential") {
  // half-line exponential with midpoint value at the jump
  auto g = Grid::uniform(32.0, 1 << 16);
  ComplexSamples f{g, std::vector<cdouble>(g.size(), cdouble(0.0, 0.0))};
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double x = g.node(j);
    if (x > 0.0) f.values[j] = std::exp(-x);
    else if (x == 0.0) f.values[j] = 0.5;
  }
  auto hat = fourier_transform(f);
  double worst = 0.0;
  for (std::size_t k = 0; k < hat.values.size(); ++k) {
    const double xi = hat.grid.node(k);
    if (std::abs(xi) > 10.0) continue;
    worst = std::max(worst, std::abs(hat.values[k] - 1.0 / (kSqrt2Pi * cdouble(1.0, xi))));
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("fourier round trip and Parseval on random band-limited data") {
  CheckRng rng(7, "numerics.roundtrip");
  auto g = Grid::uniform(64.0, 1 << 12);
  const Grid dual = dual_grid(g);
  ComplexSamples hat{dual, std::vector<cdouble>(dual.size(), cdouble(0.0, 0.0))};
  for (std::size_t k = 0; k < dual.size(); ++k)
    if (std::abs(dual.node(k)) < 20.0) hat.values[k] = rng.complex_normal();
  auto f = fourier_transform(hat, true);
  auto back = fourier_transform(f);
  double worst = 0.0, scale = 0.0;
  for (std::size_t k = 0; k < dual.size(); ++k) {
    worst = std::max(worst, std::abs(back.values[k] - hat.values[k]));
    scale = std::max(scale, std::abs(hat.values[k]));
  }
  CHECK(worst <= 1e-10 * scale);

  // Parseval under the unitary convention
  ComplexSamples hat2 = hat;
  for (auto& v : hat2.values) v *= rng.complex_normal();
  auto g2 = fourier_transform(hat2, true);
  cdouble xside(0.0, 0.0), kside(0.0, 0.0);
  for (std::size_t j = 0; j < g.size(); ++j)
    xside += g.weight(j) * f.values[j] * std::conj(g2.values[j]);
  for (std::size_t k = 0; k < dual.size(); ++k)
    kside += dual.weight(k) * hat.values[k] * std::conj(hat2.values[k]);
  CHECK(std::abs(xside - kside) <= 1e-8 * std::abs(xside));
}

TEST_CASE("poisson fourier pair across the oscillation range") {
  for (double lam : {0.5, 1.0, 2.0})
    for (double t : {-5.0, -2.5, -1.0, 0.0, 0.25, 1.0, 3.75, 5.0})
      CHECK(std::abs(poisson_fourier(lam, t) - std::exp(-lam * std::abs(t))) <= 1e-5);
}

TEST_CASE("laplace transform of spectral measures") {
  CHECK(SpectralMeasure::dirac(1.0).laplace(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(SpectralMeasure::dirac(0.0).laplace(3.7) == doctest::Approx(1.0));
  CHECK(std::abs(SpectralMeasure::power_density(1.0).laplace(2.0) - 0.5) <= 1e-8);
  CHECK(std::abs(SpectralMeasure::power_density(0.5).laplace(1.0) - std::tgamma(0.5)) <= 1e-8);
  CHECK(std::abs(SpectralMeasure::power_exp_cutoff(2.0, 1.0).laplace(1.0) - std::tgamma(2.0) / 4.0) <=
        1e-10);
  CHECK_THROWS_AS(SpectralMeasure::dirac(1.0).laplace(0.0), std::invalid_argument);

  // complete monotonicity: alternating finite differences up to order 3
  const auto rho = SpectralMeasure::from_atoms({{0.5, 1.0}, {2.0, 0.3}});
  std::vector<double> ladder;
  for (double x = 0.5; x <= 4.0; x += 0.25) ladder.push_back(rho.laplace(x));
  for (int order = 0; order < 4; ++order) {
    const double sign = order % 2 == 0 ? 1.0 : -1.0;
    for (double v : ladder) CHECK(sign * v >= -1e-12);
    for (std::size_t i = 0; i + 1 < ladder.size(); ++i) ladder[i] = ladder[i + 1] - ladder[i];
    ladder.pop_back();
  }
}

TEST_CASE("spectral measure invariants") {
  CHECK_THROWS_AS(SpectralMeasure::from_atoms({{1.0, -1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(SpectralMeasure::from_atoms({{0.0, 1.0}, {0.0, 2.0}}), std::invalid_argument);
  CHECK_THROWS_AS(SpectralMeasure::power_density(-1.0), std::invalid_argument);
  const auto rho = SpectralMeasure::from_atoms({{0.0, 0.5}, {1.0, 2.0}});
  CHECK(rho.has_zero_atom());
  CHECK(rho.positive_atoms().size() == 1);
}

TEST_CASE("gauss-legendre rules integrate polynomials exactly") {
  const auto& rule = gauss_legendre(6);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * std::pow(rule.nodes[i], 10);
  CHECK(acc == doctest::Approx(2.0 / 11.0).epsilon(1e-12));
}
