#include <doctest.h>

#include <cmath>

#include "osq/groups.hpp"
#include "osq/random.hpp"

using namespace osq;

namespace {
AxbFunction sample(const WeightedHalfLine& sp, const std::function<cdouble(double)>& f) {
  AxbFunction out{&sp, std::vector<cdouble>(sp.rule.nodes.size())};
  for (std::size_t i = 0; i < sp.rule.nodes.size(); ++i) out.values[i] = f(sp.rule.nodes[i]);
  return out;
}

TensorField plus_field() {
  TensorField f{Grid::uniform(32.0, 1 << 11), Grid::uniform(12.0, 1 << 8), MatC()};
  const Grid dual = dual_grid(f.x);
  std::vector<cdouble> hat(dual.size(), cdouble(0.0, 0.0));
  for (std::size_t k = 0; k < dual.size(); ++k) {
    const double xi = dual.node(k);
    if (xi > 0.0) continue;
    const double u = (xi + 1.5) / 0.25;
    if (std::abs(u) < 12.0) hat[k] = std::exp(-0.5 * u * u);
  }
  auto xprof = fourier_transform(ComplexSamples{dual, hat}, true);
  f.values.resize(static_cast<Eigen::Index>(f.x.size()), static_cast<Eigen::Index>(f.y.size()));
  for (std::size_t i = 0; i < f.x.size(); ++i)
    for (std::size_t j = 0; j < f.y.size(); ++j)
      f.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          xprof.values[i] * std::exp(-0.5 * f.y.node(j) * f.y.node(j));
  f.values /= tensor_norm(f);
  return f;
}
}  // namespace

TEST_CASE("affine group law and identity action") {
  const auto g = axb_mul({1.0, 2.0}, {3.0, 0.5});
  CHECK(g.t == doctest::Approx(7.0));
  CHECK(g.a == doctest::Approx(1.0));
  CHECK_THROWS_AS(axb_mul({0.0, -1.0}, {0.0, 1.0}), std::invalid_argument);

  auto sp = WeightedHalfLine::make(1.0);
  auto f = sample(sp, [](double x) { return cdouble(std::exp(-x), 0.1 * x * std::exp(-x)); });
  auto idf = axb_act({0.0, 1.0}, f);
  double worst = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i)
    worst = std::max(worst, std::abs(idf.values[i] - f.values[i]));
  CHECK(worst <= 1e-9);
}

TEST_CASE("affine action is unitary: the substitution-rule example") {
  auto sp = WeightedHalfLine::make(1.0);
  auto f = sample(sp, [](double x) { return cdouble(std::exp(-x), 0.0); });
  auto pf = axb_act({0.0, 2.0}, f);
  const double n0 = std::sqrt(axb_inner(f, f).real());
  const double n1 = std::sqrt(axb_inner(pf, pf).real());
  CHECK(std::abs(n0 - std::sqrt(0.5)) <= 1e-8);
  CHECK(std::abs(n1 - n0) <= 1e-4);

  // scaling a support out of the grid is refused
  auto slow = sample(sp, [](double x) { return cdouble(1.0 / (1.0 + x), 0.0); });
  CHECK_THROWS_AS(axb_act({0.0, 8.0}, slow), std::invalid_argument);
}

TEST_CASE("affine group law on sampled elements") {
  auto sp = WeightedHalfLine::make(1.0);
  auto f = sample(sp, [](double x) { return cdouble(x * std::exp(-x), 0.0); });
  CheckRng rng(41, "test.groups.axb");
  for (int trial = 0; trial < 5; ++trial) {
    const AxbPoint g1{rng.uniform(-0.5, 0.5), rng.uniform(0.9, 1.3)};
    const AxbPoint g2{rng.uniform(-0.5, 0.5), rng.uniform(0.9, 1.3)};
    auto lhs = axb_act(g1, axb_act(g2, f));
    auto rhs = axb_act(axb_mul(g1, g2), f);
    double acc = 0.0;
    for (std::size_t i = 0; i < lhs.values.size(); ++i)
      acc += sp.rule.weights[i] * std::norm(lhs.values[i] - rhs.values[i]);
    CHECK(std::sqrt(acc) <= 1e-4);
  }
}

TEST_CASE("laplace-side matrix coefficients") {
  auto sp = WeightedHalfLine::make(2.0);
  auto f = sample(sp, [](double x) { return cdouble(std::exp(-0.5 * x), 0.0); });
  const auto pf = axb_act({1.0, 1.0}, f);
  const cdouble want = std::tgamma(2.0) * std::pow(cdouble(1.0, -1.0), -2.0);
  CHECK(std::abs(axb_inner(pf, f) - want) <= 1e-6);
}

TEST_CASE("fourier constant of the homogeneous symbol matches the gamma-quotient") {
  const auto rep = axb_fourier_constant_check(0.25);
  CHECK(std::abs(rep.fitted_exponent + 0.5) <= 1e-2);
  CHECK(rep.matches != 0);
  CHECK(std::abs(rep.fitted_constant - rep.riesz_constant) <= 1e-2 * rep.riesz_constant);
  CHECK_THROWS_AS(axb_fourier_constant_check(0.7), std::invalid_argument);
}

TEST_CASE("weyl commutation phase") {
  const auto f = plus_field();
  CHECK(weyl_commutation_residual(f, 1.0, kPi) <= 1e-8);
  CHECK(weyl_commutation_residual(f, 0.3, 2.2) <= 1e-8);
}

TEST_CASE("nilpotent group composition in exponential coordinates") {
  double p, q, z;
  heisenberg_mul(1.0, 0.0, 0.0, 0.0, 1.0, 0.0, p, q, z);
  CHECK(p == doctest::Approx(1.0));
  CHECK(q == doctest::Approx(1.0));
  CHECK(z == doctest::Approx(0.5));

  const auto f = plus_field();
  auto lhs = heisenberg_act_element(heisenberg_act_element(f, 0.0, 1.0, 0.0), 1.0, 0.0, 0.0);
  auto rhs = heisenberg_act_element(f, 1.0, 1.0, 0.5);
  TensorField diff{f.x, f.y, lhs.values - rhs.values};
  CHECK(tensor_norm(diff) <= 1e-6);
  CHECK(std::abs(tensor_norm(lhs) - 1.0) <= 1e-6);
}

TEST_CASE("projection identity and the spectral precondition") {
  const auto f = plus_field();
  CHECK(positive_x_spectrum_fraction(f) <= 1e-8);
  const auto rep = heisenberg_p0_check(f);
  CHECK(rep.residual <= 1e-6);

  TensorField flipped{f.x, f.y, f.values.conjugate()};
  CHECK(positive_x_spectrum_fraction(flipped) > 0.9);
  CHECK_THROWS_AS(heisenberg_p0_check(flipped), std::invalid_argument);
}

TEST_CASE("central flow preserves the plus subspace, the shear flow does not") {
  const auto f = plus_field();
  const auto zf = heisenberg_act(f, HeisenbergGenerator::Z, 0.5);
  CHECK(positive_x_spectrum_fraction(zf) <= 1e-10);
  const auto qf = heisenberg_act(f, HeisenbergGenerator::Q, 1.0);
  CHECK(positive_x_spectrum_fraction(qf) <= 1e-10);

  const auto pf = heisenberg_act(f, HeisenbergGenerator::P, 1.0);
  const auto proj = project_plus_x(pf);
  TensorField diff{f.x, f.y, proj.values - pf.values};
  CHECK(tensor_norm(diff) > 1e-2);
}

TEST_CASE("covariant scaling of the dilation model") {
  auto bump = [](double x) {
    return cdouble(std::exp(-0.02 * x * x), 0.0) * std::exp(cdouble(0.0, -0.5 * x));
  };
  auto id = covariant_dilation_check(SpectralMeasure::dirac(1.0), 1.0, 0.7, bump);
  CHECK(id.intertwine_residual <= 1e-12);
  CHECK(id.projection_residual <= 1e-12);
  auto sc = covariant_dilation_check(SpectralMeasure::dirac(1.0), 2.0, 0.7, bump);
  CHECK(sc.intertwine_residual <= 1e-6);
  CHECK(sc.projection_residual <= 1e-4);
}
