#include <doctest.h>

#include <cmath>

#include "osq/hardy.hpp"
#include "osq/random.hpp"

using namespace osq;

TEST_CASE("hardy kernel point values") {
  CHECK(hardy_kernel(1.0, 1.0) == cdouble(0.5, 0.0));
  CHECK(std::abs(hardy_kernel(2.0, cdouble(1.0, 1.0)) - 1.0 / cdouble(3.0, -1.0)) <= 1e-15);
  CHECK_THROWS_AS(hardy_kernel(cdouble(-1.0, 0.0), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(hardy_kernel(1.0, cdouble(0.0, 2.0)), std::invalid_argument);
}

TEST_CASE("laplace transform values and the unitarity ingredients") {
  auto e1 = HalfLineFunction::from_function([](double x) { return cdouble(std::exp(-x), 0.0); });
  CHECK(std::abs(laplace_unitary(e1, 1.0) - 0.5) <= 1e-8);
  auto ind = HalfLineFunction::from_function(
      [](double x) { return cdouble(x <= 1.0 ? 1.0 : 0.0, 0.0); });
  CHECK(std::abs(laplace_unitary(ind, 1.0) - (1.0 - std::exp(-1.0))) <= 1e-6);
  auto zero = HalfLineFunction::from_function([](double) { return cdouble(0.0, 0.0); });
  CHECK(laplace_unitary(zero, cdouble(2.0, 1.0)) == cdouble(0.0, 0.0));
  CHECK_THROWS_AS(laplace_unitary(e1, cdouble(-0.2, 1.0)), std::invalid_argument);
}

TEST_CASE("laplace intertwining under the shift") {
  auto f = HalfLineFunction::from_function(
      [](double x) { return cdouble(x * std::exp(-0.8 * x), 0.0); });
  for (double t : {0.5, 1.5}) {
    const cdouble z(1.0, -0.5);
    const cdouble lhs = laplace_unitary(shift_half_line(f, t), z);
    const cdouble rhs = std::exp(-t * z) * laplace_unitary(f, z);
    CHECK(std::abs(lhs - rhs) <= 1e-6);
  }
}

TEST_CASE("theta identity: exponential fixed vector") {
  for (double lam : {0.5, 1.0, 2.0}) {
    auto f = HalfLineFunction::from_function(
        [lam](double x) { return cdouble(std::exp(-lam * x), 0.0); });
    auto rep = hardy_theta_check(f, lam);
    CHECK(std::abs(rep.lhs - 0.5 / lam) <= 1e-4);
    CHECK(std::abs(rep.rhs - 0.5 / lam) <= 1e-8);
  }
  CHECK(std::abs(theta_fixed_exponential_residual(1.0)) <= 1e-6);
}

TEST_CASE("theta identity on random functions is the Laplace square") {
  CheckRng rng(31, "test.hardy.random");
  for (int trial = 0; trial < 12; ++trial) {
    const double a = rng.uniform(0.5, 1.5);
    const double b = rng.uniform(0.3, 2.0);
    const cdouble amp = rng.complex_normal();
    auto f = HalfLineFunction::from_function([=](double x) {
      return amp * std::exp(-a * x) + std::exp(-b * x) * cdouble(0.2, 0.1) * x;
    });
    for (double lam : {0.5, 1.0, 2.0}) {
      auto rep = hardy_theta_check(f, lam);
      CHECK(std::abs(rep.lhs - rep.rhs) <= 1e-4 * std::max(1.0, rep.rhs));
      CHECK(rep.lhs >= -1e-8);
    }
  }
}

TEST_CASE("laplace-null functions sit in the kernel of the twisted form") {
  const double lam = 1.0;
  const double c = (1.0 / (lam + 1.0)) / (1.0 / (lam + 2.0));
  auto f = HalfLineFunction::from_function(
      [c](double x) { return cdouble(std::exp(-x) - c * std::exp(-2.0 * x), 0.0); });
  CHECK(std::abs(laplace_unitary(f, lam)) <= 1e-10);
  auto rep = hardy_theta_check(f, lam);
  CHECK(std::abs(rep.lhs) <= 1e-4);
  CHECK(std::abs(rep.rhs) <= 1e-10);
}

TEST_CASE("fixed subspace of the sampled model is one dimensional") {
  CHECK(theta_fixed_subspace_dimension(1.0, 8) == 1);
  CHECK(theta_fixed_subspace_dimension(0.5, 8) == 1);
}

TEST_CASE("multiplier identities hold pointwise") {
  for (double x : {-3.0, -0.5, 0.0, 1.0, 40.0}) {
    const cdouble m = hardy_multiplier(1.3, x);
    CHECK(std::abs(m * hardy_multiplier(1.3, -x) - 1.0) <= 1e-15);
    CHECK(std::abs(std::conj(m) - hardy_multiplier(1.3, -x)) <= 1e-15);
  }
}
