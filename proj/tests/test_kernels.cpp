#include <doctest.h>

#include <cmath>

#include "osq/kernels.hpp"
#include "osq/random.hpp"

using namespace osq;

namespace {
MatC scalar(double v) { return (MatC(1, 1) << v).finished(); }
}  // namespace

TEST_CASE("psd check on designed kernels") {
  FiniteKernel ones{3, 1, MatC::Ones(3, 3)};
  auto rep = kernel_psd_check(ones);
  CHECK(rep.psd);
  CHECK(std::abs(rep.min_eig) <= 1e-12);

  FiniteKernel bad{2, 1, (MatC(2, 2) << 1, 2, 2, 1).finished()};
  auto rep2 = kernel_psd_check(bad);
  CHECK(!rep2.psd);
  CHECK(rep2.min_eig == doctest::Approx(-1.0));

  FiniteKernel asym{2, 1, (MatC(2, 2) << 1, 2, 0, 1).finished()};
  CHECK_THROWS_AS(kernel_psd_check(asym), std::invalid_argument);
}

TEST_CASE("gns construction on the exponential semigroup") {
  SampledPDFunction f{{0.0, 1.0, 2.0}, Involution::HalfLine, 1,
                      [](double t) { return scalar(std::exp(-t)); }};
  auto gns = gns_construct(f);
  CHECK(gns.rank == 1);
  CHECK(gns.iota_surjective);
  CHECK(gns.reconstruction_residual <= 1e-10);

  SampledPDFunction grp{{-2.0, -1.0, 0.0, 1.0, 2.0}, Involution::Group, 1,
                        [](double t) { return scalar(std::exp(-std::abs(t))); }};
  auto gns2 = gns_construct(grp);
  CHECK(gns2.rank == 5);
  CHECK(!gns2.iota_surjective);
  CHECK(gns2.reconstruction_residual <= 1e-8);

  SampledPDFunction trivial{{0.0, 1.0, 2.0}, Involution::HalfLine, 2,
                            [](double) { return MatC(MatC::Identity(2, 2)); }};
  auto gns3 = gns_construct(trivial);
  CHECK(gns3.rank == 2);
  CHECK(gns3.iota_surjective);

  // non-PSD samples must be rejected
  SampledPDFunction bad{{0.0, 1.0, 2.0}, Involution::HalfLine, 1,
                        [](double t) { return scalar(1.0 - t); }};
  CHECK_THROWS_AS(gns_construct(bad), std::invalid_argument);
}

TEST_CASE("multiplicativity dichotomy") {
  SampledPDFunction half{{0.0, 0.5, 1.0, 1.5, 2.0}, Involution::HalfLine, 1,
                         [](double t) { return scalar(std::exp(-2.0 * t)); }};
  auto a = multiplicativity_check(half);
  CHECK(a.multiplicative);
  CHECK(a.iota_surjective);

  SampledPDFunction grp{{-2.0, -1.0, 0.0, 1.0, 2.0}, Involution::Group, 1,
                        [](double t) { return scalar(std::exp(-std::abs(t))); }};
  auto b = multiplicativity_check(grp);
  CHECK(!b.multiplicative);
  CHECK(!b.iota_surjective);
  // the defect appears at mixed signs: phi(1 + (-1)) = 1 vs phi(1) phi(-1) = e^{-2}
  CHECK(b.max_defect == doctest::Approx(1.0 - std::exp(-2.0)).epsilon(1e-10));

  SampledPDFunction diag{{0.0, 1.0, 2.0}, Involution::HalfLine, 2, [](double t) {
                           MatC m = MatC::Zero(2, 2);
                           m(0, 0) = std::exp(-t);
                           m(1, 1) = std::exp(-3.0 * t);
                           return m;
                         }};
  auto c = multiplicativity_check(diag);
  CHECK(c.multiplicative);
  CHECK(c.iota_surjective);
}

TEST_CASE("exponential kernel dichotomy with the scaling witness") {
  auto pos = exp_kernel_check((MatC(2, 2) << 1, 1, 1, 1).finished());
  CHECK(pos.beta_psd);
  CHECK(pos.exp_beta_psd);

  auto neg = exp_kernel_check((MatC(2, 2) << 0, 1, 1, 0).finished());
  CHECK(!neg.beta_psd);
  CHECK(!neg.exp_beta_psd);
  CHECK(neg.witness_value < -1e-3);
  CHECK(neg.witness_scale > 0.0);

  CheckRng rng(37, "test.kernels.random");
  for (int trial = 0; trial < 30; ++trial) {
    MatC beta;
    if (trial % 2 == 0) {
      const MatC a = random_complex_matrix(rng, 4, 4);
      beta = a * a.adjoint();
    } else {
      beta = random_hermitian(rng, 4) - 1.5 * MatC::Identity(4, 4);
    }
    auto r = exp_kernel_check(beta);
    CHECK(r.beta_psd == r.exp_beta_psd);
  }

  CHECK_THROWS_AS(exp_kernel_check((MatC(2, 2) << 0, 1, 0, 0).finished()), std::invalid_argument);
}

TEST_CASE("pushforward temperedness on the canonical families") {
  PushforwardMeasure atoms{MeasureFamily::FiniteAtoms, {{1.0, 2.0}, {-4.0, 1.0}}};
  auto a = pushforward_temperedness(atoms, [](double x) { return x; });
  CHECK(a.tempered);
  CHECK(a.witness_n == 0);

  PushforwardMeasure leb{MeasureFamily::LebesgueLine, {}};
  auto b = pushforward_temperedness(leb, [](double x) { return x; });
  CHECK(b.tempered);
  CHECK(b.witness_n == 1);

  PushforwardMeasure esd{MeasureFamily::ExpSqrtDensity, {}};
  auto c = pushforward_temperedness(esd, [](double x) { return x; });
  CHECK(!c.tempered);
  CHECK(c.witness_n == -1);
}
