#include <doctest.h>

#include <cmath>

#include "osq/instances.hpp"
#include "osq/ladder_model.hpp"
#include "osq/rphs.hpp"

using namespace osq;

namespace {
const std::vector<double> kLadder{0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0};
}

TEST_CASE("reflection space validation") {
  MatC not_involutive(2, 2);
  not_involutive << 0, 1, 0, 1;
  MatC e1 = MatC::Zero(2, 1);
  e1(0, 0) = 1.0;
  CHECK_THROWS_AS(ReflectionSpace(not_involutive, e1), std::invalid_argument);

  MatC not_orthonormal(2, 1);
  not_orthonormal << 1.0, 1.0;
  CHECK_THROWS_AS(ReflectionSpace(MatC::Identity(2, 2), not_orthonormal), std::invalid_argument);
}

TEST_CASE("theta positivity on the two-dimensional examples") {
  MatC swap(2, 2);
  swap << 0, 1, 1, 0;
  MatC e1 = MatC::Zero(2, 1);
  e1(0, 0) = 1.0;
  auto r = check_theta_positive(ReflectionSpace(swap, e1));
  CHECK(r.pass);
  CHECK(r.min_eig == doctest::Approx(0.0));

  MatC refl = MatC::Zero(2, 2);
  refl(0, 0) = 1.0;
  refl(1, 1) = -1.0;
  MatC e2 = MatC::Zero(2, 1);
  e2(1, 0) = 1.0;
  auto r2 = check_theta_positive(ReflectionSpace(refl, e2));
  CHECK(!r2.pass);
  CHECK(r2.min_eig == doctest::Approx(-1.0));
}

TEST_CASE("quotient arithmetic: the 3/5 example") {
  MatC refl = MatC::Zero(2, 2);
  refl(0, 0) = 1.0;
  refl(1, 1) = -1.0;
  MatC b(2, 1);
  b << 2.0 / std::sqrt(5.0), 1.0 / std::sqrt(5.0);
  auto q = quotient_space(ReflectionSpace(refl, b));
  CHECK(q.hat_dim == 1);
  CHECK((q.q_matrix * VecC::Ones(1)).squaredNorm() == doctest::Approx(3.0 / 5.0).epsilon(1e-12));
  // positivity failure refuses the construction
  MatC e2 = MatC::Zero(2, 1);
  e2(1, 0) = 1.0;
  CHECK_THROWS_AS(quotient_space(ReflectionSpace(refl, e2)), std::runtime_error);
}

TEST_CASE("totally null plus space quantizes to the zero-dimensional space") {
  MatC swap(2, 2);
  swap << 0, 1, 1, 0;
  MatC e1 = MatC::Zero(2, 1);
  e1(0, 0) = 1.0;
  ReflectionSpace space(swap, e1);
  auto q = quotient_space(space);
  CHECK(q.hat_dim == 0);
  CHECK(q.null_coords.cols() == 1);
  // operations return zero-dimensional objects rather than errors
  MatC t = MatC::Identity(1, 1);
  auto quant = os_quantize(space, t);
  CHECK(quant.op_hat.rows() == 0);
  CHECK(quant.norm_hat == 0.0);
}

TEST_CASE("os quantization with the identity involution is the identity functor") {
  CheckRng rng(11, "test.rphs.identity_involution");
  const Eigen::Index n = 4;
  MatC basis = random_complex_matrix(rng, n, 2);
  Eigen::HouseholderQR<MatC> qr(basis);
  MatC b = MatC(qr.householderQ()).leftCols(2);
  ReflectionSpace space(MatC::Identity(n, n), b);
  const MatC h = random_hermitian(rng, 2);
  auto quant = os_quantize(space, h);
  CHECK((quant.op_hat - h).norm() <= 1e-10);
}

TEST_CASE("os quantization rejects broken symmetry and null leakage") {
  CheckRng rng(13, "test.rphs.reject");
  ReflectionSpace space = random_reflection_space(rng, 3, 4, 1);
  const MatC t = random_complex_matrix(rng, 3, 3);
  CHECK_THROWS_AS(os_quantize(space, t), std::invalid_argument);
}

TEST_CASE("contraction bound and hermitian quantization on random instances") {
  CheckRng rng(17, "test.rphs.contraction");
  for (int trial = 0; trial < 40; ++trial) {
    ReflectionSpace space = random_reflection_space(rng, 3 + trial % 3, 4, trial % 3);
    const MatC t = random_symmetric_operator(rng, space);
    auto quant = os_quantize(space, t);
    CHECK(quant.norm_hat <= quant.norm_ambient + 1e-10);
    CHECK((quant.op_hat - MatC(quant.op_hat.adjoint())).norm() <=
          1e-9 * std::max(1.0, quant.op_hat.norm()));
  }
}

TEST_CASE("involutive unitaries quantize to involutions") {
  CheckRng rng(19, "test.rphs.involutive");
  for (int trial = 0; trial < 10; ++trial) {
    auto inst = random_involutive_unitary(rng, 2, 2, 1);
    auto quant = os_quantize(inst.space, inst.unitary_plus, inst.unitary_plus, 1e-7);
    const Eigen::Index r = quant.op_hat.rows();
    REQUIRE(r == 4);  // fixed and flip blocks survive, rotation pairs are null
    CHECK((quant.op_hat * quant.op_hat - MatC::Identity(r, r)).norm() <= 1e-8);
    CHECK(quant.norm_hat <= 1.0 + 1e-10);
  }
}

TEST_CASE("markov dichotomy on the ladder models") {
  const auto rho2 = SpectralMeasure::from_atoms({{1.0, 1.0}, {2.0, 1.0}});
  auto good = check_markov(dilation_ladder(rho2, kLadder));
  CHECK(good.markov_holds);
  CHECK(good.q_e0_onto);
  CHECK(good.hat_dim == 2);
  CHECK(good.e0_dim == 2);

  auto bad = check_markov(multiplicity_free_ladder(rho2, kLadder));
  CHECK(!bad.markov_holds);
  CHECK(!bad.q_e0_onto);
  CHECK(bad.hat_dim == 2);
  CHECK(bad.e0_dim == 1);

  auto hardy = check_markov(hardy_ladder(1.0, kLadder));
  CHECK(hardy.markov_holds);
  CHECK(hardy.hat_dim == 1);
}

TEST_CASE("structural decomposition and its diagnostic") {
  auto ok = structural_decomposition(hardy_ladder(1.0, kLadder));
  REQUIRE(ok.applicable);
  CHECK(ok.ortho_residual <= 1e-8);

  auto diag = structural_decomposition(
      multiplicity_free_ladder(SpectralMeasure::from_atoms({{1.0, 1.0}, {2.0, 1.0}}), kLadder));
  CHECK(!diag.applicable);
  CHECK(diag.diagnostic.find("q(E0)") != std::string::npos);

  // identity involution: N = 0 and the decomposition is trivial
  CheckRng rng(23, "test.rphs.trivial_decomp");
  MatC basis = random_complex_matrix(rng, 3, 2);
  Eigen::HouseholderQR<MatC> qr(basis);
  auto triv = structural_decomposition(
      ReflectionSpace(MatC::Identity(3, 3), MatC(qr.householderQ()).leftCols(2)));
  REQUIRE(triv.applicable);
  CHECK(triv.n_basis.cols() == 0);
}

TEST_CASE("quotient form identity and contractivity of q") {
  CheckRng rng(29, "test.rphs.qform");
  for (int trial = 0; trial < 10; ++trial) {
    ReflectionSpace space = random_reflection_space(rng, 4, 5, trial % 2);
    auto q = quotient_space(space);
    CHECK((MatC(q.q_matrix.adjoint() * q.q_matrix) - q.twisted_gram).norm() <=
          1e-8 * std::max(1.0, q.twisted_gram.norm()));
    for (int v = 0; v < 5; ++v) {
      VecC c(space.plus_dim());
      for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = rng.complex_normal();
      CHECK((q.q_matrix * c).norm() <= c.norm() * (1.0 + 1e-10));
    }
  }
}

TEST_CASE("fixed point reduction") {
  const Grid grid = Grid::uniform(256.0, 1 << 12);
  auto a = reduce_fixed_points(SpectralMeasure::dirac(0.0), grid);
  CHECK(a.e_fix_dim == 1);
  CHECK(a.hat_fix_dim == 1);
  CHECK(a.isometry_residual <= 1e-8);
  auto b = reduce_fixed_points(SpectralMeasure::from_atoms({{0.0, 1.0}, {1.0, 1.0}}), grid);
  CHECK(b.e_fix_dim == 1);
  CHECK(b.isometry_residual <= 1e-6);
  auto c = reduce_fixed_points(SpectralMeasure::dirac(1.0), grid);
  CHECK(c.e_fix_dim == 0);
}
