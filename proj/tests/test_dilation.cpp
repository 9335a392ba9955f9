#include <doctest.h>

#include <cmath>

#include "osq/dilation.hpp"
#include "osq/instances.hpp"

using namespace osq;

namespace {
Grid test_grid() { return Grid::uniform(256.0, 1 << 14); }
double bin_time(const Grid& g, double t) {
  const double dxi = 2.0 * kPi / (static_cast<double>(g.size()) * g.spacing());
  return std::round(t / dxi) * dxi;
}
}  // namespace

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(DilationSpace(SpectralMeasure::dirac(0.0), test_grid()), std::invalid_argument);
  CHECK_THROWS_AS(DilationSpace(SpectralMeasure::power_density(1.0), test_grid()),
                  std::invalid_argument);
  CHECK_THROWS_AS(DilationSpace(SpectralMeasure::dirac(1.0), Grid::tan_substituted(100.0, 10)),
                  std::invalid_argument);
}

TEST_CASE("embedded constants have unit norm per atom mass") {
  DilationSpace sp(SpectralMeasure::from_atoms({{1.0, 1.0}, {2.0, 1.0}}), test_grid());
  CHECK(sp.h_dim() == 2);
  for (std::size_t i = 0; i < 2; ++i) CHECK(std::abs(sp.atom_mass(i) - 1.0) <= 1e-6);
  VecC v(2);
  v << 1.0, 0.0;
  CHECK(std::abs(sp.norm(sp.embed(v)) - 1.0) <= 1e-6);
}

TEST_CASE("flow algebra is exact at sample level") {
  DilationSpace sp(SpectralMeasure::dirac(1.0), test_grid());
  CheckRng rng(3, "test.dilation.algebra");
  DilationVector f = random_plus_vector(rng, sp);
  auto maxdiff = [](const DilationVector& a, const DilationVector& b) {
    return (a.values - b.values).cwiseAbs().maxCoeff();
  };
  CHECK(maxdiff(sp.evolve(f, 0.0), f) == 0.0);
  CHECK(maxdiff(sp.reflect(sp.reflect(f)), f) == 0.0);
  CHECK(maxdiff(sp.evolve(sp.evolve(f, 1.0), -1.0), f) <= 1e-14);
  CHECK(maxdiff(sp.evolve(sp.evolve(f, 0.3), 0.4), sp.evolve(f, 0.7)) <= 1e-13);
  CHECK(maxdiff(sp.reflect(sp.evolve(sp.reflect(f), 0.6)), sp.evolve(f, -0.6)) <= 1e-14);
  CHECK(std::abs(sp.norm(sp.evolve(f, 2.2)) - sp.norm(f)) <= 1e-12);
  // reflection of a phase inverts it
  DilationVector phase = sp.embed(VecC::Ones(1));
  phase = sp.evolve(phase, 1.0);
  DilationVector rphase = sp.reflect(phase);
  for (std::size_t j = 1; j < sp.grid().size(); j += 4097) {
    const double x = sp.grid().node(j);
    CHECK(std::abs(rphase.values(static_cast<Eigen::Index>(j), 0) -
                   std::exp(cdouble(0.0, x))) <= 1e-12);
  }
}

TEST_CASE("compressed evolution matches the contraction semigroup") {
  DilationSpace sp(SpectralMeasure::from_atoms({{1.0, 1.0}, {3.0, 1.0}}), test_grid());
  auto r = verify_semigroup_identity(sp, 0.5);
  CHECK(r.pass);
  CHECK(r.residual <= 1e-4);
  // frozen diagonal values diag(e^{-0.5}, e^{-1.5})
  const MatC m = sp.compressed_evolution(0.5);
  CHECK(std::abs(m(0, 0) - std::exp(-0.5)) <= 1e-4);
  CHECK(std::abs(m(1, 1) - std::exp(-1.5)) <= 1e-4);
  CHECK_THROWS_AS(verify_semigroup_identity(sp, 6.0), std::invalid_argument);
  CHECK_THROWS_AS(verify_semigroup_identity(sp, 0.0), std::invalid_argument);
}

TEST_CASE("projection onto H") {
  DilationSpace sp(SpectralMeasure::dirac(1.0), test_grid());
  // constants are fixed
  VecC v(1);
  v << cdouble(0.3, -0.7);
  CHECK(std::abs(sp.project_to_h(sp.embed(v))(0) - v(0)) <= 1e-6);
  // evolved constants pick up the semigroup factor
  const double t = bin_time(sp.grid(), 1.0);
  CHECK(std::abs(sp.project_to_h(sp.evolve(sp.embed(VecC::Ones(1)), t))(0) - std::exp(-t)) <= 1e-6);
  // odd functions die
  DilationVector odd = sp.zero();
  for (std::size_t j = 0; j < sp.grid().size(); ++j) {
    const double x = sp.grid().node(j);
    odd.values(static_cast<Eigen::Index>(j), 0) = x * std::exp(-0.01 * x * x);
  }
  CHECK(std::abs(sp.project_to_h(odd)(0)) <= 1e-10);
}

TEST_CASE("spectral membership and the positive projection") {
  DilationSpace sp(SpectralMeasure::dirac(1.0), test_grid());
  const double inf = std::numeric_limits<double>::infinity();
  DilationVector one = sp.embed(VecC::Ones(1));
  CHECK(spectral_membership(one, {{0.0, 0.0}}).member);
  const double t = bin_time(sp.grid(), 0.8);
  DilationVector ut = sp.evolve(one, t);
  CHECK(spectral_membership(ut, {{0.0, inf}}).member);
  CHECK(spectral_membership(ut, {{t - 0.01, t + 0.01}}).member);
  CHECK(!spectral_membership(ut, {{0.0, 0.0}}).member);
  DilationVector um = sp.evolve(one, -t);
  CHECK(!spectral_membership(um, {{0.0, inf}}).member);

  // projection: constants unchanged, positive-t evolutions unchanged,
  // negative-t evolutions reflect to zero... their positive part vanishes
  CHECK((project_plus(one).values - one.values).cwiseAbs().maxCoeff() <= 1e-10);
  CHECK((project_plus(ut).values - ut.values).cwiseAbs().maxCoeff() <= 1e-8);
  CHECK(project_plus(um).values.cwiseAbs().maxCoeff() <= 1e-8);
  // theta-positivity of the projected reflection
  DilationVector pum = project_plus(sp.reflect(um));
  CHECK(sp.inner(sp.reflect(pum), pum).real() >= -1e-8);
}

TEST_CASE("theta energy identity") {
  DilationSpace sp(SpectralMeasure::dirac(1.0), test_grid());
  VecC v(1);
  v << 1.0;
  auto base = theta_energy(sp.embed(v));
  CHECK(base.in_plus);
  CHECK(std::abs(base.lhs.real() - 1.0) <= 1e-5);
  CHECK(std::abs(base.rhs - 1.0) <= 1e-5);
  const double t = bin_time(sp.grid(), 1.0);
  auto ev = theta_energy(sp.evolve(sp.embed(v), t));
  CHECK(std::abs(ev.lhs.real() - std::exp(-2.0 * t)) <= 1e-4);
  CHECK(std::abs(ev.rhs - std::exp(-2.0 * t)) <= 1e-4);
  auto um = theta_energy(sp.evolve(sp.embed(v), -t));
  CHECK(!um.in_plus);  // identity reported only on members
}

TEST_CASE("outgoing realization") {
  DilationSpace sp(SpectralMeasure::dirac(1.0), test_grid());
  DilationVector one = sp.embed(VecC::Ones(1));
  auto sf = outgoing_transform(one);
  REQUIRE(sf.size() == 1);
  CHECK(std::abs(outgoing_norm(sp, sf) - sp.norm(one)) <= 1e-6);
  // frozen profile value sqrt(2) e^{-1} at tau = 1
  CHECK(std::abs(outgoing_constant_value(sp, 0, 1.0) -
                 cdouble(std::sqrt(2.0) * std::exp(-1.0), 0.0))
            .real() <= 1e-3);
  CHECK(std::abs(std::abs(outgoing_constant_value(sp, 0, 1.0)) - 0.52026009502) <= 1e-6);
  CHECK(std::abs(outgoing_constant_value(sp, 0, -0.5)) <= 1e-6);

  CheckRng rng(5, "test.dilation.outgoing");
  for (int trial = 0; trial < 5; ++trial) {
    DilationVector f = random_plus_vector(rng, sp);
    CHECK(std::abs(outgoing_norm(sp, outgoing_transform(f)) - sp.norm(f)) <= 1e-4);
  }
}

TEST_CASE("twisted involution identities") {
  const Grid g = test_grid();
  CheckRng rng(7, "test.dilation.twisted");
  std::vector<cdouble> f(g.size());
  for (std::size_t j = 0; j < g.size(); ++j)
    f[j] = rng.complex_normal() * std::exp(-0.001 * g.node(j) * g.node(j));
  for (double lam : {0.5, 2.0}) {
    auto f2 = twisted_involution(g, twisted_involution(g, f, lam), lam);
    double worst = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) worst = std::max(worst, std::abs(f2[j] - f[j]));
    CHECK(worst <= 1e-10);
  }
  CHECK_THROWS_AS(twisted_involution(g, f, -1.0), std::invalid_argument);
}
