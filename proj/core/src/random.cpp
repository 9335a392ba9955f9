#include "osq/random.hpp"

#include <cmath>

namespace osq {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t splitmix(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

CheckRng::CheckRng(std::uint64_t seed, const std::string& label) {
  state_ = seed ^ fnv1a(label);
  // decorrelate nearby seeds
  for (int i = 0; i < 4; ++i) (void)splitmix(state_);
}

std::uint64_t CheckRng::next_u64() { return splitmix(state_); }

double CheckRng::uniform(double lo, double hi) {
  const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

double CheckRng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform(1e-300, 1.0);
  double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(2.0 * kPi * u2);
  have_spare_ = true;
  return r * std::cos(2.0 * kPi * u2);
}

cdouble CheckRng::complex_normal() { return cdouble(normal(), normal()) / std::sqrt(2.0); }

int CheckRng::uniform_int(int lo, int hi) {
  return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
}

MatC random_complex_matrix(CheckRng& rng, Eigen::Index rows, Eigen::Index cols, double scale) {
  MatC m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = scale * rng.complex_normal();
  return m;
}

MatC random_unitary(CheckRng& rng, Eigen::Index n) {
  MatC m = random_complex_matrix(rng, n, n);
  Eigen::HouseholderQR<MatC> qr(m);
  MatC q = qr.householderQ();
  return q;
}

MatC random_hermitian(CheckRng& rng, Eigen::Index n, double scale) {
  MatC m = random_complex_matrix(rng, n, n, scale);
  return 0.5 * (m + MatC(m.adjoint()));
}

}  // namespace osq
