#pragma once

#include <cstdint>
#include <string>

#include "osq/types.hpp"

namespace osq {

// Counter-based generator seeded from (seed, label). Streams are
// independent of check execution order, which keeps parallel suite runs
// reproducible.
class CheckRng {
 public:
  CheckRng(std::uint64_t seed, const std::string& label);

  std::uint64_t next_u64();
  double uniform(double lo = 0.0, double hi = 1.0);
  double normal();
  cdouble complex_normal();
  int uniform_int(int lo, int hi);  // inclusive

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

MatC random_unitary(CheckRng& rng, Eigen::Index n);
MatC random_complex_matrix(CheckRng& rng, Eigen::Index rows, Eigen::Index cols, double scale = 1.0);
MatC random_hermitian(CheckRng& rng, Eigen::Index n, double scale = 1.0);

}  // namespace osq
