#pragma once

#include <vector>

#include "osq/types.hpp"

namespace osq {

bool is_power_of_two(std::size_t n);

// In-place radix-2 DFT, sign -1: X_k = sum_j x_j e^{-2 pi i jk/N}.
// No normalization is applied; N must be a power of two.
void dft_pow2(std::vector<cdouble>& a, bool inverse);

std::vector<cdouble> dft(const std::vector<cdouble>& a, bool inverse);

}  // namespace osq
