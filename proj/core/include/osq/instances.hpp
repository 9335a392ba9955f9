#pragma once

#include "osq/dilation.hpp"
#include "osq/random.hpp"
#include "osq/rphs.hpp"

namespace osq {

// Random reflection positive space built as a graph over the theta
// eigenspace decomposition: E+ = span{(x, K x)} for a contraction K whose
// singular values sit in [0.1, 0.9], with `null_dirs` of them pinned to 1
// so that N is nontrivial. The result is conjugated by a random unitary.
ReflectionSpace random_reflection_space(CheckRng& rng, Eigen::Index plus_dim,
                                        Eigen::Index minus_dim, Eigen::Index null_dirs);

// Operator T = U on E+ coordinates satisfying the symmetry relation
// <theta T v, w> = <theta v, T w>, generated from a prescribed Hermitian
// quotient block plus arbitrary null-space blocks.
MatC random_symmetric_operator(CheckRng& rng, const ReflectionSpace& space, double scale = 1.5);

struct InvolutiveUnitaryInstance {
  ReflectionSpace space;
  MatC unitary_plus;  // restriction of U to E+ coordinates
  // U on the ambient space satisfies theta U theta = U^{-1}, U E+ = E+
};

InvolutiveUnitaryInstance random_involutive_unitary(CheckRng& rng, int fixed_dim, int flip_dim,
                                                    int rotation_pairs);

// Random member of the positive spectral subspace of a dilation grid:
// Gaussian spectral envelopes centered at negative frequencies, decayed
// well inside the band and in space.
DilationVector random_plus_vector(CheckRng& rng, const DilationSpace& space);

}  // namespace osq
