#pragma once

#include <vector>

#include "osq/rphs.hpp"
#include "osq/spectral_measure.hpp"

namespace osq {

// Finite models spanned by translates {U_t v} of distinguished vectors,
// with closed-form Gram matrices. theta acts by flipping the sign of the
// translation parameter, which is exact on these spans, so Markov/quotient
// questions can be decided without grid noise.

// L^2(R, nu) for nu = Theta dx, Theta = (1/pi) sum_i w_i lambda_i/(lambda_i^2 + x^2),
// spanned by {U_t 1 : t in -T..T ladder}. E0 = C 1; the quotient has one
// dimension per atom, so q(E0) is onto only for a single atom.
ReflectionSpace multiplicity_free_ladder(const SpectralMeasure& rho,
                                         const std::vector<double>& nonneg_ladder);

// Dilation space L^2(R, Q; H) spanned by {U_t iota(e_i)}; E0 = H and
// q(E0) = E-hat for every atom measure.
ReflectionSpace dilation_ladder(const SpectralMeasure& rho,
                                const std::vector<double>& nonneg_ladder);

// Hardy space of the half line spanned by shifted exponentials
// {U_t e^lambda}; E-hat is one-dimensional.
ReflectionSpace hardy_ladder(double lambda, const std::vector<double>& nonneg_ladder);

}  // namespace osq
