#pragma once

#include <functional>
#include <string>
#include <vector>

#include "osq/types.hpp"

namespace osq {

// Block kernel over a finite index set: n x n array of k x k blocks.
struct FiniteKernel {
  Eigen::Index points = 0;
  Eigen::Index block = 1;
  MatC values;  // (points*block) x (points*block)
};

struct PsdReport {
  double min_eig = 0.0;
  double norm = 0.0;
  bool psd = false;
};

PsdReport kernel_psd_check(const FiniteKernel& k, double tol_rel = 1e-10);

enum class Involution { HalfLine, Group };  // s* = s, resp. s* = -s

// Operator-valued positive definite function sampled on real semigroup
// elements; phi must be evaluable on the closure of {s_i + s_j*}.
struct SampledPDFunction {
  std::vector<double> elements;  // must contain 0 (the identity)
  Involution involution = Involution::HalfLine;
  Eigen::Index block = 1;
  std::function<MatC(double)> phi;
};

FiniteKernel pd_kernel(const SampledPDFunction& f);

struct GnsData {
  MatC gram;            // nk x nk
  Eigen::Index rank = 0;
  MatC features;        // rank x nk coordinates of the sampled vectors
  MatC iota;            // rank x k embedding of the base space
  bool iota_surjective = false;
  double reconstruction_residual = 0.0;  // max_s ||ev pi(s) ev* - phi(s)||
};

GnsData gns_construct(const SampledPDFunction& f, double tol_rel = 1e-10);

struct MultiplicativityReport {
  bool multiplicative = false;
  bool iota_surjective = false;
  double max_defect = 0.0;  // max ||phi(s+t) - phi(s) phi(t)||
};

MultiplicativityReport multiplicativity_check(const SampledPDFunction& f, double tol = 1e-8);

struct ExpKernelReport {
  bool beta_psd = false;
  bool exp_beta_psd = false;  // e^{t beta} positive definite across the scale sweep
  double witness_value = 0.0; // most negative quadratic value found (scaled points construction)
  double witness_scale = 0.0;
};

ExpKernelReport exp_kernel_check(const MatC& beta, double tol_rel = 1e-10);

enum class MeasureFamily { FiniteAtoms, LebesgueLine, ExpSqrtDensity };

struct PushforwardMeasure {
  MeasureFamily family = MeasureFamily::FiniteAtoms;
  std::vector<std::pair<double, double>> atoms;  // (location, weight) for FiniteAtoms
};

struct TemperedPushforward {
  bool tempered = false;
  int witness_n = -1;  // smallest n <= 8 with Int (1 + |eta|^2)^{-n} dmu finite
};

// temperedness of the pushforward of mu under eta, per the canonical
// integrability criterion; parametric tails decided analytically
TemperedPushforward pushforward_temperedness(const PushforwardMeasure& mu,
                                             const std::function<double(double)>& eta);

}  // namespace osq
