#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace osq {

using cdouble = std::complex<double>;
using MatC = Eigen::MatrixXcd;
using VecC = Eigen::VectorXcd;
using MatR = Eigen::MatrixXd;
using VecR = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrt2Pi = 2.50662827463100050242;

// Inner products are linear in the first argument and conjugate-linear in
// the second throughout.
inline cdouble inner(const VecC& u, const VecC& v) { return v.dot(u); }

}  // namespace osq
