#include "osq/interp.hpp"

#include <algorithm>
#include <stdexcept>

#include <Eigen/Dense>

namespace osq {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n < 4 || y_.size() != n) throw std::invalid_argument("CubicSpline: need >= 4 nodes");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(x_[i] < x_[i + 1])) throw std::invalid_argument("CubicSpline: nodes must increase");

  // solve for second derivatives with not-a-knot end conditions
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  Eigen::VectorXd b = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  auto h = [&](std::size_t i) { return x_[i + 1] - x_[i]; };
  for (std::size_t i = 1; i + 1 < n; ++i) {
    A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = h(i - 1);
    A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 2.0 * (h(i - 1) + h(i));
    A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i + 1)) = h(i);
    b(static_cast<Eigen::Index>(i)) =
        6.0 * ((y_[i + 1] - y_[i]) / h(i) - (y_[i] - y_[i - 1]) / h(i - 1));
  }
  // not-a-knot: third derivative continuous across x_1 and x_{n-2}
  A(0, 0) = h(1);
  A(0, 1) = -(h(0) + h(1));
  A(0, 2) = h(0);
  A(static_cast<Eigen::Index>(n - 1), static_cast<Eigen::Index>(n - 3)) = h(n - 2);
  A(static_cast<Eigen::Index>(n - 1), static_cast<Eigen::Index>(n - 2)) = -(h(n - 3) + h(n - 2));
  A(static_cast<Eigen::Index>(n - 1), static_cast<Eigen::Index>(n - 1)) = h(n - 3);
  Eigen::VectorXd m = A.partialPivLu().solve(b);
  m_.assign(m.data(), m.data() + n);
}

double CubicSpline::operator()(double t) const {
  const std::size_t n = x_.size();
  std::size_t i = static_cast<std::size_t>(
      std::upper_bound(x_.begin(), x_.end(), t) - x_.begin());
  if (i == 0) i = 1;
  if (i >= n) i = n - 1;
  const std::size_t k = i - 1;
  const double h = x_[k + 1] - x_[k];
  const double a = (x_[k + 1] - t) / h;
  const double b = (t - x_[k]) / h;
  return a * y_[k] + b * y_[k + 1] +
         ((a * a * a - a) * m_[k] + (b * b * b - b) * m_[k + 1]) * h * h / 6.0;
}

namespace {
std::vector<double> part(const std::vector<cdouble>& y, bool re) {
  std::vector<double> out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = re ? y[i].real() : y[i].imag();
  return out;
}
}  // namespace

CubicSplineC::CubicSplineC(std::vector<double> x, const std::vector<cdouble>& y)
    : re_(x, part(y, true)), im_(std::move(x), part(y, false)) {}

cdouble CubicSplineC::operator()(double t) const { return cdouble(re_(t), im_(t)); }

}  // namespace osq
