#pragma once

#include <vector>

#include "osq/types.hpp"

namespace osq {

// Not-a-knot cubic spline through strictly increasing nodes. Evaluations
// outside the node range use the boundary cubic (callers guard the range).
class CubicSpline {
 public:
  CubicSpline(std::vector<double> x, std::vector<double> y);
  double operator()(double t) const;

 private:
  std::vector<double> x_, y_, m_;  // m_ = second derivatives
};

class CubicSplineC {
 public:
  CubicSplineC(std::vector<double> x, const std::vector<cdouble>& y);
  cdouble operator()(double t) const;

 private:
  CubicSpline re_, im_;
};

}  // namespace osq
