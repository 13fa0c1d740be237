#pragma once

#include <vector>

namespace gnop {

// Natural cubic spline: zero second derivative at the boundary knots,
// reproduces knots exactly. With two knots it degenerates to the straight
// line through them.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(std::vector<double> x, std::vector<double> y);

  // Value at q. Outside the knot range the boundary knot value is returned
  // and *clamped (if given) is set.
  double eval(double q, bool* clamped = nullptr) const;

  double x_min() const { return x_.front(); }
  double x_max() const { return x_.back(); }
  size_t size() const { return x_.size(); }

 private:
  std::vector<double> x_, y_, m_;  // m_: second derivatives at knots
};

}  // namespace gnop
