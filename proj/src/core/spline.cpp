#include "core/spline.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace gnop {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const size_t n = x_.size();
  if (n < 2) throw InvalidArgument("spline needs at least 2 knots");
  if (y_.size() != n) throw InvalidArgument("spline: x/y size mismatch");
  for (size_t i = 0; i + 1 < n; ++i) {
    if (!(x_[i] < x_[i + 1])) throw InvalidArgument("spline knots must be strictly ascending");
  }

  m_.assign(n, 0.0);
  if (n == 2) return;  // natural boundary -> linear

  // Thomas solve of the tridiagonal system for interior second derivatives.
  const size_t ni = n - 2;
  std::vector<double> diag(ni), upper(ni), rhs(ni);
  for (size_t i = 0; i < ni; ++i) {
    const double h0 = x_[i + 1] - x_[i];
    const double h1 = x_[i + 2] - x_[i + 1];
    diag[i] = (h0 + h1) / 3.0;
    upper[i] = h1 / 6.0;
    rhs[i] = (y_[i + 2] - y_[i + 1]) / h1 - (y_[i + 1] - y_[i]) / h0;
  }
  for (size_t i = 1; i < ni; ++i) {
    const double lower = (x_[i + 1] - x_[i]) / 6.0;  // sub-diagonal entry of row i
    const double w = lower / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  m_[ni] = rhs[ni - 1] / diag[ni - 1];
  for (size_t i = ni - 1; i >= 1; --i) {
    m_[i] = (rhs[i - 1] - upper[i - 1] * m_[i + 1]) / diag[i - 1];
  }
}

double CubicSpline::eval(double q, bool* clamped) const {
  if (clamped) *clamped = false;
  if (q <= x_.front()) {
    if (clamped) *clamped = q < x_.front();
    return y_.front();
  }
  if (q >= x_.back()) {
    if (clamped) *clamped = q > x_.back();
    return y_.back();
  }
  const auto it = std::upper_bound(x_.begin(), x_.end(), q);
  const size_t i = static_cast<size_t>(it - x_.begin()) - 1;
  const double h = x_[i + 1] - x_[i];
  const double a = (x_[i + 1] - q) / h;
  const double b = (q - x_[i]) / h;
  return a * y_[i] + b * y_[i + 1] +
         ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
}

}  // namespace gnop
