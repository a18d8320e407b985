#include "randers/cubic_spline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace randers {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y,
                         double slope_begin, double slope_end)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n < 3 || y_.size() != n)
    throw std::invalid_argument("CubicSpline: need >= 3 matching knots");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(x_[i + 1] > x_[i]))
      throw std::invalid_argument("CubicSpline: knots must be strictly increasing");

  // Tridiagonal system for knot second derivatives, clamped ends.
  std::vector<double> diag(n), off(n - 1), rhs(n);
  const double h0 = x_[1] - x_[0];
  diag[0] = 2.0 * h0;
  off[0] = h0;
  rhs[0] = 6.0 * ((y_[1] - y_[0]) / h0 - slope_begin);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double hl = x_[i] - x_[i - 1];
    const double hr = x_[i + 1] - x_[i];
    diag[i] = 2.0 * (hl + hr);
    off[i] = hr;
    rhs[i] = 6.0 * ((y_[i + 1] - y_[i]) / hr - (y_[i] - y_[i - 1]) / hl);
  }
  const double hn = x_[n - 1] - x_[n - 2];
  diag[n - 1] = 2.0 * hn;
  rhs[n - 1] = 6.0 * (slope_end - (y_[n - 1] - y_[n - 2]) / hn);

  // Thomas algorithm; sub-diagonal equals off[i-1].
  for (std::size_t i = 1; i < n; ++i) {
    const double w = off[i - 1] / diag[i - 1];
    diag[i] -= w * off[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  m2_.assign(n, 0.0);
  m2_[n - 1] = rhs[n - 1] / diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;)
    m2_[i] = (rhs[i] - off[i] * m2_[i + 1]) / diag[i];
}

std::size_t CubicSpline::segment(double x) const {
  if (x < x_.front() || x > x_.back())
    throw std::domain_error("CubicSpline: evaluation outside knot range");
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - x_.begin());
  if (i == 0) return 0;
  if (i >= x_.size()) return x_.size() - 2;
  return i - 1;
}

double CubicSpline::eval(double x) const {
  const std::size_t i = segment(x);
  const double h = x_[i + 1] - x_[i];
  const double u = x_[i + 1] - x;
  const double v = x - x_[i];
  return (m2_[i] * u * u * u + m2_[i + 1] * v * v * v) / (6.0 * h) +
         (y_[i] / h - m2_[i] * h / 6.0) * u + (y_[i + 1] / h - m2_[i + 1] * h / 6.0) * v;
}

double CubicSpline::derivative(double x) const {
  const std::size_t i = segment(x);
  const double h = x_[i + 1] - x_[i];
  const double u = x_[i + 1] - x;
  const double v = x - x_[i];
  return (-m2_[i] * u * u + m2_[i + 1] * v * v) / (2.0 * h) +
         (y_[i + 1] - y_[i]) / h - (m2_[i + 1] - m2_[i]) * h / 6.0;
}

double CubicSpline::second_derivative(double x) const {
  const std::size_t i = segment(x);
  const double h = x_[i + 1] - x_[i];
  return (m2_[i] * (x_[i + 1] - x) + m2_[i + 1] * (x - x_[i])) / h;
}

}  // namespace randers
