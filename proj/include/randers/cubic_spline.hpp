#pragma once

#include <cstddef>
#include <vector>

namespace randers {

/// Clamped C2 cubic spline interpolant on strictly increasing knots.
/// End slopes are prescribed, interior second derivatives are continuous.
class CubicSpline {
public:
  CubicSpline() = default;
  CubicSpline(std::vector<double> x, std::vector<double> y,
              double slope_begin, double slope_end);

  double operator()(double x) const { return eval(x); }
  double eval(double x) const;
  double derivative(double x) const;
  double second_derivative(double x) const;

  double x_min() const { return x_.front(); }
  double x_max() const { return x_.back(); }
  std::size_t size() const { return x_.size(); }

private:
  std::size_t segment(double x) const;

  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> m2_;  // second derivatives at knots
};

}  // namespace randers
