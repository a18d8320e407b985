#include "randers/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <stdexcept>

namespace randers {

namespace {
using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
constexpr int kMaxDepth = 15;
}  // namespace

double integrate_smooth(const std::function<double(double)>& f, double a, double b,
                        double tol) {
  if (a == b) return 0.0;
  double error = 0.0;
  const double value = GK::integrate(f, a, b, kMaxDepth, tol, &error);
  if (!std::isfinite(value))
    throw std::runtime_error("integrate_smooth: non-finite result");
  if (error > std::max(1e-9 * std::max(1.0, std::abs(value)), 100.0 * tol))
    throw std::runtime_error("integrate_smooth: tolerance not met");
  return value;
}

}  // namespace randers
