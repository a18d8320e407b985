#pragma once

#include <functional>

namespace randers {

/// Adaptive Gauss-Kronrod integration of a smooth integrand on [a, b].
/// tol is the relative refinement target; throws std::runtime_error when
/// the error estimate ends up far above it.
double integrate_smooth(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-11);

}  // namespace randers
