#pragma once

#include <stdexcept>

namespace randers {

/// Strong-convexity violation: the requested wind exceeds 1/max m.
class ConvexityError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A theorem was invoked outside its hypotheses (e.g. non-monotone
/// curvature in the monotone cut-locus theorem). Callers are expected to
/// fall back to the brute-force oracle.
class HypothesisError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Numerical corner the integrator refuses to push through (e.g. pole
/// contact with a non-meridian Clairaut constant).
class NumericalCornerError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// CustomTable profile outside the supported class (e.g. m not monotone
/// on the rising branch where the inverse is required).
class UnsupportedProfileError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace randers
