#pragma once

#include <array>
#include <vector>

#include "randers/conjugate.hpp"
#include "randers/surface.hpp"

namespace randers {

enum class ArcKind { SinglePoint, ParallelSubarc, MeridianSubarc };
enum class MetricKind { Riemannian, FinslerForward };

const char* to_string(ArcKind k);

/// Cut locus of a point x = (r_x, 0), as produced by the structure
/// theorems. theta values are unwrapped (covering line); mod-2pi reduction
/// happens at serialization time.
struct CutLocusArc {
  ArcKind kind = ArcKind::SinglePoint;
  MetricKind metric = MetricKind::Riemannian;
  double r = 0.0;          // parallel / single-point radius (2a - r_x)
  double theta_lo = 0.0;   // unwrapped theta interval; lo == hi for a point
  double theta_hi = 0.0;
  double param_lo = 0.0;   // meridian r-interval between the two branch
  double param_hi = 0.0;   // conjugate points (symmetric iff r_x = a)
  std::vector<std::array<double, 2>> samples;  // (r, theta)
};

/// Monotone-curvature cut locus (theorem-driven):
///  - Constant G = 1/R^2: single point (2a - r_x, pi (1 + mu R)).
///  - NonIncreasing: subarc of the opposite half meridian {theta = pi}
///    between the first conjugate points of the two meridian branches,
///    mapped pointwise by the wind flow (theta shift mu d_h(x, tau(t))).
///  - NonDecreasing: subarc of the antipodal parallel r = 2a - r_x with
///    theta interval [H(m) + psi, 2pi - (H(m) - psi)], m = m(r_x),
///    psi = mu d_h(x, q0) with q0 the first h-conjugate point of x.
/// Throws HypothesisError when the curvature is not monotone on (0, a].
CutLocusArc cut_locus_theorem(const NavigationData& nav, double r_x, MetricKind metric,
                              int n_samples = 65);

/// Equator-subarc criterion path: requires H'(nu) < 0 on (0, m(a))
/// (sufficient for the equator point's cut locus to be an equator subarc),
/// then returns the antipodal-parallel subarc for r_x != a. The endpoint
/// construction coincides with the tangent-limit conjugate points.
CutLocusArc cut_locus_equator_case(const NavigationData& nav, double r_x,
                                   MetricKind metric, int n_samples = 65);

/// Cut point of the pole p: the opposite pole q at r = 2a, at forward
/// Finsler distance 2a.
struct PoleCut {
  double r;
  double f_distance;
};
PoleCut pole_cut(const NavigationData& nav);

/// h-distance from x = (u, 0) to the point (t, pi) on the opposite half
/// meridian: minimum over the two meridian routes and the non-meridian
/// connecting geodesics found by solving theta(t, u, nu) = pi.
double h_distance_to_opposite_meridian(const ProfileSpec& spec, double u, double t);

/// Arclength of the tangency-to-tangency arc from (r_x, .) to (2a-r_x, .)
/// along the geodesic with nu = m(r_x); equals d_h(x, q0) to the first
/// conjugate point in the tangent limit. Degenerates to pi/sqrt(G(a)) on
/// the equator.
double tangent_conjugate_distance(const ProfileSpec& spec, double r_x);

/// Half-period limit H(m(r_x)): h_half_period for interior r_x, and the
/// equator-conjugate limit pi / (m(a) sqrt(G(a))) when r_x -> a.
double h_half_period_at(const ProfileSpec& spec, double r_x);

}  // namespace randers
