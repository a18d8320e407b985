#pragma once

#include "randers/geodesic.hpp"
#include "randers/surface.hpp"

namespace randers {

/// theta(r, u, nu) = H(nu) - int_r^{2a-u} nu/(m sqrt(m^2-nu^2)) dtau:
/// the rising-branch parametrization of the geodesic from (u, 0) with
/// Clairaut constant nu and initial dr/ds <= 0, valid for r in
/// [xi(nu), 2a - xi(nu)].
double theta_of(const ProfileSpec& spec, double r, double u, double nu);

struct ConjugatePoint {
  double r;
  double theta;
  double s;  // arclength from the base point
};

/// First conjugate point along the h-geodesic from (u, 0) with Clairaut
/// constant nu in (0, m(u)); dr_sign selects the initially descending
/// (default) or ascending branch.
///
/// The conjugate condition d theta/d nu(r, u, nu) = 0 is located as the
/// first zero of the transverse Jacobi scalar along arclength, computed by
/// a Richardson-extrapolated central difference (step 1e-6 m(a)) of a shot
/// pencil; the radial component is used since the unit normal keeps
/// n_r = -nu/m != 0, which makes the scan immune to the spurious
/// sign flips of the theta-component at turning points.
/// Throws std::runtime_error when no zero appears within two full radial
/// periods.
ConjugatePoint first_h_conjugate(const ProfileSpec& spec, double u, double nu,
                                 int dr_sign = -1);

/// Flow image of the h-conjugate point: theta_c +- mu * s_c (Prop. on
/// conjugate correspondence), same r and arclength.
ConjugatePoint first_f_conjugate(const NavigationData& nav, double u, double nu,
                                 Direction dir);

/// First zero of the scalar Jacobi equation J'' + G(r(s)) J = 0 along the
/// meridian through (u, 0), descending (through the pole r = 0) or
/// ascending (through r = 2a). Returns the arclength of the conjugate
/// point; throws when none exists within one full meridian loop (4a).
double meridian_conjugate_arclength(const ProfileSpec& spec, double u, bool descending);

enum class CurvatureClass { Constant, NonIncreasing, NonDecreasing, NonMonotone };

struct CurvatureClassification {
  CurvatureClass value;
  double tolerance;
};

const char* to_string(CurvatureClass c);

/// Classifies G = -m''/m on (0, a] by successive differences on a uniform
/// grid (tolerance 1e-9 relative to the curvature scale). Constant wins
/// only when the total variation is below 1e-9 |G(a)|.
CurvatureClassification classify_curvature(const ProfileSpec& spec, int grid_n = 256);

}  // namespace randers
