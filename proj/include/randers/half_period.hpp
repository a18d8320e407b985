#pragma once

#include <vector>

#include "randers/geodesic.hpp"
#include "randers/surface.hpp"

namespace randers {

/// Tangency radius: the unique xi in (0, a) with m(xi) = nu, for
/// nu in (0, m(a)). Bracketed bisection refined by guarded Newton steps.
/// Throws std::domain_error for nu outside (0, m(a)) and
/// UnsupportedProfileError when m is not monotone on (0, a).
double xi(const ProfileSpec& spec, double nu);

/// The radial convention used by the closed-form half-period formulas of
/// the example families: xi_paper(nu) = nu^2. Only meaningful for
/// Example1/Example2; throws for other families.
double xi_paper(const ProfileSpec& spec, double nu);

/// Half-period integral H(nu) = 2 int_{xi(nu)}^{a} nu/(m sqrt(m^2-nu^2)) dtau,
/// the theta-advance between consecutive equator crossings. Absolute
/// accuracy ~1e-9; the endpoint singularity at xi is removed by substitution.
double h_half_period(const ProfileSpec& spec, double nu);

/// Finsler half periods H_F+-(nu) = H(nu) +- psi(nu), psi(nu) = 2 mu (a - xi(nu)).
double f_half_period(const NavigationData& nav, double nu, Direction dir);

/// True when the family has closed-form H, H', H'' (Round and the two
/// example families).
bool has_closed_form_half_period(const ProfileSpec& spec);

/// Closed forms for the example families (Round degenerates to H = pi):
///   Example1: H = pi - lambda pi nu / (sqrt(l+1) sqrt(l+1+l nu^2))
///   Example2: H = pi - pi nu lambda / sqrt(1 + lambda nu^2)
double h_half_period_closed(const ProfileSpec& spec, double nu);
double dh_closed(const ProfileSpec& spec, double nu);
double d2h_closed(const ProfileSpec& spec, double nu);

/// Closed-form Finsler half period under the examples' conventions
/// (xi_paper = nu^2): H_F+-(nu) = H(nu) +- 2 mu (a - nu^2).
double f_half_period_paper(const NavigationData& nav, double nu, Direction dir);
double d2hf_paper(const NavigationData& nav, double nu);

/// Uniform-grid derivative by 4th-order finite-difference stencils
/// (one-sided at the ends). order is 1 or 2; needs >= 5 points.
std::vector<double> numerical_derivatives(const std::vector<double>& values, double h,
                                          int order);

/// Half-period curves over an interior nu-grid, with second derivatives of
/// H and H_F+ (closed forms when the family has them, numerical otherwise).
struct HalfPeriodCurve {
  std::vector<double> nu;
  std::vector<double> H;
  std::vector<double> HF_plus;
  std::vector<double> HF_minus;
  std::vector<double> d2H;
  std::vector<double> d2HF_plus;
};
HalfPeriodCurve compute_half_period_curve(const NavigationData& nav, int n);

/// Sign classification of (H_F+)'' over the nu-range for one family member,
/// with the paper's wind convention mu = max_wind / 2 and the paper-form
/// second derivative.
struct ConvexityRow {
  double lambda;
  double min_d2;
  double max_d2;
  bool nonpositive;  // max_d2 <= tolerance; otherwise mixed sign
};
ConvexityRow convexity_scan_row(ProfileFamily family, double lambda, int nu_resolution);
std::vector<ConvexityRow> convexity_scan(ProfileFamily family,
                                         const std::vector<double>& lambdas,
                                         int nu_resolution);

}  // namespace randers
