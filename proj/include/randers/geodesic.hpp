#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "randers/rk45.hpp"
#include "randers/surface.hpp"

namespace randers {

enum class PathKind { Riemannian, FinslerForward, FinslerBackward };
enum class Direction { Forward, Backward };

/// One sample of a unit-speed geodesic. theta lives on the universal cover
/// (never reduced mod 2pi); reduction is presentation-time only.
struct GeodesicState {
  double s;
  double r;
  double theta;
  double dr;
  double dtheta;
};

struct ShootOptions {
  double tol = 1e-10;      // adaptive step control (abs = rel)
  double sample_ds = 0.0;  // emitted sample spacing; 0 picks s_max/1024
  double max_step = 0.2;
};

/// Sampled unit-speed geodesic with dense in-between evaluation.
///
/// Riemannian paths integrate the Clairaut-reduced system
///   r' = p,  p' = m'(r) nu^2 / m^3(r),  theta' = nu / m^2(r),
/// so m^2 theta' = nu holds identically along the integrated state.
/// Finsler paths are wind-flow images theta -> theta +- mu s of a
/// Riemannian path; s, r and dr are untouched by the flow.
class GeodesicPath {
public:
  PathKind kind() const {
    return wind_rate_ == 0.0 ? PathKind::Riemannian
           : wind_rate_ > 0.0 ? PathKind::FinslerForward
                              : PathKind::FinslerBackward;
  }
  double nu() const { return nu_; }
  double mu() const { return wind_rate_ < 0.0 ? -wind_rate_ : wind_rate_; }
  double s_max() const { return s_max_; }
  const ProfileSpec& profile() const { return profile_; }
  const std::vector<GeodesicState>& samples() const { return samples_; }

  /// Dense state at any s in [0, s_max].
  GeodesicState state_at(double s) const;

  /// Parameters of the turning points (dr/ds = 0) located on the dense
  /// output, in increasing order.
  std::vector<double> turning_points() const;

  friend GeodesicPath shoot_h_geodesic(const ProfileSpec&, double, double, double,
                                       int, double, const ShootOptions&);
  friend GeodesicPath flow_deviate(const GeodesicPath&, double, Direction);

private:
  struct MeridianForm {
    double r0;
    double theta0;
    double sign;
    double two_a;
  };

  GeodesicState base_state_at(double s) const;  // underlying Riemannian state

  double nu_ = 0.0;
  double wind_rate_ = 0.0;  // signed deviation rate: theta += wind_rate * s
  double s_max_ = 0.0;
  ProfileSpec profile_ = ProfileSpec::round_sphere(1.0);
  std::vector<GeodesicState> samples_;
  std::shared_ptr<const DenseSolution<3>> dense_;  // (r, p, theta)
  std::optional<MeridianForm> meridian_;
};

/// Integrates the h-geodesic from (r0, theta0) with Clairaut constant nu and
/// initial radial sign dr_sign in {-1, 0, +1} up to arclength s_max.
/// |nu| < 1e-12 is treated as an exact meridian with the pole continuation
/// theta -> theta + pi, dr -> -dr. Throws std::domain_error when |nu| > m(r0),
/// NumericalCornerError on pole contact with nu != 0.
GeodesicPath shoot_h_geodesic(const ProfileSpec& spec, double r0, double theta0,
                              double nu, int dr_sign, double s_max,
                              const ShootOptions& opt = {});

/// Conserved quantity m^2(r) dtheta/ds (equals m cos(phi) for the h-angle
/// phi against d/dtheta).
double clairaut_constant(const ProfileSpec& spec, const GeodesicState& st);

/// Wind-flow image: theta -> theta + mu s (forward) or theta - mu s
/// (backward). Deviations compose, so backward-deviating a forward-deviated
/// path restores the Riemannian original. Throws ConvexityError when the
/// resulting |rate| reaches 1/max m.
GeodesicPath flow_deviate(const GeodesicPath& path, double mu, Direction dir);

/// Finsler Clairaut relation: cos(psi) = (nu + mu m^2) / (m sqrt(1 + 2 mu nu + mu^2 m^2)),
/// psi measured with the background metric h.
double finsler_clairaut_cos(const NavigationData& nav, double r, double nu);

/// h-arclength integral int m / sqrt(m^2 - nu^2) dtau between r1 and r2.
/// Endpoint tangencies (m = |nu|) are integrable and handled by a u^2
/// substitution; m < |nu| strictly inside is an error.
double h_arc_length(const ProfileSpec& spec, double nu, double r1, double r2);

/// theta-advance integral int nu / (m sqrt(m^2 - nu^2)) dtau between r1 and
/// r2 (same singularity handling). Signed: negative when r2 < r1 for nu > 0.
double theta_advance_integral(const ProfileSpec& spec, double nu, double r1, double r2);

/// First s > after_s with r(s) = target_r, refined on the dense output;
/// nullopt if no crossing exists in (after_s, s_max].
std::optional<double> find_radius_crossing(const GeodesicPath& path, double target_r,
                                           double after_s);

}  // namespace randers
