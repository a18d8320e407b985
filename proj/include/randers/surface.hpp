#pragma once

#include <memory>
#include <string>
#include <vector>

#include "randers/cubic_spline.hpp"

namespace randers {

enum class ProfileFamily { Round, Example1, Example2, CustomTable };

/// Value and first two radial derivatives of the profile function m.
struct ProfileEval {
  double m;
  double m1;
  double m2;
};

/// Radius at which geodesic integration clamps away from the poles.
inline constexpr double kPoleEps = 1e-9;

/// Profile m(r) of a 2-sphere of revolution h = dr^2 + m^2(r) dtheta^2 on
/// r in [0, 2a], with m(0) = m(2a) = 0, m'(0) = 1 = -m'(2a) and the
/// equatorial symmetry m(r) = m(2a - r).
///
/// Closed-form families:
///   Round(R):     m = R sin(r/R)                        on [0, pi R]
///   Example1(l):  m = sqrt(l+1) sin r / sqrt(1+l cos^2 r),  l >= 0
///   Example2(l):  m = sin r / sqrt(1 - l sin^2 r),          l in (0,1)
/// CustomTable interpolates samples with a clamped C2 cubic spline.
class ProfileSpec {
public:
  static ProfileSpec round_sphere(double radius = 1.0);
  static ProfileSpec example1(double lambda);
  static ProfileSpec example2(double lambda);
  static ProfileSpec custom_table(const std::vector<double>& r,
                                  const std::vector<double>& m);

  ProfileFamily family() const { return family_; }
  double a() const { return a_; }
  double lambda() const { return lambda_; }
  double radius() const { return radius_; }

  /// m, m', m'' at r in [0, 2a]; analytic for the closed forms, spline
  /// derivatives for CustomTable. Throws std::domain_error outside [0, 2a].
  ProfileEval eval(double r) const;
  double m(double r) const { return eval(r).m; }

  /// Gaussian curvature G = -m''/m, r strictly inside (0, 2a).
  double gaussian_curvature(double r) const;

  double max_m() const { return max_m_; }
  double r_of_max_m() const { return r_max_m_; }
  double max_wind() const { return 1.0 / max_m_; }

  /// max |m(r) - m(2a-r)| over a uniform interior grid.
  double symmetry_residual(int grid_n = 1000) const;

  /// True when m' > 0 on (0, a); required by the inverse function xi.
  /// Analytic for the closed-form families, certified on a grid for tables.
  bool monotone_rising_branch() const { return monotone_rising_; }

  std::string describe() const;

private:
  ProfileSpec() = default;
  void locate_max();

  ProfileFamily family_ = ProfileFamily::Round;
  double a_ = 0.0;
  double lambda_ = 0.0;
  double radius_ = 1.0;
  double max_m_ = 0.0;
  double r_max_m_ = 0.0;
  bool monotone_rising_ = true;
  std::shared_ptr<const CubicSpline> spline_;
};

/// Randers metric coefficients at a point, F = sqrt(a11 yr^2 + a22 yt^2) + b2 yt.
struct MetricCoefficients {
  double a11;
  double a22;
  double b2;
};

/// Zermelo navigation data: background profile plus the rotational wind
/// W = mu * d/dtheta. Strong convexity requires 0 <= mu < 1/max m.
class NavigationData {
public:
  NavigationData(ProfileSpec profile, double mu);

  const ProfileSpec& profile() const { return profile_; }
  double mu() const { return mu_; }
  double a() const { return profile_.a(); }

  /// a11 = 1/(1-mu^2 m^2), a22 = m^2/(1-mu^2 m^2)^2, b2 = -mu m^2/(1-mu^2 m^2).
  /// Throws ConvexityError when mu*m(r) >= 1 and std::domain_error at poles.
  MetricCoefficients randers_coefficients(double r) const;

  /// Randers norm F(r, y) via alpha + beta. Throws on the zero vector.
  double finsler_norm(double r, double y_r, double y_theta) const;

  /// Same norm through the Zermelo navigation formula
  /// F = (sqrt(l |y|_h^2 + W0^2) - W0) / l with l = 1 - |W|_h^2, W0 = h(W,y).
  double finsler_norm_navigation(double r, double y_r, double y_theta) const;

private:
  ProfileSpec profile_;
  double mu_ = 0.0;
};

}  // namespace randers
