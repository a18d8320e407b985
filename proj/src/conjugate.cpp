#include "randers/conjugate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "randers/errors.hpp"
#include "randers/half_period.hpp"
#include "randers/rk45.hpp"

namespace randers {

namespace {
constexpr double kPi = std::numbers::pi;
}

double theta_of(const ProfileSpec& spec, double r, double u, double nu) {
  const double a = spec.a();
  const double nu_max = std::min(spec.m(u), spec.m(a));
  if (!(nu > 0.0 && nu < nu_max))
    throw std::domain_error("theta_of: nu outside (0, min(m(u), m(a)))");
  const double x = xi(spec, nu);
  if (r < x - 1e-9 || r > 2.0 * a - x + 1e-9)
    throw std::domain_error("theta_of: r outside the traversed range");
  r = std::clamp(r, x, 2.0 * a - x);
  return h_half_period(spec, nu) - theta_advance_integral(spec, nu, r, 2.0 * a - u);
}

namespace {

struct Pencil {
  GeodesicPath lo2, lo1, hi1, hi2;  // nu -+ delta, nu -+ delta/2 shots
  double delta;
};

// Richardson-extrapolated d r / d nu at fixed arclength.
double radial_variation(const Pencil& p, double s) {
  const double g1 =
      (p.hi2.state_at(s).r - p.lo2.state_at(s).r) / (2.0 * p.delta);
  const double g2 =
      (p.hi1.state_at(s).r - p.lo1.state_at(s).r) / p.delta;
  return (4.0 * g2 - g1) / 3.0;
}

}  // namespace

ConjugatePoint first_h_conjugate(const ProfileSpec& spec, double u, double nu,
                                 int dr_sign) {
  const double a = spec.a();
  const double mu_r = spec.m(u);
  if (!(nu > 0.0 && nu < mu_r))
    throw std::domain_error("first_h_conjugate: nu outside (0, m(u))");
  if (dr_sign != -1 && dr_sign != 1)
    throw std::invalid_argument("first_h_conjugate: dr_sign must be -1 or +1");

  const double x = xi(spec, nu);
  const double period = 2.0 * h_arc_length(spec, nu, x, 2.0 * a - x);
  const double lead = dr_sign < 0 ? h_arc_length(spec, nu, x, u)
                                  : h_arc_length(spec, nu, u, 2.0 * a - x);
  const double s_max = lead + 2.0 * period + 0.05 * period;

  double delta = 1e-6 * spec.m(a);
  delta = std::min({delta, 0.3 * (mu_r - nu), 0.3 * nu});

  ShootOptions so;
  so.tol = 1e-12;
  so.sample_ds = s_max / 2048.0;
  Pencil p{shoot_h_geodesic(spec, u, 0.0, nu - delta, dr_sign, s_max, so),
           shoot_h_geodesic(spec, u, 0.0, nu - delta / 2.0, dr_sign, s_max, so),
           shoot_h_geodesic(spec, u, 0.0, nu + delta / 2.0, dr_sign, s_max, so),
           shoot_h_geodesic(spec, u, 0.0, nu + delta, dr_sign, s_max, so),
           delta};

  const int n = 1024;
  const double s_lo = 1e-3 * s_max;
  double prev_s = s_lo;
  double prev_g = radial_variation(p, s_lo);
  for (int i = 1; i <= n; ++i) {
    const double s = s_lo + (s_max - s_lo) * static_cast<double>(i) / n;
    const double g = radial_variation(p, s);
    if (prev_g != 0.0 && (prev_g > 0.0) != (g > 0.0)) {
      // Bracketed secant (regula falsi with bisection fallback).
      double lo = prev_s, hi = s, flo = prev_g, fhi = g;
      double root = 0.5 * (lo + hi);
      for (int it = 0; it < 80 && hi - lo > 1e-11 * s_max; ++it) {
        double m = (std::abs(fhi - flo) > 1e-300)
                       ? (lo * fhi - hi * flo) / (fhi - flo)
                       : 0.5 * (lo + hi);
        if (!(m > lo && m < hi)) m = 0.5 * (lo + hi);
        const double fm = radial_variation(p, m);
        root = m;
        if ((fm > 0.0) == (flo > 0.0)) {
          lo = m;
          flo = fm;
        } else {
          hi = m;
          fhi = fm;
        }
      }
      GeodesicPath center = shoot_h_geodesic(spec, u, 0.0, nu, dr_sign, root + 1e-9, so);
      const GeodesicState st = center.state_at(root);
      return {st.r, st.theta, root};
    }
    prev_s = s;
    prev_g = g;
  }
  throw std::runtime_error("first_h_conjugate: no conjugate point within two periods");
}

ConjugatePoint first_f_conjugate(const NavigationData& nav, double u, double nu,
                                 Direction dir) {
  ConjugatePoint c = first_h_conjugate(nav.profile(), u, nu);
  c.theta += (dir == Direction::Forward ? 1.0 : -1.0) * nav.mu() * c.s;
  return c;
}

double meridian_conjugate_arclength(const ProfileSpec& spec, double u, bool descending) {
  const double two_a = 2.0 * spec.a();
  const double sign = descending ? -1.0 : 1.0;
  auto r_at = [&](double s) {
    const double x0 = sign > 0.0 ? u : -u;
    const double period = 2.0 * two_a;
    double z = std::fmod(x0 + s, period);
    if (z < 0.0) z += period;
    return z < two_a ? z : period - z;
  };
  auto rhs = [&](double s, const std::array<double, 2>& y, std::array<double, 2>& dy) {
    const double r = std::clamp(r_at(s), 1e-7, two_a - 1e-7);
    dy[0] = y[1];
    dy[1] = -spec.gaussian_curvature(r) * y[0];
  };
  Rk45Options ro;
  ro.rel_tol = 1e-12;
  ro.abs_tol = 1e-12;
  ro.max_step = 0.05;
  const double s_end = 2.0 * two_a;
  auto sol = Rk45<2>::integrate(rhs, 0.0, {0.0, 1.0}, s_end, ro);

  const int n = 8192;
  double prev_s = 1e-6, prev_j = sol.eval(prev_s)[0];
  for (int i = 1; i <= n; ++i) {
    const double s = s_end * static_cast<double>(i) / n;
    const double j = sol.eval(s)[0];
    if (prev_j != 0.0 && (prev_j > 0.0) != (j > 0.0)) {
      double lo = prev_s, hi = s;
      const bool lo_pos = prev_j > 0.0;
      for (int it = 0; it < 90 && hi - lo > 1e-14 * s_end; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((sol.eval(mid)[0] > 0.0) == lo_pos)
          lo = mid;
        else
          hi = mid;
      }
      return 0.5 * (lo + hi);
    }
    prev_s = s;
    prev_j = j;
  }
  throw std::runtime_error("meridian_conjugate_arclength: no conjugate point within 4a");
}

const char* to_string(CurvatureClass c) {
  switch (c) {
    case CurvatureClass::Constant:
      return "Constant";
    case CurvatureClass::NonIncreasing:
      return "NonIncreasing";
    case CurvatureClass::NonDecreasing:
      return "NonDecreasing";
    case CurvatureClass::NonMonotone:
      return "NonMonotone";
  }
  return "?";
}

CurvatureClassification classify_curvature(const ProfileSpec& spec, int grid_n) {
  if (grid_n < 64) throw std::invalid_argument("classify_curvature: grid_n >= 64");
  const double a = spec.a();
  std::vector<double> g(grid_n);
  double scale = 0.0;
  for (int i = 0; i < grid_n; ++i) {
    const double r = a * static_cast<double>(i + 1) / grid_n;
    g[i] = spec.gaussian_curvature(std::min(r, a));
    scale = std::max(scale, std::abs(g[i]));
  }
  const double tol = 1e-9 * std::max(scale, 1.0);

  double tv = 0.0;
  bool up = true, down = true;
  for (int i = 0; i + 1 < grid_n; ++i) {
    const double d = g[i + 1] - g[i];
    tv += std::abs(d);
    if (d < -tol) up = false;
    if (d > tol) down = false;
  }
  // Constant has the strongest consequences, so it requires near-zero
  // total variation rather than per-step tolerance.
  const double g_a = std::abs(spec.gaussian_curvature(a));
  CurvatureClass cls;
  if (tv < 1e-9 * std::max(g_a, 1e-30))
    cls = CurvatureClass::Constant;
  else if (up && down)
    cls = CurvatureClass::Constant;
  else if (up)
    cls = CurvatureClass::NonDecreasing;
  else if (down)
    cls = CurvatureClass::NonIncreasing;
  else
    cls = CurvatureClass::NonMonotone;
  return {cls, tol};
}

}  // namespace randers
