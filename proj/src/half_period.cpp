#include "randers/half_period.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "randers/errors.hpp"

namespace randers {

namespace {
constexpr double kPi = std::numbers::pi;
}

double xi(const ProfileSpec& spec, double nu) {
  const double a = spec.a();
  const double ma = spec.m(a);
  if (!(nu > 0.0 && nu < ma))
    throw std::domain_error("xi: nu must lie in (0, m(a))");
  if (!spec.monotone_rising_branch())
    throw UnsupportedProfileError("xi: m is not monotone on (0, a)");

  double lo = 0.0, hi = a;
  for (int it = 0; it < 100 && hi - lo > 1e-13 * a; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (spec.m(mid) < nu)
      lo = mid;
    else
      hi = mid;
  }
  double x = 0.5 * (lo + hi);
  // Newton polish; skipped near the equator where m' -> 0.
  for (int it = 0; it < 2; ++it) {
    const ProfileEval e = spec.eval(x);
    if (std::abs(e.m1) < 1e-8) break;
    const double xn = x - (e.m - nu) / e.m1;
    if (xn <= lo - (hi - lo) || xn >= hi + (hi - lo) || xn <= 0.0 || xn >= a) break;
    x = xn;
  }
  return x;
}

double xi_paper(const ProfileSpec& spec, double nu) {
  if (spec.family() != ProfileFamily::Example1 && spec.family() != ProfileFamily::Example2)
    throw std::domain_error("xi_paper: only defined for the example families");
  return nu * nu;
}

double h_half_period(const ProfileSpec& spec, double nu) {
  const double ma = spec.m(spec.a());
  if (!(nu > 0.0 && nu < ma))
    throw std::domain_error("h_half_period: nu must lie in (0, m(a))");
  const double x = xi(spec, nu);
  return 2.0 * theta_advance_integral(spec, nu, x, spec.a());
}

double f_half_period(const NavigationData& nav, double nu, Direction dir) {
  const double H = h_half_period(nav.profile(), nu);
  const double psi = 2.0 * nav.mu() * (nav.a() - xi(nav.profile(), nu));
  return dir == Direction::Forward ? H + psi : H - psi;
}

bool has_closed_form_half_period(const ProfileSpec& spec) {
  switch (spec.family()) {
    case ProfileFamily::Round:
    case ProfileFamily::Example1:
    case ProfileFamily::Example2:
      return true;
    case ProfileFamily::CustomTable:
      return false;
  }
  return false;
}

double h_half_period_closed(const ProfileSpec& spec, double nu) {
  const double l = spec.lambda();
  switch (spec.family()) {
    case ProfileFamily::Round:
      return kPi;
    case ProfileFamily::Example1:
      return kPi - l * kPi * nu / (std::sqrt(l + 1.0) * std::sqrt(l + 1.0 + l * nu * nu));
    case ProfileFamily::Example2:
      return kPi - kPi * nu * l / std::sqrt(1.0 + l * nu * nu);
    case ProfileFamily::CustomTable:
      break;
  }
  throw std::domain_error("h_half_period_closed: no closed form for this family");
}

double dh_closed(const ProfileSpec& spec, double nu) {
  const double l = spec.lambda();
  switch (spec.family()) {
    case ProfileFamily::Round:
      return 0.0;
    case ProfileFamily::Example1: {
      const double q = l + 1.0 + l * nu * nu;
      return -kPi * l * std::sqrt(l + 1.0) / (q * std::sqrt(q));
    }
    case ProfileFamily::Example2: {
      const double q = 1.0 + l * nu * nu;
      return -kPi * l / (q * std::sqrt(q));
    }
    case ProfileFamily::CustomTable:
      break;
  }
  throw std::domain_error("dh_closed: no closed form for this family");
}

double d2h_closed(const ProfileSpec& spec, double nu) {
  const double l = spec.lambda();
  switch (spec.family()) {
    case ProfileFamily::Round:
      return 0.0;
    case ProfileFamily::Example1: {
      const double q = l + 1.0 + l * nu * nu;
      return 3.0 * kPi * l * l * nu * std::sqrt(l + 1.0) / (q * q * std::sqrt(q));
    }
    case ProfileFamily::Example2: {
      const double q = 1.0 + l * nu * nu;
      return 3.0 * kPi * l * l * nu / (q * q * std::sqrt(q));
    }
    case ProfileFamily::CustomTable:
      break;
  }
  throw std::domain_error("d2h_closed: no closed form for this family");
}

double f_half_period_paper(const NavigationData& nav, double nu, Direction dir) {
  const double H = h_half_period_closed(nav.profile(), nu);
  const double psi = 2.0 * nav.mu() * (nav.a() - xi_paper(nav.profile(), nu));
  return dir == Direction::Forward ? H + psi : H - psi;
}

double d2hf_paper(const NavigationData& nav, double nu) {
  // psi'' = -4 mu under the xi = nu^2 convention.
  return d2h_closed(nav.profile(), nu) - 4.0 * nav.mu();
}

std::vector<double> numerical_derivatives(const std::vector<double>& f, double h,
                                          int order) {
  const std::size_t n = f.size();
  if (n < 5) throw std::invalid_argument("numerical_derivatives: need >= 5 points");
  if (order != 1 && order != 2)
    throw std::invalid_argument("numerical_derivatives: order must be 1 or 2");
  if (!(h > 0.0)) throw std::invalid_argument("numerical_derivatives: h must be > 0");
  std::vector<double> out(n);

  if (order == 1) {
    auto fwd = [&](std::size_t i, int s) {
      return (-25.0 * f[i] + 48.0 * f[i + s] - 36.0 * f[i + 2 * s] + 16.0 * f[i + 3 * s] -
              3.0 * f[i + 4 * s]) /
             (12.0 * h * s);
    };
    for (std::size_t i = 0; i < n; ++i) {
      if (i >= 2 && i + 2 < n)
        out[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
      else if (i < 2)
        out[i] = fwd(i, 1);
      else
        out[i] = fwd(i, -1);
    }
  } else {
    const bool six = n >= 6;
    auto fwd2 = [&](std::size_t i, int s) {
      if (six)
        return (45.0 * f[i] - 154.0 * f[i + s] + 214.0 * f[i + 2 * s] -
                156.0 * f[i + 3 * s] + 61.0 * f[i + 4 * s] - 10.0 * f[i + 5 * s]) /
               (12.0 * h * h);
      return (35.0 * f[i] - 104.0 * f[i + s] + 114.0 * f[i + 2 * s] -
              56.0 * f[i + 3 * s] + 11.0 * f[i + 4 * s]) /
             (12.0 * h * h);
    };
    for (std::size_t i = 0; i < n; ++i) {
      if (i >= 2 && i + 2 < n)
        out[i] = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) /
                 (12.0 * h * h);
      else if (i < 2)
        out[i] = fwd2(i, 1);
      else
        out[i] = fwd2(i, -1);
    }
  }
  return out;
}

HalfPeriodCurve compute_half_period_curve(const NavigationData& nav, int n) {
  if (n < 5) throw std::invalid_argument("half_period_curve: need >= 5 grid points");
  const ProfileSpec& spec = nav.profile();
  const double ma = spec.m(spec.a());
  HalfPeriodCurve c;
  c.nu.resize(n);
  c.H.resize(n);
  c.HF_plus.resize(n);
  c.HF_minus.resize(n);
  // Interior uniform grid; the endpoints of (0, m(a)) are excluded.
  const double h = ma / (n + 1);
  for (int i = 0; i < n; ++i) {
    const double nu = h * (i + 1);
    c.nu[i] = nu;
    c.H[i] = h_half_period(spec, nu);
    const double psi = 2.0 * nav.mu() * (nav.a() - xi(spec, nu));
    c.HF_plus[i] = c.H[i] + psi;
    c.HF_minus[i] = c.H[i] - psi;
  }
  if (has_closed_form_half_period(spec)) {
    c.d2H.resize(n);
    c.d2HF_plus.resize(n);
    const bool paper_form = spec.family() != ProfileFamily::Round;
    for (int i = 0; i < n; ++i) {
      c.d2H[i] = d2h_closed(spec, c.nu[i]);
      c.d2HF_plus[i] = paper_form ? d2hf_paper(nav, c.nu[i]) : c.d2H[i];
    }
  } else {
    c.d2H = numerical_derivatives(c.H, h, 2);
    c.d2HF_plus = numerical_derivatives(c.HF_plus, h, 2);
  }
  return c;
}

ConvexityRow convexity_scan_row(ProfileFamily family, double lambda, int nu_resolution) {
  ProfileSpec spec = family == ProfileFamily::Example1 ? ProfileSpec::example1(lambda)
                     : family == ProfileFamily::Example2
                         ? ProfileSpec::example2(lambda)
                         : throw std::invalid_argument("convexity_scan: family must be an example");
  NavigationData nav(spec, 0.5 * spec.max_wind());
  const double ma = spec.m(spec.a());
  ConvexityRow row{lambda, 0.0, 0.0, true};
  double mn = 1e300, mx = -1e300;
  for (int i = 1; i <= nu_resolution; ++i) {
    const double nu = ma * static_cast<double>(i) / (nu_resolution + 1);
    const double d2 = d2hf_paper(nav, nu);
    mn = std::min(mn, d2);
    mx = std::max(mx, d2);
  }
  row.min_d2 = mn;
  row.max_d2 = mx;
  row.nonpositive = mx <= 1e-12;
  return row;
}

std::vector<ConvexityRow> convexity_scan(ProfileFamily family,
                                         const std::vector<double>& lambdas,
                                         int nu_resolution) {
  std::vector<ConvexityRow> rows;
  rows.reserve(lambdas.size());
  for (double l : lambdas) rows.push_back(convexity_scan_row(family, l, nu_resolution));
  return rows;
}

}  // namespace randers
