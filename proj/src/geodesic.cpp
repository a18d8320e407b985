#include "randers/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "randers/errors.hpp"
#include "randers/quadrature.hpp"

namespace randers {

namespace {
constexpr double kMeridianNu = 1e-12;
constexpr double kPi = std::numbers::pi;
}  // namespace

GeodesicState GeodesicPath::base_state_at(double s) const {
  if (s < -1e-12 || s > s_max_ + 1e-9)
    throw std::domain_error("geodesic: s outside [0, s_max]");
  s = std::clamp(s, 0.0, s_max_);
  if (meridian_) {
    // Covering-line coordinate of the meridian; folding it with the
    // period-4a triangle wave realizes the pole continuation
    // theta -> theta + pi, dr -> -dr.
    const MeridianForm& mf = *meridian_;
    const double two_a = mf.two_a;
    const double x0 = mf.sign > 0.0 ? mf.r0 : -mf.r0;
    const double x = x0 + s;
    const double period = 2.0 * two_a;
    double z = std::fmod(x, period);
    if (z < 0.0) z += period;
    double r, dr;
    if (z < two_a) {
      r = z;
      dr = 1.0;
    } else {
      r = period - z;
      dr = -1.0;
    }
    const long crossings = static_cast<long>(std::floor(x / two_a)) -
                           static_cast<long>(std::floor(x0 / two_a));
    return {s, r, mf.theta0 + kPi * static_cast<double>(crossings), dr, 0.0};
  }
  const auto y = dense_->eval(s);
  const double m = profile_.m(y[0]);
  return {s, y[0], y[2], y[1], nu_ / (m * m)};
}

GeodesicState GeodesicPath::state_at(double s) const {
  GeodesicState st = base_state_at(s);
  st.theta += wind_rate_ * st.s;
  st.dtheta += wind_rate_;
  return st;
}

std::vector<double> GeodesicPath::turning_points() const {
  std::vector<double> out;
  if (meridian_) return out;  // |dr| = 1 throughout
  const int n = 4096;
  double prev_s = 0.0;
  double prev_p = base_state_at(0.0).dr;
  for (int i = 1; i <= n; ++i) {
    const double s = s_max_ * static_cast<double>(i) / n;
    const double p = base_state_at(s).dr;
    if (prev_p != 0.0 && (prev_p < 0.0) != (p < 0.0)) {
      double lo = prev_s, hi = s;
      for (int it = 0; it < 90 && hi - lo > 1e-14 * s_max_; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((base_state_at(mid).dr < 0.0) == (prev_p < 0.0))
          lo = mid;
        else
          hi = mid;
      }
      out.push_back(0.5 * (lo + hi));
    }
    prev_s = s;
    prev_p = p;
  }
  return out;
}

GeodesicPath shoot_h_geodesic(const ProfileSpec& spec, double r0, double theta0,
                              double nu, int dr_sign, double s_max,
                              const ShootOptions& opt) {
  const double two_a = 2.0 * spec.a();
  if (!(s_max > 0.0)) throw std::invalid_argument("shoot: s_max must be > 0");
  if (!(r0 >= 0.0 && r0 <= two_a)) throw std::domain_error("shoot: r0 outside [0, 2a]");

  GeodesicPath path;
  path.nu_ = nu;
  path.s_max_ = s_max;
  path.profile_ = spec;

  if (std::abs(nu) < kMeridianNu) {
    if (dr_sign == 0) throw std::invalid_argument("shoot: meridian needs dr_sign = +-1");
    if (r0 < kPoleEps && dr_sign < 0)
      throw std::invalid_argument("shoot: cannot descend from the pole r = 0");
    if (r0 > two_a - kPoleEps && dr_sign > 0)
      throw std::invalid_argument("shoot: cannot ascend from the pole r = 2a");
    path.nu_ = 0.0;
    path.meridian_ =
        GeodesicPath::MeridianForm{r0, theta0, dr_sign > 0 ? 1.0 : -1.0, two_a};
  } else {
    const double m0 = spec.m(r0);
    if (std::abs(nu) > m0 * (1.0 + 1e-12))
      throw std::domain_error("shoot: |nu| > m(r0), no such geodesic");
    // A turning radius below the pole clamp cannot be integrated: the
    // required step size collapses with the radius. Refuse upfront when the
    // path is long enough to get there.
    if (std::abs(nu) < spec.m(2.0 * kPoleEps) && s_max > r0 - 2.0 * kPoleEps)
      throw NumericalCornerError("shoot: pole contact with nu != 0");
    double p0 = std::sqrt(std::max(0.0, 1.0 - nu * nu / (m0 * m0)));
    if (dr_sign == 0) {
      if (p0 > 1e-6) throw std::invalid_argument("shoot: dr_sign = 0 requires |nu| = m(r0)");
      p0 = 0.0;
    } else {
      p0 *= dr_sign;
    }

    auto rhs = [&spec, nu, two_a](double, const std::array<double, 3>& y,
                                  std::array<double, 3>& dy) {
      const double r = std::clamp(y[0], 0.0, two_a);
      const ProfileEval e = spec.eval(r);
      const double m2 = e.m * e.m;
      dy[0] = y[1];
      dy[1] = e.m1 * nu * nu / (m2 * e.m);
      dy[2] = nu / m2;
    };

    Rk45Options ro;
    // Safety factor so that the delivered global error stays below the
    // requested step-control tolerance over multi-period spans.
    ro.rel_tol = 0.2 * opt.tol;
    ro.abs_tol = 0.2 * opt.tol;
    ro.max_step = opt.max_step;
    auto dense = std::make_shared<DenseSolution<3>>(
        Rk45<3>::integrate(rhs, 0.0, {r0, p0, theta0}, s_max, ro));

    for (const auto& st : dense->steps_) {
      const double r = st.rcont[0][0];
      if (r < kPoleEps || r > two_a - kPoleEps)
        throw NumericalCornerError("shoot: pole contact with nu != 0");
    }
    path.dense_ = std::move(dense);
  }

  const double ds = opt.sample_ds > 0.0 ? opt.sample_ds : s_max / 1024.0;
  const int n = std::max(1, static_cast<int>(std::ceil(s_max / ds)));
  path.samples_.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i)
    path.samples_.push_back(path.base_state_at(std::min(s_max, ds * i)));
  if (path.samples_.back().s < s_max) path.samples_.push_back(path.base_state_at(s_max));
  return path;
}

double clairaut_constant(const ProfileSpec& spec, const GeodesicState& st) {
  const double m = spec.m(st.r);
  return m * m * st.dtheta;
}

GeodesicPath flow_deviate(const GeodesicPath& path, double mu, Direction dir) {
  if (!(mu >= 0.0)) throw std::invalid_argument("flow_deviate: mu must be >= 0");
  const double rate = path.wind_rate_ + (dir == Direction::Forward ? mu : -mu);
  if (!(std::abs(rate) < path.profile().max_wind()) && rate != 0.0)
    throw ConvexityError("flow_deviate: wind rate violates the strong-convexity bound");
  GeodesicPath out = path;
  out.wind_rate_ = rate;
  const double delta = rate - path.wind_rate_;
  for (auto& st : out.samples_) {
    st.theta += delta * st.s;
    st.dtheta += delta;
  }
  return out;
}

double finsler_clairaut_cos(const NavigationData& nav, double r, double nu) {
  if (!(r > 0.0 && r < 2.0 * nav.a()))
    throw std::domain_error("finsler_clairaut_cos: r at a pole");
  const double m = nav.profile().m(r);
  const double mu = nav.mu();
  const double den = m * std::sqrt(1.0 + 2.0 * mu * nu + mu * mu * m * m);
  if (!(den > 0.0))
    throw std::domain_error("finsler_clairaut_cos: degenerate denominator");
  return std::clamp((nu + mu * m * m) / den, -1.0, 1.0);
}

namespace {

struct Tangency {
  bool lo = false, hi = false;
};

Tangency detect_tangency(const ProfileSpec& spec, double anu, double lo, double hi) {
  Tangency t;
  const double tol = 1e-7 * std::max(anu, spec.max_m());
  const double mlo = spec.m(lo), mhi = spec.m(hi);
  if (mlo < anu - tol || mhi < anu - tol)
    throw std::domain_error("singular integral: m < |nu| at an endpoint");
  t.lo = mlo - anu <= tol;
  t.hi = mhi - anu <= tol;
  return t;
}

// Kernel m/sqrt(m^2 - nu^2) (length) or nu/(m sqrt(m^2 - nu^2)) (theta
// advance) evaluated at a signed offset d from an anchor radius. When the
// anchor is the tangency (m(anchor) ~ |nu|) the difference m - |nu| is
// produced from a Taylor expansion in the exact offset, which keeps the
// integrand smooth where direct subtraction would be pure cancellation.
struct SingularKernel {
  const ProfileSpec& spec;
  double anu;
  bool length_kernel;

  double at_offset(double anchor, double d, bool anchor_is_tangent) const {
    const double tau = anchor + d;
    const double m = spec.m(tau);
    double dm;
    if (anchor_is_tangent && std::abs(d) < 8e-6 * spec.a()) {
      const ProfileEval e = spec.eval(anchor);
      // A rounding-level residual at the tangency anchor is the anchor
      // definition error, not data: it must not survive into the Taylor
      // form or it dominates dm as d -> 0.
      double res = e.m - anu;
      if (std::abs(res) <= 1e-12 * std::max(1.0, anu)) res = 0.0;
      dm = res + e.m1 * d + 0.5 * e.m2 * d * d;
    } else {
      dm = m - anu;
    }
    const double root = std::sqrt(std::max(dm, 0.0) * (m + anu));
    if (root == 0.0) return 0.0;
    return length_kernel ? m / root : anu / (m * root);
  }
};

// Integral of the kernel over [edge, edge + dir*len]. The substitution
// tau = edge + dir*len*u^2 keeps the offset exact and removes a 1/sqrt
// singularity at the edge; it is applied unconditionally since it is a
// harmless smooth reparametrization when the edge is regular, and the
// half-interval endpoints are often near-tangent without being flagged.
double kernel_integral_from_edge(const SingularKernel& k, double edge, double dir,
                                 double len, bool edge_tangent) {
  if (len == 0.0) return 0.0;
  auto g = [&](double u) {
    const double d = len * u * u;
    return k.at_offset(edge, dir * d, edge_tangent) * 2.0 * len * u;
  };
  return integrate_smooth(g, 0.0, 1.0, 1e-11);
}

double singular_kernel_integral(const ProfileSpec& spec, double nu, double r1, double r2,
                                bool length_kernel) {
  if (r1 == r2) return 0.0;
  const double sign = r2 > r1 ? 1.0 : -1.0;
  const double lo = std::min(r1, r2), hi = std::max(r1, r2);
  const double anu = std::abs(nu);
  if (anu < 1e-15) return length_kernel ? sign * (hi - lo) : 0.0;

  for (int i = 1; i < 64; ++i) {
    const double tau = lo + (hi - lo) * static_cast<double>(i) / 64.0;
    if (spec.m(tau) < anu - 1e-9 * std::max(1.0, anu))
      throw std::domain_error("singular integral: m(tau) < |nu| strictly inside");
  }
  const Tangency tang = detect_tangency(spec, anu, lo, hi);
  const SingularKernel k{spec, anu, length_kernel};
  const double mid = 0.5 * (lo + hi);
  const double value = kernel_integral_from_edge(k, lo, +1.0, mid - lo, tang.lo) +
                       kernel_integral_from_edge(k, hi, -1.0, hi - mid, tang.hi);
  const double signed_value = length_kernel ? value : (nu >= 0.0 ? value : -value);
  return sign * signed_value;
}

}  // namespace

double h_arc_length(const ProfileSpec& spec, double nu, double r1, double r2) {
  return std::abs(singular_kernel_integral(spec, std::abs(nu), r1, r2, true));
}

double theta_advance_integral(const ProfileSpec& spec, double nu, double r1, double r2) {
  return singular_kernel_integral(spec, nu, r1, r2, false);
}

std::optional<double> find_radius_crossing(const GeodesicPath& path, double target_r,
                                           double after_s) {
  const auto& samples = path.samples();
  if (samples.size() < 2) return std::nullopt;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i].s <= after_s) continue;
    const double s0 = std::max(after_s, samples[i - 1].s);
    const double f0 = path.state_at(s0).r - target_r;
    const double f1 = samples[i].r - target_r;
    if (f0 * f1 > 0.0) continue;
    double lo = s0, hi = samples[i].s;
    const bool f0_neg = f0 <= 0.0;
    for (int it = 0; it < 100 && hi - lo > 1e-13 * std::max(1.0, path.s_max()); ++it) {
      const double mid = 0.5 * (lo + hi);
      if ((path.state_at(mid).r - target_r <= 0.0) == f0_neg)
        lo = mid;
      else
        hi = mid;
    }
    const double s_star = 0.5 * (lo + hi);
    if (s_star > after_s + 1e-12) return s_star;
  }
  return std::nullopt;
}

}  // namespace randers
