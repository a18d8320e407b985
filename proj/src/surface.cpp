#include "randers/surface.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "randers/errors.hpp"

namespace randers {

namespace {
constexpr double kPi = std::numbers::pi;
}

ProfileSpec ProfileSpec::round_sphere(double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("round profile: radius must be > 0");
  ProfileSpec p;
  p.family_ = ProfileFamily::Round;
  p.radius_ = radius;
  p.a_ = 0.5 * kPi * radius;
  p.max_m_ = radius;
  p.r_max_m_ = p.a_;
  return p;
}

ProfileSpec ProfileSpec::example1(double lambda) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("example1: lambda must be >= 0");
  ProfileSpec p;
  p.family_ = ProfileFamily::Example1;
  p.lambda_ = lambda;
  p.a_ = 0.5 * kPi;
  p.max_m_ = std::sqrt(lambda + 1.0);
  p.r_max_m_ = p.a_;
  return p;
}

ProfileSpec ProfileSpec::example2(double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw std::invalid_argument("example2: lambda must be in (0, 1)");
  ProfileSpec p;
  p.family_ = ProfileFamily::Example2;
  p.lambda_ = lambda;
  p.a_ = 0.5 * kPi;
  p.max_m_ = 1.0 / std::sqrt(1.0 - lambda);
  p.r_max_m_ = p.a_;
  return p;
}

ProfileSpec ProfileSpec::custom_table(const std::vector<double>& r,
                                      const std::vector<double>& m) {
  if (r.size() != m.size() || r.size() < 8)
    throw std::invalid_argument("custom profile: need >= 8 (r, m) samples");
  if (std::abs(r.front()) > 1e-12)
    throw std::invalid_argument("custom profile: table must start at r = 0");
  const double two_a = r.back();
  if (!(two_a > 0.0)) throw std::invalid_argument("custom profile: invalid span");
  const double scale = two_a;
  if (std::abs(m.front()) > 1e-9 * scale || std::abs(m.back()) > 1e-9 * scale)
    throw std::invalid_argument("custom profile: m must vanish at both poles");
  for (std::size_t i = 1; i + 1 < m.size(); ++i)
    if (!(m[i] > 0.0))
      throw std::invalid_argument("custom profile: m must be positive between poles");

  ProfileSpec p;
  p.family_ = ProfileFamily::CustomTable;
  p.a_ = 0.5 * two_a;
  p.spline_ = std::make_shared<CubicSpline>(r, m, 1.0, -1.0);
  p.locate_max();
  p.monotone_rising_ = true;
  for (int i = 1; i < 4096; ++i) {
    const double rr = p.a_ * static_cast<double>(i) / 4096.0;
    if (p.spline_->derivative(rr) <= 0.0) {
      p.monotone_rising_ = false;
      break;
    }
  }

  // m'(eps) ~ 1 sanity check and a coarse symmetry gate; the fine 1e-6
  // symmetry invariant is the verify suite's job.
  const double d0 = p.spline_->derivative(1e-6 * two_a);
  if (std::abs(d0 - 1.0) > 1e-3)
    throw std::invalid_argument("custom profile: m'(0) must equal 1");
  if (p.symmetry_residual(512) > 1e-2 * p.max_m_)
    throw std::invalid_argument("custom profile: grossly asymmetric table");
  return p;
}

void ProfileSpec::locate_max() {
  // Golden-section on [0, 2a], then Newton polish on m' (design choice for
  // tabulated profiles; closed forms use the analytic maximum).
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0, hi = 2.0 * a_;
  double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
  double fc = spline_->eval(c), fd = spline_->eval(d);
  for (int it = 0; it < 200 && (hi - lo) > 1e-12 * a_; ++it) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - gr * (hi - lo);
      fc = spline_->eval(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + gr * (hi - lo);
      fd = spline_->eval(d);
    }
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 3; ++it) {
    const double d1 = spline_->derivative(x);
    const double d2 = spline_->second_derivative(x);
    if (d2 >= 0.0) break;
    const double step = d1 / d2;
    const double xn = x - step;
    if (xn <= 0.0 || xn >= 2.0 * a_) break;
    x = xn;
  }
  r_max_m_ = x;
  max_m_ = spline_->eval(x);
}

ProfileEval ProfileSpec::eval(double r) const {
  if (r < -1e-12 || r > 2.0 * a_ + 1e-12)
    throw std::domain_error("profile: r outside [0, 2a]");
  r = std::clamp(r, 0.0, 2.0 * a_);
  switch (family_) {
    case ProfileFamily::Round: {
      const double t = r / radius_;
      return {radius_ * std::sin(t), std::cos(t), -std::sin(t) / radius_};
    }
    case ProfileFamily::Example1: {
      const double s = std::sin(r), c = std::cos(r);
      const double q = 1.0 + lambda_ * c * c;
      const double sq = std::sqrt(lambda_ + 1.0);
      const double m = sq * s / std::sqrt(q);
      const double m1 = sq * (lambda_ + 1.0) * c / (q * std::sqrt(q));
      const double m2 = sq * (lambda_ + 1.0) * s * (2.0 * lambda_ * c * c - 1.0) /
                        (q * q * std::sqrt(q));
      return {m, m1, m2};
    }
    case ProfileFamily::Example2: {
      const double s = std::sin(r), c = std::cos(r);
      const double p = 1.0 - lambda_ * s * s;
      const double sp = std::sqrt(p);
      const double m = s / sp;
      const double m1 = c / (p * sp);
      const double m2 = s * (lambda_ * (1.0 + 2.0 * c * c) - 1.0) / (p * p * sp);
      return {m, m1, m2};
    }
    case ProfileFamily::CustomTable:
      return {spline_->eval(r), spline_->derivative(r), spline_->second_derivative(r)};
  }
  throw std::logic_error("profile: unknown family");
}

double ProfileSpec::gaussian_curvature(double r) const {
  if (!(r > 0.0 && r < 2.0 * a_))
    throw std::domain_error("gaussian_curvature: r must be strictly inside (0, 2a)");
  const ProfileEval e = eval(r);
  if (e.m <= 0.0) throw std::domain_error("gaussian_curvature: m(r) <= 0");
  return -e.m2 / e.m;
}

double ProfileSpec::symmetry_residual(int grid_n) const {
  double worst = 0.0;
  for (int i = 1; i < grid_n; ++i) {
    const double r = 2.0 * a_ * static_cast<double>(i) / grid_n;
    worst = std::max(worst, std::abs(m(r) - m(2.0 * a_ - r)));
  }
  return worst;
}

std::string ProfileSpec::describe() const {
  std::ostringstream os;
  switch (family_) {
    case ProfileFamily::Round:
      os << "round(R=" << radius_ << ")";
      break;
    case ProfileFamily::Example1:
      os << "example1(lambda=" << lambda_ << ")";
      break;
    case ProfileFamily::Example2:
      os << "example2(lambda=" << lambda_ << ")";
      break;
    case ProfileFamily::CustomTable:
      os << "custom(n=" << spline_->size() << ")";
      break;
  }
  return os.str();
}

NavigationData::NavigationData(ProfileSpec profile, double mu)
    : profile_(std::move(profile)), mu_(mu) {
  if (!(mu >= 0.0))
    throw std::invalid_argument("navigation data: mu must be >= 0");
  if (!(mu < profile_.max_wind()))
    throw ConvexityError("navigation data: mu must stay below 1/max m for strong convexity");
}

MetricCoefficients NavigationData::randers_coefficients(double r) const {
  if (!(r > 0.0 && r < 2.0 * profile_.a()))
    throw std::domain_error("randers_coefficients: r must be strictly inside (0, 2a)");
  const double m = profile_.m(r);
  const double w = mu_ * m;
  const double lam = 1.0 - w * w;
  if (!(lam > 0.0)) throw ConvexityError("randers_coefficients: mu * m(r) >= 1");
  return {1.0 / lam, m * m / (lam * lam), -mu_ * m * m / lam};
}

double NavigationData::finsler_norm(double r, double y_r, double y_theta) const {
  if (y_r == 0.0 && y_theta == 0.0)
    throw std::domain_error("finsler_norm: zero vector");
  const MetricCoefficients c = randers_coefficients(r);
  return std::sqrt(c.a11 * y_r * y_r + c.a22 * y_theta * y_theta) + c.b2 * y_theta;
}

double NavigationData::finsler_norm_navigation(double r, double y_r,
                                               double y_theta) const {
  if (y_r == 0.0 && y_theta == 0.0)
    throw std::domain_error("finsler_norm: zero vector");
  const double m = profile_.m(r);
  const double lam = 1.0 - mu_ * mu_ * m * m;
  if (!(lam > 0.0)) throw ConvexityError("finsler_norm: mu * m(r) >= 1");
  const double h2 = y_r * y_r + m * m * y_theta * y_theta;
  const double w0 = mu_ * m * m * y_theta;
  return (std::sqrt(lam * h2 + w0 * w0) - w0) / lam;
}

}  // namespace randers
