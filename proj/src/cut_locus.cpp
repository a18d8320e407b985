#include "randers/cut_locus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "randers/errors.hpp"
#include "randers/half_period.hpp"

namespace randers {

namespace {
constexpr double kPi = std::numbers::pi;

bool near(double x, double y, double tol) { return std::abs(x - y) <= tol; }
}  // namespace

const char* to_string(ArcKind k) {
  switch (k) {
    case ArcKind::SinglePoint:
      return "single_point";
    case ArcKind::ParallelSubarc:
      return "parallel_subarc";
    case ArcKind::MeridianSubarc:
      return "meridian_subarc";
  }
  return "?";
}

double h_half_period_at(const ProfileSpec& spec, double r_x) {
  const double a = spec.a();
  const double m_x = spec.m(r_x);
  const double m_a = spec.m(a);
  if (m_x < m_a * (1.0 - 1e-9)) return h_half_period(spec, m_x);
  return kPi / (m_a * std::sqrt(spec.gaussian_curvature(a)));
}

double tangent_conjugate_distance(const ProfileSpec& spec, double r_x) {
  const double a = spec.a();
  const double lo = std::min(r_x, 2.0 * a - r_x);
  if (near(lo, a, 1e-9 * a))
    return kPi / std::sqrt(spec.gaussian_curvature(a));
  return h_arc_length(spec, spec.m(lo), lo, 2.0 * a - lo);
}

namespace {

// Shortest geodesic arrival at (t, pi) from (u, 0) among a family of
// arrivals described by a theta-advance function of nu: scans for roots of
// w(nu) = theta(nu) - pi and returns the minimal arrival length.
template <typename ThetaFn, typename LenFn>
double scan_arrivals(double nu_hi, const ThetaFn& theta, const LenFn& length) {
  double best = 1e300;
  const int n = 200;
  double prev_nu = 0.0, prev_w = 0.0;
  bool have_prev = false;
  for (int i = 1; i <= n; ++i) {
    // Clustered toward nu_hi: near-tangent launches sweep the far end of
    // the opposite meridian in a thin nu-sliver that a uniform grid skips.
    const double tau = static_cast<double>(i) / (n + 1);
    const double nu = nu_hi * std::sin(0.5 * kPi * tau);
    double w;
    try {
      w = theta(nu) - kPi;
    } catch (const std::exception&) {
      have_prev = false;
      continue;
    }
    if (have_prev && prev_w != 0.0 && (prev_w > 0.0) != (w > 0.0)) {
      double lo = prev_nu, hi = nu;
      const bool lo_pos = prev_w > 0.0;
      for (int it = 0; it < 70 && hi - lo > 1e-13; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((theta(mid) - kPi > 0.0) == lo_pos)
          lo = mid;
        else
          hi = mid;
      }
      best = std::min(best, length(0.5 * (lo + hi)));
    }
    prev_nu = nu;
    prev_w = w;
    have_prev = true;
  }
  return best;
}

}  // namespace

double h_distance_to_opposite_meridian(const ProfileSpec& spec, double u, double t) {
  const double two_a = 2.0 * spec.a();
  if (!(u > 0.0 && u < two_a && t > 0.0 && t < two_a))
    throw std::domain_error("h_distance_to_opposite_meridian: off-pole points required");

  double best = std::min(u + t, (two_a - u) + (two_a - t));  // meridian routes

  const double nu_hi =
      std::min(std::min(spec.m(u), spec.m(t)), spec.m(spec.a())) * (1.0 - 1e-9);

  // Post-tangency arrivals of the descending launch and (mirrored) of the
  // ascending launch.
  best = std::min(best, scan_arrivals(
                            nu_hi, [&](double nu) { return theta_of(spec, t, u, nu); },
                            [&](double nu) {
                              const double x = xi(spec, nu);
                              return h_arc_length(spec, nu, x, u) +
                                     h_arc_length(spec, nu, x, t);
                            }));
  best = std::min(
      best, scan_arrivals(
                nu_hi,
                [&](double nu) { return theta_of(spec, two_a - t, two_a - u, nu); },
                [&](double nu) {
                  const double x = xi(spec, nu);
                  return h_arc_length(spec, nu, x, two_a - u) +
                         h_arc_length(spec, nu, x, two_a - t);
                }));

  // Pre-tangency arrivals (parallel-hugging geodesics that reach (t, pi)
  // before their first turning point), one per radial direction.
  if (t > u) {
    best = std::min(
        best, scan_arrivals(
                  nu_hi,
                  [&](double nu) { return theta_advance_integral(spec, nu, u, t); },
                  [&](double nu) { return h_arc_length(spec, nu, u, t); }));
  } else if (t < u) {
    best = std::min(
        best, scan_arrivals(
                  nu_hi,
                  [&](double nu) { return theta_advance_integral(spec, nu, t, u); },
                  [&](double nu) { return h_arc_length(spec, nu, t, u); }));
  }
  return best;
}

namespace {

CutLocusArc parallel_arc(const NavigationData& nav, double r_x, MetricKind metric,
                         int n_samples) {
  const ProfileSpec& spec = nav.profile();
  const double two_a = 2.0 * spec.a();
  const double mu_eff = metric == MetricKind::FinslerForward ? nav.mu() : 0.0;
  const double H_m = h_half_period_at(spec, r_x);
  const double psi = mu_eff * tangent_conjugate_distance(spec, r_x);

  CutLocusArc arc;
  arc.kind = ArcKind::ParallelSubarc;
  arc.metric = metric;
  arc.r = two_a - r_x;
  arc.theta_lo = H_m + psi;
  arc.theta_hi = 2.0 * kPi - (H_m - psi);
  arc.samples.reserve(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    const double th = arc.theta_lo +
                      (arc.theta_hi - arc.theta_lo) * static_cast<double>(i) /
                          std::max(1, n_samples - 1);
    arc.samples.push_back({arc.r, th});
  }
  if (arc.theta_hi - arc.theta_lo < 1e-12) {
    arc.kind = ArcKind::SinglePoint;
    arc.samples = {{arc.r, arc.theta_lo}};
  }
  return arc;
}

}  // namespace

CutLocusArc cut_locus_theorem(const NavigationData& nav, double r_x, MetricKind metric,
                              int n_samples) {
  const ProfileSpec& spec = nav.profile();
  const double a = spec.a();
  const double two_a = 2.0 * a;
  if (!(r_x > kPoleEps && r_x < two_a - kPoleEps))
    throw std::domain_error("cut_locus_theorem: x must be off the poles");
  const double mu_eff = metric == MetricKind::FinslerForward ? nav.mu() : 0.0;

  const CurvatureClassification cls = classify_curvature(spec);
  switch (cls.value) {
    case CurvatureClass::Constant: {
      const double R = 1.0 / std::sqrt(spec.gaussian_curvature(a));
      CutLocusArc arc;
      arc.kind = ArcKind::SinglePoint;
      arc.metric = metric;
      arc.r = two_a - r_x;
      arc.theta_lo = arc.theta_hi = kPi * (1.0 + mu_eff * R);
      arc.samples = {{arc.r, arc.theta_lo}};
      return arc;
    }
    case CurvatureClass::NonDecreasing:
      return parallel_arc(nav, r_x, metric, n_samples);
    case CurvatureClass::NonIncreasing: {
      // Endpoints are the first conjugate points along the two meridian
      // branches from x (through p and through q). The interval is
      // symmetric about the equator only when x itself sits on it.
      const double s_desc = meridian_conjugate_arclength(spec, r_x, true);
      const double s_asc = meridian_conjugate_arclength(spec, r_x, false);
      const double c_desc = s_desc - r_x;                  // position via pole p
      const double c_asc = 2.0 * two_a - r_x - s_asc;      // position via pole q
      CutLocusArc arc;
      arc.kind = ArcKind::MeridianSubarc;
      arc.metric = metric;
      arc.r = 0.0;
      arc.param_lo = std::min(c_desc, c_asc);
      arc.param_hi = std::max(c_desc, c_asc);
      arc.samples.reserve(n_samples);
      double th_lo = 1e300, th_hi = -1e300;
      for (int i = 0; i < n_samples; ++i) {
        const double t = arc.param_lo + (arc.param_hi - arc.param_lo) *
                                            static_cast<double>(i) /
                                            std::max(1, n_samples - 1);
        double th = kPi;
        if (mu_eff > 0.0)
          th += mu_eff * h_distance_to_opposite_meridian(spec, r_x, t);
        arc.samples.push_back({t, th});
        th_lo = std::min(th_lo, th);
        th_hi = std::max(th_hi, th);
      }
      arc.theta_lo = th_lo;
      arc.theta_hi = th_hi;
      return arc;
    }
    case CurvatureClass::NonMonotone:
      throw HypothesisError(
          "cut_locus_theorem: curvature not monotone on (0, a]; use the "
          "equator-criterion path or the oracle");
  }
  throw std::logic_error("cut_locus_theorem: unreachable");
}

CutLocusArc cut_locus_equator_case(const NavigationData& nav, double r_x,
                                   MetricKind metric, int n_samples) {
  const ProfileSpec& spec = nav.profile();
  const double a = spec.a();
  const double two_a = 2.0 * a;
  if (!(r_x > kPoleEps && r_x < two_a - kPoleEps))
    throw std::domain_error("cut_locus_equator_case: x must be off the poles");

  // Premise: the equator point's cut locus is an equator subarc. Sufficient
  // condition used here: H'(nu) < 0 throughout (0, m(a)).
  if (has_closed_form_half_period(spec)) {
    const double probe = 0.5 * spec.m(a);
    if (!(dh_closed(spec, probe) < 0.0))
      throw HypothesisError("cut_locus_equator_case: H'(nu) < 0 premise fails");
  } else {
    const double ma = spec.m(a);
    const double dnu = 1e-5 * ma;
    for (int i = 1; i <= 33; ++i) {
      const double nu = ma * static_cast<double>(i) / 35.0;
      const double dH = (h_half_period(spec, nu + dnu) - h_half_period(spec, nu - dnu)) /
                        (2.0 * dnu);
      if (!(dH < 0.0))
        throw HypothesisError("cut_locus_equator_case: H'(nu) < 0 premise fails");
    }
  }
  return parallel_arc(nav, r_x, metric, n_samples);
}

PoleCut pole_cut(const NavigationData& nav) {
  return {2.0 * nav.a(), 2.0 * nav.a()};
}

}  // namespace randers
