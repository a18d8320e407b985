#include "randers/cut_compare.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "randers/errors.hpp"

namespace randers {

namespace {
constexpr double kPi = std::numbers::pi;

double wrap_pm_pi(double x) {
  x = std::fmod(x, 2.0 * kPi);
  if (x > kPi) x -= 2.0 * kPi;
  if (x < -kPi) x += 2.0 * kPi;
  return x;
}
}  // namespace

double point_distance(const ProfileSpec& spec, double r1, double th1, double r2,
                      double th2) {
  const double dm = spec.m(0.5 * (r1 + r2));
  const double dth = wrap_pm_pi(th2 - th1);
  return std::hypot(r2 - r1, dm * dth);
}

double hausdorff_distance(const ProfileSpec& spec,
                          const std::vector<std::array<double, 2>>& arc_samples,
                          const std::vector<EmpiricalCutPoint>& empirical) {
  if (arc_samples.empty() || empirical.empty()) return std::nan("");
  double h = 0.0;
  for (const auto& a : arc_samples) {
    double best = 1e300;
    for (const auto& e : empirical)
      best = std::min(best, point_distance(spec, a[0], a[1], e.r, e.theta));
    h = std::max(h, best);
  }
  for (const auto& e : empirical) {
    double best = 1e300;
    for (const auto& a : arc_samples)
      best = std::min(best, point_distance(spec, a[0], a[1], e.r, e.theta));
    h = std::max(h, best);
  }
  return h;
}

CutLocusArc cut_locus_dispatch(const NavigationData& nav, double r_x, MetricKind metric,
                               int n_samples) {
  try {
    return cut_locus_theorem(nav, r_x, metric, n_samples);
  } catch (const HypothesisError&) {
    return cut_locus_equator_case(nav, r_x, metric, n_samples);
  }
}

CutComparison compare_cut_locus(const NavigationData& nav, double r_x,
                                const FieldOptions& opt, int pencil_n) {
  CutComparison cmp;
  const MetricKind metric =
      nav.mu() > 0.0 ? MetricKind::FinslerForward : MetricKind::Riemannian;
  cmp.theorem_arc = cut_locus_dispatch(nav, r_x, metric);
  DistanceField field(nav, r_x, 0.0, opt);
  cmp.empirical = empirical_cut_locus(nav, r_x, 0.0, pencil_n, field);
  cmp.tol_mesh = field.tol_mesh();
  cmp.hausdorff = hausdorff_distance(nav.profile(), cmp.theorem_arc.samples, cmp.empirical);
  cmp.pass = std::isfinite(cmp.hausdorff) && cmp.hausdorff <= cmp.tol_mesh;
  return cmp;
}

}  // namespace randers
