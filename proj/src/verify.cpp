#include "randers/verify.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "randers/conjugate.hpp"
#include "randers/cut_compare.hpp"
#include "randers/cut_locus.hpp"
#include "randers/distance_field.hpp"
#include "randers/errors.hpp"
#include "randers/geodesic.hpp"
#include "randers/half_period.hpp"

namespace randers {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<ProfileSpec> closed_families() {
  return {ProfileSpec::round_sphere(1.0), ProfileSpec::example1(1.0),
          ProfileSpec::example2(0.5), ProfileSpec::example1(0.25)};
}

struct Ctx {
  const VerifyOptions& opt;
  std::vector<CheckResult>& out;

  void add(const std::string& name, double measured, double threshold,
           const std::string& note = "") {
    out.push_back({name, measured <= threshold, measured, threshold, note});
  }
  void add_flag(const std::string& name, bool ok, const std::string& note = "") {
    out.push_back({name, ok, ok ? 0.0 : 1.0, 0.5, note});
  }
};

// --- surfaces ---------------------------------------------------------

void check_curvature_fd(Ctx& c) {
  std::mt19937_64 rng(c.opt.seed + 1);
  double worst = 0.0;
  for (const auto& spec : closed_families()) {
    const double two_a = 2.0 * spec.a();
    std::uniform_real_distribution<double> dist(0.05, two_a - 0.05);
    const double h = 1e-4;
    for (int i = 0; i < 1000; ++i) {
      const double r = dist(rng);
      const double m2_fd =
          (spec.m(r + h) - 2.0 * spec.m(r) + spec.m(r - h)) / (h * h);
      const double g_fd = -m2_fd / spec.m(r);
      const double g = spec.gaussian_curvature(r);
      worst = std::max(worst, std::abs(g_fd - g) / std::max(1.0, std::abs(g)));
    }
  }
  c.add("surfaces.curvature_vs_fd", worst, 1e-6);
}

void check_symmetry(Ctx& c) {
  double worst = 0.0;
  for (const auto& spec : closed_families())
    worst = std::max(worst, spec.symmetry_residual(1000));
  c.add("surfaces.equatorial_symmetry", worst, 1e-10);
}

void check_norm_agreement(Ctx& c) {
  std::mt19937_64 rng(c.opt.seed + 2);
  std::uniform_real_distribution<double> uy(-2.0, 2.0);
  std::uniform_real_distribution<double> um(0.0, 0.9);
  double worst = 0.0;
  for (const auto& spec : closed_families()) {
    NavigationData nav(spec, um(rng) * spec.max_wind());
    std::uniform_real_distribution<double> ur(0.05, 2.0 * spec.a() - 0.05);
    for (int i = 0; i < 1000; ++i) {
      const double r = ur(rng);
      double yr = uy(rng), yt = uy(rng);
      if (yr == 0.0 && yt == 0.0) yr = 1.0;
      const double f1 = nav.finsler_norm(r, yr, yt);
      const double f2 = nav.finsler_norm_navigation(r, yr, yt);
      worst = std::max(worst, std::abs(f1 - f2) / std::max(1.0, f1));
    }
  }
  c.add("surfaces.norm_two_routes", worst, 1e-12);
}

void check_norm_positivity(Ctx& c) {
  std::mt19937_64 rng(c.opt.seed + 3);
  std::uniform_real_distribution<double> uy(-2.0, 2.0);
  double worst = 0.0;  // violation magnitude of F >= (1 - mu m) |y|_h
  for (const auto& spec : closed_families()) {
    NavigationData nav(spec, 0.5 * spec.max_wind());
    std::uniform_real_distribution<double> ur(0.05, 2.0 * spec.a() - 0.05);
    for (int i = 0; i < 1000; ++i) {
      const double r = ur(rng);
      double yr = uy(rng), yt = uy(rng);
      if (yr == 0.0 && yt == 0.0) yt = 1.0;
      const double m = spec.m(r);
      const double hn = std::hypot(yr, m * yt);
      const double bound = (1.0 - nav.mu() * m) * hn;
      const double f = nav.finsler_norm(r, yr, yt);
      worst = std::max(worst, bound - f);
      if (!(f > 0.0)) worst = std::max(worst, 1.0);
    }
  }
  c.add("surfaces.norm_lower_bound", worst, 1e-12);
}

// --- geodesics --------------------------------------------------------

void check_unit_speed(Ctx& c) {
  std::mt19937_64 rng(c.opt.seed + 4);
  double worst = 0.0;
  for (const auto& spec : closed_families()) {
    std::uniform_real_distribution<double> unu(0.05, 0.95);
    const double a = spec.a();
    ShootOptions so;
    so.tol = 1e-10;
    for (int k = 0; k < 5; ++k) {
      const double nu = unu(rng) * spec.m(a);
      GeodesicPath p = shoot_h_geodesic(spec, a, 0.0, nu, -1, 8.0 * a, so);
      for (const auto& st : p.samples()) {
        const double m = spec.m(st.r);
        worst = std::max(worst,
                         std::abs(st.dr * st.dr + m * m * st.dtheta * st.dtheta - 1.0));
      }
    }
  }
  c.add("geodesics.unit_speed", worst, 1e-8);
}

void check_clairaut(Ctx& c, int shots_per_family) {
  std::mt19937_64 rng(c.opt.seed + 5);
  double worst_stored = 0.0, worst_fd = 0.0;
  for (const auto& spec : closed_families()) {
    const double a = spec.a();
    std::uniform_real_distribution<double> unu(0.05, 0.95);
    std::uniform_real_distribution<double> ur(0.35 * a, 1.65 * a);
    for (int k = 0; k < shots_per_family; ++k) {
      const double r0 = ur(rng);
      const double nu = unu(rng) * spec.m(r0);
      ShootOptions so;
      so.tol = 1e-11;
      so.sample_ds = 5e-4;
      GeodesicPath p = shoot_h_geodesic(spec, r0, 0.0, nu, k % 2 ? 1 : -1, 8.0 * a, so);
      const auto& s = p.samples();
      for (std::size_t i = 0; i < s.size(); ++i) {
        const double m = spec.m(s[i].r);
        worst_stored = std::max(worst_stored, std::abs(m * m * s[i].dtheta - nu));
        if (i >= 2 && i + 2 < s.size()) {
          const double h = s[i + 1].s - s[i].s;
          // The last sample is clamped to s_max; skip the non-uniform tail.
          if (std::abs((s[i + 2].s - s[i - 2].s) - 4.0 * h) > 1e-9) continue;
          const double dth_fd = (s[i - 2].theta - 8.0 * s[i - 1].theta +
                                 8.0 * s[i + 1].theta - s[i + 2].theta) /
                                (12.0 * h);
          worst_fd = std::max(worst_fd, std::abs(m * m * dth_fd - nu));
        }
      }
    }
  }
  c.add("geodesics.clairaut_stored", worst_stored, 1e-7);
  c.add("geodesics.clairaut_fd", worst_fd, 1e-7);
}

void check_deviation_inverse(Ctx& c) {
  const ProfileSpec spec = ProfileSpec::example1(1.0);
  GeodesicPath p = shoot_h_geodesic(spec, spec.a(), 0.0, 0.6, -1, 4.0 * spec.a());
  const double mu = 0.3 * spec.max_wind();
  GeodesicPath q = flow_deviate(flow_deviate(p, mu, Direction::Forward), mu,
                                Direction::Backward);
  double worst = 0.0;
  for (std::size_t i = 0; i < p.samples().size(); ++i)
    worst = std::max(worst, std::abs(p.samples()[i].theta - q.samples()[i].theta));
  c.add("geodesics.deviation_invertible", worst, 1e-14);
}

void check_reversal(Ctx& c) {
  double worst = 0.0;
  for (const auto& spec : {ProfileSpec::example1(1.0), ProfileSpec::example2(0.5)}) {
    const double a = spec.a();
    const double nu = 0.55 * spec.m(a);
    const double L = 3.0 * a;
    GeodesicPath p = shoot_h_geodesic(spec, a, 0.0, nu, -1, L);
    const GeodesicState e = p.state_at(L);
    const int sgn = e.dr > 0.0 ? -1 : (e.dr < 0.0 ? 1 : 0);
    GeodesicPath q = shoot_h_geodesic(spec, e.r, e.theta, -nu, sgn, L);
    for (int i = 0; i <= 100; ++i) {
      const double s = L * static_cast<double>(i) / 100.0;
      const GeodesicState f = p.state_at(s);
      const GeodesicState b = q.state_at(L - s);
      worst = std::max(worst, std::abs(f.r - b.r));
      worst = std::max(worst, std::abs(f.theta - b.theta));
    }
  }
  c.add("geodesics.reversal_retrace", worst, 1e-6);
}

void check_f_unit_speed(Ctx& c) {
  double worst = 0.0;
  for (const auto& spec : {ProfileSpec::example1(1.0), ProfileSpec::example2(0.5)}) {
    const double a = spec.a();
    const double mu = 0.45 * spec.max_wind();
    NavigationData nav(spec, mu);
    GeodesicPath p = shoot_h_geodesic(spec, a, 0.0, 0.4 * spec.m(a), -1, 6.0 * a);
    GeodesicPath fwd = flow_deviate(p, mu, Direction::Forward);
    GeodesicPath bwd = flow_deviate(p, mu, Direction::Backward);
    for (int i = 0; i <= 200; ++i) {
      const double s = 6.0 * a * static_cast<double>(i) / 200.0;
      const GeodesicState sf = fwd.state_at(s);
      worst = std::max(worst, std::abs(nav.finsler_norm(sf.r, sf.dr, sf.dtheta) - 1.0));
      // Against the wind the reverse run is the unit-speed F-geodesic.
      const GeodesicState sb = bwd.state_at(s);
      worst = std::max(worst, std::abs(nav.finsler_norm(sb.r, -sb.dr, -sb.dtheta) - 1.0));
    }
  }
  c.add("geodesics.f_unit_speed", worst, 1e-8);
}

// --- halfperiod -------------------------------------------------------

void check_half_period_closed_forms(Ctx& c) {
  double worst = 0.0;
  auto run = [&](const ProfileSpec& spec) {
    const double ma = spec.m(spec.a());
    for (int i = 1; i <= 50; ++i) {
      const double nu = ma * static_cast<double>(i) / 51.0;
      worst = std::max(worst,
                       std::abs(h_half_period(spec, nu) - h_half_period_closed(spec, nu)));
    }
  };
  for (double l : {0.25, 0.5, 1.0, 2.0}) run(ProfileSpec::example1(l));
  for (double l : {0.3, 0.5}) run(ProfileSpec::example2(l));
  c.add("halfperiod.quadrature_vs_closed_form", worst, 1e-6);
}

void check_equator_return(Ctx& c) {
  double worst = 0.0;
  for (const auto& spec : closed_families()) {
    const double a = spec.a();
    const double ma = spec.m(a);
    for (double frac : {0.25, 0.5, 0.8}) {
      const double nu = frac * ma;
      const double H = h_half_period(spec, nu);
      const double lead = h_arc_length(spec, nu, xi(spec, nu), a);
      ShootOptions so;
      so.tol = 1e-12;
      so.sample_ds = 1e-3;
      GeodesicPath p = shoot_h_geodesic(spec, a, 0.0, nu, -1, 2.2 * lead, so);
      const auto s_back = find_radius_crossing(p, a, 1e-6);
      if (!s_back) {
        worst = std::max(worst, 1.0);
        continue;
      }
      worst = std::max(worst, std::abs(p.state_at(*s_back).theta - H));
    }
  }
  c.add("halfperiod.equator_return_matches_H", worst, 1e-5);
}

void check_monotone_propagation(Ctx& c) {
  bool ok = true;
  for (const auto& spec : {ProfileSpec::example1(1.0), ProfileSpec::example2(0.5)}) {
    NavigationData nav(spec, 0.5 * spec.max_wind());
    const double ma = spec.m(spec.a());
    const double dnu = 1e-6 * ma;
    for (int i = 2; i < 30; ++i) {
      const double nu = ma * static_cast<double>(i) / 32.0;
      const double dH = dh_closed(spec, nu);
      const double dHF = (f_half_period(nav, nu + dnu, Direction::Forward) -
                          f_half_period(nav, nu - dnu, Direction::Forward)) /
                         (2.0 * dnu);
      if (dH < 0.0 && !(dHF < 0.0)) ok = false;
    }
  }
  c.add_flag("halfperiod.monotone_propagation", ok,
             "H' < 0 and mu > 0 imply (H_F+)' < 0");
}

void check_psi_decreasing(Ctx& c) {
  bool ok = true;
  for (const auto& spec : {ProfileSpec::example1(1.0), ProfileSpec::example2(0.5)}) {
    const double ma = spec.m(spec.a());
    double prev = 1e300;
    for (int i = 1; i < 40; ++i) {
      const double nu = ma * static_cast<double>(i) / 41.0;
      const double psi = 2.0 * (spec.a() - xi(spec, nu));
      if (!(psi < prev)) ok = false;
      prev = psi;
    }
  }
  c.add_flag("halfperiod.psi_decreasing", ok);
}

// --- conjcut ----------------------------------------------------------

void check_flow_correspondence(Ctx& c, int pencil) {
  const ProfileSpec spec = ProfileSpec::example2(0.5);
  NavigationData nav(spec, 0.2);
  const double u = kPi / 3.0;
  const double two_a = 2.0 * spec.a();
  double worst = 0.0;
  for (int i = 0; i < pencil; ++i) {
    const double nu = spec.m(u) * (static_cast<double>(i) + 0.5) / pencil;
    const double x = xi(spec, nu);
    // h-cut parameter via quadrature: arclength to the antipodal parallel.
    const double s_h = h_arc_length(spec, nu, x, u) + h_arc_length(spec, nu, x, two_a - u);
    // F-cut parameter via the deviated ODE path crossing r = 2a - u.
    ShootOptions so;
    so.tol = 1e-12;
    so.sample_ds = 1e-3;
    GeodesicPath p = shoot_h_geodesic(spec, u, 0.0, nu, -1, 1.3 * s_h + 0.5, so);
    GeodesicPath pf = flow_deviate(p, nav.mu(), Direction::Forward);
    const auto s_f = find_radius_crossing(pf, two_a - u, 0.5 * s_h);
    if (!s_f) {
      worst = std::max(worst, 1.0);
      continue;
    }
    worst = std::max(worst, std::abs(*s_f - s_h));
  }
  c.add("conjcut.flow_correspondence_parameters", worst, 1e-6);
}

void check_case2_endpoint(Ctx& c) {
  const ProfileSpec spec = ProfileSpec::example2(0.5);
  NavigationData nav(spec, 0.2);
  const double u = kPi / 3.0;
  const double two_a = 2.0 * spec.a();
  const CutLocusArc arc = cut_locus_theorem(nav, u, MetricKind::FinslerForward);
  // Independent recomputation: closed-form H at the tangent value and the
  // tangent arclength from an ODE shot (dr_sign = 0 start).
  const double m_u = spec.m(u);
  const double H_m = h_half_period_closed(spec, m_u);
  ShootOptions so;
  so.tol = 1e-12;
  so.sample_ds = 1e-3;
  GeodesicPath p = shoot_h_geodesic(spec, u, 0.0, m_u, 0, 2.0 * two_a, so);
  // The tangent launch touches the antipodal parallel at its first turning
  // point (tangential contact, not a crossing).
  const auto turns = p.turning_points();
  double measured = 1.0;
  if (!turns.empty())
    measured = std::abs(arc.theta_lo - (H_m + nav.mu() * turns.front()));
  c.add("conjcut.case2_left_endpoint", measured, 1e-6,
        "tangent-arc length from the ODE turning point");
}

void check_antipodal_r(Ctx& c) {
  double worst = 0.0;
  {
    NavigationData nav(ProfileSpec::example2(0.5), 0.2);
    const CutLocusArc arc = cut_locus_theorem(nav, kPi / 3.0, MetricKind::FinslerForward);
    for (const auto& s : arc.samples)
      worst = std::max(worst, std::abs(s[0] - (2.0 * nav.a() - kPi / 3.0)));
  }
  {
    NavigationData nav(ProfileSpec::example1(1.0), 0.5 / std::sqrt(2.0));
    const CutLocusArc arc =
        cut_locus_equator_case(nav, kPi / 3.0, MetricKind::FinslerForward);
    for (const auto& s : arc.samples)
      worst = std::max(worst, std::abs(s[0] - (2.0 * nav.a() - kPi / 3.0)));
  }
  c.add("conjcut.antipodal_parallel_radius", worst, 1e-8);
}

void check_mu0_degeneration(Ctx& c) {
  double worst = 0.0;
  const ProfileSpec spec = ProfileSpec::example2(0.5);
  NavigationData nav0(spec, 0.0);
  // Half periods coincide with H.
  for (double frac : {0.3, 0.7}) {
    const double nu = frac * spec.m(spec.a());
    worst = std::max(worst, std::abs(f_half_period(nav0, nu, Direction::Forward) -
                                     h_half_period(spec, nu)));
  }
  // Cut locus structures coincide.
  const CutLocusArc h_arc = cut_locus_theorem(nav0, kPi / 3.0, MetricKind::Riemannian);
  const CutLocusArc f_arc = cut_locus_theorem(nav0, kPi / 3.0, MetricKind::FinslerForward);
  if (h_arc.kind != f_arc.kind) worst = std::max(worst, 1.0);
  worst = std::max(worst, std::abs(h_arc.theta_lo - f_arc.theta_lo));
  worst = std::max(worst, std::abs(h_arc.theta_hi - f_arc.theta_hi));
  worst = std::max(worst, std::abs(h_arc.r - f_arc.r));
  // Conjugate points coincide.
  const ConjugatePoint ch = first_h_conjugate(spec, kPi / 3.0, 0.4);
  const ConjugatePoint cf = first_f_conjugate(nav0, kPi / 3.0, 0.4, Direction::Forward);
  worst = std::max(worst, std::abs(ch.theta - cf.theta));
  worst = std::max(worst, std::abs(ch.r - cf.r));
  c.add("conjcut.mu0_degeneration", worst, 1e-12);
}

void check_arc_symmetry(Ctx& c) {
  NavigationData nav(ProfileSpec::example2(0.5), 0.2);
  const double u = kPi / 3.0;
  const CutLocusArc arc = cut_locus_theorem(nav, u, MetricKind::FinslerForward);
  const double psi = nav.mu() * tangent_conjugate_distance(nav.profile(), u);
  const double mid = 0.5 * (arc.theta_lo + arc.theta_hi);
  c.add("conjcut.case2_arc_symmetric_midpoint", std::abs(mid - (kPi + psi)), 1e-12);
}

void check_classification_stable(Ctx& c) {
  bool ok = true;
  for (const auto& spec : closed_families())
    ok = ok && classify_curvature(spec, 128).value == classify_curvature(spec, 256).value;
  c.add_flag("conjcut.classification_stable", ok, "stable under grid refinement x2");
}

// --- oracle -----------------------------------------------------------

void check_oracle_consistency(Ctx& c) {
  const int n_r = c.opt.resolution;
  FieldOptions fo{n_r, 2 * n_r, 16};
  NavigationData nav(ProfileSpec::round_sphere(1.0), 0.25);
  const double u = kPi / 3.0;
  DistanceField field(nav, u, 0.0, fo);
  const double tol = field.tol_mesh();

  // Geodesics never beat the mesh shortest path (mesh overestimate budget),
  // and realize it before the cut.
  double worst_beat = 0.0, worst_eq = 0.0;
  ShootOptions so;
  so.sample_ds = 1e-2;
  for (double nu : {0.2, 0.5, 0.8}) {
    GeodesicPath p = shoot_h_geodesic(nav.profile(), u, 0.0, nu, -1, kPi, so);
    GeodesicPath pf = flow_deviate(p, nav.mu(), Direction::Forward);
    for (int i = 1; i <= 60; ++i) {
      const double s = kPi * static_cast<double>(i) / 60.0;
      const GeodesicState st = pf.state_at(s);
      const double d = field.distance_at(st.r, st.theta);
      worst_beat = std::max(worst_beat, d - s);
      if (s < 0.75 * kPi) worst_eq = std::max(worst_eq, std::abs(s - d));
    }
  }
  c.add("oracle.geodesics_never_beat_field", worst_beat, tol,
        "mesh slack = tol_mesh");
  c.add("oracle.distance_equality_before_cut", worst_eq, tol);
}

void check_mesh_convergence(Ctx& c) {
  NavigationData nav(ProfileSpec::round_sphere(1.0), 0.25);
  const double u = kPi / 3.0;
  const CutLocusArc arc = cut_locus_theorem(nav, u, MetricKind::FinslerForward);
  auto hd_at = [&](int n_r, int k) {
    FieldOptions fo{n_r, 2 * n_r, k};
    DistanceField field(nav, u, 0.0, fo);
    const auto emp = empirical_cut_locus(nav, u, 0.0, 64, field);
    return hausdorff_distance(nav.profile(), arc.samples, emp);
  };
  const double h1 = hd_at(c.opt.resolution, 8);
  const double h2 = hd_at(2 * c.opt.resolution, 16);
  const double ratio = h2 > 0.0 ? h1 / h2 : 10.0;
  std::ostringstream note;
  note << "hausdorff " << h1 << " -> " << h2;
  c.out.push_back({"oracle.mesh_convergence", ratio >= 1.5, ratio, 1.5, note.str()});
  // Convention: pass when measured >= threshold for this one; flip stored
  // values so that the generic pass rule still reads measured <= threshold.
  c.out.back().pass = ratio >= 1.5;
}

void check_correspondence_replay(Ctx& c) {
  const ProfileSpec spec = ProfileSpec::example2(0.5);
  NavigationData nav_f(spec, 0.2);
  NavigationData nav_h(spec, 0.0);
  const double u = kPi / 3.0;
  const int n_r = c.opt.resolution;
  FieldOptions fo{n_r, 2 * n_r, 16};
  DistanceField field_h(nav_h, u, 0.0, fo);
  DistanceField field_f(nav_f, u, 0.0, fo);
  const auto cuts_h = empirical_cut_locus(nav_h, u, 0.0, 16, field_h);
  const auto cuts_f = empirical_cut_locus(nav_f, u, 0.0, 16, field_f);
  double worst = 0.0;
  std::size_t n = std::min(cuts_h.size(), cuts_f.size());
  if (n == 0) worst = 1e300;
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(cuts_h[i].nu - cuts_f[i].nu) < 1e-12)
      worst = std::max(worst, std::abs(cuts_h[i].s_cut - cuts_f[i].s_cut));
  c.add("oracle.flow_correspondence_replay", worst, 2.0 * field_f.tol_mesh());
}

// --- surface-local checks (for a user-supplied spec) -------------------

void check_surface_local(Ctx& c, const NavigationData& nav) {
  const ProfileSpec& spec = nav.profile();
  const double tol_sym =
      spec.family() == ProfileFamily::CustomTable ? 1e-6 : 1e-10;
  c.add("surface.equatorial_symmetry", spec.symmetry_residual(1000), tol_sym,
        spec.describe());

  std::mt19937_64 rng(c.opt.seed + 77);
  std::uniform_real_distribution<double> ur(0.05 * spec.a(), 1.95 * spec.a());
  std::uniform_real_distribution<double> uy(-2.0, 2.0);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const double r = ur(rng);
    double yr = uy(rng), yt = uy(rng);
    if (yr == 0.0 && yt == 0.0) yr = 1.0;
    worst = std::max(worst, std::abs(nav.finsler_norm(r, yr, yt) -
                                     nav.finsler_norm_navigation(r, yr, yt)));
  }
  c.add("surface.norm_two_routes", worst, 1e-12);

  double worst_speed = 0.0;
  const double nu = 0.55 * spec.m(spec.a());
  GeodesicPath p = shoot_h_geodesic(spec, spec.a(), 0.0, nu, -1, 4.0 * spec.a());
  for (const auto& st : p.samples()) {
    const double m = spec.m(st.r);
    worst_speed =
        std::max(worst_speed, std::abs(st.dr * st.dr + m * m * st.dtheta * st.dtheta - 1.0));
  }
  c.add("surface.unit_speed", worst_speed, 1e-8);
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  Ctx c{opt, out};

  check_curvature_fd(c);
  check_symmetry(c);
  check_norm_agreement(c);
  check_norm_positivity(c);

  check_unit_speed(c);
  check_clairaut(c, 4);
  check_deviation_inverse(c);
  check_reversal(c);
  check_f_unit_speed(c);

  check_half_period_closed_forms(c);
  check_equator_return(c);
  check_monotone_propagation(c);
  check_psi_decreasing(c);

  check_flow_correspondence(c, 12);
  check_case2_endpoint(c);
  check_antipodal_r(c);
  check_mu0_degeneration(c);
  check_arc_symmetry(c);
  check_classification_stable(c);

  if (opt.with_oracle) {
    check_oracle_consistency(c);
    check_mesh_convergence(c);
    check_correspondence_replay(c);
  }
  if (opt.surface) check_surface_local(c, *opt.surface);
  return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

std::string verify_report_json(const std::vector<CheckResult>& results) {
  nlohmann::json j;
  j["all_pass"] = all_pass(results);
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json e;
    e["name"] = r.name;
    e["pass"] = r.pass;
    e["measured"] = r.measured;
    e["threshold"] = r.threshold;
    if (!r.note.empty()) e["note"] = r.note;
    arr.push_back(e);
  }
  j["checks"] = arr;
  return j.dump(2);
}

}  // namespace randers
