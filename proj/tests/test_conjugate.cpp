#include <doctest.h>

#include <cmath>

#include "randers/conjugate.hpp"
#include "randers/cut_locus.hpp"
#include "randers/half_period.hpp"
#include "randers/quadrature.hpp"
#include "test_profiles.hpp"

using namespace randers;
using randers::testing::kPi;

TEST_CASE("theta_of") {
  SUBCASE("empty integral at the far antipodal radius") {
    const ProfileSpec e2 = ProfileSpec::example2(0.5);
    for (double u : {0.8, kPi / 3.0})
      for (double nu : {0.3, 0.6})
        CHECK(theta_of(e2, 2.0 * e2.a() - u, u, nu) ==
              doctest::Approx(h_half_period(e2, nu)).epsilon(1e-11));
  }

  SUBCASE("round sphere: every geodesic reaches the antipode at theta = pi") {
    const ProfileSpec round = ProfileSpec::round_sphere(1.0);
    for (double u : {0.7, 1.2})
      for (double nu : {0.2, 0.5})
        CHECK(theta_of(round, kPi - u, u, nu) == doctest::Approx(kPi).epsilon(1e-10));
  }

  SUBCASE("agrees with the shot geodesic on the rising branch to 1e-5") {
    const ProfileSpec e2 = ProfileSpec::example2(0.5);
    const double u = e2.a(), nu = 0.5;
    ShootOptions so;
    so.tol = 1e-12;
    so.sample_ds = 1e-3;
    const GeodesicPath p = shoot_h_geodesic(e2, u, 0.0, nu, -1, 4.0, so);
    const auto turns = p.turning_points();
    REQUIRE(!turns.empty());
    for (double s : {turns[0] + 0.3, turns[0] + 0.8, turns[0] + 1.4}) {
      const GeodesicState st = p.state_at(s);
      CHECK(theta_of(e2, st.r, u, nu) == doctest::Approx(st.theta).epsilon(1e-5));
    }
  }

  SUBCASE("out-of-range radius is rejected") {
    const ProfileSpec e2 = ProfileSpec::example2(0.5);
    const double nu = 0.5;
    CHECK_THROWS_AS(theta_of(e2, 0.5 * xi(e2, nu), e2.a(), nu), std::domain_error);
  }
}

TEST_CASE("first h-conjugate point") {
  SUBCASE("round sphere: conjugate at the antipode, distance pi") {
    const ProfileSpec round = ProfileSpec::round_sphere(1.0);
    for (double u : {kPi / 2.0, kPi / 3.0}) {
      for (double nu : {0.3, 0.55}) {
        const ConjugatePoint c = first_h_conjugate(round, u, nu);
        CHECK(c.r == doctest::Approx(kPi - u).epsilon(5e-7));
        CHECK(c.theta == doctest::Approx(kPi).epsilon(5e-7));
        CHECK(c.s == doctest::Approx(kPi).epsilon(5e-7));
      }
    }
  }

  SUBCASE("quadrature-route oracle for Example 2") {
    // Independent route: the conjugate condition on the rising branch is
    // H'(nu) + int_{2a-u}^{r} m (m^2-nu^2)^{-3/2} dtau = 0, solved by
    // bisection with closed-form H' and plain quadrature.
    const ProfileSpec e2 = ProfileSpec::example2(0.5);
    const double u = kPi / 4.0, nu = 0.4;
    const double two_a = 2.0 * e2.a();
    const double x = xi(e2, nu);
    auto dfdnu = [&](double tau) {
      const double m = e2.m(tau);
      return m / std::pow(m * m - nu * nu, 1.5);
    };
    auto phi = [&](double r) {
      return dh_closed(e2, nu) + integrate_smooth(dfdnu, two_a - u, r, 1e-12);
    };
    double lo = two_a - u, hi = two_a - x - 0.05;
    REQUIRE(phi(lo) < 0.0);
    REQUIRE(phi(hi) > 0.0);
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      (phi(mid) < 0.0 ? lo : hi) = mid;
    }
    const double r_oracle = 0.5 * (lo + hi);
    const double theta_oracle = theta_of(e2, r_oracle, u, nu);
    const double s_oracle =
        h_arc_length(e2, nu, x, u) + h_arc_length(e2, nu, x, r_oracle);

    const ConjugatePoint c = first_h_conjugate(e2, u, nu);
    CHECK(c.r == doctest::Approx(r_oracle).epsilon(2e-5));
    CHECK(c.theta == doctest::Approx(theta_oracle).epsilon(2e-5));
    CHECK(c.s == doctest::Approx(s_oracle).epsilon(2e-5));
    // The conjugate lies past the antipodal parallel, before the second
    // tangency.
    CHECK(c.r > two_a - u);
    CHECK(c.r < two_a - x);
  }

  SUBCASE("domain checks") {
    const ProfileSpec e2 = ProfileSpec::example2(0.5);
    CHECK_THROWS_AS(first_h_conjugate(e2, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(first_h_conjugate(e2, 1.0, e2.m(1.0)), std::domain_error);
  }
}

TEST_CASE("first F-conjugate point") {
  SUBCASE("mu = 0 equals the h-conjugate exactly") {
    const ProfileSpec e2 = ProfileSpec::example2(0.5);
    NavigationData nav(e2, 0.0);
    const ConjugatePoint h = first_h_conjugate(e2, kPi / 3.0, 0.4);
    const ConjugatePoint f = first_f_conjugate(nav, kPi / 3.0, 0.4, Direction::Forward);
    CHECK(f.r == h.r);
    CHECK(f.theta == h.theta);
    CHECK(f.s == h.s);
  }

  SUBCASE("round sphere with wind: theta shifted by mu pi") {
    NavigationData nav(ProfileSpec::round_sphere(1.0), 0.3);
    const ConjugatePoint f =
        first_f_conjugate(nav, kPi / 2.0, 0.5, Direction::Forward);
    CHECK(f.r == doctest::Approx(kPi / 2.0).epsilon(5e-7));
    CHECK(f.theta == doctest::Approx(kPi * 1.3).epsilon(5e-7));
  }

  SUBCASE("forward and backward average to the h-conjugate theta") {
    NavigationData nav(ProfileSpec::example2(0.5), 0.2);
    const ConjugatePoint h = first_h_conjugate(nav.profile(), 1.0, 0.5);
    const ConjugatePoint f = first_f_conjugate(nav, 1.0, 0.5, Direction::Forward);
    const ConjugatePoint b = first_f_conjugate(nav, 1.0, 0.5, Direction::Backward);
    CHECK(0.5 * (f.theta + b.theta) == doctest::Approx(h.theta).epsilon(1e-12));
  }
}

TEST_CASE("near-tangent conjugate approaches the antipodal-parallel endpoint") {
  // As nu -> m(u), the conjugate bracket collapses onto (2a-u, H(m(u))) with
  // arclength the tangency-to-tangency arc; this anchors the cut-arc
  // endpoint construction. The collapse is O(sqrt(m(u) - nu)) in theta (the
  // theta-advance kernel is inverse-square-root there), so gaps scale like
  // 3e-3 at a 1e-5 relative offset.
  const ProfileSpec e2 = ProfileSpec::example2(0.5);
  const double u = kPi / 3.0;
  const double m_u = e2.m(u);
  const double nu = m_u * (1.0 - 1e-5);
  const ConjugatePoint c = first_h_conjugate(e2, u, nu);
  const double two_a = 2.0 * e2.a();
  CHECK(std::abs(c.r - (two_a - u)) < 2e-3);
  CHECK(std::abs(c.theta - h_half_period(e2, nu)) < 1e-2);
  CHECK(std::abs(c.s - tangent_conjugate_distance(e2, u)) < 1e-2);
}

TEST_CASE("meridian Jacobi conjugate") {
  SUBCASE("round sphere: first zero at pi regardless of the start") {
    const ProfileSpec round = ProfileSpec::round_sphere(1.0);
    for (double u : {0.4, kPi / 3.0, 1.4}) {
      CHECK(meridian_conjugate_arclength(round, u, true) ==
            doctest::Approx(kPi).epsilon(1e-9));
      CHECK(meridian_conjugate_arclength(round, u, false) ==
            doctest::Approx(kPi).epsilon(1e-9));
    }
  }

  SUBCASE("matches the nu -> 0 limit of the conjugate pencil") {
    const ProfileSpec pk = randers::testing::pumpkin_table();
    const double u = kPi / 3.0;
    const double s_mer = meridian_conjugate_arclength(pk, u, true);
    const ConjugatePoint c = first_h_conjugate(pk, u, 0.004 * pk.m(pk.a()));
    CHECK(c.s == doctest::Approx(s_mer).epsilon(1e-4));
    CHECK(c.r == doctest::Approx(s_mer - u).epsilon(1e-4));
    CHECK(c.theta == doctest::Approx(kPi).epsilon(1e-4));
  }
}

TEST_CASE("curvature classification") {
  CHECK(classify_curvature(ProfileSpec::round_sphere(1.0)).value ==
        CurvatureClass::Constant);
  CHECK(classify_curvature(ProfileSpec::round_sphere(2.0)).value ==
        CurvatureClass::Constant);
  // Example 1 has G' > 0 on (0, pi/2) for lambda <= 2 (from the displayed
  // G'_lambda formula), turning non-monotone only beyond lambda = 2.
  CHECK(classify_curvature(ProfileSpec::example1(1.0)).value ==
        CurvatureClass::NonDecreasing);
  CHECK(classify_curvature(ProfileSpec::example1(2.5)).value ==
        CurvatureClass::NonMonotone);
  // Example 2 is monotone below 2/3 and mixed above.
  CHECK(classify_curvature(ProfileSpec::example2(0.5)).value ==
        CurvatureClass::NonDecreasing);
  CHECK(classify_curvature(ProfileSpec::example2(0.8)).value ==
        CurvatureClass::NonMonotone);
  // Decreasing curvature from pole to equator.
  CHECK(classify_curvature(randers::testing::pumpkin_table()).value ==
        CurvatureClass::NonIncreasing);

  SUBCASE("stable under grid refinement") {
    for (const auto& spec : {ProfileSpec::round_sphere(1.0), ProfileSpec::example1(1.0),
                             ProfileSpec::example2(0.5), ProfileSpec::example1(2.5),
                             randers::testing::pumpkin_table()})
      CHECK(classify_curvature(spec, 128).value == classify_curvature(spec, 256).value);
  }

  SUBCASE("grid precondition") {
    CHECK_THROWS_AS(classify_curvature(ProfileSpec::round_sphere(1.0), 32),
                    std::invalid_argument);
  }
}

TEST_CASE("mirrored conjugates: descending from u vs ascending from 2a-u") {
  // Equatorial symmetry maps the descending shot from (u, 0) to the
  // ascending shot from (2a-u, 0), so the conjugate radii mirror.
  const ProfileSpec e2 = ProfileSpec::example2(0.5);
  const double u = kPi / 3.0, nu = 0.45;
  const ConjugatePoint a = first_h_conjugate(e2, u, nu, -1);
  const ConjugatePoint b = first_h_conjugate(e2, 2.0 * e2.a() - u, nu, +1);
  CHECK(a.r + b.r == doctest::Approx(2.0 * e2.a()).epsilon(1e-5));
  CHECK(a.theta == doctest::Approx(b.theta).epsilon(1e-5));
  CHECK(a.s == doctest::Approx(b.s).epsilon(1e-5));
}
