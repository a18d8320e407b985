#include <doctest.h>

#include <cmath>

#include "randers/errors.hpp"
#include "randers/half_period.hpp"
#include "test_profiles.hpp"

using namespace randers;
using randers::testing::kPi;

TEST_CASE("xi: inverse of m on the rising branch") {
  const ProfileSpec round = ProfileSpec::round_sphere(1.0);
  CHECK(xi(round, 0.5) == doctest::Approx(kPi / 6.0).epsilon(1e-12));

  SUBCASE("bisection oracle and algebraic inversion for Example 1") {
    const double l = 1.0, nu = 0.5;
    const ProfileSpec e1 = ProfileSpec::example1(l);
    // Plain-bisection oracle, independent of the implementation.
    double lo = 0.0, hi = e1.a();
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (e1.m(mid) < nu ? lo : hi) = mid;
    }
    const double oracle = 0.5 * (lo + hi);
    // Algebraic inversion of the closed form: sin^2 xi = nu^2(l+1)/(l+1+l nu^2).
    const double algebraic = std::asin(std::sqrt(nu * nu * (l + 1.0) / (l + 1.0 + l * nu * nu)));
    CHECK(oracle == doctest::Approx(algebraic).epsilon(1e-12));
    CHECK(xi(e1, nu) == doctest::Approx(oracle).epsilon(1e-11));
    CHECK(std::abs(e1.m(xi(e1, nu)) - nu) < 1e-12);
  }

  SUBCASE("tangency approaches the equator as nu -> m(a)") {
    const ProfileSpec e2 = ProfileSpec::example2(0.5);
    const double ma = e2.m(e2.a());
    CHECK(xi(e2, ma * (1.0 - 1e-8)) > e2.a() - 1e-3);
  }

  SUBCASE("domain errors") {
    CHECK_THROWS_AS(xi(round, 0.0), std::domain_error);
    CHECK_THROWS_AS(xi(round, 1.0), std::domain_error);
    CHECK_THROWS_AS(xi(round, -0.3), std::domain_error);
  }

  SUBCASE("non-monotone rising branch is unsupported") {
    // Two-bump profile m = sin r (1 + 0.8 sin^2 2r): unit slope at the
    // poles, symmetric, positive, with m(pi/4) = 1.27 > m(pi/2) = 1.
    std::vector<double> r, m;
    const int n = 600;
    for (int i = 0; i <= n; ++i) {
      r.push_back(kPi * i / n);
      const double s2 = std::sin(2.0 * r.back());
      m.push_back(std::sin(r.back()) * (1.0 + 0.8 * s2 * s2));
    }
    m.front() = m.back() = 0.0;
    const ProfileSpec spec = ProfileSpec::custom_table(r, m);
    REQUIRE_FALSE(spec.monotone_rising_branch());
    CHECK_THROWS_AS(xi(spec, 0.5 * spec.m(spec.a())), UnsupportedProfileError);
  }

  SUBCASE("xi_paper is the examples-only nu^2 convention") {
    const ProfileSpec e1 = ProfileSpec::example1(1.0);
    CHECK(xi_paper(e1, 0.7) == doctest::Approx(0.49));
    CHECK_THROWS_AS(xi_paper(round, 0.5), std::domain_error);
  }
}

TEST_CASE("h half period") {
  SUBCASE("round sphere: H = pi for every nu") {
    const ProfileSpec round = ProfileSpec::round_sphere(1.0);
    for (int i = 1; i < 20; ++i)
      CHECK(h_half_period(round, i / 20.0) == doctest::Approx(kPi).epsilon(1e-9));
  }

  SUBCASE("example families match their closed forms at nu = 1/2") {
    const double expected = kPi - kPi / std::sqrt(18.0);  // = 2.4011121639...
    CHECK(h_half_period(ProfileSpec::example1(1.0), 0.5) ==
          doctest::Approx(expected).epsilon(1e-9));
    CHECK(h_half_period(ProfileSpec::example2(0.5), 0.5) ==
          doctest::Approx(expected).epsilon(1e-9));
  }

  SUBCASE("quadrature vs closed forms over the acceptance grids") {
    for (double l : {0.25, 0.5, 1.0, 2.0}) {
      const ProfileSpec spec = ProfileSpec::example1(l);
      const double ma = spec.m(spec.a());
      for (int i = 1; i <= 50; ++i) {
        const double nu = ma * i / 51.0;
        CHECK(std::abs(h_half_period(spec, nu) - h_half_period_closed(spec, nu)) < 1e-6);
      }
    }
    for (double l : {0.3, 0.5}) {
      const ProfileSpec spec = ProfileSpec::example2(l);
      const double ma = spec.m(spec.a());
      for (int i = 1; i <= 50; ++i) {
        const double nu = ma * i / 51.0;
        CHECK(std::abs(h_half_period(spec, nu) - h_half_period_closed(spec, nu)) < 1e-6);
      }
    }
  }

  SUBCASE("boundary values are rejected") {
    const ProfileSpec e1 = ProfileSpec::example1(1.0);
    CHECK_THROWS_AS(h_half_period(e1, 0.0), std::domain_error);
    CHECK_THROWS_AS(h_half_period(e1, e1.m(e1.a())), std::domain_error);
  }
}

TEST_CASE("f half period") {
  const ProfileSpec e1 = ProfileSpec::example1(1.0);

  SUBCASE("mu = 0 collapses to H") {
    NavigationData nav(e1, 0.0);
    for (double nu : {0.3, 0.8})
      CHECK(f_half_period(nav, nu, Direction::Forward) ==
            doctest::Approx(h_half_period(e1, nu)).epsilon(1e-14));
  }

  SUBCASE("paper-convention closed form for Example 1") {
    // H_F+(nu) = H(nu) + (1/sqrt(l+1)) (pi/2 - nu^2) at mu = max_wind/2.
    const double mu = 0.5 / std::sqrt(2.0);
    NavigationData nav(e1, mu);
    const double H = kPi - kPi / std::sqrt(18.0);
    const double expected = H + (1.0 / std::sqrt(2.0)) * (kPi / 2.0 - 0.25);
    CHECK(f_half_period_paper(nav, 0.5, Direction::Forward) ==
          doctest::Approx(expected).epsilon(1e-13));
    CHECK(expected == doctest::Approx(3.3350562).epsilon(1e-6));
  }

  SUBCASE("forward minus backward is 2 psi > 0") {
    const double mu = 0.4 * e1.max_wind();
    NavigationData nav(e1, mu);
    for (double nu : {0.2, 0.6, 1.0}) {
      const double fwd = f_half_period(nav, nu, Direction::Forward);
      const double bwd = f_half_period(nav, nu, Direction::Backward);
      const double psi = 2.0 * mu * (nav.a() - xi(e1, nu));
      CHECK(fwd - bwd == doctest::Approx(2.0 * psi).epsilon(1e-12));
      CHECK(fwd - bwd > 0.0);
    }
  }

  SUBCASE("curve invariants: HF+ - H = psi >= 0 and HF- = 2H - HF+") {
    NavigationData nav(ProfileSpec::example2(0.5), 0.2);
    const HalfPeriodCurve c = compute_half_period_curve(nav, 64);
    for (std::size_t i = 0; i < c.nu.size(); ++i) {
      const double psi = 2.0 * nav.mu() * (nav.a() - xi(nav.profile(), c.nu[i]));
      CHECK(c.HF_plus[i] - c.H[i] == doctest::Approx(psi).epsilon(1e-12));
      CHECK(c.HF_plus[i] - c.H[i] >= 0.0);
      CHECK(c.HF_minus[i] == doctest::Approx(2.0 * c.H[i] - c.HF_plus[i]).epsilon(1e-12));
    }
  }

  SUBCASE("monotonicity: psi decreasing, (H_F+)' < 0 wherever H' < 0") {
    for (const auto& spec : {ProfileSpec::example1(1.0), ProfileSpec::example2(0.5)}) {
      NavigationData nav(spec, 0.5 * spec.max_wind());
      const double ma = spec.m(spec.a());
      double prev_psi = 1e300;
      const double dnu = 1e-6 * ma;
      for (int i = 2; i < 30; ++i) {
        const double nu = ma * i / 32.0;
        const double psi = 2.0 * nav.mu() * (nav.a() - xi(spec, nu));
        CHECK(psi < prev_psi);
        prev_psi = psi;
        if (dh_closed(spec, nu) < 0.0) {
          const double dHF = (f_half_period(nav, nu + dnu, Direction::Forward) -
                              f_half_period(nav, nu - dnu, Direction::Forward)) /
                             (2.0 * dnu);
          CHECK(dHF < 0.0);
        }
      }
    }
  }
}

TEST_CASE("numerical derivatives") {
  SUBCASE("constant and quartic exactness") {
    std::vector<double> c(11, 3.7);
    for (double v : numerical_derivatives(c, 0.1, 1)) CHECK(std::abs(v) < 1e-12);
    for (double v : numerical_derivatives(c, 0.1, 2)) CHECK(std::abs(v) < 1e-10);
    std::vector<double> q;
    const double h = 0.05;
    for (int i = 0; i <= 16; ++i) {
      const double x = -0.4 + h * i;
      q.push_back(x * x * x * x);
    }
    const auto d1 = numerical_derivatives(q, h, 1);
    const auto d2 = numerical_derivatives(q, h, 2);
    for (int i = 0; i <= 16; ++i) {
      const double x = -0.4 + h * i;
      CHECK(d1[i] == doctest::Approx(4.0 * x * x * x).epsilon(1e-9));
      CHECK(d2[i] == doctest::Approx(12.0 * x * x).epsilon(1e-8));
    }
  }

  SUBCASE("H'' of Example 1 at nu = 0.5, grid h = 1e-3, tolerance 1e-4") {
    const ProfileSpec e1 = ProfileSpec::example1(1.0);
    const double h = 1e-3;
    std::vector<double> H;
    for (int i = -4; i <= 4; ++i) H.push_back(h_half_period(e1, 0.5 + h * i));
    const auto d2 = numerical_derivatives(H, h, 2);
    CHECK(std::abs(d2[4] - d2h_closed(e1, 0.5)) < 1e-4);
  }

  SUBCASE("H' of Example 2 at nu = 0.3 to 1e-5") {
    const ProfileSpec e2 = ProfileSpec::example2(0.5);
    const double h = 1e-3;
    std::vector<double> H;
    for (int i = -4; i <= 4; ++i) H.push_back(h_half_period(e2, 0.3 + h * i));
    const auto d1 = numerical_derivatives(H, h, 1);
    CHECK(std::abs(d1[4] - dh_closed(e2, 0.3)) < 1e-5);
  }

  SUBCASE("grid too small") {
    CHECK_THROWS_AS(numerical_derivatives({1.0, 2.0, 3.0}, 0.1, 1),
                    std::invalid_argument);
  }
}

TEST_CASE("convexity scan classifications") {
  SUBCASE("example 1 flips between 1.5 and 1.6") {
    CHECK(convexity_scan_row(ProfileFamily::Example1, 1.5, 4000).nonpositive);
    CHECK_FALSE(convexity_scan_row(ProfileFamily::Example1, 1.6, 4000).nonpositive);
  }
  SUBCASE("example 2 flips between 0.6 and 0.65") {
    CHECK(convexity_scan_row(ProfileFamily::Example2, 0.6, 4000).nonpositive);
    CHECK_FALSE(convexity_scan_row(ProfileFamily::Example2, 0.65, 4000).nonpositive);
  }
  SUBCASE("small lambda is dominated by the -2 mu'' term") {
    const ConvexityRow row = convexity_scan_row(ProfileFamily::Example1, 0.1, 2000);
    CHECK(row.nonpositive);
    CHECK(row.max_d2 < 0.0);
    // At lambda -> 0 the second derivative approaches -2/sqrt(l+1) throughout.
    CHECK(row.min_d2 == doctest::Approx(-2.0 / std::sqrt(1.1)).epsilon(0.05));
  }
  SUBCASE("scan over a grid returns one row per lambda") {
    const auto rows = convexity_scan(ProfileFamily::Example2, {0.55, 0.6, 0.65}, 2000);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].nonpositive);
    CHECK(rows[1].nonpositive);
    CHECK_FALSE(rows[2].nonpositive);
  }
}

TEST_CASE("half-period curve second derivatives use the paper forms") {
  NavigationData nav(ProfileSpec::example1(1.5), 0.5 / std::sqrt(2.5));
  const HalfPeriodCurve c = compute_half_period_curve(nav, 32);
  for (std::size_t i = 0; i < c.nu.size(); ++i) {
    CHECK(c.d2H[i] == doctest::Approx(d2h_closed(nav.profile(), c.nu[i])).epsilon(1e-12));
    CHECK(c.d2HF_plus[i] == doctest::Approx(d2hf_paper(nav, c.nu[i])).epsilon(1e-12));
  }
}

TEST_CASE("half-period curve falls back to numerical derivatives for tables") {
  NavigationData nav(randers::testing::pumpkin_table(), 0.15);
  const HalfPeriodCurve c = compute_half_period_curve(nav, 48);
  REQUIRE(c.d2H.size() == c.nu.size());
  // The pumpkin is the Example-1 form continued to lambda = -0.3; its H
  // matches the same closed form, so d2H must match the analytic value away
  // from the grid edges.
  const double l = -0.3;
  for (std::size_t i = 6; i + 6 < c.nu.size(); ++i) {
    const double nu = c.nu[i];
    const double q = l + 1.0 + l * nu * nu;
    const double d2_closed = 3.0 * kPi * l * l * nu * std::sqrt(l + 1.0) / (q * q * std::sqrt(q));
    CHECK(std::abs(c.H[i] - (kPi - l * kPi * nu / (std::sqrt(l + 1.0) * std::sqrt(q)))) <
          1e-7);
    CHECK(std::abs(c.d2H[i] - d2_closed) < 2e-3);
  }
}
