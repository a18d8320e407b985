#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace randers {

/// Dormand-Prince 5(4) with the classic quartic dense-output interpolant.
/// The solution object keeps every accepted step so that states can be
/// queried at arbitrary parameter values afterwards.
template <std::size_t N>
class DenseSolution {
public:
  using State = std::array<double, N>;

  struct Step {
    double s0, h;
    std::array<State, 5> rcont;
  };

  double s_begin() const { return s_begin_; }
  double s_end() const { return s_end_; }

  State eval(double s) const {
    if (steps_.empty()) throw std::runtime_error("DenseSolution: empty");
    const double lo = std::min(s_begin_, s_end_);
    const double hi = std::max(s_begin_, s_end_);
    if (s < lo - 1e-9 || s > hi + 1e-9)
      throw std::domain_error("DenseSolution: parameter outside integrated span");
    s = std::clamp(s, lo, hi);
    // Steps are ordered in integration direction.
    std::size_t a = 0, b = steps_.size() - 1;
    const bool fwd = s_end_ >= s_begin_;
    while (a < b) {
      const std::size_t mid = (a + b + 1) / 2;
      const bool before = fwd ? (steps_[mid].s0 <= s) : (steps_[mid].s0 >= s);
      if (before)
        a = mid;
      else
        b = mid - 1;
    }
    const Step& st = steps_[a];
    const double th = st.h == 0.0 ? 0.0 : (s - st.s0) / st.h;
    const double th1 = 1.0 - th;
    State y;
    for (std::size_t i = 0; i < N; ++i) {
      y[i] = st.rcont[0][i] +
             th * (st.rcont[1][i] +
                   th1 * (st.rcont[2][i] + th * (st.rcont[3][i] + th1 * st.rcont[4][i])));
    }
    return y;
  }

  std::vector<Step> steps_;
  double s_begin_ = 0.0, s_end_ = 0.0;
};

struct Rk45Options {
  double rel_tol = 1e-10;
  double abs_tol = 1e-10;
  double max_step = 0.25;
  double initial_step = 1e-3;
  std::size_t max_steps = 2'000'000;
};

template <std::size_t N>
class Rk45 {
public:
  using State = std::array<double, N>;
  using Rhs = std::function<void(double, const State&, State&)>;

  /// Integrates y' = f(s, y) from s0 to s1 (s1 may be < s0) and returns the
  /// dense solution over the whole span.
  static DenseSolution<N> integrate(const Rhs& f, double s0, State y0, double s1,
                                    const Rk45Options& opt = {}) {
    DenseSolution<N> sol;
    sol.s_begin_ = s0;
    sol.s_end_ = s1;
    if (s0 == s1) {
      typename DenseSolution<N>::Step st{};
      st.s0 = s0;
      st.h = 0.0;
      st.rcont[0] = y0;
      sol.steps_.push_back(st);
      return sol;
    }
    const double dir = s1 > s0 ? 1.0 : -1.0;
    double s = s0;
    State y = y0;
    State k1;
    f(s, y, k1);
    double h = dir * std::min({opt.initial_step, opt.max_step, std::abs(s1 - s0)});

    std::size_t nsteps = 0;
    while (dir * (s1 - s) > 0.0) {
      if (++nsteps > opt.max_steps)
        throw std::runtime_error("Rk45: step limit exceeded");
      if (dir * (s + h - s1) > 0.0) h = s1 - s;

      State k2, k3, k4, k5, k6, k7, yt, y5;
      auto stage = [&](State& out, std::initializer_list<std::pair<const State*, double>> terms) {
        for (std::size_t i = 0; i < N; ++i) {
          double acc = y[i];
          for (const auto& [kv, cv] : terms) acc += h * cv * (*kv)[i];
          out[i] = acc;
        }
      };
      stage(yt, {{&k1, 1.0 / 5.0}});
      f(s + h / 5.0, yt, k2);
      stage(yt, {{&k1, 3.0 / 40.0}, {&k2, 9.0 / 40.0}});
      f(s + 3.0 * h / 10.0, yt, k3);
      stage(yt, {{&k1, 44.0 / 45.0}, {&k2, -56.0 / 15.0}, {&k3, 32.0 / 9.0}});
      f(s + 4.0 * h / 5.0, yt, k4);
      stage(yt, {{&k1, 19372.0 / 6561.0},
                 {&k2, -25360.0 / 2187.0},
                 {&k3, 64448.0 / 6561.0},
                 {&k4, -212.0 / 729.0}});
      f(s + 8.0 * h / 9.0, yt, k5);
      stage(yt, {{&k1, 9017.0 / 3168.0},
                 {&k2, -355.0 / 33.0},
                 {&k3, 46732.0 / 5247.0},
                 {&k4, 49.0 / 176.0},
                 {&k5, -5103.0 / 18656.0}});
      f(s + h, yt, k6);
      stage(y5, {{&k1, 35.0 / 384.0},
                 {&k3, 500.0 / 1113.0},
                 {&k4, 125.0 / 192.0},
                 {&k5, -2187.0 / 6784.0},
                 {&k6, 11.0 / 84.0}});
      f(s + h, y5, k7);

      // Embedded 4th order error estimate.
      double err = 0.0;
      for (std::size_t i = 0; i < N; ++i) {
        const double e = h * ((35.0 / 384.0 - 5179.0 / 57600.0) * k1[i] +
                              (500.0 / 1113.0 - 7571.0 / 16695.0) * k3[i] +
                              (125.0 / 192.0 - 393.0 / 640.0) * k4[i] +
                              (-2187.0 / 6784.0 + 92097.0 / 339200.0) * k5[i] +
                              (11.0 / 84.0 - 187.0 / 2100.0) * k6[i] +
                              (-1.0 / 40.0) * k7[i]);
        const double sc = opt.abs_tol + opt.rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
        err += (e / sc) * (e / sc);
      }
      err = std::sqrt(err / static_cast<double>(N));

      if (err <= 1.0 || std::abs(h) <= 1e-14) {
        typename DenseSolution<N>::Step st;
        st.s0 = s;
        st.h = h;
        st.rcont[0] = y;
        for (std::size_t i = 0; i < N; ++i) {
          const double dy = y5[i] - y[i];
          const double bspl = h * k1[i] - dy;
          st.rcont[1][i] = dy;
          st.rcont[2][i] = bspl;
          st.rcont[3][i] = dy - h * k7[i] - bspl;
          st.rcont[4][i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                                d6 * k6[i] + d7 * k7[i]);
        }
        sol.steps_.push_back(st);
        s += h;
        y = y5;
        k1 = k7;  // FSAL
      }
      const double fac = std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0);
      h *= fac;
      if (std::abs(h) > opt.max_step) h = dir * opt.max_step;
    }
    sol.s_end_ = s;
    return sol;
  }

private:
  static constexpr double d1 = -12715105075.0 / 11282082432.0;
  static constexpr double d3 = 87487479700.0 / 32700410799.0;
  static constexpr double d4 = -10690763975.0 / 1880347072.0;
  static constexpr double d5 = 701980252875.0 / 199316789632.0;
  static constexpr double d6 = -1453857185.0 / 822651844.0;
  static constexpr double d7 = 69997945.0 / 29380423.0;
};

}  // namespace randers
