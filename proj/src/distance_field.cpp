#include "randers/distance_field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "randers/errors.hpp"

namespace randers {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

int gcd_int(int a, int b) {
  while (b) {
    const int t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace

std::vector<std::array<int, 2>> stencil_offsets(int stencil_k) {
  int radius;
  if (stencil_k <= 8)
    radius = 1;
  else if (stencil_k <= 16)
    radius = 2;
  else
    radius = 3;
  std::vector<std::array<int, 2>> out;
  for (int di = -radius; di <= radius; ++di)
    for (int dj = -radius; dj <= radius; ++dj) {
      if (di == 0 && dj == 0) continue;
      if (gcd_int(std::abs(di), std::abs(dj)) != 1) continue;
      out.push_back({di, dj});
    }
  return out;
}

DistanceField::DistanceField(const NavigationData& nav, double src_r, double src_theta,
                             const FieldOptions& opt)
    : nav_(nav), opt_(opt), src_r_(src_r), src_theta_(src_theta) {
  if (opt_.n_r < 64 || opt_.n_theta < 64)
    throw std::invalid_argument("distance field: n_r, n_theta >= 64");
  if (opt_.stencil_k < 8)
    throw std::invalid_argument("distance field: stencil_k >= 8");
  const double two_a = 2.0 * nav_.a();
  if (!(src_r >= 0.0 && src_r <= two_a))
    throw std::domain_error("distance field: source off the surface");
  build();
}

double DistanceField::tol_mesh() const { return calibrate_tol_mesh(opt_); }

double DistanceField::r_of(int i) const {
  return dr_ * static_cast<double>(i + 1);
}

double DistanceField::theta_of(int j) const { return dth_ * static_cast<double>(j); }

double DistanceField::dist_node(int i, int j) const { return dist_[node(i, j)]; }

void DistanceField::build() {
  const double two_a = 2.0 * nav_.a();
  const int nr = opt_.n_r, nth = opt_.n_theta;
  dr_ = two_a / static_cast<double>(nr + 1);
  dth_ = 2.0 * kPi / static_cast<double>(nth);
  const std::size_t n_nodes = static_cast<std::size_t>(nr) * nth + 2;
  pole_p_ = n_nodes - 2;
  pole_q_ = n_nodes - 1;
  dist_.assign(n_nodes, kInf);
  pred_.assign(n_nodes, -1);

  const auto offsets = stencil_offsets(opt_.stencil_k);

  // Wind must remain subcritical everywhere (checked at NavigationData
  // construction); edge weights are plain Finsler lengths of straight
  // coordinate segments evaluated at the midpoint.
  auto edge_weight = [&](double r_mid, double d_r, double d_th) {
    return nav_.finsler_norm(r_mid, d_r, d_th);
  };

  // Source: nearest node (poles included).
  std::size_t src_node;
  if (src_r_ < 0.5 * dr_)
    src_node = pole_p_;
  else if (src_r_ > two_a - 0.5 * dr_)
    src_node = pole_q_;
  else {
    int si = static_cast<int>(std::round(src_r_ / dr_)) - 1;
    si = std::clamp(si, 0, nr - 1);
    double t = std::fmod(src_theta_, 2.0 * kPi);
    if (t < 0.0) t += 2.0 * kPi;
    int sj = static_cast<int>(std::round(t / dth_)) % nth;
    src_node = node(si, sj);
  }

  using QE = std::pair<double, std::size_t>;
  std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;
  dist_[src_node] = 0.0;
  pq.push({0.0, src_node});

  const double r_first = r_of(0);
  const double r_last = r_of(nr - 1);

  while (!pq.empty()) {
    const double d = pq.top().first;
    const std::size_t u = pq.top().second;
    pq.pop();
    if (d > dist_[u]) continue;

    auto relax = [&](std::size_t v, double w) {
      if (dist_[u] + w < dist_[v] - 1e-15) {
        dist_[v] = dist_[u] + w;
        pred_[v] = static_cast<int32_t>(u);
        pq.push({dist_[v], v});
      }
    };

    if (u == pole_p_) {
      // Meridian segments from the pole to the first row.
      const double w = edge_weight(0.5 * r_first, r_first, 0.0);
      for (int j = 0; j < nth; ++j) relax(node(0, j), w);
      continue;
    }
    if (u == pole_q_) {
      const double w = edge_weight(two_a - 0.5 * (two_a - r_last), -(two_a - r_last), 0.0);
      for (int j = 0; j < nth; ++j) relax(node(nr - 1, j), w);
      continue;
    }

    const int i = static_cast<int>(u / nth);
    const int j = static_cast<int>(u % nth);
    const double r = r_of(i);
    for (const auto& [di, dj] : offsets) {
      const int i2 = i + di;
      if (i2 < 0 || i2 >= nr) continue;
      const int j2 = ((j + dj) % nth + nth) % nth;
      const double r2 = r_of(i2);
      relax(node(i2, j2), edge_weight(0.5 * (r + r2), di * dr_, dj * dth_));
    }
    if (i == 0) relax(pole_p_, edge_weight(0.5 * r_first, -r_first, 0.0));
    if (i == nr - 1)
      relax(pole_q_, edge_weight(two_a - 0.5 * (two_a - r_last), two_a - r_last, 0.0));
  }
}

double DistanceField::distance_at(double r, double theta) const {
  const double two_a = 2.0 * nav_.a();
  r = std::clamp(r, 0.0, two_a);
  double t = std::fmod(theta, 2.0 * kPi);
  if (t < 0.0) t += 2.0 * kPi;
  const int nth = opt_.n_theta;
  const int nr = opt_.n_r;

  const double fj = t / dth_;
  const int j0 = static_cast<int>(std::floor(fj)) % nth;
  const int j1 = (j0 + 1) % nth;
  const double wj = fj - std::floor(fj);

  auto row_value = [&](int i) {
    return (1.0 - wj) * dist_node(i, j0) + wj * dist_node(i, j1);
  };

  const double fi = r / dr_ - 1.0;
  if (fi <= 0.0) {
    const double v0 = row_value(0);
    const double w = r / r_of(0);
    return (1.0 - w) * dist_[pole_p_] + w * v0;
  }
  if (fi >= nr - 1) {
    const double vn = row_value(nr - 1);
    const double w = (two_a - r) / (two_a - r_of(nr - 1));
    return (1.0 - w) * dist_[pole_q_] + w * vn;
  }
  const int i0 = static_cast<int>(std::floor(fi));
  const double wi = fi - i0;
  return (1.0 - wi) * row_value(i0) + wi * row_value(i0 + 1);
}

double calibrate_tol_mesh(const FieldOptions& opt) {
  static std::mutex mx;
  static std::map<std::tuple<int, int, int>, double> cache;
  const auto key = std::make_tuple(opt.n_r, opt.n_theta, opt.stencil_k);
  {
    std::scoped_lock lk(mx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  NavigationData round(ProfileSpec::round_sphere(1.0), 0.0);
  DistanceField field(round, kPi / 2.0, 0.0, opt);

  auto gc_dist = [](double r1, double th1, double r2, double th2) {
    const double c = std::cos(r1) * std::cos(r2) +
                     std::sin(r1) * std::sin(r2) * std::cos(th2 - th1);
    return std::acos(std::clamp(c, -1.0, 1.0));
  };
  const double probes[][2] = {{kPi / 2.0, kPi},     {kPi / 2.0, kPi / 2.0},
                              {kPi / 4.0, 0.0},     {kPi / 4.0, kPi},
                              {3.0 * kPi / 4.0, kPi / 2.0}, {kPi / 3.0, 2.0}};
  double worst = 0.0;
  for (const auto& p : probes) {
    const double truth = gc_dist(kPi / 2.0, 0.0, p[0], p[1]);
    worst = std::max(worst, std::abs(field.distance_at(p[0], p[1]) - truth));
  }
  const double tol = 3.0 * worst;
  std::scoped_lock lk(mx);
  cache[key] = tol;
  return tol;
}

std::vector<EmpiricalCutPoint> empirical_cut_locus(const NavigationData& nav, double x_r,
                                                   double x_theta, int pencil_n,
                                                   const DistanceField& field) {
  if (pencil_n < 8) throw std::invalid_argument("empirical_cut_locus: pencil_n >= 8");
  if (std::abs(field.source_r() - x_r) > 1e-12 ||
      std::abs(field.source_theta() - x_theta) > 1e-12 ||
      std::abs(field.nav().mu() - nav.mu()) > 1e-15)
    throw std::invalid_argument("empirical_cut_locus: field does not match the source");

  const ProfileSpec& spec = nav.profile();
  const double two_a = 2.0 * spec.a();
  const double m_x = spec.m(x_r);
  const double tol = field.tol_mesh();
  const double s_max = 1.5 * (two_a + kPi * spec.max_m());
  const double ds = std::max(tol / 4.0, two_a / 4096.0);

  std::vector<EmpiricalCutPoint> out;
  const int n_nu = std::max(2, pencil_n / 4);

  auto excess = [&](const GeodesicPath& path, double s) {
    const GeodesicState st = path.state_at(s);
    return s - field.distance_at(st.r, st.theta);
  };

  auto march = [&](const GeodesicPath& path, double nu_tag) {
    double s = 8.0 * ds;
    while (s < s_max) {
      if (excess(path, s) > tol) {
        // Bisect the threshold crossing, then back the estimate up to the
        // kink of the excess function: past the cut the excess grows like
        // slope * (s - s_cut), so the crossing sits tol/slope beyond it.
        // Conjugate-type contacts (arc endpoints) grow quadratically and
        // keep an O(sqrt(tol)) smear that no backtrack can remove.
        double lo = std::max(0.0, s - ds), hi = s;
        for (int it = 0; it < 60 && hi - lo > 1e-6; ++it) {
          const double mid = 0.5 * (lo + hi);
          (excess(path, mid) > tol ? hi : lo) = mid;
        }
        const double s_star = 0.5 * (lo + hi);
        const double probe = std::max(4.0 * ds, 1e-3);
        double slope = (excess(path, std::min(s_max, s_star + probe)) - tol) / probe;
        slope = std::clamp(slope, 0.25, 2.0);
        const double s_cut = std::max(0.0, s_star - tol / slope);
        const GeodesicState sc = path.state_at(s_cut);
        out.push_back({sc.r, sc.theta, nu_tag, s_cut});
        return;
      }
      s += ds;
    }
  };

  ShootOptions so;
  so.tol = 1e-10;
  so.sample_ds = s_max / 2048.0;
  auto shoot_and_march = [&](double nu, int dr_sign) {
    GeodesicPath path = shoot_h_geodesic(spec, x_r, x_theta, nu, dr_sign, s_max, so);
    if (nav.mu() > 0.0) path = flow_deviate(path, nav.mu(), Direction::Forward);
    march(path, nu);
  };

  // Both Clairaut signs are needed: with wind, the forward-deviated
  // theta-decreasing geodesics (nu < 0) trace the back half of the cut set.
  // The grid clusters toward the tangent launch |nu| -> m(r_x), where the
  // cut points of near-tangent geodesics compress into a thin nu-sliver.
  for (int k = 0; k < n_nu; ++k) {
    const double tau = (static_cast<double>(k) + 0.5) / static_cast<double>(n_nu);
    const double nu = m_x * std::sin(0.5 * kPi * tau);
    shoot_and_march(nu, -1);
    shoot_and_march(nu, +1);
    shoot_and_march(-nu, -1);
    shoot_and_march(-nu, +1);
  }
  shoot_and_march(0.0, -1);
  shoot_and_march(0.0, +1);
  return out;
}

}  // namespace randers
