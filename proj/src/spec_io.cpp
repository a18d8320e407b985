#include "randers/spec_io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace randers {

namespace {
constexpr double kPi = std::numbers::pi;
using nlohmann::json;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

double wrap_2pi(double x) {
  x = std::fmod(x, 2.0 * kPi);
  if (x < 0.0) x += 2.0 * kPi;
  return x;
}
}  // namespace

NavigationData load_surface_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("surface spec: JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("family"))
    throw std::invalid_argument("surface spec: missing \"family\"");
  const std::string family = j["family"].get<std::string>();
  const double mu = j.value("mu", 0.0);

  ProfileSpec spec = [&]() -> ProfileSpec {
    if (family == "round") return ProfileSpec::round_sphere(j.value("radius", 1.0));
    if (family == "example1") {
      if (!j.contains("lambda"))
        throw std::invalid_argument("surface spec: example1 needs \"lambda\"");
      return ProfileSpec::example1(j["lambda"].get<double>());
    }
    if (family == "example2") {
      if (!j.contains("lambda"))
        throw std::invalid_argument("surface spec: example2 needs \"lambda\"");
      return ProfileSpec::example2(j["lambda"].get<double>());
    }
    if (family == "custom") {
      if (!j.contains("table") || !j["table"].is_array())
        throw std::invalid_argument("surface spec: custom needs \"table\"");
      std::vector<double> r, m;
      for (const auto& row : j["table"]) {
        if (!row.is_array() || row.size() != 2)
          throw std::invalid_argument("surface spec: table rows must be [r, m]");
        r.push_back(row[0].get<double>());
        m.push_back(row[1].get<double>());
      }
      return ProfileSpec::custom_table(r, m);
    }
    throw std::invalid_argument("surface spec: unknown family \"" + family + "\"");
  }();

  if (j.contains("a")) {
    const double a_given = j["a"].get<double>();
    if (std::abs(a_given - spec.a()) > 1e-9 * std::max(1.0, spec.a()))
      throw std::invalid_argument("surface spec: \"a\" disagrees with the family value");
  }
  return NavigationData(std::move(spec), mu);
}

NavigationData load_surface_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("surface spec: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_surface_json(ss.str());
}

std::string surface_to_json(const NavigationData& nav) {
  json j;
  const ProfileSpec& p = nav.profile();
  switch (p.family()) {
    case ProfileFamily::Round:
      j["family"] = "round";
      j["radius"] = p.radius();
      break;
    case ProfileFamily::Example1:
      j["family"] = "example1";
      j["lambda"] = p.lambda();
      break;
    case ProfileFamily::Example2:
      j["family"] = "example2";
      j["lambda"] = p.lambda();
      break;
    case ProfileFamily::CustomTable: {
      j["family"] = "custom";
      json table = json::array();
      const int n = 512;
      for (int i = 0; i <= n; ++i) {
        const double r = 2.0 * p.a() * static_cast<double>(i) / n;
        table.push_back({r, p.m(r)});
      }
      j["table"] = table;
      break;
    }
  }
  j["a"] = p.a();
  j["mu"] = nav.mu();
  return j.dump(2);
}

double parse_angle(const std::string& text) {
  // Forms: [+-] [coef] [*] pi [/ den]  |  plain decimal.
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("angle: empty string");

  const std::size_t p = s.find("pi");
  if (p == std::string::npos) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("angle: trailing junk in \"" + text + "\"");
    return v;
  }

  double sign = 1.0;
  std::string head = s.substr(0, p);
  if (!head.empty() && (head.front() == '+' || head.front() == '-')) {
    if (head.front() == '-') sign = -1.0;
    head.erase(head.begin());
  }
  if (!head.empty() && head.back() == '*') head.pop_back();
  double coef = 1.0;
  if (!head.empty()) {
    std::size_t used = 0;
    coef = std::stod(head, &used);
    if (used != head.size()) throw std::invalid_argument("angle: bad coefficient in \"" + text + "\"");
  }

  std::string tail = s.substr(p + 2);
  double den = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/')
      throw std::invalid_argument("angle: expected '/' after pi in \"" + text + "\"");
    tail.erase(tail.begin());
    std::size_t used = 0;
    den = std::stod(tail, &used);
    if (used != tail.size() || den == 0.0)
      throw std::invalid_argument("angle: bad denominator in \"" + text + "\"");
  }
  return sign * coef * kPi / den;
}

void write_text_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
  }
  fs::rename(tmp, target);
}

std::string path_csv(const GeodesicPath& path) {
  std::ostringstream os;
  os << "s,r,theta,dr_ds,dtheta_ds,clairaut_residual\n";
  const ProfileSpec& spec = path.profile();
  const double rate = path.kind() == PathKind::FinslerForward    ? path.mu()
                      : path.kind() == PathKind::FinslerBackward ? -path.mu()
                                                                 : 0.0;
  for (const auto& st : path.samples()) {
    const double m = spec.m(st.r);
    const double residual = m * m * (st.dtheta - rate) - path.nu();
    os << fmt(st.s) << ',' << fmt(st.r) << ',' << fmt(st.theta) << ',' << fmt(st.dr)
       << ',' << fmt(st.dtheta) << ',' << fmt(residual) << '\n';
  }
  return os.str();
}

std::string half_period_csv(const HalfPeriodCurve& c) {
  std::ostringstream os;
  os << "nu,H,HF_plus,HF_minus\n";
  for (std::size_t i = 0; i < c.nu.size(); ++i)
    os << fmt(c.nu[i]) << ',' << fmt(c.H[i]) << ',' << fmt(c.HF_plus[i]) << ','
       << fmt(c.HF_minus[i]) << '\n';
  return os.str();
}

std::string half_period_d2_csv(const HalfPeriodCurve& c) {
  std::ostringstream os;
  os << "nu,d2H,d2HF_plus\n";
  for (std::size_t i = 0; i < c.nu.size(); ++i)
    os << fmt(c.nu[i]) << ',' << fmt(c.d2H[i]) << ',' << fmt(c.d2HF_plus[i]) << '\n';
  return os.str();
}

std::string convexity_csv(const std::vector<ConvexityRow>& rows) {
  std::ostringstream os;
  os << "lambda,min_d2HF,max_d2HF,classification\n";
  for (const auto& r : rows)
    os << fmt(r.lambda) << ',' << fmt(r.min_d2) << ',' << fmt(r.max_d2) << ','
       << (r.nonpositive ? "nonpositive" : "mixed") << '\n';
  return os.str();
}

std::string field_csv(const DistanceField& f) {
  std::ostringstream os;
  os << "i_r,i_theta,r,theta,dist\n";
  for (int i = 0; i < f.n_r(); ++i)
    for (int j = 0; j < f.n_theta(); ++j)
      os << i << ',' << j << ',' << fmt(f.r_of(i)) << ',' << fmt(f.theta_of(j)) << ','
         << fmt(f.dist_node(i, j)) << '\n';
  return os.str();
}

std::string cut_points_csv(const std::vector<EmpiricalCutPoint>& pts) {
  std::ostringstream os;
  os << "r,theta,nu,s_cut\n";
  for (const auto& p : pts)
    os << fmt(p.r) << ',' << fmt(p.theta) << ',' << fmt(p.nu) << ',' << fmt(p.s_cut)
       << '\n';
  return os.str();
}

std::string cut_arc_json(const CutLocusArc& arc) {
  json j;
  j["kind"] = to_string(arc.kind);
  j["metric"] = arc.metric == MetricKind::FinslerForward ? "F" : "h";
  if (arc.kind == ArcKind::MeridianSubarc) {
    j["r"] = nullptr;
    j["param_interval"] = {arc.param_lo, arc.param_hi};
  } else {
    j["r"] = arc.r;
  }
  j["theta_interval"] = {arc.theta_lo, arc.theta_hi};
  j["theta_interval_mod2pi"] = {wrap_2pi(arc.theta_lo), wrap_2pi(arc.theta_hi)};
  json samples = json::array(), samples_mod = json::array();
  for (const auto& s : arc.samples) {
    samples.push_back({s[0], s[1]});
    samples_mod.push_back({s[0], wrap_2pi(s[1])});
  }
  j["samples"] = samples;
  j["samples_mod2pi"] = samples_mod;
  return j.dump(2);
}

}  // namespace randers
