// Command-line front end for the randersphere shared library. Talks to the
// core exclusively through the C API in randersphere.h.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "randersphere.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitHypothesis = 3;

struct SurfaceDeleter {
  void operator()(rsp_surface* s) const { rsp_surface_free(s); }
};
struct PathDeleter {
  void operator()(rsp_path* p) const { rsp_path_free(p); }
};
struct FieldDeleter {
  void operator()(rsp_field* f) const { rsp_field_free(f); }
};
using SurfacePtr = std::unique_ptr<rsp_surface, SurfaceDeleter>;
using PathPtr = std::unique_ptr<rsp_path, PathDeleter>;
using FieldPtr = std::unique_ptr<rsp_field, FieldDeleter>;

int map_status(int status) {
  switch (status) {
    case RSP_OK:
      return kExitOk;
    case RSP_ERR_HYPOTHESIS:
      return kExitHypothesis;
    default:
      return kExitInput;
  }
}

[[noreturn]] void die(int status, const std::string& context) {
  std::fprintf(stderr, "error: %s: %s\n", context.c_str(), rsp_last_error());
  std::exit(map_status(status));
}

SurfacePtr load_surface(const std::string& spec_path, double mu_override, bool has_mu) {
  rsp_surface* raw = nullptr;
  int st = rsp_surface_create_file(spec_path.c_str(), &raw);
  if (st != RSP_OK) die(st, "loading surface spec " + spec_path);
  SurfacePtr s(raw);
  if (has_mu) {
    rsp_surface* changed = nullptr;
    st = rsp_surface_with_mu(s.get(), mu_override, &changed);
    if (st != RSP_OK) die(st, "applying --mu override");
    s.reset(changed);
  }
  return s;
}

double angle_arg(const std::string& text, const std::string& flag) {
  double v = 0.0;
  const int st = rsp_parse_angle(text.c_str(), &v);
  if (st != RSP_OK) die(st, "parsing " + flag);
  return v;
}

std::string join_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

void write_string_file(const std::string& path, const char* text) {
  // The library writes its own files atomically; this helper is for JSON
  // strings returned through the API.
  std::filesystem::create_directories(std::filesystem::path(path).parent_path());
  const std::string tmp = path + ".tmp";
  if (FILE* f = std::fopen(tmp.c_str(), "wb")) {
    std::fputs(text, f);
    std::fclose(f);
    std::filesystem::rename(tmp, path);
  } else {
    std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
    std::exit(kExitInput);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randers rotational 2-spheres of revolution: geodesics, half periods, "
               "conjugate points and cut loci"};
  app.require_subcommand(1);

  std::string spec_path, out_dir = ".", point = "pi/2,0", mode = "theorem";
  std::string family = "example1", kind = "h", dr_sign_s = "-1";
  double mu_override = 0.0;
  bool has_mu = false;
  int resolution = 256, seed = 12345, pencil = 256, curve_n = 200;
  double lambda_min = 1.4, lambda_max = 1.7, lambda_step = 0.05;
  std::string nu_s = "0.5", smax_s = "pi", r0_s = "pi/2", theta0_s = "0";
  bool no_oracle = false;

  auto add_common = [&](CLI::App* cmd, bool needs_spec) {
    auto* o = cmd->add_option("--spec", spec_path, "surface spec JSON path");
    if (needs_spec) o->required();
    cmd->add_option("--out", out_dir, "output directory")->capture_default_str();
    cmd->add_option("--mu", mu_override, "override the spec's wind strength")
        ->each([&](const std::string&) { has_mu = true; });
    cmd->add_option("--resolution", resolution, "grid / scan resolution")
        ->capture_default_str();
    cmd->add_option("--seed", seed, "seed for randomized checks")->capture_default_str();
  };

  auto* c_info = app.add_subcommand("surface-info", "profile extrema, max wind, "
                                                    "curvature class, symmetry");
  add_common(c_info, true);

  auto* c_geo = app.add_subcommand("geodesic", "shoot a geodesic and export CSV");
  add_common(c_geo, true);
  c_geo->add_option("--nu", nu_s, "Clairaut constant")->capture_default_str();
  c_geo->add_option("--dr-sign", dr_sign_s, "initial radial sign: -1, 0 or 1")
      ->capture_default_str();
  c_geo->add_option("--s-max", smax_s, "arclength to integrate")->capture_default_str();
  c_geo->add_option("--r0", r0_s, "start radius")->capture_default_str();
  c_geo->add_option("--theta0", theta0_s, "start angle")->capture_default_str();
  c_geo->add_option("--kind", kind, "h, f-forward or f-backward")->capture_default_str();

  auto* c_half = app.add_subcommand("half-period", "H and H_F curves to CSV");
  add_common(c_half, true);
  c_half->add_option("--n", curve_n, "number of nu grid points")->capture_default_str();

  auto* c_scan = app.add_subcommand("scan-convexity",
                                    "sign classification of (H_F+)'' over lambda");
  add_common(c_scan, false);
  c_scan->add_option("--family", family, "example1 or example2")->capture_default_str();
  c_scan->add_option("--lambda-min", lambda_min)->capture_default_str();
  c_scan->add_option("--lambda-max", lambda_max)->capture_default_str();
  c_scan->add_option("--step", lambda_step)->capture_default_str();

  auto* c_cut = app.add_subcommand("cut-locus", "theorem and/or oracle cut locus");
  add_common(c_cut, true);
  c_cut->add_option("--point", point, "base point \"r,theta\" (angles like pi/3)")
      ->capture_default_str();
  c_cut->add_option("--mode", mode, "theorem, oracle or both")->capture_default_str();
  c_cut->add_option("--pencil", pencil, "geodesics in the empirical pencil")
      ->capture_default_str();

  auto* c_verify = app.add_subcommand("verify", "run the invariant suite");
  add_common(c_verify, false);
  c_verify->add_flag("--no-oracle", no_oracle, "skip the mesh-oracle checks");

  CLI11_PARSE(app, argc, argv);

  if (c_info->parsed()) {
    SurfacePtr s = load_surface(spec_path, mu_override, has_mu);
    double r_at = 0.0;
    const double max_m = rsp_surface_max_m(s.get(), &r_at);
    char cls[32] = {0}, desc[128] = {0};
    if (int st = rsp_surface_curvature_class(s.get(), resolution, cls, sizeof cls);
        st != RSP_OK)
      die(st, "classifying curvature");
    rsp_surface_describe(s.get(), desc, sizeof desc);
    std::printf("surface:            %s\n", desc);
    std::printf("a (half distance):  %.12g\n", rsp_surface_a(s.get()));
    std::printf("max m(r):           %.12g at r = %.12g\n", max_m, r_at);
    std::printf("mu:                 %.12g\n", rsp_surface_mu(s.get()));
    std::printf("mu_max = 1/max m:   %.12g\n", rsp_surface_mu_max(s.get()));
    std::printf("curvature class:    %s\n", cls);
    std::printf("symmetry residual:  %.3e\n", rsp_surface_symmetry_residual(s.get()));
    return kExitOk;
  }

  if (c_geo->parsed()) {
    SurfacePtr s = load_surface(spec_path, mu_override, has_mu);
    const double nu = angle_arg(nu_s, "--nu");
    const double s_max = angle_arg(smax_s, "--s-max");
    const double r0 = angle_arg(r0_s, "--r0");
    const double theta0 = angle_arg(theta0_s, "--theta0");
    const int dr_sign = std::stoi(dr_sign_s);
    const int k = kind == "h" ? 0 : kind == "f-forward" ? 1 : kind == "f-backward" ? 2 : -1;
    if (k < 0) {
      std::fprintf(stderr, "error: --kind must be h, f-forward or f-backward\n");
      return kExitInput;
    }
    rsp_path* p = nullptr;
    if (int st = rsp_shoot(s.get(), r0, theta0, nu, dr_sign, s_max, k, 0.0, &p);
        st != RSP_OK)
      die(st, "shooting geodesic");
    PathPtr path(p);
    const std::string file = join_path(out_dir, "geodesic.csv");
    if (int st = rsp_path_write_csv(path.get(), file.c_str()); st != RSP_OK)
      die(st, "writing " + file);
    std::printf("wrote %s (%zu samples)\n", file.c_str(), rsp_path_size(path.get()));
    return kExitOk;
  }

  if (c_half->parsed()) {
    SurfacePtr s = load_surface(spec_path, mu_override, has_mu);
    const std::string curve = join_path(out_dir, "half_period.csv");
    const std::string d2 = join_path(out_dir, "half_period_d2.csv");
    if (int st = rsp_half_period_curve_csv(s.get(), curve_n, curve.c_str(), d2.c_str());
        st != RSP_OK)
      die(st, "computing half-period curves");
    std::printf("wrote %s and %s\n", curve.c_str(), d2.c_str());
    return kExitOk;
  }

  if (c_scan->parsed()) {
    const int fam = family == "example1" ? 1 : family == "example2" ? 2 : -1;
    if (fam < 0) {
      std::fprintf(stderr, "error: --family must be example1 or example2\n");
      return kExitInput;
    }
    std::string csv = "lambda,min_d2HF,max_d2HF,classification\n";
    double last_nonpos = -1.0, first_mixed = -1.0;
    for (double l = lambda_min; l <= lambda_max + 1e-12; l += lambda_step) {
      double mn = 0.0, mx = 0.0;
      int nonpos = 0;
      if (int st = rsp_convexity_scan_row(fam, l, resolution * 8, &mn, &mx, &nonpos);
          st != RSP_OK)
        die(st, "convexity scan");
      char row[160];
      std::snprintf(row, sizeof row, "%.6f,%.12e,%.12e,%s\n", l, mn, mx,
                    nonpos ? "nonpositive" : "mixed");
      csv += row;
      if (nonpos)
        last_nonpos = l;
      else if (first_mixed < 0.0)
        first_mixed = l;
      std::printf("lambda = %-8.4f  min (H_F+)'' = %+.6f  max = %+.6f  -> %s\n", l, mn,
                  mx, nonpos ? "nonpositive" : "mixed");
    }
    const std::string file = join_path(out_dir, "convexity_scan.csv");
    write_string_file(file, csv.c_str());
    if (last_nonpos >= 0.0 && first_mixed >= 0.0)
      std::printf("threshold bracket: (H_F+)'' stays nonpositive up to lambda = %.6g, "
                  "mixed signs from lambda = %.6g\n",
                  last_nonpos, first_mixed);
    std::printf("wrote %s\n", file.c_str());
    return kExitOk;
  }

  if (c_cut->parsed()) {
    SurfacePtr s = load_surface(spec_path, mu_override, has_mu);
    const auto comma = point.find(',');
    if (comma == std::string::npos) {
      std::fprintf(stderr, "error: --point must be \"r,theta\"\n");
      return kExitInput;
    }
    const double r_x = angle_arg(point.substr(0, comma), "--point r");
    const double theta_x = angle_arg(point.substr(comma + 1), "--point theta");
    const int metric_f = rsp_surface_mu(s.get()) > 0.0 ? 1 : 0;

    if (mode == "theorem" || mode == "both") {
      char* json = nullptr;
      if (int st = rsp_cut_locus_json(s.get(), r_x, theta_x, metric_f, &json);
          st != RSP_OK) {
        if (st == RSP_ERR_HYPOTHESIS)
          std::fprintf(stderr,
                       "error: theorem hypotheses not satisfied (%s); rerun with "
                       "--mode oracle\n",
                       rsp_last_error());
        die(st, "theorem cut locus");
      }
      const std::string file = join_path(out_dir, "cut_locus_theorem.json");
      write_string_file(file, json);
      rsp_string_free(json);
      std::printf("wrote %s\n", file.c_str());
    }
    if (mode == "oracle") {
      rsp_field* f = nullptr;
      if (int st = rsp_field_build(s.get(), r_x, theta_x, resolution, 2 * resolution, 16, &f);
          st != RSP_OK)
        die(st, "building distance field");
      FieldPtr field(f);
      const std::string file = join_path(out_dir, "cut_locus_empirical.csv");
      if (int st = rsp_empirical_cut_csv(field.get(), pencil, file.c_str()); st != RSP_OK)
        die(st, "empirical cut locus");
      std::printf("wrote %s (tol_mesh = %.4e)\n", file.c_str(),
                  rsp_field_tol_mesh(field.get()));
    }
    if (mode == "both") {
      char* json = nullptr;
      if (int st = rsp_cut_locus_compare_json(s.get(), r_x, resolution, 2 * resolution,
                                              16, pencil, &json);
          st != RSP_OK)
        die(st, "cut locus comparison");
      const std::string file = join_path(out_dir, "cut_locus_compare.json");
      write_string_file(file, json);
      // Pull the two headline numbers back out for the console.
      const std::string text(json);
      rsp_string_free(json);
      const auto hpos = text.find("\"hausdorff\":");
      const auto tpos = text.find("\"tol_mesh\":");
      const auto ppos = text.find("\"pass\":");
      double hd = -1.0, tol = -1.0;
      bool pass = false;
      if (hpos != std::string::npos) hd = std::atof(text.c_str() + hpos + 12);
      if (tpos != std::string::npos) tol = std::atof(text.c_str() + tpos + 11);
      if (ppos != std::string::npos) pass = text.compare(ppos + 8, 4, "true") == 0;
      std::printf("hausdorff(theorem, oracle) = %.6e, tol_mesh = %.6e -> %s\n", hd, tol,
                  pass ? "PASS" : "FAIL");
      std::printf("wrote %s\n", file.c_str());
      if (!pass) return kExitVerifyFail;
    }
    if (mode != "theorem" && mode != "oracle" && mode != "both") {
      std::fprintf(stderr, "error: --mode must be theorem, oracle or both\n");
      return kExitInput;
    }
    return kExitOk;
  }

  if (c_verify->parsed()) {
    SurfacePtr s;
    if (!spec_path.empty()) s = load_surface(spec_path, mu_override, has_mu);
    char* json = nullptr;
    int all = 0;
    if (int st = rsp_verify_json(s.get(), static_cast<unsigned long long>(seed),
                                 resolution >= 64 ? resolution / 2 : 96, no_oracle ? 0 : 1,
                                 &json, &all);
        st != RSP_OK)
      die(st, "running the invariant suite");
    const std::string file = join_path(out_dir, "verify.json");
    write_string_file(file, json);
    // Console summary: one line per failing check.
    const std::string text(json);
    rsp_string_free(json);
    std::size_t pos = 0;
    int failures = 0;
    while ((pos = text.find("\"name\":", pos)) != std::string::npos) {
      const std::size_t q1 = text.find('"', pos + 8);
      const std::size_t q2 = text.find('"', q1 + 1);
      const std::size_t pp = text.find("\"pass\":", q2);
      const bool ok = text.compare(pp + 8, 4, "true") == 0;
      if (!ok) {
        std::printf("FAIL %s\n", text.substr(q1 + 1, q2 - q1 - 1).c_str());
        ++failures;
      }
      pos = q2;
    }
    std::printf("%s (report: %s)\n", all ? "all invariants pass" : "invariant failures",
                file.c_str());
    return all ? kExitOk : kExitVerifyFail;
  }

  return kExitOk;
}
