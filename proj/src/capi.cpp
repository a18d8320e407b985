#include "randersphere.h"

#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>

#include "randers/conjugate.hpp"
#include "randers/cut_compare.hpp"
#include "randers/cut_locus.hpp"
#include "randers/distance_field.hpp"
#include "randers/errors.hpp"
#include "randers/geodesic.hpp"
#include "randers/half_period.hpp"
#include "randers/spec_io.hpp"
#include "randers/surface.hpp"
#include "randers/verify.hpp"

#include <json.hpp>

using namespace randers;

struct rsp_surface {
  NavigationData nav;
};
struct rsp_path {
  GeodesicPath path;
};
struct rsp_field {
  NavigationData nav;
  DistanceField field;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const char* what) {
  g_last_error = what ? what : "unknown error";
  return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return RSP_OK;
  } catch (const HypothesisError& e) {
    return fail(RSP_ERR_HYPOTHESIS, e.what());
  } catch (const ConvexityError& e) {
    return fail(RSP_ERR_DOMAIN, e.what());
  } catch (const NumericalCornerError& e) {
    return fail(RSP_ERR_NUMERIC, e.what());
  } catch (const UnsupportedProfileError& e) {
    return fail(RSP_ERR_DOMAIN, e.what());
  } catch (const std::domain_error& e) {
    return fail(RSP_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(RSP_ERR_INVALID, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RSP_ERR_NUMERIC, "out of memory");
  } catch (const std::exception& e) {
    return fail(RSP_ERR_NUMERIC, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int copy_to(char* buf, size_t buflen, const std::string& s) {
  if (!buf || buflen == 0) return fail(RSP_ERR_INVALID, "null buffer");
  std::strncpy(buf, s.c_str(), buflen - 1);
  buf[buflen - 1] = '\0';
  return RSP_OK;
}

CutLocusArc shifted(CutLocusArc arc, double theta_x) {
  arc.theta_lo += theta_x;
  arc.theta_hi += theta_x;
  for (auto& s : arc.samples) s[1] += theta_x;
  return arc;
}

}  // namespace

extern "C" {

const char* rsp_last_error(void) { return g_last_error.c_str(); }
const char* rsp_version(void) { return "0.1.0"; }

int rsp_parse_angle(const char* text, double* out) {
  if (!text || !out) return fail(RSP_ERR_INVALID, "null argument");
  return guarded([&] { *out = parse_angle(text); });
}

int rsp_surface_create_json(const char* json_text, rsp_surface** out) {
  if (!json_text || !out) return fail(RSP_ERR_INVALID, "null argument");
  return guarded([&] { *out = new rsp_surface{load_surface_json(json_text)}; });
}

int rsp_surface_create_file(const char* path, rsp_surface** out) {
  if (!path || !out) return fail(RSP_ERR_INVALID, "null argument");
  return guarded([&] { *out = new rsp_surface{load_surface_file(path)}; });
}

int rsp_surface_with_mu(const rsp_surface* s, double mu, rsp_surface** out) {
  if (!s || !out) return fail(RSP_ERR_INVALID, "null argument");
  return guarded([&] { *out = new rsp_surface{NavigationData(s->nav.profile(), mu)}; });
}

void rsp_surface_free(rsp_surface* s) { delete s; }

int rsp_surface_to_json(const rsp_surface* s, char** json_out) {
  if (!s || !json_out) return fail(RSP_ERR_INVALID, "null argument");
  return guarded([&] { *json_out = dup_string(surface_to_json(s->nav)); });
}

double rsp_surface_a(const rsp_surface* s) { return s ? s->nav.a() : 0.0; }
double rsp_surface_mu(const rsp_surface* s) { return s ? s->nav.mu() : 0.0; }
double rsp_surface_mu_max(const rsp_surface* s) {
  return s ? s->nav.profile().max_wind() : 0.0;
}

double rsp_surface_max_m(const rsp_surface* s, double* r_at) {
  if (!s) return 0.0;
  if (r_at) *r_at = s->nav.profile().r_of_max_m();
  return s->nav.profile().max_m();
}

double rsp_surface_symmetry_residual(const rsp_surface* s) {
  return s ? s->nav.profile().symmetry_residual() : 0.0;
}

int rsp_surface_describe(const rsp_surface* s, char* buf, size_t buflen) {
  if (!s) return fail(RSP_ERR_INVALID, "null surface");
  return copy_to(buf, buflen, s->nav.profile().describe());
}

int rsp_surface_profile(const rsp_surface* s, double r, double* m, double* m1,
                        double* m2) {
  if (!s) return fail(RSP_ERR_INVALID, "null surface");
  return guarded([&] {
    const ProfileEval e = s->nav.profile().eval(r);
    if (m) *m = e.m;
    if (m1) *m1 = e.m1;
    if (m2) *m2 = e.m2;
  });
}

int rsp_surface_curvature(const rsp_surface* s, double r, double* K) {
  if (!s || !K) return fail(RSP_ERR_INVALID, "null argument");
  return guarded([&] { *K = s->nav.profile().gaussian_curvature(r); });
}

int rsp_surface_curvature_class(const rsp_surface* s, int grid_n, char* buf,
                                size_t buflen) {
  if (!s) return fail(RSP_ERR_INVALID, "null surface");
  return guarded([&] {
    const auto cls = classify_curvature(s->nav.profile(), grid_n > 0 ? grid_n : 256);
    copy_to(buf, buflen, to_string(cls.value));
  });
}

int rsp_finsler_norm(const rsp_surface* s, double r, double y_r, double y_theta,
                     double* out) {
  if (!s || !out) return fail(RSP_ERR_INVALID, "null argument");
  return guarded([&] { *out = s->nav.finsler_norm(r, y_r, y_theta); });
}

int rsp_shoot(const rsp_surface* s, double r0, double theta0, double nu, int dr_sign,
              double s_max, int kind, double sample_ds, rsp_path** out) {
  if (!s || !out) return fail(RSP_ERR_INVALID, "null argument");
  return guarded([&] {
    ShootOptions so;
    if (sample_ds > 0.0) so.sample_ds = sample_ds;
    GeodesicPath p = shoot_h_geodesic(s->nav.profile(), r0, theta0, nu, dr_sign, s_max, so);
    if (kind == 1)
      p = flow_deviate(p, s->nav.mu(), Direction::Forward);
    else if (kind == 2)
      p = flow_deviate(p, s->nav.mu(), Direction::Backward);
    else if (kind != 0)
      throw std::invalid_argument("rsp_shoot: kind must be 0, 1 or 2");
    *out = new rsp_path{std::move(p)};
  });
}

void rsp_path_free(rsp_path* p) { delete p; }

size_t rsp_path_size(const rsp_path* p) { return p ? p->path.samples().size() : 0; }
double rsp_path_nu(const rsp_path* p) { return p ? p->path.nu() : 0.0; }

int rsp_path_sample(const rsp_path* p, size_t i, double out5[5]) {
  if (!p || !out5) return fail(RSP_ERR_INVALID, "null argument");
  if (i >= p->path.samples().size()) return fail(RSP_ERR_INVALID, "index out of range");
  const GeodesicState& st = p->path.samples()[i];
  out5[0] = st.s;
  out5[1] = st.r;
  out5[2] = st.theta;
  out5[3] = st.dr;
  out5[4] = st.dtheta;
  return RSP_OK;
}

int rsp_path_state_at(const rsp_path* p, double s, double out5[5]) {
  if (!p || !out5) return fail(RSP_ERR_INVALID, "null argument");
  return guarded([&] {
    const GeodesicState st = p->path.state_at(s);
    out5[0] = st.s;
    out5[1] = st.r;
    out5[2] = st.theta;
    out5[3] = st.dr;
    out5[4] = st.dtheta;
  });
}

int rsp_path_write_csv(const rsp_path* p, const char* file_path) {
  if (!p || !file_path) return fail(RSP_ERR_INVALID, "null argument");
  return guarded([&] { write_text_atomic(file_path, path_csv(p->path)); });
}

int rsp_xi(const rsp_surface* s, double nu, double* out) {
  if (!s || !out) return fail(RSP_ERR_INVALID, "null argument");
  return guarded([&] { *out = xi(s->nav.profile(), nu); });
}

int rsp_h_half_period(const rsp_surface* s, double nu, double* out) {
  if (!s || !out) return fail(RSP_ERR_INVALID, "null argument");
  return guarded([&] { *out = h_half_period(s->nav.profile(), nu); });
}

int rsp_f_half_period(const rsp_surface* s, double nu, int backward, double* out) {
  if (!s || !out) return fail(RSP_ERR_INVALID, "null argument");
  return guarded([&] {
    *out = f_half_period(s->nav, nu, backward ? Direction::Backward : Direction::Forward);
  });
}

int rsp_half_period_curve_csv(const rsp_surface* s, int n, const char* curve_path,
                              const char* d2_path) {
  if (!s || !curve_path) return fail(RSP_ERR_INVALID, "null argument");
  return guarded([&] {
    const HalfPeriodCurve c = compute_half_period_curve(s->nav, n);
    write_text_atomic(curve_path, half_period_csv(c));
    if (d2_path) write_text_atomic(d2_path, half_period_d2_csv(c));
  });
}

int rsp_convexity_scan_row(int family, double lambda, int nu_resolution,
                           double* min_d2, double* max_d2, int* nonpositive) {
  return guarded([&] {
    const ProfileFamily f = family == 1   ? ProfileFamily::Example1
                            : family == 2 ? ProfileFamily::Example2
                                          : throw std::invalid_argument(
                                                "convexity scan: family must be 1 or 2");
    const ConvexityRow row = convexity_scan_row(f, lambda, nu_resolution);
    if (min_d2) *min_d2 = row.min_d2;
    if (max_d2) *max_d2 = row.max_d2;
    if (nonpositive) *nonpositive = row.nonpositive ? 1 : 0;
  });
}

int rsp_first_conjugate(const rsp_surface* s, double u, double nu, int direction,
                        double* r_c, double* theta_c, double* s_c) {
  if (!s) return fail(RSP_ERR_INVALID, "null surface");
  return guarded([&] {
    ConjugatePoint cp;
    if (direction == 0)
      cp = first_h_conjugate(s->nav.profile(), u, nu);
    else if (direction == 1)
      cp = first_f_conjugate(s->nav, u, nu, Direction::Forward);
    else if (direction == 2)
      cp = first_f_conjugate(s->nav, u, nu, Direction::Backward);
    else
      throw std::invalid_argument("first_conjugate: direction must be 0, 1 or 2");
    if (r_c) *r_c = cp.r;
    if (theta_c) *theta_c = cp.theta;
    if (s_c) *s_c = cp.s;
  });
}

int rsp_cut_locus_json(const rsp_surface* s, double r_x, double theta_x, int metric_f,
                       char** json_out) {
  if (!s || !json_out) return fail(RSP_ERR_INVALID, "null argument");
  return guarded([&] {
    const MetricKind metric =
        metric_f ? MetricKind::FinslerForward : MetricKind::Riemannian;
    const CutLocusArc arc = shifted(cut_locus_dispatch(s->nav, r_x, metric), theta_x);
    *json_out = dup_string(cut_arc_json(arc));
  });
}

int rsp_cut_locus_compare_json(const rsp_surface* s, double r_x, int n_r, int n_theta,
                               int stencil_k, int pencil_n, char** json_out) {
  if (!s || !json_out) return fail(RSP_ERR_INVALID, "null argument");
  return guarded([&] {
    FieldOptions fo{n_r, n_theta, stencil_k};
    const CutComparison cmp = compare_cut_locus(s->nav, r_x, fo, pencil_n);
    nlohmann::json j;
    j["theorem"] = nlohmann::json::parse(cut_arc_json(cmp.theorem_arc));
    nlohmann::json emp = nlohmann::json::array();
    for (const auto& p : cmp.empirical) emp.push_back({p.r, p.theta, p.nu, p.s_cut});
    j["empirical"] = emp;
    j["hausdorff"] = cmp.hausdorff;
    j["tol_mesh"] = cmp.tol_mesh;
    j["pass"] = cmp.pass;
    *json_out = dup_string(j.dump(2));
  });
}

void rsp_string_free(char* s) { delete[] s; }

int rsp_field_build(const rsp_surface* s, double src_r, double src_theta, int n_r,
                    int n_theta, int stencil_k, rsp_field** out) {
  if (!s || !out) return fail(RSP_ERR_INVALID, "null argument");
  return guarded([&] {
    FieldOptions fo{n_r, n_theta, stencil_k};
    *out = new rsp_field{s->nav, DistanceField(s->nav, src_r, src_theta, fo)};
  });
}

void rsp_field_free(rsp_field* f) { delete f; }

int rsp_field_distance(const rsp_field* f, double r, double theta, double* out) {
  if (!f || !out) return fail(RSP_ERR_INVALID, "null argument");
  return guarded([&] { *out = f->field.distance_at(r, theta); });
}

double rsp_field_tol_mesh(const rsp_field* f) { return f ? f->field.tol_mesh() : 0.0; }

int rsp_field_write_csv(const rsp_field* f, const char* file_path) {
  if (!f || !file_path) return fail(RSP_ERR_INVALID, "null argument");
  return guarded([&] { write_text_atomic(file_path, field_csv(f->field)); });
}

int rsp_empirical_cut_csv(const rsp_field* f, int pencil_n, const char* file_path) {
  if (!f || !file_path) return fail(RSP_ERR_INVALID, "null argument");
  return guarded([&] {
    const auto pts = empirical_cut_locus(f->nav, f->field.source_r(),
                                         f->field.source_theta(), pencil_n, f->field);
    write_text_atomic(file_path, cut_points_csv(pts));
  });
}

int rsp_verify_json(const rsp_surface* surface, unsigned long long seed,
                    int resolution, int with_oracle, char** json_out, int* all_pass_out) {
  if (!json_out) return fail(RSP_ERR_INVALID, "null argument");
  return guarded([&] {
    VerifyOptions vo;
    vo.seed = seed;
    if (resolution > 0) vo.resolution = resolution;
    vo.with_oracle = with_oracle != 0;
    if (surface) vo.surface = surface->nav;
    const auto results = run_invariant_suite(vo);
    *json_out = dup_string(verify_report_json(results));
    if (all_pass_out) *all_pass_out = all_pass(results) ? 1 : 0;
  });
}

}  // extern "C"
