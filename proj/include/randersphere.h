/* randersphere: Randers rotational metrics on 2-spheres of revolution.
 *
 * C API over the core library: opaque handles, integer status codes,
 * thread-local error messages. All angles are radians; theta values are
 * unwrapped (universal cover) unless a function says otherwise.
 */
#ifndef RANDERSPHERE_H
#define RANDERSPHERE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rsp_surface rsp_surface; /* profile + wind (immutable) */
typedef struct rsp_path rsp_path;       /* sampled unit-speed geodesic */
typedef struct rsp_field rsp_field;     /* brute-force distance field */

enum {
  RSP_OK = 0,
  RSP_ERR_INVALID = 1,    /* malformed input / bad arguments */
  RSP_ERR_DOMAIN = 2,     /* out-of-domain math input */
  RSP_ERR_HYPOTHESIS = 3, /* theorem hypotheses not satisfied */
  RSP_ERR_NUMERIC = 4     /* numerical corner / no convergence */
};

/* Message for the last failing call on this thread. */
const char* rsp_last_error(void);
const char* rsp_version(void);

/* "pi/3", "2pi/5", "-3*pi/4" or a plain decimal. */
int rsp_parse_angle(const char* text, double* out);

/* ---- surfaces ---- */
int rsp_surface_create_json(const char* json_text, rsp_surface** out);
int rsp_surface_create_file(const char* path, rsp_surface** out);
/* Same profile, different wind. */
int rsp_surface_with_mu(const rsp_surface* s, double mu, rsp_surface** out);
void rsp_surface_free(rsp_surface* s);
int rsp_surface_to_json(const rsp_surface* s, char** json_out);

double rsp_surface_a(const rsp_surface* s);
double rsp_surface_mu(const rsp_surface* s);
double rsp_surface_mu_max(const rsp_surface* s);
double rsp_surface_max_m(const rsp_surface* s, double* r_at);
double rsp_surface_symmetry_residual(const rsp_surface* s);
int rsp_surface_describe(const rsp_surface* s, char* buf, size_t buflen);
int rsp_surface_profile(const rsp_surface* s, double r, double* m, double* m1,
                        double* m2);
int rsp_surface_curvature(const rsp_surface* s, double r, double* K);
/* Writes "Constant" | "NonIncreasing" | "NonDecreasing" | "NonMonotone". */
int rsp_surface_curvature_class(const rsp_surface* s, int grid_n, char* buf,
                                size_t buflen);
int rsp_finsler_norm(const rsp_surface* s, double r, double y_r, double y_theta,
                     double* out);

/* ---- geodesics ----
 * kind: 0 = h (Riemannian), 1 = F forward, 2 = F backward.
 * Samples are (s, r, theta, dr_ds, dtheta_ds). */
int rsp_shoot(const rsp_surface* s, double r0, double theta0, double nu, int dr_sign,
              double s_max, int kind, double sample_ds, rsp_path** out);
void rsp_path_free(rsp_path* p);
size_t rsp_path_size(const rsp_path* p);
double rsp_path_nu(const rsp_path* p);
int rsp_path_sample(const rsp_path* p, size_t i, double out5[5]);
int rsp_path_state_at(const rsp_path* p, double s, double out5[5]);
/* CSV columns s,r,theta,dr_ds,dtheta_ds,clairaut_residual at %.12e. */
int rsp_path_write_csv(const rsp_path* p, const char* file_path);

/* ---- half periods ---- */
int rsp_xi(const rsp_surface* s, double nu, double* out);
int rsp_h_half_period(const rsp_surface* s, double nu, double* out);
/* backward != 0 gives H_F-. */
int rsp_f_half_period(const rsp_surface* s, double nu, int backward, double* out);
/* Writes (nu, H, HF_plus, HF_minus) and (nu, d2H, d2HF_plus) CSVs. */
int rsp_half_period_curve_csv(const rsp_surface* s, int n, const char* curve_path,
                              const char* d2_path);

/* family: 1 = example1, 2 = example2. nonpositive reports the sign class of
 * (H_F+)'' with the mu = max_wind/2 convention. */
int rsp_convexity_scan_row(int family, double lambda, int nu_resolution,
                           double* min_d2, double* max_d2, int* nonpositive);

/* ---- conjugate points ----
 * direction: 0 = h metric, 1 = F forward, 2 = F backward. */
int rsp_first_conjugate(const rsp_surface* s, double u, double nu, int direction,
                        double* r_c, double* theta_c, double* s_c);

/* ---- cut loci ----
 * Theorem dispatch (monotone-curvature theorem, falling back to the
 * equator-subarc criterion). metric_f != 0 computes the forward-Finsler cut
 * locus, otherwise the Riemannian one. The JSON follows the documented
 * schema; theta_x rotates the answer to a base point (r_x, theta_x).
 * Returns RSP_ERR_HYPOTHESIS when no theorem applies. */
int rsp_cut_locus_json(const rsp_surface* s, double r_x, double theta_x, int metric_f,
                       char** json_out);
/* Theorem + mesh oracle comparison from (r_x, 0); emits both answers,
 * the Hausdorff distance and the mesh tolerance. */
int rsp_cut_locus_compare_json(const rsp_surface* s, double r_x, int n_r, int n_theta,
                               int stencil_k, int pencil_n, char** json_out);
void rsp_string_free(char* s);

/* ---- brute-force oracle ---- */
int rsp_field_build(const rsp_surface* s, double src_r, double src_theta, int n_r,
                    int n_theta, int stencil_k, rsp_field** out);
void rsp_field_free(rsp_field* f);
int rsp_field_distance(const rsp_field* f, double r, double theta, double* out);
double rsp_field_tol_mesh(const rsp_field* f);
int rsp_field_write_csv(const rsp_field* f, const char* file_path);
/* Empirical cut set CSV (r, theta, nu, s_cut) from the field's source. */
int rsp_empirical_cut_csv(const rsp_field* f, int pencil_n, const char* file_path);

/* ---- invariant suite ----
 * surface may be NULL (built-in families only). resolution is the base
 * oracle grid (n_r). The JSON report lists every check with pass/fail;
 * all_pass is set to 0/1. */
int rsp_verify_json(const rsp_surface* surface, unsigned long long seed,
                    int resolution, int with_oracle, char** json_out, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* RANDERSPHERE_H */
