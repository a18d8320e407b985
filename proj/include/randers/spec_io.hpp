#pragma once

#include <string>

#include "randers/cut_locus.hpp"
#include "randers/distance_field.hpp"
#include "randers/geodesic.hpp"
#include "randers/half_period.hpp"
#include "randers/surface.hpp"

namespace randers {

/// Surface spec JSON:
/// {"family": "round"|"example1"|"example2"|"custom",
///  "lambda": number?, "radius": number?, "a": number?, "mu": number?,
///  "table": [[r, m], ...]?}
/// Round and the example families fix a internally (pi R / 2 resp. pi/2);
/// a present in the file must agree. Custom tables span [0, 2a].
NavigationData load_surface_json(const std::string& text);
NavigationData load_surface_file(const std::string& path);
std::string surface_to_json(const NavigationData& nav);

/// Radian angles in "pi/3", "2pi/5", "-3*pi/4", "1.25" form.
double parse_angle(const std::string& text);

/// Writes via a temp file in the same directory plus rename.
void write_text_atomic(const std::string& path, const std::string& content);

/// Path export: header s,r,theta,dr_ds,dtheta_ds,clairaut_residual, one row
/// per sample, %.12e. For Finsler paths the residual strips the deviation.
std::string path_csv(const GeodesicPath& path);

/// (nu, H, HF_plus, HF_minus) and (nu, d2H, d2HF_plus) exports.
std::string half_period_csv(const HalfPeriodCurve& c);
std::string half_period_d2_csv(const HalfPeriodCurve& c);

std::string convexity_csv(const std::vector<ConvexityRow>& rows);

/// Field export (i_r, i_theta, r, theta, dist) and cut set (r, theta, nu, s_cut).
std::string field_csv(const DistanceField& f);
std::string cut_points_csv(const std::vector<EmpiricalCutPoint>& pts);

/// Cut locus JSON with theta both unwrapped and mod 2pi.
std::string cut_arc_json(const CutLocusArc& arc);

}  // namespace randers
