#pragma once

#include <vector>

#include "randers/cut_locus.hpp"
#include "randers/distance_field.hpp"

namespace randers {

/// Surface distance proxy between two points (wrapped theta, local m):
/// sqrt(dr^2 + m((r1+r2)/2)^2 dtheta^2).
double point_distance(const ProfileSpec& spec, double r1, double th1, double r2,
                      double th2);

/// Symmetric Hausdorff distance between the arc sample set and the
/// empirical cut point set, measured with point_distance mod 2pi.
double hausdorff_distance(const ProfileSpec& spec,
                          const std::vector<std::array<double, 2>>& arc_samples,
                          const std::vector<EmpiricalCutPoint>& empirical);

struct CutComparison {
  CutLocusArc theorem_arc;
  std::vector<EmpiricalCutPoint> empirical;
  double hausdorff = 0.0;
  double tol_mesh = 0.0;
  bool pass = false;
};

/// Runs the theorem dispatch (Theorem-1 classification, falling back to the
/// equator-criterion path) and the mesh oracle from the same base point,
/// then compares the two answers.
CutComparison compare_cut_locus(const NavigationData& nav, double r_x,
                                const FieldOptions& opt, int pencil_n);

/// Theorem dispatch used by the CLI: monotone-curvature theorem first, then
/// the equator-subarc criterion; HypothesisError propagates when neither
/// applies.
CutLocusArc cut_locus_dispatch(const NavigationData& nav, double r_x, MetricKind metric,
                               int n_samples = 65);

}  // namespace randers
