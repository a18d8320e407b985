#pragma once

#include <cstdint>
#include <vector>

#include "randers/geodesic.hpp"
#include "randers/surface.hpp"

namespace randers {

struct FieldOptions {
  int n_r = 256;
  int n_theta = 512;
  int stencil_k = 16;  // 8, 16 or 32 directed offsets per node
};

/// Brute-force forward-Finsler distance field: single-source Dijkstra over
/// a directed (r, theta) grid graph with F-weighted edges and two virtual
/// pole nodes. Validation-grade accuracy (percent level), self-calibrated
/// against the round sphere.
class DistanceField {
public:
  DistanceField(const NavigationData& nav, double src_r, double src_theta,
                const FieldOptions& opt = {});

  const NavigationData& nav() const { return nav_; }
  const FieldOptions& options() const { return opt_; }
  double source_r() const { return src_r_; }
  double source_theta() const { return src_theta_; }

  int n_r() const { return opt_.n_r; }
  int n_theta() const { return opt_.n_theta; }
  double r_of(int i) const;
  double theta_of(int j) const;
  double dist_node(int i, int j) const;
  double dist_pole_north() const { return dist_[pole_p_]; }
  double dist_pole_south() const { return dist_[pole_q_]; }
  /// Back-pointer of the shortest-path tree: flat predecessor index of node
  /// (i, j), with i * n_theta + j numbering, n_r*n_theta / +1 the poles and
  /// -1 at the source.
  std::int32_t predecessor(int i, int j) const { return pred_[node(i, j)]; }

  /// Bilinear interpolation (theta wrapped mod 2pi, pole blending below the
  /// first and above the last row).
  double distance_at(double r, double theta) const;

  /// Mesh-error budget: 3x the measured round-sphere probe error at this
  /// resolution (memoized per FieldOptions; computed on first use).
  double tol_mesh() const;

private:
  void build();
  std::size_t node(int i, int j) const {
    return static_cast<std::size_t>(i) * opt_.n_theta + static_cast<std::size_t>(j);
  }

  NavigationData nav_;
  FieldOptions opt_;
  double src_r_, src_theta_;
  double dr_, dth_;
  std::vector<double> dist_;
  std::vector<int32_t> pred_;
  std::size_t pole_p_, pole_q_;
};

/// Measured round-sphere (R = 1, mu = 0) distance error at the given
/// resolution, times 3; memoized per options.
double calibrate_tol_mesh(const FieldOptions& opt);

/// 16/24/32-direction stencil offsets for a given stencil_k request:
/// coprime integer pairs within Chebyshev radius 1, 2 or 3.
std::vector<std::array<int, 2>> stencil_offsets(int stencil_k);

struct EmpiricalCutPoint {
  double r;
  double theta;  // unwrapped along the shot geodesic
  double nu;
  double s_cut;
};

/// Empirical cut points from x: shoots a pencil of geodesics (nu spanning
/// (0, m(r_x)) with both radial signs, plus the two meridians), deviated
/// forward when nav carries wind, and records the first s where
/// s - dist(P(s)) exceeds the field's mesh tolerance.
std::vector<EmpiricalCutPoint> empirical_cut_locus(const NavigationData& nav, double x_r,
                                                   double x_theta, int pencil_n,
                                                   const DistanceField& field);

}  // namespace randers
