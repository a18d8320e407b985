#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "randers/surface.hpp"

namespace randers {

struct CheckResult {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string note;
};

struct VerifyOptions {
  std::uint64_t seed = 12345;
  int resolution = 96;      // base oracle resolution (n_r; n_theta = 2 n_r)
  bool with_oracle = true;  // include the mesh-oracle checks
  std::optional<NavigationData> surface;  // extra surface-local checks
};

/// Runs the cross-module invariant suite (profile identities, geodesic
/// conservation laws, half-period consistency, conjugate/cut structure,
/// mesh-oracle consistency) and, when a surface is supplied, its local
/// invariants. Deterministic for a fixed (seed, resolution).
std::vector<CheckResult> run_invariant_suite(const VerifyOptions& opt);

bool all_pass(const std::vector<CheckResult>& results);
std::string verify_report_json(const std::vector<CheckResult>& results);

}  // namespace randers
