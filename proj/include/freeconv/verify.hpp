#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "freeconv/measure.hpp"

namespace freeconv {

struct PropertyResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs the full property suite against one measure: transform inequalities,
// monotonicities of h and V_t+, the Lipschitz bound on H_t, mass and moment
// scaling of mu_t, boundary-root residuals, convexity of g, Hausdorff basics.
// Deterministic for a fixed seed.
std::vector<PropertyResult> run_property_suite(const MeasureSpec& spec, std::uint64_t seed = 12345);

bool all_pass(const std::vector<PropertyResult>& results);

}  // namespace freeconv
