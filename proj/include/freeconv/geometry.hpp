#pragma once

#include <utility>
#include <vector>

#include "freeconv/interval.hpp"
#include "freeconv/measure.hpp"
#include "freeconv/transforms.hpp"

namespace freeconv {

// Semigroup time t > 1 with its threshold tau = 1/(t-1).
struct TimeParam {
  double t;

  explicit TimeParam(double t_);
  double tau() const { return 1.0 / (t - 1.0); }
};

// The graph {(x, f_t(x))} over one component of V_t+, sampled on a grid
// clustered toward the component edges where f_t vanishes like a square root.
struct BoundaryGraph {
  Interval component;
  std::vector<std::pair<double, double>> samples;  // (x, f_t(x)), x increasing
};

// Boundary height f_t(x): 0 when nevanlinna_h(x, y_floor) <= tau, otherwise
// the unique root of nevanlinna_h(x, .) = tau, bisected to 1e-12.
double f_t(const MeasureSpec& spec, TimeParam t, double x, double y_floor = kYFloor);

// Scan range guaranteed to contain V_t+ (hull widened by 1 + diameter, or by
// the variance bound sqrt(var (t-1)) + 1 when that is larger).
std::pair<double, double> v_scan_range(const MeasureSpec& spec, TimeParam t);

// Open set V_t+ = {g > tau}, reported as the union of component closures.
// Uniform scan of grid_n points over v_scan_range followed by bisection of
// each boundary to 1e-9. Components narrower than the grid resolution may be
// missed.
IntervalUnion v_plus(const MeasureSpec& spec, TimeParam t, int grid_n = 2048,
                     double y_floor = kYFloor);

// f_t sampled on samples_n edge-clustered points over one component of
// v_plus; endpoints carry value 0.
BoundaryGraph boundary_graph(const MeasureSpec& spec, TimeParam t, Interval component,
                             int samples_n = 257, double y_floor = kYFloor);

}  // namespace freeconv
