#include "freeconv/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "freeconv/errors.hpp"

namespace freeconv {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kFRootTol = 1e-12;
constexpr double kEdgeTol = 1e-9;

}  // namespace

TimeParam::TimeParam(double t_) : t(t_) {
  if (!(t > 1.0) || !std::isfinite(t)) fail(errc::bad_config, "time parameter must satisfy t > 1");
}

double f_t(const MeasureSpec& spec, TimeParam t, double x, double y_floor) {
  const double tau = t.tau();
  if (nevanlinna_h(spec, x, y_floor) <= tau) return 0.0;
  double lo = y_floor;
  double hi = spec.diameter() + 2.0;
  while (nevanlinna_h(spec, x, hi) >= tau) hi *= 2.0;
  // h is strictly decreasing in y, so the root is unique.
  while (hi - lo > kFRootTol) {
    const double mid = 0.5 * (lo + hi);
    if (nevanlinna_h(spec, x, mid) > tau)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::pair<double, double> v_scan_range(const MeasureSpec& spec, TimeParam t) {
  const auto [lo, hi] = spec.hull();
  // g(x) <= var(mu) / dist(x, hull)^2, so V_t+ cannot reach further than
  // sqrt(var (t-1)) beyond the hull.
  const double margin =
      std::max(1.0 + spec.diameter(), 1.0 + std::sqrt(std::max(spec.variance(), 0.0) * (t.t - 1.0)));
  return {lo - margin, hi + margin};
}

IntervalUnion v_plus(const MeasureSpec& spec, TimeParam t, int grid_n, double y_floor) {
  if (grid_n < 64) fail(errc::bad_config, "v_plus grid_n must be >= 64");
  const double tau = t.tau();
  const auto [lo, hi] = v_scan_range(spec, t);

  // Strict one-sided membership test: h(x, y_floor) <= g(x), so a point
  // flagged inside really is inside.
  auto inside = [&](double x) { return nevanlinna_h(spec, x, y_floor) > tau; };

  std::vector<double> xs(grid_n + 1);
  std::vector<char> in(grid_n + 1);
  for (int i = 0; i <= grid_n; ++i) {
    xs[i] = lo + (hi - lo) * i / grid_n;
    in[i] = inside(xs[i]);
  }

  auto bisect_edge = [&](double a, double b, bool left_inside) {
    while (b - a > kEdgeTol) {
      const double mid = 0.5 * (a + b);
      if (inside(mid) == left_inside)
        a = mid;
      else
        b = mid;
    }
    return 0.5 * (a + b);
  };

  std::vector<Interval> comps;
  int i = 0;
  while (i <= grid_n) {
    if (!in[i]) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 <= grid_n && in[j + 1]) ++j;
    const double left = (i == 0) ? xs[0] : bisect_edge(xs[i - 1], xs[i], false);
    const double right = (j == grid_n) ? xs[grid_n] : bisect_edge(xs[j], xs[j + 1], true);
    comps.push_back({left, right});
    i = j + 1;
  }
  return IntervalUnion(std::move(comps));
}

BoundaryGraph boundary_graph(const MeasureSpec& spec, TimeParam t, Interval component,
                             int samples_n, double y_floor) {
  if (samples_n < 3) fail(errc::bad_config, "boundary_graph needs at least 3 samples");
  BoundaryGraph graph;
  graph.component = component;
  graph.samples.reserve(samples_n);
  const double mid = 0.5 * (component.lo + component.hi);
  const double rad = 0.5 * (component.hi - component.lo);
  for (int k = 0; k < samples_n; ++k) {
    const double x = mid - rad * std::cos(kPi * k / (samples_n - 1));
    const bool endpoint = (k == 0 || k == samples_n - 1);
    graph.samples.emplace_back(x, endpoint ? 0.0 : f_t(spec, t, x, y_floor));
  }
  graph.samples.front().first = component.lo;
  graph.samples.back().first = component.hi;
  return graph;
}

}  // namespace freeconv
