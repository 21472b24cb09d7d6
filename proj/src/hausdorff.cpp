#include "freeconv/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "freeconv/errors.hpp"

namespace freeconv {

namespace {

// sup_{a in A} dist(a, B) over the candidate set {endpoints of A} union
// {gap midpoints of B clipped to A}.
double directed(const IntervalUnion& a, const IntervalUnion& b) {
  double best = 0.0;
  for (const auto& iv : a.intervals()) {
    best = std::max(best, b.distance_to(iv.lo));
    best = std::max(best, b.distance_to(iv.hi));
  }
  const auto& bs = b.intervals();
  for (std::size_t i = 0; i + 1 < bs.size(); ++i) {
    const double mid = 0.5 * (bs[i].hi + bs[i + 1].lo);
    if (a.contains(mid)) best = std::max(best, b.distance_to(mid));
  }
  return best;
}

}  // namespace

double hausdorff(const IntervalUnion& a, const IntervalUnion& b) {
  if (a.empty() || b.empty()) fail(errc::empty_set, "Hausdorff distance of an empty set");
  return std::max(directed(a, b), directed(b, a));
}

double ContinuityTable::max_dh() const {
  double m = 0.0;
  for (const auto& r : rows) m = std::max(m, r.d_h);
  return m;
}

double ContinuityTable::median_dh() const {
  if (rows.empty()) return 0.0;
  std::vector<double> ds;
  ds.reserve(rows.size());
  for (const auto& r : rows) ds.push_back(r.d_h);
  std::sort(ds.begin(), ds.end());
  const std::size_t n = ds.size();
  return n % 2 ? ds[n / 2] : 0.5 * (ds[n / 2 - 1] + ds[n / 2]);
}

ContinuityTable continuity_scan(const MeasureSpec& spec, double t_lo, double t_hi, int steps,
                                int refine_depth, const SnapshotOptions& opt) {
  if (!(1.0 < t_lo && t_lo < t_hi)) fail(errc::bad_config, "scan needs 1 < t_lo < t_hi");
  if (steps < 2) fail(errc::bad_config, "scan needs steps >= 2");

  // Supports keyed by t; doubles from the same affine grid compare exactly.
  std::map<double, IntervalUnion> supports;
  auto support_at = [&](double t) -> const IntervalUnion& {
    auto it = supports.find(t);
    if (it == supports.end())
      it = supports.emplace(t, full_support(snapshot(spec, TimeParam(t), opt))).first;
    return it->second;
  };

  std::vector<double> grid(steps);
  for (int i = 0; i < steps; ++i) grid[i] = t_lo + (t_hi - t_lo) * i / (steps - 1);
  for (double t : grid) support_at(t);

  std::vector<std::pair<double, double>> pairs;  // (r, t) adjacent
  std::vector<bool> refined_pair;
  for (int i = 0; i + 1 < steps; ++i) {
    pairs.emplace_back(grid[i], grid[i + 1]);
    refined_pair.push_back(false);
  }

  auto pair_dh = [&](const std::pair<double, double>& p) {
    return hausdorff(support_at(p.first), support_at(p.second));
  };

  std::vector<double> dhs;
  for (const auto& p : pairs) dhs.push_back(pair_dh(p));

  for (int depth = 0; depth < refine_depth; ++depth) {
    std::vector<double> sorted = dhs;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    const double med = n % 2 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    const double trigger = 5.0 * std::max(med, 1e-12);

    std::vector<std::pair<double, double>> next_pairs;
    std::vector<bool> next_refined;
    std::vector<double> next_dhs;
    bool any = false;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (dhs[i] > trigger) {
        any = true;
        const double mid = 0.5 * (pairs[i].first + pairs[i].second);
        next_pairs.emplace_back(pairs[i].first, mid);
        next_pairs.emplace_back(mid, pairs[i].second);
        next_refined.push_back(true);
        next_refined.push_back(true);
        next_dhs.push_back(pair_dh(next_pairs[next_pairs.size() - 2]));
        next_dhs.push_back(pair_dh(next_pairs.back()));
      } else {
        next_pairs.push_back(pairs[i]);
        next_refined.push_back(refined_pair[i]);
        next_dhs.push_back(dhs[i]);
      }
    }
    pairs = std::move(next_pairs);
    refined_pair = std::move(next_refined);
    dhs = std::move(next_dhs);
    if (!any) break;
  }

  const auto vanish = atom_vanishing_times(spec);
  const double step = (t_hi - t_lo) / (steps - 1);

  ContinuityTable table;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    ScanRow row;
    row.r = pairs[i].first;
    row.t = pairs[i].second;
    row.d_h = dhs[i];
    row.refined = refined_pair[i];
    for (double tv : vanish)
      if (tv >= row.r - step && tv <= row.t + step) row.atom_vanishing_nearby = true;
    table.rows.push_back(row);
  }
  std::sort(table.rows.begin(), table.rows.end(),
            [](const ScanRow& a, const ScanRow& b) { return a.t < b.t; });
  return table;
}

}  // namespace freeconv
