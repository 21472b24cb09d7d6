#pragma once

#include <vector>

#include "freeconv/interval.hpp"
#include "freeconv/measure.hpp"
#include "freeconv/support.hpp"

namespace freeconv {

// Exact Hausdorff distance between two nonempty interval unions. The
// directed distance x -> d(x, B) is piecewise linear on A with peaks only at
// endpoints of A and at midpoints of the gaps of B, so the supremum is taken
// over that finite candidate set.
double hausdorff(const IntervalUnion& a, const IntervalUnion& b);

struct ScanRow {
  double t = 0.0;  // right grid point
  double r = 0.0;  // left grid point
  double d_h = 0.0;
  bool refined = false;
  bool atom_vanishing_nearby = false;
};

struct ContinuityTable {
  std::vector<ScanRow> rows;  // sorted by t

  double max_dh() const;
  double median_dh() const;
};

// Snapshots on a uniform t-grid; rows are adjacent pairs. Around any row
// whose distance exceeds 5x the local median the t-interval is bisected,
// refine_depth rounds in total, which zooms into atom-vanishing times.
ContinuityTable continuity_scan(const MeasureSpec& spec, double t_lo, double t_hi, int steps,
                                int refine_depth = 3, const SnapshotOptions& opt = {});

}  // namespace freeconv
