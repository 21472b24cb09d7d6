#include "freeconv/interval.hpp"

#include <algorithm>
#include <cmath>

#include "freeconv/errors.hpp"

namespace freeconv {

IntervalUnion::IntervalUnion(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  for (const auto& iv : intervals_) {
    if (!(iv.lo <= iv.hi)) fail(errc::bad_config, "interval with lo > hi");
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi))
      fail(errc::bad_config, "non-finite interval endpoint");
  }
  normalize();
}

IntervalUnion IntervalUnion::single(double lo, double hi) {
  return IntervalUnion({Interval{lo, hi}});
}

IntervalUnion IntervalUnion::point(double x) { return single(x, x); }

void IntervalUnion::add(const Interval& iv) {
  intervals_.push_back(iv);
  normalize();
}

void IntervalUnion::add(double lo, double hi) { add(Interval{lo, hi}); }

void IntervalUnion::normalize() {
  if (intervals_.empty()) return;
  std::sort(intervals_.begin(), intervals_.end(),
            [](const Interval& a, const Interval& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  std::vector<Interval> merged;
  merged.reserve(intervals_.size());
  merged.push_back(intervals_.front());
  for (std::size_t i = 1; i < intervals_.size(); ++i) {
    Interval& last = merged.back();
    const Interval& cur = intervals_[i];
    if (cur.lo <= last.hi) {
      last.hi = std::max(last.hi, cur.hi);
    } else {
      merged.push_back(cur);
    }
  }
  intervals_ = std::move(merged);
}

double IntervalUnion::min() const {
  if (empty()) fail(errc::empty_set, "min() of empty interval union");
  return intervals_.front().lo;
}

double IntervalUnion::max() const {
  if (empty()) fail(errc::empty_set, "max() of empty interval union");
  return intervals_.back().hi;
}

bool IntervalUnion::contains(double x, double tol) const {
  for (const auto& iv : intervals_)
    if (x >= iv.lo - tol && x <= iv.hi + tol) return true;
  return false;
}

double IntervalUnion::distance_to(double x) const {
  if (empty()) fail(errc::empty_set, "distance to empty interval union");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& iv : intervals_) {
    const double d = std::max({iv.lo - x, x - iv.hi, 0.0});
    best = std::min(best, d);
  }
  return best;
}

bool IntervalUnion::subset_of(const IntervalUnion& other, double tol) const {
  for (const auto& iv : intervals_) {
    bool covered = false;
    for (const auto& jv : other.intervals_) {
      if (iv.lo >= jv.lo - tol && iv.hi <= jv.hi + tol) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

IntervalUnion IntervalUnion::unite(const IntervalUnion& a, const IntervalUnion& b) {
  std::vector<Interval> all = a.intervals_;
  all.insert(all.end(), b.intervals_.begin(), b.intervals_.end());
  return IntervalUnion(std::move(all));
}

}  // namespace freeconv
