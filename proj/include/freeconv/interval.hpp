#pragma once

#include <vector>

namespace freeconv {

// Closed interval; lo == hi encodes an isolated point.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool is_point() const { return lo == hi; }
};

// Finite union of disjoint closed intervals, kept sorted with strictly
// positive gaps. Construction normalizes: sorts and merges touching or
// overlapping intervals.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  explicit IntervalUnion(std::vector<Interval> intervals);

  static IntervalUnion single(double lo, double hi);
  static IntervalUnion point(double x);

  void add(const Interval& iv);     // re-normalizes
  void add(double lo, double hi);

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  std::size_t size() const { return intervals_.size(); }

  double min() const;  // requires nonempty
  double max() const;

  bool contains(double x, double tol = 0.0) const;
  double distance_to(double x) const;  // 0 if contained; requires nonempty

  // Every interval of this union lies inside some interval of `other`,
  // allowing endpoints to stick out by at most `tol`.
  bool subset_of(const IntervalUnion& other, double tol = 0.0) const;

  static IntervalUnion unite(const IntervalUnion& a, const IntervalUnion& b);

 private:
  void normalize();
  std::vector<Interval> intervals_;
};

}  // namespace freeconv
