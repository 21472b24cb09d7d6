#pragma once

#include <utility>
#include <vector>

#include "freeconv/interval.hpp"

namespace freeconv {

struct Atom {
  double x = 0.0;  // position
  double m = 0.0;  // mass, in (0, 1]
};

// One density segment: piecewise-linear interpolant through (xs[i], ys[i]),
// zero outside [xs.front(), xs.back()].
struct Segment {
  std::vector<double> xs;
  std::vector<double> ys;

  double mass() const;  // exact trapezoid integral of the interpolant
};

inline constexpr double kMassTol = 1e-10;

// A compactly supported probability measure: finitely many atoms plus a
// piecewise-linear density. Instances are immutable once validated; all
// operations on them are pure.
class MeasureSpec {
 public:
  // Checks every invariant (total mass 1 within kMassTol, sorted disjoint
  // segments, distinct atom positions, nonnegative values, bounded support,
  // not a single Dirac mass). With renormalize set, the density is rescaled
  // so the total mass is exactly 1 before the mass check.
  static MeasureSpec validated(std::vector<Atom> atoms, std::vector<Segment> segments,
                               bool renormalize = false);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Segment>& segments() const { return segments_; }

  double atom_mass() const;     // sum of atom masses
  double density_mass() const;  // integral of the density

  // Exact k-th moment: atoms summed, linear pieces integrated in closed form.
  double moment(int k) const;

  double mean() const { return moment(1); }
  double variance() const;

  // Smallest closed interval containing the support.
  std::pair<double, double> hull() const { return hull_; }
  double diameter() const { return hull_.second - hull_.first; }

 private:
  MeasureSpec(std::vector<Atom> atoms, std::vector<Segment> segments);

  std::vector<Atom> atoms_;
  std::vector<Segment> segments_;
  std::pair<double, double> hull_;
};

}  // namespace freeconv
