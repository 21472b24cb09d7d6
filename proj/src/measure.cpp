#include "freeconv/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "freeconv/errors.hpp"

namespace freeconv {

namespace {

double ipow_int(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

double Segment::mass() const {
  double m = 0.0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    m += 0.5 * (ys[i] + ys[i + 1]) * (xs[i + 1] - xs[i]);
  return m;
}

MeasureSpec::MeasureSpec(std::vector<Atom> atoms, std::vector<Segment> segments)
    : atoms_(std::move(atoms)), segments_(std::move(segments)) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& a : atoms_) {
    lo = std::min(lo, a.x);
    hi = std::max(hi, a.x);
  }
  for (const auto& s : segments_) {
    lo = std::min(lo, s.xs.front());
    hi = std::max(hi, s.xs.back());
  }
  hull_ = {lo, hi};
}

MeasureSpec MeasureSpec::validated(std::vector<Atom> atoms, std::vector<Segment> segments,
                                   bool renormalize) {
  for (const auto& a : atoms) {
    if (!std::isfinite(a.x) || !std::isfinite(a.m))
      fail(errc::unbounded_support, "non-finite atom");
    if (a.m <= 0.0 || a.m > 1.0 + kMassTol) fail(errc::mass_not_one, "atom mass outside (0,1]");
  }
  for (const auto& s : segments) {
    if (s.xs.size() < 2 || s.xs.size() != s.ys.size())
      fail(errc::bad_config, "segment needs matching xs/ys with at least two breakpoints");
    for (double x : s.xs)
      if (!std::isfinite(x)) fail(errc::unbounded_support, "non-finite breakpoint");
    for (double y : s.ys) {
      if (!std::isfinite(y)) fail(errc::unbounded_support, "non-finite density value");
      if (y < 0.0) fail(errc::bad_config, "negative density value");
    }
    for (std::size_t i = 0; i + 1 < s.xs.size(); ++i)
      if (!(s.xs[i] < s.xs[i + 1])) fail(errc::overlapping_segments, "breakpoints not increasing");
  }

  std::sort(segments.begin(), segments.end(),
            [](const Segment& a, const Segment& b) { return a.xs.front() < b.xs.front(); });
  for (std::size_t i = 0; i + 1 < segments.size(); ++i)
    if (segments[i].xs.back() > segments[i + 1].xs.front())
      fail(errc::overlapping_segments, "segments overlap");

  std::vector<Atom> sorted_atoms = atoms;
  std::sort(sorted_atoms.begin(), sorted_atoms.end(),
            [](const Atom& a, const Atom& b) { return a.x < b.x; });
  for (std::size_t i = 0; i + 1 < sorted_atoms.size(); ++i)
    if (sorted_atoms[i].x == sorted_atoms[i + 1].x)
      fail(errc::bad_config, "duplicate atom position");

  double am = 0.0;
  for (const auto& a : sorted_atoms) am += a.m;
  double dm = 0.0;
  for (const auto& s : segments) dm += s.mass();

  if (renormalize) {
    const double want = 1.0 - am;
    if (want < -kMassTol) fail(errc::mass_not_one, "atom masses alone exceed 1");
    if (dm > 0.0) {
      const double scale = want / dm;
      for (auto& s : segments)
        for (auto& y : s.ys) y *= scale;
      dm = want;
    }
  }

  if (std::abs(am + dm - 1.0) > kMassTol)
    fail(errc::mass_not_one, "total mass differs from 1");

  const bool no_density = dm <= kMassTol;
  if (no_density && sorted_atoms.size() == 1)
    fail(errc::dirac_mass, "measure is a single Dirac mass");
  if (sorted_atoms.empty() && no_density) fail(errc::mass_not_one, "empty measure");

  return MeasureSpec(std::move(sorted_atoms), std::move(segments));
}

double MeasureSpec::atom_mass() const {
  double m = 0.0;
  for (const auto& a : atoms_) m += a.m;
  return m;
}

double MeasureSpec::density_mass() const {
  double m = 0.0;
  for (const auto& s : segments_) m += s.mass();
  return m;
}

double MeasureSpec::moment(int k) const {
  if (k < 0) fail(errc::bad_config, "moment order must be >= 0");
  double m = 0.0;
  for (const auto& a : atoms_) m += a.m * ipow_int(a.x, k);
  // On [x0,x1] with p(s) = y0 + b(s-x0):
  //   int s^k p(s) ds = a (x1^{k+1}-x0^{k+1})/(k+1) + b (x1^{k+2}-x0^{k+2})/(k+2),
  // with a = y0 - b x0.
  for (const auto& s : segments_) {
    for (std::size_t i = 0; i + 1 < s.xs.size(); ++i) {
      const double x0 = s.xs[i], x1 = s.xs[i + 1];
      const double b = (s.ys[i + 1] - s.ys[i]) / (x1 - x0);
      const double a = s.ys[i] - b * x0;
      m += a * (ipow_int(x1, k + 1) - ipow_int(x0, k + 1)) / (k + 1) +
           b * (ipow_int(x1, k + 2) - ipow_int(x0, k + 2)) / (k + 2);
    }
  }
  return m;
}

double MeasureSpec::variance() const {
  const double m1 = moment(1);
  return moment(2) - m1 * m1;
}

}  // namespace freeconv
