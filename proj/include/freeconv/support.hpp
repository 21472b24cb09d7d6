#pragma once

#include <complex>
#include <string>
#include <vector>

#include "freeconv/geometry.hpp"
#include "freeconv/interval.hpp"
#include "freeconv/measure.hpp"

namespace freeconv {

// Atom of mu_t: position t*alpha, mass t*mu({alpha}) - (t-1) when positive.
struct AtomRecord {
  double x = 0.0;
  double m = 0.0;
};

struct DensitySample {
  double u = 0.0;  // location psi_t(x)
  double p = 0.0;  // density of mu_t at u
};

// Density samples per component, u increasing. Locations where F_{mu_t}
// vanishes (the finitely many singular points) are recorded separately and
// never interpolated over.
struct DensityProfile {
  std::vector<DensitySample> samples;
  std::vector<double> singular_points;
};

struct MassMoments {
  double mass = 0.0;
  double m1 = 0.0;
  double m2 = 0.0;
};

struct SupportSnapshot {
  double t = 0.0;
  IntervalUnion ac;
  std::vector<AtomRecord> atoms;
  DensityProfile density;
  std::vector<std::string> flags;
  MassMoments ac_moments;  // quadrature over the density profile

  double total_mass() const;
  double mean() const;
  double variance() const;
};

struct SnapshotOptions {
  int samples_n = 257;
  int grid_n = 2048;
  double y_floor = kYFloor;
  bool check_component_stability = true;
};

// H_t(z) = t z - (t-1) F(z).
std::complex<double> h_t_map(const MeasureSpec& spec, TimeParam t, std::complex<double> z);
std::complex<double> h_t_map(const MeasureSpec& spec, TimeParam t, UpperPoint z);

// psi_t(x) = Re H_t(x + i f_t(x)); the imaginary part must vanish within
// 1e-6 (PsiNotReal otherwise). f_t(x) = 0 falls back to y = y_floor.
double psi_t(const MeasureSpec& spec, TimeParam t, double x, double y_floor = kYFloor);

// Closure of psi_t(V_t+): per component the [min, max] of psi over the
// boundary-graph samples, endpoints Richardson-extrapolated from y_floor.
IntervalUnion ac_support(const MeasureSpec& spec, TimeParam t, const SnapshotOptions& opt = {});

// Density of mu_t at psi_t(x) via the subordination identity:
// -(1/pi) Im[1/F(x + i f_t(x))]. Throws ZeroF near vanishing F.
double density_at(const MeasureSpec& spec, TimeParam t, double x, double y_floor = kYFloor);

std::vector<AtomRecord> atoms_at(const MeasureSpec& spec, TimeParam t);

// Times 1/(1 - m) at which an atom of mass m < 1 vanishes, sorted.
std::vector<double> atom_vanishing_times(const MeasureSpec& spec);

// Full description of mu_t: ac support, atoms, density profile, flags
// (vanishing atoms and their containment in the ac closure, psi
// monotonicity, component-count stability, singular density points).
SupportSnapshot snapshot(const MeasureSpec& spec, TimeParam t, const SnapshotOptions& opt = {});

IntervalUnion full_support(const SupportSnapshot& snap);

}  // namespace freeconv
