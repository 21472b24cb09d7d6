#pragma once

#include <complex>

#include "freeconv/measure.hpp"

namespace freeconv {

inline constexpr double kYFloor = 1e-9;
inline constexpr double kDivergenceCap = 1e12;

// Point of the closed upper half-plane. y = 0 is meaningful only where the
// boundary extension exists (off atoms; away from density breakpoints).
struct UpperPoint {
  double x = 0.0;
  double y = 0.0;

  std::complex<double> z() const { return {x, y}; }
};

// Cauchy transform G(z) = int 1/(z-s) dmu(s). Atom terms are exact; each
// linear density piece is integrated in closed form via the complex
// logarithm (principal branch, taken as log1p of the endpoint ratio so no
// branch cut is ever crossed for Im z >= 0).
std::complex<double> cauchy(const MeasureSpec& spec, UpperPoint z);
std::complex<double> cauchy(const MeasureSpec& spec, std::complex<double> z);

// dG/dz, same closed forms differentiated.
std::complex<double> cauchy_derivative(const MeasureSpec& spec, std::complex<double> z);

// F(z) = 1/G(z).
std::complex<double> f_transform(const MeasureSpec& spec, UpperPoint z);
std::complex<double> f_transform(const MeasureSpec& spec, std::complex<double> z);

// Im F(x+iy)/y - 1, evaluated without forming Im F/y directly: equals the
// Nevanlinna integrand functional int (1+s^2)/((x-s)^2+y^2) drho(s) >= 0 and
// is strictly decreasing in y. Stable down to y ~ 1e-12.
double nevanlinna_h(const MeasureSpec& spec, double x, double y);

// Monotone-in-y estimate of g(x) = lim_{y->0} nevanlinna_h(x, y). Returns
// +infinity when the value at y_floor exceeds `cap`.
double g_value(const MeasureSpec& spec, double x, double y_floor = kYFloor,
               double cap = kDivergenceCap);

namespace detail {

// Re G and P = -Im G / y (the Poisson-type part), computed with relative
// accuracy that does not degrade as y -> 0. Requires y > 0.
struct CauchyParts {
  double re_g = 0.0;
  double p = 0.0;  // = int dmu(s) / ((x-s)^2 + y^2)
};
CauchyParts cauchy_parts(const MeasureSpec& spec, double x, double y);

}  // namespace detail

}  // namespace freeconv
