#include "freeconv/transforms.hpp"

#include <cmath>
#include <limits>

#include "freeconv/errors.hpp"

namespace freeconv {

namespace {

using cplx = std::complex<double>;

// log(1+w) for complex w without cancellation when |w| is small. Real part
// uses |1+w|^2 = 1 + 2 Re w + |w|^2 through the real log1p; imaginary part
// is exact via atan2 (signed zeros give the boundary-from-above limit).
cplx clog1p(cplx w) {
  const double re = 0.5 * std::log1p(2.0 * w.real() + std::norm(w));
  const double im = std::atan2(w.imag(), 1.0 + w.real());
  return {re, im};
}

// arg((z-x0)/(z-x1)) / y, stable for y -> 0. Uses
//   arg((z-x0) conj(z-x1)) = atan2(-y (x1-x0), (x-x0)(x-x1) + y^2).
double arg_ratio_over_y(double x, double y, double x0, double x1) {
  const double dx = x1 - x0;
  const double d = (x - x0) * (x - x1) + y * y;
  if (d > 0.0) {
    const double u = y * dx / d;
    const double ratio = std::abs(u) < 1e-8 ? 1.0 : std::atan(u) / u;
    return -(dx / d) * ratio;
  }
  return std::atan2(-y * dx, d) / y;
}

// ln|z-x0| - ln|z-x1| via real log1p.
double log_abs_ratio(double x, double y, double x0, double x1) {
  const double num = (x1 - x0) * (2.0 * x - x0 - x1);
  const double den = (x - x1) * (x - x1) + y * y;
  return 0.5 * std::log1p(num / den);
}

}  // namespace

std::complex<double> cauchy(const MeasureSpec& spec, UpperPoint z) {
  if (z.y < 0.0) fail(errc::bad_config, "cauchy requires Im z >= 0");
  if (z.y == 0.0)
    for (const auto& a : spec.atoms())
      if (z.x == a.x) fail(errc::pole_on_axis, "Cauchy transform pole at an atom");
  return cauchy(spec, z.z());
}

std::complex<double> cauchy(const MeasureSpec& spec, std::complex<double> z) {
  cplx g{0.0, 0.0};
  for (const auto& a : spec.atoms()) g += a.m / (z - a.x);
  // Per linear piece [x0,x1] with p(s) = y0 + b(s-x0):
  //   int p(s)/(z-s) ds = (y0 + b(z-x0)) [log(z-x0) - log(z-x1)] - b (x1-x0).
  for (const auto& s : spec.segments()) {
    for (std::size_t i = 0; i + 1 < s.xs.size(); ++i) {
      const double x0 = s.xs[i], x1 = s.xs[i + 1];
      const double dx = x1 - x0;
      const double b = (s.ys[i + 1] - s.ys[i]) / dx;
      const cplx lead = s.ys[i] + b * (z - x0);
      const cplx l = clog1p(dx / (z - x1));
      g += lead * l - b * dx;
    }
  }
  return g;
}

std::complex<double> cauchy_derivative(const MeasureSpec& spec, std::complex<double> z) {
  cplx gp{0.0, 0.0};
  for (const auto& a : spec.atoms()) {
    const cplx d = z - a.x;
    gp -= a.m / (d * d);
  }
  for (const auto& s : spec.segments()) {
    for (std::size_t i = 0; i + 1 < s.xs.size(); ++i) {
      const double x0 = s.xs[i], x1 = s.xs[i + 1];
      const double dx = x1 - x0;
      const double b = (s.ys[i + 1] - s.ys[i]) / dx;
      const cplx lead = s.ys[i] + b * (z - x0);
      const cplx l = clog1p(dx / (z - x1));
      gp += b * l - lead * dx / ((z - x0) * (z - x1));
    }
  }
  return gp;
}

std::complex<double> f_transform(const MeasureSpec& spec, UpperPoint z) {
  const cplx g = cauchy(spec, z);
  if (std::abs(g) < 1e-280) fail(errc::zero_cauchy, "Cauchy transform vanishes");
  return 1.0 / g;
}

std::complex<double> f_transform(const MeasureSpec& spec, std::complex<double> z) {
  const cplx g = cauchy(spec, z);
  if (std::abs(g) < 1e-280) fail(errc::zero_cauchy, "Cauchy transform vanishes");
  return 1.0 / g;
}

namespace detail {

CauchyParts cauchy_parts(const MeasureSpec& spec, double x, double y) {
  CauchyParts out;
  for (const auto& a : spec.atoms()) {
    const double dx = x - a.x;
    const double q = dx * dx + y * y;
    out.re_g += a.m * dx / q;
    out.p += a.m / q;
  }
  // Re and Im/y of the piece integral (y0 + b(z-x0)) L - b dx with
  // L = log(z-x0) - log(z-x1): writing L = RL + i IL,
  //   Re = (y0 + b(x-x0)) RL - b y IL - b dx
  //   Im/y = (y0 + b(x-x0)) (IL/y) + b RL.
  for (const auto& s : spec.segments()) {
    for (std::size_t i = 0; i + 1 < s.xs.size(); ++i) {
      const double x0 = s.xs[i], x1 = s.xs[i + 1];
      const double dx = x1 - x0;
      const double b = (s.ys[i + 1] - s.ys[i]) / dx;
      const double lead = s.ys[i] + b * (x - x0);
      const double rl = log_abs_ratio(x, y, x0, x1);
      const double il_over_y = arg_ratio_over_y(x, y, x0, x1);
      out.re_g += lead * rl - b * y * (y * il_over_y) - b * dx;
      out.p -= lead * il_over_y + b * rl;
    }
  }
  return out;
}

}  // namespace detail

double nevanlinna_h(const MeasureSpec& spec, double x, double y) {
  if (!(y > 0.0)) fail(errc::bad_config, "nevanlinna_h requires y > 0");
  const auto parts = detail::cauchy_parts(spec, x, y);
  // Im F / y = P / |G|^2 with |G|^2 = (Re G)^2 + y^2 P^2.
  const double g2 = parts.re_g * parts.re_g + (y * parts.p) * (y * parts.p);
  return parts.p / g2 - 1.0;
}

double g_value(const MeasureSpec& spec, double x, double y_floor, double cap) {
  if (!(y_floor > 0.0)) fail(errc::bad_config, "g_value requires y_floor > 0");
  const double h = nevanlinna_h(spec, x, y_floor);
  if (h > cap) return std::numeric_limits<double>::infinity();
  return h;
}

}  // namespace freeconv
