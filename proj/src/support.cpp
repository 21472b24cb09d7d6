#include "freeconv/support.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "freeconv/errors.hpp"

namespace freeconv {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;
constexpr double kPsiImagTol = 1e-6;
constexpr double kFZeroTol = 1e-6;   // |F| below this counts as a vanishing F
constexpr double kVanishTol = 1e-12; // |t m - (t-1)| below this is a vanishing time
constexpr double kContainTol = 1e-3;

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

struct CurveSample {
  double x = 0.0;
  double y = 0.0;     // max(f_t(x), y_floor)
  double u = 0.0;     // Re H_t
  double p = 0.0;     // density of mu_t at u
  double abs_f = 0.0; // |F(x+iy)|
  double psi_prime = 0.0;
  bool singular = false;
};

// One curve point evaluated through the y-stable Cauchy path.
CurveSample eval_curve(const MeasureSpec& spec, TimeParam t, double x, double y) {
  CurveSample s;
  s.x = x;
  s.y = y;
  const auto parts = detail::cauchy_parts(spec, x, y);
  const double im_g = -y * parts.p;
  const double g2 = parts.re_g * parts.re_g + im_g * im_g;
  s.abs_f = 1.0 / std::sqrt(g2);
  // Im F / y = P / |G|^2; Re F = Re G / |G|^2.
  const double re_f = parts.re_g / g2;
  const double im_f_over_y = parts.p / g2;
  s.u = t.t * x - (t.t - 1.0) * re_f;
  const double im_h = y * (t.t - (t.t - 1.0) * im_f_over_y);
  if (std::abs(im_h) > kPsiImagTol)
    fail(errc::psi_not_real, "Im H_t = " + fmt("%.3e", im_h) + " at x = " + fmt("%.6g", x));
  s.p = y * parts.p / kPi;  // = -(1/pi) Im G
  s.singular = s.abs_f < kFZeroTol;

  // psi'(x) = |H'|^2 / Re H' along the curve Im H_t = 0.
  const cplx z{x, y};
  const cplx g{parts.re_g, im_g};
  const cplx fp = -cauchy_derivative(spec, z) / (g * g);
  const cplx hp = t.t - (t.t - 1.0) * fp;
  if (hp.real() != 0.0) s.psi_prime = std::norm(hp) / hp.real();
  return s;
}

// Quadratic Richardson step for Re H_t(e + iy) whose leading error is O(y^2).
double psi_endpoint(const MeasureSpec& spec, TimeParam t, double e, double y_floor) {
  const double v1 = eval_curve(spec, t, e, y_floor).u;
  const double v2 = eval_curve(spec, t, e, 2.0 * y_floor).u;
  return (4.0 * v1 - v2) / 3.0;
}

struct ComponentData {
  std::vector<CurveSample> samples;  // along the edge-clustered grid
  MassMoments moments;
  bool monotone = true;
};

// Samples one component of V_t+ and integrates the density in the angular
// variable of the clustered grid: with x = mid - rad cos(theta),
//   mass = int p(u) du = int p psi' rad sin(theta) dtheta,
// which keeps the integrand bounded at square-root edges. A component edge
// where F vanishes (a just-vanished atom) makes p blow up like
// 1/sqrt(u - u_edge); that first cell is replaced by the analytic tail
// 2 p1 (u1 - u_edge).
ComponentData sample_component(const MeasureSpec& spec, TimeParam t, const BoundaryGraph& graph,
                               double y_floor) {
  ComponentData data;
  const int n = static_cast<int>(graph.samples.size());
  data.samples.reserve(n);
  for (int k = 0; k < n; ++k) {
    const auto [x, f] = graph.samples[k];
    data.samples.push_back(eval_curve(spec, t, x, std::max(f, y_floor)));
  }
  data.samples.front().u = psi_endpoint(spec, t, graph.component.lo, y_floor);
  data.samples.back().u = psi_endpoint(spec, t, graph.component.hi, y_floor);

  for (int k = 0; k + 1 < n; ++k)
    if (!(data.samples[k].u < data.samples[k + 1].u)) data.monotone = false;

  const double rad = 0.5 * (graph.component.hi - graph.component.lo);
  const double h = kPi / (n - 1);
  auto weight = [&](int k) {
    if (k == 0 || k == n - 1) return 0.0;  // regular edges: p -> 0 and sin -> 0
    const auto& s = data.samples[k];
    return s.p * s.psi_prime * rad * std::sin(h * k);
  };

  const bool lo_singular = data.samples.front().singular;
  const bool hi_singular = data.samples.back().singular;
  double mass = 0.0, m1 = 0.0, m2 = 0.0;
  for (int k = 0; k + 1 < n; ++k) {
    if ((k == 0 && lo_singular) || (k == n - 2 && hi_singular)) continue;
    const double wa = weight(k), wb = weight(k + 1);
    const double ua = data.samples[k].u, ub = data.samples[k + 1].u;
    mass += 0.5 * h * (wa + wb);
    m1 += 0.5 * h * (wa * ua + wb * ub);
    m2 += 0.5 * h * (wa * ua * ua + wb * ub * ub);
  }
  auto add_tail = [&](const CurveSample& edge, const CurveSample& first) {
    const double du = std::abs(first.u - edge.u);
    const double tail = 2.0 * first.p * du;  // int A/sqrt(u-ue) with A = p1 sqrt(du)
    const double us = edge.u, sgn = first.u >= edge.u ? 1.0 : -1.0;
    mass += tail;
    m1 += tail * (us + sgn * du / 3.0);
    m2 += tail * (us * us + sgn * 2.0 / 3.0 * us * du + du * du / 5.0);
  };
  if (lo_singular) add_tail(data.samples.front(), data.samples[1]);
  if (hi_singular) add_tail(data.samples.back(), data.samples[n - 2]);

  data.moments = {mass, m1, m2};
  return data;
}

}  // namespace

std::complex<double> h_t_map(const MeasureSpec& spec, TimeParam t, std::complex<double> z) {
  return t.t * z - (t.t - 1.0) * f_transform(spec, z);
}

std::complex<double> h_t_map(const MeasureSpec& spec, TimeParam t, UpperPoint z) {
  return h_t_map(spec, t, z.z());
}

double psi_t(const MeasureSpec& spec, TimeParam t, double x, double y_floor) {
  const double f = f_t(spec, t, x, y_floor);
  return eval_curve(spec, t, x, std::max(f, y_floor)).u;
}

IntervalUnion ac_support(const MeasureSpec& spec, TimeParam t, const SnapshotOptions& opt) {
  IntervalUnion out;
  for (const auto& comp : v_plus(spec, t, opt.grid_n, opt.y_floor).intervals()) {
    const auto graph = boundary_graph(spec, t, comp, opt.samples_n, opt.y_floor);
    const auto data = sample_component(spec, t, graph, opt.y_floor);
    double lo = data.samples.front().u, hi = lo;
    for (const auto& s : data.samples) {
      lo = std::min(lo, s.u);
      hi = std::max(hi, s.u);
    }
    out.add(lo, hi);
  }
  return out;
}

double density_at(const MeasureSpec& spec, TimeParam t, double x, double y_floor) {
  const double f = f_t(spec, t, x, y_floor);
  const auto s = eval_curve(spec, t, x, std::max(f, y_floor));
  if (s.singular)
    fail(errc::zero_f, "F_{mu_t} vanishes near psi_t(x) = " + fmt("%.6g", s.u));
  return s.p;
}

std::vector<AtomRecord> atoms_at(const MeasureSpec& spec, TimeParam t) {
  std::vector<AtomRecord> out;
  for (const auto& a : spec.atoms()) {
    const double m = t.t * a.m - (t.t - 1.0);
    if (m > kVanishTol) out.push_back({t.t * a.x, m});
  }
  return out;
}

std::vector<double> atom_vanishing_times(const MeasureSpec& spec) {
  std::vector<double> out;
  for (const auto& a : spec.atoms())
    if (a.m < 1.0) out.push_back(1.0 / (1.0 - a.m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SupportSnapshot snapshot(const MeasureSpec& spec, TimeParam t, const SnapshotOptions& opt) {
  SupportSnapshot snap;
  snap.t = t.t;
  snap.atoms = atoms_at(spec, t);

  const auto comps = v_plus(spec, t, opt.grid_n, opt.y_floor);
  if (opt.check_component_stability) {
    const auto refined = v_plus(spec, t, 2 * opt.grid_n, opt.y_floor);
    if (refined.size() != comps.size()) snap.flags.push_back("component_count_unstable");
  }

  int comp_idx = 0;
  for (const auto& comp : comps.intervals()) {
    const auto graph = boundary_graph(spec, t, comp, opt.samples_n, opt.y_floor);
    const auto data = sample_component(spec, t, graph, opt.y_floor);

    double lo = data.samples.front().u, hi = lo;
    for (const auto& s : data.samples) {
      lo = std::min(lo, s.u);
      hi = std::max(hi, s.u);
    }
    snap.ac.add(lo, hi);

    for (const auto& s : data.samples) {
      if (s.singular)
        snap.density.singular_points.push_back(s.u);
      else
        snap.density.samples.push_back({s.u, s.p});
    }
    if (!data.monotone)
      snap.flags.push_back("psi_non_monotone:component=" + std::to_string(comp_idx));
    snap.ac_moments.mass += data.moments.mass;
    snap.ac_moments.m1 += data.moments.m1;
    snap.ac_moments.m2 += data.moments.m2;
    ++comp_idx;
  }

  // An atom whose mass hits zero exactly at this t must sit in the closure
  // of the ac support.
  for (const auto& a : spec.atoms()) {
    if (std::abs(t.t * a.m - (t.t - 1.0)) <= kVanishTol) {
      const double pos = t.t * a.x;
      snap.flags.push_back("atom_vanishing:x=" + fmt("%.17g", pos));
      if (snap.ac.empty() || snap.ac.distance_to(pos) > kContainTol)
        snap.flags.push_back("vanishing_atom_outside_ac:x=" + fmt("%.17g", pos));
    }
  }
  return snap;
}

double SupportSnapshot::total_mass() const {
  double m = ac_moments.mass;
  for (const auto& a : atoms) m += a.m;
  return m;
}

double SupportSnapshot::mean() const {
  double m = ac_moments.m1;
  for (const auto& a : atoms) m += a.m * a.x;
  return m;
}

double SupportSnapshot::variance() const {
  double m2 = ac_moments.m2;
  for (const auto& a : atoms) m2 += a.m * a.x * a.x;
  const double mu = mean();
  return m2 - mu * mu;
}

IntervalUnion full_support(const SupportSnapshot& snap) {
  IntervalUnion u = snap.ac;
  for (const auto& a : snap.atoms) u.add(a.x, a.x);
  return u;
}

}  // namespace freeconv
