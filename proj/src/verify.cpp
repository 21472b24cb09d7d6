#include "freeconv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>

#include "freeconv/errors.hpp"
#include "freeconv/geometry.hpp"
#include "freeconv/hausdorff.hpp"
#include "freeconv/support.hpp"
#include "freeconv/transforms.hpp"

namespace freeconv {

namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

struct Suite {
  const MeasureSpec& spec;
  std::mt19937_64 rng;
  std::vector<PropertyResult> results;

  double hull_lo, hull_hi;

  explicit Suite(const MeasureSpec& s, std::uint64_t seed) : spec(s), rng(seed) {
    std::tie(hull_lo, hull_hi) = spec.hull();
  }

  void record(const std::string& name, bool pass, const std::string& detail) {
    results.push_back({name, pass, detail});
  }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }

  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  void basics() {
    record("moment0_is_one", std::abs(spec.moment(0) - 1.0) <= 1e-10,
           "m0 = " + fmt("%.12g", spec.moment(0)));

    bool hull_ok = true;
    for (const auto& a : spec.atoms())
      hull_ok = hull_ok && a.x >= hull_lo && a.x <= hull_hi;
    for (const auto& s : spec.segments())
      for (double x : s.xs) hull_ok = hull_ok && x >= hull_lo && x <= hull_hi;
    record("hull_contains_features", hull_ok, "");

    const std::complex<double> z{0.0, 1e6};
    const double dev = std::abs(z * cauchy(spec, z) - 1.0);
    record("zg_to_one_at_infinity", dev < 1e-5, "|zG-1| = " + fmt("%.3e", dev));

    const double gl = g_value(spec, hull_lo - 1e3), gr = g_value(spec, hull_hi + 1e3);
    record("g_decays_far_away", gl < 1e-4 && gr < 1e-4,
           "g = " + fmt("%.3e", gl) + ", " + fmt("%.3e", gr));
  }

  void transform_inequalities() {
    bool im_g = true, im_f = true, h_pos = true, h_dec = true;
    double worst = 1.0;
    for (int i = 0; i < 1000; ++i) {
      const double x = uniform(hull_lo - 2.0, hull_hi + 2.0);
      const double y = log_uniform(1e-3, 10.0);
      const auto g = cauchy(spec, std::complex<double>{x, y});
      im_g = im_g && g.imag() < 0.0;
      const auto f = 1.0 / g;
      im_f = im_f && f.imag() >= y;
      const double h1 = nevanlinna_h(spec, x, y);
      h_pos = h_pos && h1 >= 0.0;
      const double y2 = y * uniform(1.1, 4.0);
      const double h2 = nevanlinna_h(spec, x, y2);
      h_dec = h_dec && h1 > h2;
      worst = std::min(worst, h1 - h2);
    }
    record("im_cauchy_negative", im_g, "");
    record("im_f_at_least_y", im_f, "");
    record("h_nonnegative", h_pos, "");
    record("h_strictly_decreasing_in_y", h_dec, "min drop = " + fmt("%.3e", worst));
  }

  void geometry_monotonicity() {
    bool subset = true;
    for (int i = 0; i < 10; ++i) {
      double r = uniform(1.05, 4.0), t = uniform(1.05, 4.0);
      if (r > t) std::swap(r, t);
      if (t - r < 1e-3) t += 1e-2;
      const auto vr = v_plus(spec, TimeParam(r));
      const auto vt = v_plus(spec, TimeParam(t));
      subset = subset && vr.subset_of(vt, 1e-6);
    }
    record("v_plus_monotone_in_t", subset, "");

    bool bounded = true;
    const double margin = 1.0 + spec.diameter();
    for (double t : {1.1, 2.0, 3.0, 4.0}) {
      const auto v = v_plus(spec, TimeParam(t));
      if (!v.empty())
        bounded = bounded && v.min() >= hull_lo - margin && v.max() <= hull_hi + margin;
    }
    record("v_plus_uniformly_bounded", bounded, "margin = " + fmt("%.6g", margin));

    bool f_mono = true;
    for (int i = 0; i < 100; ++i) {
      double r = uniform(1.05, 4.0), t = uniform(1.05, 4.0);
      if (r > t) std::swap(r, t);
      const double x = uniform(hull_lo - 1.0, hull_hi + 1.0);
      f_mono = f_mono && f_t(spec, TimeParam(r), x) <= f_t(spec, TimeParam(t), x) + 1e-12;
    }
    record("f_t_monotone_in_t", f_mono, "");

    bool root_ok = true;
    double worst = 0.0;
    const TimeParam t(2.5);
    for (const auto& comp : v_plus(spec, t).intervals()) {
      for (int i = 0; i < 50; ++i) {
        const double x = uniform(comp.lo, comp.hi);
        const double f = f_t(spec, t, x);
        if (f <= 1e-6) continue;
        const double res = std::abs(nevanlinna_h(spec, x, f) - t.tau());
        worst = std::max(worst, res);
        root_ok = root_ok && res <= 1e-9;
      }
    }
    record("f_t_root_residual", root_ok, "max residual = " + fmt("%.3e", worst));

    bool convex = true;
    const double h = 1e-2;
    for (double off : {0.5, 1.0, 1.5, 2.0, 3.0}) {
      for (double x : {hull_hi + off + h, hull_lo - off - h}) {
        const double dd = g_value(spec, x - h) - 2.0 * g_value(spec, x) + g_value(spec, x + h);
        convex = convex && dd > 0.0;
      }
    }
    record("g_convex_where_finite", convex, "");
  }

  void lipschitz() {
    bool ok = true;
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const TimeParam t(uniform(1.1, 4.0));
      const auto range = v_scan_range(spec, t);
      auto sample = [&]() {
        const double x = uniform(range.first, range.second);
        const double y = f_t(spec, t, x) + log_uniform(1e-3, 3.0);
        return std::complex<double>{x, y};
      };
      const auto z1 = sample(), z2 = sample();
      if (std::abs(z1 - z2) < 1e-9) continue;
      const double ratio =
          std::abs(h_t_map(spec, t, z1) - h_t_map(spec, t, z2)) / std::abs(z1 - z2);
      worst = std::max(worst, ratio);
      ok = ok && ratio <= 2.0 + 1e-9;
    }
    record("h_t_lipschitz_2", ok, "max |dH|/|dz| = " + fmt("%.12g", worst));
  }

  void semigroup_conservation() {
    const double mean1 = spec.mean();
    const double var1 = spec.variance();
    bool mass_ok = true, mean_ok = true, var_ok = true, psi_ok = true, vanish_ok = true;
    double worst_mass = 0.0;
    for (double t : {1.25, 1.5, 2.0, 3.0}) {
      SupportSnapshot snap;
      try {
        snap = snapshot(spec, TimeParam(t));
      } catch (const Error&) {
        psi_ok = false;
        continue;
      }
      worst_mass = std::max(worst_mass, std::abs(snap.total_mass() - 1.0));
      mass_ok = mass_ok && std::abs(snap.total_mass() - 1.0) <= 1e-4;
      mean_ok = mean_ok && std::abs(snap.mean() - t * mean1) <= 1e-3;
      var_ok = var_ok && std::abs(snap.variance() - t * var1) <= 1e-3;
      for (const auto& flag : snap.flags)
        if (flag.rfind("vanishing_atom_outside_ac", 0) == 0) vanish_ok = false;

      double formula_sum = 0.0;
      for (const auto& a : spec.atoms()) formula_sum += std::max(t * a.m - (t - 1.0), 0.0);
      double snap_sum = 0.0;
      for (const auto& a : snap.atoms) snap_sum += a.m;
      if (std::abs(formula_sum - snap_sum) > 1e-14) mass_ok = false;
    }
    record("psi_imag_residual_within_tol", psi_ok, "");
    record("mass_conservation", mass_ok, "max |mass-1| = " + fmt("%.3e", worst_mass));
    record("mean_scales_by_t", mean_ok, "");
    record("variance_scales_by_t", var_ok, "");
    record("vanishing_atoms_in_ac_closure", vanish_ok, "");

    // Vanishing times inside the working range get their own snapshot
    // (atom_vanishing_times is deduplicated).
    for (double tv : atom_vanishing_times(spec)) {
      if (tv <= 1.0 + 1e-9 || tv > 4.0) continue;
      bool contained = true;
      try {
        const auto snap = snapshot(spec, TimeParam(tv));
        for (const auto& flag : snap.flags)
          if (flag.rfind("vanishing_atom_outside_ac", 0) == 0) contained = false;
      } catch (const Error&) {
        contained = false;
      }
      record("vanishing_atom_containment_t=" + fmt("%.6g", tv), contained, "");
    }
  }

  void hausdorff_basics() {
    const auto s1 = full_support(snapshot(spec, TimeParam(1.5)));
    const auto s2 = full_support(snapshot(spec, TimeParam(2.5)));
    const bool self_zero = hausdorff(s1, s1) == 0.0;
    const bool sym = hausdorff(s1, s2) == hausdorff(s2, s1);
    record("hausdorff_self_distance_zero", self_zero, "");
    record("hausdorff_symmetric", sym, "");
  }
};

}  // namespace

std::vector<PropertyResult> run_property_suite(const MeasureSpec& spec, std::uint64_t seed) {
  Suite suite(spec, seed);
  suite.basics();
  suite.transform_inequalities();
  suite.geometry_monotonicity();
  suite.lipschitz();
  suite.semigroup_conservation();
  suite.hausdorff_basics();
  return suite.results;
}

bool all_pass(const std::vector<PropertyResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const PropertyResult& r) { return r.pass; });
}

}  // namespace freeconv
