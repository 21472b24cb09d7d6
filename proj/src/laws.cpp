#include "freeconv/laws.hpp"

#include <cmath>
#include <functional>

#include "freeconv/errors.hpp"

namespace freeconv {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Breakpoints on [lo, hi] clustered toward both edges (Chebyshev map), so
// square-root density edges are resolved by the piecewise-linear interpolant.
std::vector<double> edge_clustered_grid(double lo, double hi, int n) {
  std::vector<double> xs(n);
  const double mid = 0.5 * (lo + hi), rad = 0.5 * (hi - lo);
  for (int k = 0; k < n; ++k) xs[k] = mid - rad * std::cos(kPi * k / (n - 1));
  xs.front() = lo;
  xs.back() = hi;
  return xs;
}

Segment sampled_segment(double lo, double hi, int n, const std::function<double(double)>& f) {
  Segment s;
  s.xs = edge_clustered_grid(lo, hi, n);
  s.ys.resize(s.xs.size());
  for (std::size_t i = 0; i < s.xs.size(); ++i) s.ys[i] = std::max(0.0, f(s.xs[i]));
  return s;
}

}  // namespace

LawSpec parse_law(const std::string& name) {
  std::string base = name;
  double param = std::numeric_limits<double>::quiet_NaN();
  if (auto pos = name.find(':'); pos != std::string::npos) {
    base = name.substr(0, pos);
    try {
      param = std::stod(name.substr(pos + 1));
    } catch (const std::exception&) {
      fail(errc::bad_config, "bad law parameter in '" + name + "'");
    }
  }
  LawSpec law;
  if (base == "semicircle") {
    law.kind = LawKind::semicircle;
    law.param = std::isnan(param) ? 1.0 : param;
  } else if (base == "bernoulli") {
    law.kind = LawKind::bernoulli;
    law.param = 0.0;
  } else if (base == "free_poisson") {
    law.kind = LawKind::free_poisson;
    if (std::isnan(param)) fail(errc::bad_config, "free_poisson needs a rate, e.g. free_poisson:0.5");
    law.param = param;
  } else if (base == "arcsine") {
    law.kind = LawKind::arcsine;
    law.param = std::isnan(param) ? 2.0 : param;
  } else {
    fail(errc::bad_config, "unknown law '" + name + "'");
  }
  if (law.kind != LawKind::bernoulli && !(law.param > 0.0))
    fail(errc::bad_config, "law parameter must be positive");
  return law;
}

std::string law_name(const LawSpec& law) {
  switch (law.kind) {
    case LawKind::semicircle: return "semicircle:" + std::to_string(law.param);
    case LawKind::bernoulli: return "bernoulli";
    case LawKind::free_poisson: return "free_poisson:" + std::to_string(law.param);
    case LawKind::arcsine: return "arcsine:" + std::to_string(law.param);
  }
  return "?";
}

MeasureSpec law_to_spec(const LawSpec& law, int grid_n) {
  if (grid_n < 64) fail(errc::bad_config, "law grid_n must be >= 64");
  switch (law.kind) {
    case LawKind::semicircle: {
      const double v = law.param;
      const double r = 2.0 * std::sqrt(v);
      auto f = [v, r](double x) {
        const double q = r * r - x * x;
        return q <= 0.0 ? 0.0 : std::sqrt(q) / (2.0 * kPi * v);
      };
      return MeasureSpec::validated({}, {sampled_segment(-r, r, grid_n, f)}, true);
    }
    case LawKind::bernoulli:
      return MeasureSpec::validated({{-1.0, 0.5}, {1.0, 0.5}}, {});
    case LawKind::free_poisson: {
      const double l = law.param;
      const double a = (1.0 - std::sqrt(l)) * (1.0 - std::sqrt(l));
      const double b = (1.0 + std::sqrt(l)) * (1.0 + std::sqrt(l));
      auto f = [a, b](double x) {
        const double q = (b - x) * (x - a);
        return q <= 0.0 || x <= 0.0 ? 0.0 : std::sqrt(q) / (2.0 * kPi * x);
      };
      std::vector<Atom> atoms;
      if (l < 1.0) atoms.push_back({0.0, 1.0 - l});
      return MeasureSpec::validated(std::move(atoms), {sampled_segment(a, b, grid_n, f)}, true);
    }
    case LawKind::arcsine: {
      const double r = law.param;
      // The density diverges at +-r; clip a sliver and renormalize.
      const double clip = r * (1.0 - 1e-6);
      auto f = [r](double x) { return 1.0 / (kPi * std::sqrt(r * r - x * x)); };
      return MeasureSpec::validated({}, {sampled_segment(-clip, clip, grid_n, f)}, true);
    }
  }
  fail(errc::bad_config, "unreachable law kind");
}

OracleSupport oracle_support(const LawSpec& law, double t) {
  if (!(t >= 1.0)) fail(errc::bad_config, "oracle_support requires t >= 1");
  OracleSupport out;
  switch (law.kind) {
    case LawKind::semicircle: {
      const double e = 2.0 * std::sqrt(law.param * t);
      out.ac = IntervalUnion::single(-e, e);
      return out;
    }
    case LawKind::free_poisson: {
      const double lt = law.param * t;
      const double rt = std::sqrt(lt);
      out.ac = IntervalUnion::single((1.0 - rt) * (1.0 - rt), (1.0 + rt) * (1.0 + rt));
      if (lt < 1.0) out.atoms.push_back({0.0, 1.0 - lt});
      return out;
    }
    case LawKind::bernoulli: {
      if (t < 2.0) {
        out.atoms.push_back({-t, 1.0 - t / 2.0});
        out.atoms.push_back({t, 1.0 - t / 2.0});
        out.ac_known = (t == 1.0);  // purely atomic at t = 1
      } else if (t == 2.0) {
        out.ac = IntervalUnion::single(-2.0, 2.0);  // arcsine law
      } else {
        out.ac_known = false;
      }
      return out;
    }
    case LawKind::arcsine: {
      if (t == 1.0)
        out.ac = IntervalUnion::single(-law.param, law.param);
      else
        out.ac_known = false;
      return out;
    }
  }
  fail(errc::bad_config, "unreachable law kind");
}

IntervalUnion oracle_full_support(const OracleSupport& s) {
  if (!s.ac_known)
    fail(errc::unsupported_law_time, "ac edges are not emitted in closed form at this t");
  IntervalUnion u = s.ac;
  for (const auto& a : s.atoms) u.add(a.x, a.x);
  return u;
}

}  // namespace freeconv
