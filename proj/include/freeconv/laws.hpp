#pragma once

#include <string>
#include <vector>

#include "freeconv/interval.hpp"
#include "freeconv/measure.hpp"

namespace freeconv {

enum class LawKind { semicircle, bernoulli, free_poisson, arcsine };

// Named reference law. param is the variance (semicircle), rate (free
// Poisson) or radius (arcsine); unused for bernoulli.
struct LawSpec {
  LawKind kind = LawKind::semicircle;
  double param = 1.0;
};

// Parses "semicircle", "semicircle:2", "bernoulli", "free_poisson:0.5",
// "arcsine", "arcsine:2".
LawSpec parse_law(const std::string& name);
std::string law_name(const LawSpec& law);

// Discretizes the law as a MeasureSpec: exact atoms plus the density sampled
// on grid_n breakpoints (clustered toward the support edges), renormalized to
// total mass 1.
MeasureSpec law_to_spec(const LawSpec& law, int grid_n = 2001);

struct OracleAtom {
  double x = 0.0;
  double m = 0.0;
};

// Closed-form support of the law's semigroup at time t, independent of the
// transform pipeline. Atoms are always exact; ac_known is false where the ac
// edges are intentionally not emitted in closed form.
struct OracleSupport {
  IntervalUnion ac;
  bool ac_known = true;
  std::vector<OracleAtom> atoms;
};

// semicircle(v):    ac [-2 sqrt(vt), 2 sqrt(vt)]
// free_poisson(l):  ac [(1-sqrt(lt))^2, (1+sqrt(lt))^2], atom (0, 1-lt) if lt < 1
// bernoulli:        atoms (+-t, 1-t/2) for t < 2; ac [-2, 2] exactly at t = 2;
//                   ac edges for other t > 1 are not provided
// arcsine(r):       ac [-r, r] at t = 1 only
OracleSupport oracle_support(const LawSpec& law, double t);

// ac plus atom positions; throws UnsupportedLawTime when ac is not known.
IntervalUnion oracle_full_support(const OracleSupport& s);

}  // namespace freeconv
