#include <doctest.h>

#include <cmath>
#include <random>

#include "freeconv/errors.hpp"
#include "freeconv/geometry.hpp"
#include "freeconv/laws.hpp"

#include "test_oracles.hpp"

using freeconv::boundary_graph;
using freeconv::f_t;
using freeconv::TimeParam;
using freeconv::v_plus;

namespace {

const auto& bernoulli() {
  static const auto spec = freeconv::law_to_spec(freeconv::parse_law("bernoulli"));
  return spec;
}

const auto& semicircle_fine() {
  static const auto spec = freeconv::law_to_spec(freeconv::parse_law("semicircle"), 8001);
  return spec;
}

}  // namespace

TEST_CASE("TimeParam rejects t <= 1") {
  CHECK_THROWS_AS(TimeParam(1.0), freeconv::Error);
  CHECK_THROWS_AS(TimeParam(0.5), freeconv::Error);
  CHECK(TimeParam(1.5).tau() == doctest::Approx(2.0));
}

TEST_CASE("f_t at the semicircle center matches (t-1)/sqrt(t)") {
  CHECK(f_t(semicircle_fine(), TimeParam(4.0), 0.0) ==
        doctest::Approx(1.5).epsilon(1e-9));
  CHECK(f_t(semicircle_fine(), TimeParam(2.0), 0.0) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
  // Points with finite g below the threshold give zero.
  CHECK(f_t(semicircle_fine(), TimeParam(1.01), 5.0) == 0.0);
}

TEST_CASE("f_t for Bernoulli is the circle sqrt(t-1-x^2)") {
  // rho = delta_0 here, so h(x,y) = 1/(x^2+y^2) and the root is exact.
  const TimeParam t(1.5);
  for (double x : {0.0, 0.2, 0.5, 0.7}) {
    const double want = std::sqrt(0.5 - x * x);
    CHECK(f_t(bernoulli(), t, x) == doctest::Approx(want).epsilon(1e-10));
  }
  CHECK(f_t(bernoulli(), t, 0.8) == 0.0);
}

TEST_CASE("v_plus for the semicircle is one interval with known edges") {
  for (double tv : {2.0, 4.0}) {
    const auto v = v_plus(semicircle_fine(), TimeParam(tv));
    REQUIRE(v.size() == 1);
    const double edge = oracles::semicircle_v_edge(tv);
    CHECK(v.intervals()[0].lo == doctest::Approx(-edge).epsilon(1e-6));
    CHECK(v.intervals()[0].hi == doctest::Approx(edge).epsilon(1e-6));
    CHECK(v.intervals()[0].lo < -2.0);
    CHECK(v.intervals()[0].hi > 2.0);
  }
}

TEST_CASE("v_plus for Bernoulli is a single symmetric component") {
  // g(x) = 1/x^2 against 1/(t-1): the level set is (-sqrt(t-1), sqrt(t-1)),
  // one component centered at the rho atom, not at the atoms of mu.
  const auto v = v_plus(bernoulli(), TimeParam(1.5));
  REQUIRE(v.size() == 1);
  const double edge = std::sqrt(0.5);
  CHECK(v.intervals()[0].lo == doctest::Approx(-edge).epsilon(1e-8));
  CHECK(v.intervals()[0].hi == doctest::Approx(edge).epsilon(1e-8));
}

TEST_CASE("v_plus grows with t and stays in the scan range") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> td(1.05, 4.0);
  for (const auto& [name, spec] : oracles::corpus()) {
    CAPTURE(name);
    for (int i = 0; i < 10; ++i) {
      double r = td(rng), t = td(rng);
      if (r > t) std::swap(r, t);
      if (t - r < 1e-3) continue;
      CHECK(v_plus(spec, TimeParam(r)).subset_of(v_plus(spec, TimeParam(t)), 1e-6));
    }
    const auto [lo, hi] = spec.hull();
    const double margin = 1.0 + spec.diameter();
    for (double tv : {1.1, 2.5, 4.0}) {
      const auto v = v_plus(spec, TimeParam(tv));
      REQUIRE(!v.empty());
      CHECK(v.min() >= lo - margin);
      CHECK(v.max() <= hi + margin);
    }
  }
}

TEST_CASE("f_t is monotone in t at fixed x") {
  std::mt19937_64 rng(19);
  for (const auto& [name, spec] : oracles::corpus()) {
    CAPTURE(name);
    const auto [lo, hi] = spec.hull();
    std::uniform_real_distribution<double> xd(lo - 1.0, hi + 1.0);
    std::uniform_real_distribution<double> td(1.05, 4.0);
    for (int i = 0; i < 50; ++i) {
      double r = td(rng), t = td(rng);
      if (r > t) std::swap(r, t);
      const double x = xd(rng);
      CHECK(f_t(spec, TimeParam(r), x) <= f_t(spec, TimeParam(t), x) + 1e-12);
    }
  }
}

TEST_CASE("boundary_graph: endpoints at zero, interior positive, root residual") {
  const TimeParam t(4.0);
  const auto v = v_plus(semicircle_fine(), t);
  REQUIRE(v.size() == 1);
  const auto graph = boundary_graph(semicircle_fine(), t, v.intervals()[0]);
  REQUIRE(graph.samples.size() == 257);
  CHECK(graph.samples.front().second == 0.0);
  CHECK(graph.samples.back().second == 0.0);
  double max_resid = 0.0;
  for (std::size_t i = 1; i + 1 < graph.samples.size(); ++i) {
    const auto [x, f] = graph.samples[i];
    CHECK(f > 0.0);
    if (f > 1e-6)
      max_resid = std::max(max_resid,
                           std::abs(freeconv::nevanlinna_h(semicircle_fine(), x, f) - t.tau()));
  }
  CHECK(max_resid < 1e-9);
  // Center sample sits at height (t-1)/sqrt(t).
  const auto mid = graph.samples[graph.samples.size() / 2];
  CHECK(mid.second == doctest::Approx(1.5).epsilon(1e-8));
}

TEST_CASE("boundary graphs move continuously in t") {
  auto graph_points = [&](double tv) {
    const TimeParam t(tv);
    const auto v = v_plus(semicircle_fine(), t, 1024);
    REQUIRE(v.size() == 1);
    return boundary_graph(semicircle_fine(), t, v.intervals()[0], 129).samples;
  };
  const auto g20 = graph_points(2.0);
  const double near = oracles::hausdorff_points(g20, graph_points(2.01));
  const double far = oracles::hausdorff_points(g20, graph_points(2.1));
  CHECK(near < far);
  CHECK(near < 0.02);
}

TEST_CASE("g is convex where finite") {
  const double h = 1e-2;
  for (const auto& [name, spec] : oracles::corpus()) {
    CAPTURE(name);
    const auto [lo, hi] = spec.hull();
    for (double off : {0.5, 1.0, 2.0}) {
      for (double x : {hi + off + h, lo - off - h}) {
        const double dd = freeconv::g_value(spec, x - h) - 2.0 * freeconv::g_value(spec, x) +
                          freeconv::g_value(spec, x + h);
        CHECK(dd > 0.0);
      }
    }
  }
}
