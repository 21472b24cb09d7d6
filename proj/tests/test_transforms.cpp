#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "freeconv/errors.hpp"
#include "freeconv/laws.hpp"
#include "freeconv/transforms.hpp"

#include "test_oracles.hpp"

using cplx = std::complex<double>;
using freeconv::cauchy;
using freeconv::Error;
using freeconv::errc;
using freeconv::f_transform;
using freeconv::g_value;
using freeconv::nevanlinna_h;
using freeconv::UpperPoint;

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

TEST_CASE("Bernoulli transforms at z = i") {
  const cplx g = cauchy(bernoulli(), UpperPoint{0.0, 1.0});
  CHECK(std::abs(g - cplx{0.0, -0.5}) < 1e-15);
  const cplx f = f_transform(bernoulli(), UpperPoint{0.0, 1.0});
  CHECK(std::abs(f - cplx{0.0, 2.0}) < 1e-15);
  CHECK(nevanlinna_h(bernoulli(), 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("semicircle transforms at z = i match the closed form") {
  const cplx z{0.0, 1.0};
  const cplx g = cauchy(semicircle_fine(), z);
  CHECK(std::abs(g - oracles::semicircle_g(z)) < 1e-6);
  CHECK(std::abs(g - cplx{0.0, (1.0 - std::sqrt(5.0)) / 2.0}) < 1e-6);
  const cplx f = f_transform(semicircle_fine(), z);
  CHECK(std::abs(f - cplx{0.0, (1.0 + std::sqrt(5.0)) / 2.0}) < 1e-6);
  CHECK(nevanlinna_h(semicircle_fine(), 0.0, 1.0) ==
        doctest::Approx((std::sqrt(5.0) - 1.0) / 2.0).epsilon(1e-6));
}

TEST_CASE("z G(z) -> 1 at infinity") {
  for (const auto& [name, spec] : oracles::corpus()) {
    CAPTURE(name);
    const cplx z{0.0, 1e6};
    CHECK(std::abs(z * cauchy(spec, z) - 1.0) < 1e-5);
  }
}

TEST_CASE("closed-form segment integration matches adaptive quadrature") {
  // Constant density on [0,1].
  const auto uniform = freeconv::MeasureSpec::validated({}, {{{0.0, 1.0}, {1.0, 1.0}}});
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> xd(-3.0, 4.0);
  std::uniform_real_distribution<double> logy(std::log(1e-6), std::log(10.0));
  for (int i = 0; i < 100; ++i) {
    const cplx z{xd(rng), std::exp(logy(rng))};
    const cplx exact = cauchy(uniform, z);
    const cplx quad = oracles::cauchy_quadrature(uniform, z);
    CHECK(std::abs(exact - quad) / std::abs(quad) < 1e-8);
  }

  // A two-piece sloped density plus an atom.
  const auto mix = oracles::mixed_a();
  for (int i = 0; i < 100; ++i) {
    const cplx z{xd(rng), std::exp(logy(rng))};
    const cplx exact = cauchy(mix, z);
    const cplx quad = oracles::cauchy_quadrature(mix, z);
    CHECK(std::abs(exact - quad) / std::abs(quad) < 1e-8);
  }
}

TEST_CASE("half-plane inequalities on random samples") {
  std::mt19937_64 rng(23);
  for (const auto& [name, spec] : oracles::corpus()) {
    CAPTURE(name);
    const auto [lo, hi] = spec.hull();
    std::uniform_real_distribution<double> xd(lo - 2.0, hi + 2.0);
    std::uniform_real_distribution<double> logy(std::log(1e-3), std::log(10.0));
    for (int i = 0; i < 1000; ++i) {
      const double x = xd(rng), y = std::exp(logy(rng));
      const cplx g = cauchy(spec, cplx{x, y});
      CHECK(g.imag() < 0.0);
      const cplx f = 1.0 / g;
      CHECK(f.imag() >= y);  // strict Nevanlinna gap for non-Dirac measures
      const double h = nevanlinna_h(spec, x, y);
      CHECK(h >= 0.0);
      CHECK(h > nevanlinna_h(spec, x, 2.0 * y));
    }
  }
}

TEST_CASE("nevanlinna_h against Im F/y - 1 at moderate heights") {
  // The stable path must agree with the direct complex evaluation wherever
  // the latter is trustworthy.
  std::mt19937_64 rng(31);
  for (const auto& [name, spec] : oracles::corpus()) {
    CAPTURE(name);
    const auto [lo, hi] = spec.hull();
    std::uniform_real_distribution<double> xd(lo - 1.0, hi + 1.0);
    std::uniform_real_distribution<double> yd(0.05, 5.0);
    for (int i = 0; i < 200; ++i) {
      const double x = xd(rng), y = yd(rng);
      const cplx f = f_transform(spec, cplx{x, y});
      CHECK(nevanlinna_h(spec, x, y) == doctest::Approx(f.imag() / y - 1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("g_value: divergence, finite values, decay") {
  // Inside the support g diverges.
  CHECK(std::isinf(g_value(semicircle_fine(), 0.0)));
  CHECK(std::isinf(g_value(bernoulli(), 0.0)));  // rho atom at the F pole

  // In the gap the value matches the closed form and is y-floor stable.
  const double g3 = g_value(semicircle_fine(), 3.0);
  CHECK(g3 == doctest::Approx(oracles::semicircle_gap_g(3.0)).epsilon(1e-5));
  const double a = nevanlinna_h(semicircle_fine(), 3.0, 1e-6);
  const double b = nevanlinna_h(semicircle_fine(), 3.0, 1e-7);
  CHECK(std::abs(a - b) / std::abs(b) < 1e-5);

  // Decay far away.
  for (const auto& [name, spec] : oracles::corpus()) {
    CAPTURE(name);
    const auto [lo, hi] = spec.hull();
    CHECK(g_value(spec, hi + 1e3) < 1e-4);
    CHECK(g_value(spec, lo - 1e3) < 1e-4);
  }
}

TEST_CASE("boundary-axis guards") {
  CHECK_THROWS_AS((void)cauchy(bernoulli(), UpperPoint{1.0, 0.0}), Error);
  // G of the Bernoulli measure vanishes at the origin on the axis.
  try {
    (void)f_transform(bernoulli(), UpperPoint{0.0, 0.0});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::zero_cauchy);
  }
  // Off-atom boundary evaluation works and is real in the outer gap.
  const cplx g = cauchy(bernoulli(), UpperPoint{3.0, 0.0});
  CHECK(g.imag() == 0.0);
  CHECK(g.real() == doctest::Approx(3.0 / 8.0).epsilon(1e-14));  // x/(x^2-1)
}
