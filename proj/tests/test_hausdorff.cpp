#include <doctest.h>

#include <cmath>
#include <random>

#include "freeconv/errors.hpp"
#include "freeconv/hausdorff.hpp"
#include "freeconv/laws.hpp"

#include "test_oracles.hpp"

using freeconv::continuity_scan;
using freeconv::hausdorff;
using freeconv::IntervalUnion;

TEST_CASE("hausdorff on hand-checked pairs") {
  const auto a = IntervalUnion::single(0.0, 1.0);
  CHECK(hausdorff(a, a) == 0.0);
  CHECK(hausdorff(a, IntervalUnion::single(2.0, 3.0)) == 2.0);

  // Peak at the gap midpoint 2.
  IntervalUnion b = IntervalUnion::single(0.0, 1.0);
  b.add(3.0, 4.0);
  const auto full = IntervalUnion::single(0.0, 4.0);
  CHECK(hausdorff(full, b) == 1.0);
  CHECK(oracles::hausdorff_brute(full, b).d == doctest::Approx(1.0).epsilon(1e-4));

  CHECK_THROWS_AS((void)hausdorff(a, IntervalUnion()), freeconv::Error);
}

TEST_CASE("hausdorff agrees with the dense-sampling oracle") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 100; ++i) {
    const auto a = oracles::random_union(rng);
    const auto b = oracles::random_union(rng);
    const double exact = hausdorff(a, b);
    const auto brute = oracles::hausdorff_brute(a, b);
    CHECK(std::abs(exact - brute.d) <= 2.0 * brute.spacing);
    CHECK(exact >= brute.d - 1e-12);  // sampling can only underestimate
  }
}

TEST_CASE("hausdorff is symmetric and satisfies the triangle inequality") {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 100; ++i) {
    const auto a = oracles::random_union(rng);
    const auto b = oracles::random_union(rng);
    const auto c = oracles::random_union(rng);
    CHECK(hausdorff(a, b) == hausdorff(b, a));
    CHECK(hausdorff(a, c) <= hausdorff(a, b) + hausdorff(b, c) + 1e-12);
    CHECK(hausdorff(a, a) == 0.0);
  }
}

TEST_CASE("semicircle scan: adjacent distances follow 2|sqrt(t)-sqrt(r)|") {
  const auto spec = freeconv::law_to_spec(freeconv::parse_law("semicircle"));
  const auto table = continuity_scan(spec, 1.5, 2.5, 11, 0);
  REQUIRE(table.rows.size() == 10);
  CHECK(table.max_dh() < 0.35);
  for (const auto& row : table.rows) {
    const double want = 2.0 * std::abs(std::sqrt(row.t) - std::sqrt(row.r));
    CHECK(row.d_h == doctest::Approx(want).epsilon(0.02));
  }
}

TEST_CASE("Bernoulli scan across the atom-vanishing time stays smooth") {
  const auto spec = freeconv::law_to_spec(freeconv::parse_law("bernoulli"));
  const auto table = continuity_scan(spec, 1.7, 2.3, 25, 3);
  CHECK(table.max_dh() <= 2.0 * table.median_dh());
  bool near_two_flagged = false;
  for (const auto& row : table.rows)
    if (row.r <= 2.0 && 2.0 <= row.t) near_two_flagged = row.atom_vanishing_nearby;
  CHECK(near_two_flagged);
}

TEST_CASE("scan rejects bad ranges") {
  const auto spec = freeconv::law_to_spec(freeconv::parse_law("bernoulli"));
  CHECK_THROWS_AS((void)continuity_scan(spec, 1.5, 2.5, 1, 0), freeconv::Error);
  CHECK_THROWS_AS((void)continuity_scan(spec, 0.5, 2.5, 5, 0), freeconv::Error);
  CHECK_THROWS_AS((void)continuity_scan(spec, 2.5, 1.5, 5, 0), freeconv::Error);
}

TEST_CASE("halving the grid step shrinks the max adjacent distance") {
  const auto spec = freeconv::law_to_spec(freeconv::parse_law("bernoulli"));
  double prev = std::numeric_limits<double>::infinity();
  for (int steps : {6, 11, 21}) {
    const auto table = continuity_scan(spec, 1.4, 2.4, steps, 0);
    CHECK(table.max_dh() < prev);
    prev = table.max_dh();
  }
}
