#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"

#include "coxbound/classify.hpp"
#include "coxbound/sweep.hpp"

using namespace coxbound;

namespace {

CoxeterSystem random_complete(std::mt19937_64& rng, int n, int lo, int hi) {
  CoxeterSystem sys = CoxeterSystem::complete(n, Order::finite(lo));
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) sys.set_order(s, t, Order::finite(lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1))));
  return sys;
}

}  // namespace

TEST_CASE("boundary verdicts for the standard examples") {
  const auto circle = classify_boundary(parse_system("gens a b c; a b 3; b c 3; a c 3"));
  CHECK(circle.boundary.kind == BoundaryKind::Circle);
  CHECK(circle.boundary.detail == "euclidean");
  CHECK(circle.n == 3);

  const auto carpet = classify_boundary(CoxeterSystem::complete(4, Order::finite(3)));
  CHECK(carpet.boundary.kind == BoundaryKind::SierpinskiCarpet);

  const auto menger = classify_boundary(CoxeterSystem::complete(5, Order::finite(3)));
  CHECK(menger.boundary.kind == BoundaryKind::MengerCurve);
  CHECK_FALSE(menger.hyperbolic);
  CHECK(menger.serre_fa);
  CHECK(menger.isolated_flats);

  const auto finite = classify_boundary(parse_system("gens r s t; r s 2; s t 3; r t 5"));
  CHECK(finite.boundary.kind == BoundaryKind::EmptyOrFinite);

  const auto open = classify_boundary(parse_system("gens a b c; a b 3; b c 3; a c inf"));
  CHECK(open.boundary.kind == BoundaryKind::OutOfScope);
  CHECK(open.boundary.detail == "nerve_not_complete");

  const auto simplex = classify_boundary(parse_system("gens a b c d; a b 2; b c 3; a c 3; a d 3; b d 3; c d 3"));
  CHECK(simplex.boundary.kind == BoundaryKind::OutOfScope);
  CHECK(simplex.boundary.detail == "nerve_has_2_simplex");

  const auto hyperbolic = classify_boundary(parse_system("gens a b c; a b 2; b c 3; a c 7"));
  CHECK(hyperbolic.boundary.kind == BoundaryKind::Circle);
  CHECK(hyperbolic.boundary.detail == "hyperbolic");
  CHECK(hyperbolic.hyperbolic);
}

TEST_CASE("small ranks") {
  CHECK(classify_boundary(parse_system("gens s")).boundary.kind == BoundaryKind::EmptyOrFinite);
  CHECK(classify_boundary(parse_system("gens s t; s t 5")).boundary.kind == BoundaryKind::EmptyOrFinite);
  const auto inf = classify_boundary(parse_system("gens s t"));
  CHECK(inf.boundary.kind == BoundaryKind::OutOfScope);
  CHECK(inf.boundary.detail == "nerve_not_complete");
}

TEST_CASE("serre criterion") {
  CHECK(serre_fa_criterion(CoxeterSystem::complete(5, Order::finite(3))));
  CHECK_FALSE(serre_fa_criterion(parse_system("gens a b c; a b 3; b c 3")));
  CHECK(serre_fa_criterion(parse_system("gens s")));
}

TEST_CASE("euclidean triple scan") {
  CHECK(euclidean_triple_scan(CoxeterSystem::complete(5, Order::finite(3))).size() == 10);
  CHECK(euclidean_triple_scan(CoxeterSystem::complete(5, Order::finite(4))).empty());
  const auto sys = parse_system("gens a b c d; a b 2; b c 4; a c 4; a d 5; b d 5; c d 5");
  const auto triples = euclidean_triple_scan(sys);
  REQUIRE(triples.size() == 1);
  CHECK(triples[0] == GeneratorSet::of({0, 1, 2}));
}

TEST_CASE("isolated flats mechanism") {
  const auto k4 = CoxeterSystem::complete(4, Order::finite(3));
  CHECK(isolated_flats_check(k4, build_nerve(k4)));

  auto k5 = CoxeterSystem::complete(5, Order::finite(3));
  k5.set_order(1, 3, Order::finite(6));
  CHECK(isolated_flats_check(k5, build_nerve(k5)));

  const auto t244 = parse_system("gens a b c; a b 2; b c 4; a c 4");
  CHECK(isolated_flats_check(t244, build_nerve(t244)));

  const auto open = parse_system("gens a b c; a b 3; b c 3");
  CHECK_THROWS_AS(isolated_flats_check(open, build_nerve(open)), std::invalid_argument);

  // Two right angles at one vertex force a finite triple, so a hand-made nerve is needed.
  const auto bad = parse_system("gens a b c; a b 2; a c 2; b c 7");
  NerveComplex fake = build_nerve(bad, 1);
  fake.dimension = 1;
  CHECK_THROWS_AS(isolated_flats_check(bad, fake), std::logic_error);
}

TEST_CASE("report invariants and label independence") {
  std::mt19937_64 rng(19);
  for (int n = 3; n <= 6; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto sys = random_complete(rng, n, 3, 8);
      const auto r = classify_boundary(sys);
      const BoundaryKind expected =
          n == 3 ? BoundaryKind::Circle : n == 4 ? BoundaryKind::SierpinskiCarpet : BoundaryKind::MengerCurve;
      CHECK(r.boundary.kind == expected);
      CHECK(r.hyperbolic == r.euclidean_triples.empty());
      CHECK(r.has_euclidean_triple == !r.euclidean_triples.empty());
      CHECK(r.triangle_census.size() == static_cast<std::size_t>(n * (n - 1) * (n - 2) / 6));
      CHECK(r.isolated_flats);
      CHECK_FALSE(r.citations.empty());
      if (n == 3) {
        const Rational sum = make_rational(1, sys.order(0, 1).value()) + make_rational(1, sys.order(1, 2).value()) +
                             make_rational(1, sys.order(0, 2).value());
        CHECK((r.boundary.detail == "euclidean") == (sum == 1));
      }
    }
  }
}

TEST_CASE("verdict is invariant under relabeling") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    CoxeterSystem sys = CoxeterSystem::complete(n, Order::finite(2));
    for (int s = 0; s < n; ++s)
      for (int t = s + 1; t < n; ++t) {
        const int r = static_cast<int>(rng() % 7);
        sys.set_order(s, t, r == 6 ? Order::infinite() : Order::finite(r + 2));
      }
    std::vector<Gen> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto a = classify_boundary(sys);
    const auto b = classify_boundary(sys.permuted(perm));
    CHECK(a.boundary.kind == b.boundary.kind);
    CHECK(a.boundary.detail == b.boundary.detail);
    CHECK(a.hyperbolic == b.hyperbolic);
    CHECK(a.euclidean_triples.size() == b.euclidean_triples.size());
  }
}

TEST_CASE("sweep generation and rows") {
  const auto rows = run_sweep({3, 6, {3}, 5000, 1});
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].boundary == BoundaryKind::Circle);
  CHECK(rows[1].boundary == BoundaryKind::SierpinskiCarpet);
  CHECK(rows[2].boundary == BoundaryKind::MengerCurve);
  CHECK(rows[3].boundary == BoundaryKind::MengerCurve);
  CHECK(rows[0].signature == "3-3-3");

  const auto mixed = run_sweep({4, 4, {3, 4}, 5000, 1});
  CHECK(mixed.size() == 64);
  for (const auto& r : mixed) CHECK(r.boundary == BoundaryKind::SierpinskiCarpet);
  CHECK(mixed.front().signature == "3-3-3-3-3-3");
  CHECK(mixed.back().signature == "4-4-4-4-4-4");

  const auto t = run_sweep({3, 3, {2, 4}, 5000, 1});
  const auto it = std::find_if(t.begin(), t.end(), [](const SweepRow& r) { return r.signature == "2-4-4"; });
  REQUIRE(it != t.end());
  CHECK(it->boundary == BoundaryKind::Circle);
  CHECK(it->boundary_note == "euclidean");

  const auto sampled = sweep_systems({6, 6, {3, 4, 5, 6}, 300, 9});
  CHECK(sampled.size() == 300);
  CHECK(signature_of(sampled[0]) == "3-3-3-3-3-3-3-3-3-3-3-3-3-3-3");
  const auto again = sweep_systems({6, 6, {3, 4, 5, 6}, 300, 9});
  CHECK(sampled == again);

  CHECK_THROWS_AS(sweep_systems({2, 4, {3}, 10, 1}), std::invalid_argument);
  CHECK_THROWS_AS(sweep_systems({3, 4, {1}, 10, 1}), std::invalid_argument);
  CHECK_THROWS_AS(sweep_systems({3, 9, {3}, 10, 1}), std::invalid_argument);
}
