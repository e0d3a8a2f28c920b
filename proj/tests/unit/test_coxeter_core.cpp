#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "coxbound/coxeter_system.hpp"
#include "coxbound/words.hpp"

using namespace coxbound;

namespace {

CoxeterSystem triangle(int a, int b, int c) {
  CoxeterSystem sys({"r", "s", "t"});
  sys.set_order(0, 1, Order::finite(a));
  sys.set_order(1, 2, Order::finite(b));
  sys.set_order(0, 2, Order::finite(c));
  return sys;
}

Order order_of(int m) { return m == 0 ? Order::infinite() : Order::finite(m); }

}  // namespace

TEST_CASE("parse_system reads generators, labels and defaults") {
  const auto sys = parse_system("gens a b c; a b 3; b c 3; a c 3");
  CHECK(sys.rank() == 3);
  CHECK(sys.generators() == std::vector<std::string>{"a", "b", "c"});
  for (int s = 0; s < 3; ++s)
    for (int t = 0; t < 3; ++t) CHECK(sys.order(s, t) == (s == t ? Order::finite(1) : Order::finite(3)));

  const auto partial = parse_system("# comment\ngens x y z\nx y 5   # trailing\n");
  CHECK(partial.order(0, 1) == Order::finite(5));
  CHECK(partial.order(1, 2).is_infinite());
  CHECK(partial.order(0, 2).is_infinite());

  const auto with_inf = parse_system("gens a b\na b inf\n");
  CHECK(with_inf.order(0, 1).is_infinite());
}

TEST_CASE("parse_system rejects malformed presentations with line numbers") {
  CHECK_THROWS_AS(parse_system("gens a b; a b 1"), ParseError);
  CHECK_THROWS_AS(parse_system("gens a a"), ParseError);
  CHECK_THROWS_AS(parse_system("gens a b; a c 3"), ParseError);
  CHECK_THROWS_AS(parse_system("gens a b; a b 3; b a 4"), ParseError);
  CHECK_THROWS_AS(parse_system("a b 3"), ParseError);
  CHECK_THROWS_AS(parse_system("gens a b; a b x"), ParseError);
  CHECK_THROWS_AS(parse_system("gens a b; a a 3"), ParseError);
  try {
    parse_system("gens a b\n\na b 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_NOTHROW(parse_system("gens a b; a b 3; b a 3"));
}

TEST_CASE("presentation round trip and the five-generator all-3 system") {
  const auto k5 = CoxeterSystem::complete(5, Order::finite(3));
  CHECK(parse_system(k5.to_presentation()) == k5);
  CHECK(k5.rank() == 5);
  for (int s = 0; s < 5; ++s)
    for (int t = s + 1; t < 5; ++t) CHECK(k5.order(s, t) == Order::finite(3));
}

TEST_CASE("triangle_type compares the reciprocal sum with 1 exactly") {
  CHECK(triangle_type(triangle(3, 3, 3), GeneratorSet::first(3)).kind == TriangleKind::Euclidean);
  const auto h = triangle_type(triangle(2, 3, 7), GeneratorSet::first(3));
  CHECK(h.kind == TriangleKind::Hyperbolic);
  CHECK(h.reciprocal_sum == make_rational(41, 42));
  const auto sph = triangle_type(triangle(2, 3, 5), GeneratorSet::first(3));
  CHECK(sph.kind == TriangleKind::Spherical);
  CHECK(sph.reciprocal_sum == make_rational(31, 30));
  CHECK(triangle_type(triangle(2, 4, 4), GeneratorSet::first(3)).kind == TriangleKind::Euclidean);
  CHECK(triangle_type(triangle(2, 3, 6), GeneratorSet::first(3)).kind == TriangleKind::Euclidean);

  auto inf = parse_system("gens a b c; a b 2; b c 2");
  const auto t = triangle_type(inf, inf.all());
  CHECK(t.reciprocal_sum == 1);
  CHECK(t.kind == TriangleKind::Euclidean);

  CHECK_THROWS_AS(triangle_type(triangle(3, 3, 3), GeneratorSet::of({0, 1})), std::invalid_argument);
}

TEST_CASE("irreducible components follow the diagram edges") {
  auto sys = parse_system("gens s t; s t 2");
  auto comps = irreducible_components(sys, sys.all());
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == GeneratorSet::of({0}));
  CHECK(comps[1] == GeneratorSet::of({1}));

  CHECK(irreducible_components(CoxeterSystem::complete(5, Order::finite(3)), GeneratorSet::first(5)).size() == 1);
  CHECK(irreducible_components(triangle(2, 4, 4), GeneratorSet::first(3)).size() == 1);

  auto mixed = parse_system("gens a b c d; a b 3; c d inf; a c 2; a d 2; b c 2; b d 2");
  comps = irreducible_components(mixed, mixed.all());
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == GeneratorSet::of({0, 1}));
  CHECK(comps[1] == GeneratorSet::of({2, 3}));
}

TEST_CASE("is_finite_type names finite diagrams and orders") {
  auto dihedral = parse_system("gens s t; s t 7");
  auto v = is_finite_type(dihedral, dihedral.all());
  CHECK(v.finite);
  CHECK(v.order == 14);
  REQUIRE(v.witness.size() == 1);
  CHECK(v.witness[0] == "I2(7)");

  v = is_finite_type(triangle(2, 3, 5), GeneratorSet::first(3));
  CHECK(v.finite);
  CHECK(v.order == 120);
  CHECK(v.witness == std::vector<std::string>{"H3"});

  v = is_finite_type(triangle(3, 3, 3), GeneratorSet::first(3));
  CHECK_FALSE(v.finite);
  CHECK_FALSE(v.witness.empty());

  CHECK(is_finite_type(triangle(2, 3, 3), GeneratorSet::first(3)).order == 24);
  CHECK(is_finite_type(triangle(2, 3, 4), GeneratorSet::first(3)).order == 48);
  CHECK(is_finite_type(triangle(2, 2, 5), GeneratorSet::first(3)).order == 20);
  CHECK(is_finite_type(triangle(2, 2, 2), GeneratorSet::first(3)).order == 8);
  CHECK_FALSE(is_finite_type(parse_system("gens s t"), GeneratorSet::first(2)).finite);
  CHECK(is_finite_type(parse_system("gens s"), GeneratorSet::first(1)).order == 2);
  CHECK(is_finite_type(triangle(3, 3, 3), GeneratorSet()).order == 1);
}

TEST_CASE("is_finite_type recognizes larger classical and exceptional diagrams") {
  auto path = [](const std::vector<int>& labels, std::vector<std::tuple<int, int, int>> extra = {}) {
    const int n = static_cast<int>(labels.size()) + 1;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
    CoxeterSystem sys(names);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) sys.set_order(i, j, Order::finite(2));
    for (int i = 0; i + 1 < n; ++i) sys.set_order(i, i + 1, Order::finite(labels[static_cast<std::size_t>(i)]));
    for (auto [a, b, m] : extra) sys.set_order(a, b, Order::finite(m));
    return sys;
  };
  auto check = [](const CoxeterSystem& sys, const char* name, std::uint64_t order) {
    const auto v = is_finite_type(sys, sys.all());
    CHECK(v.finite);
    CHECK(v.order == order);
    REQUIRE(v.witness.size() == 1);
    CHECK(v.witness[0] == name);
  };
  check(path({3, 3, 3}), "A4", 120);
  check(path({4, 3, 3}), "B4", 384);
  check(path({3, 4, 3}), "F4", 1152);
  check(path({5, 3, 3}), "H4", 14400);
  // D4: centre 1 joined to 0, 2, 3.
  check(path({3, 3, 2}, {{1, 3, 3}}), "D4", 192);
  // E6: chain 0-1-2-3-4 with 5 attached to 2.
  check(path({3, 3, 3, 3, 2}, {{2, 5, 3}}), "E6", 51840);
  CHECK_FALSE(is_finite_type(path({3, 3, 3}, {{0, 3, 3}}), GeneratorSet::first(4)).finite);  // cycle
  CHECK_FALSE(is_finite_type(path({4, 3, 4}), GeneratorSet::first(4)).finite);              // affine C3
  CHECK_FALSE(is_finite_type(path({3, 4, 3, 3}), GeneratorSet::first(5)).finite);           // affine F4
}

TEST_CASE("finite verdicts agree with an independent matrix-group closure") {
  for (int a = 2; a <= 6; ++a)
    for (int b = 2; b <= 6; ++b)
      for (int c = 2; c <= 6; ++c) {
        const auto sys = triangle(a, b, c);
        const auto v = is_finite_type(sys, sys.all());
        const std::size_t order = oracle::MatrixRep(sys).group_order(200);
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(c);
        CHECK(v.finite == (order != 0));
        if (v.finite) CHECK(v.order == order);
      }
}

TEST_CASE("finite type is downward closed and invariant under relabeling") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    CoxeterSystem sys = CoxeterSystem::complete(n, Order::finite(2));
    for (int s = 0; s < n; ++s)
      for (int t = s + 1; t < n; ++t) {
        const int r = static_cast<int>(rng() % 7);
        sys.set_order(s, t, order_of(r == 6 ? 0 : r + 2));
      }
    std::vector<Gen> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto relabeled = sys.permuted(perm);
    for (std::uint64_t bits = 0; bits < (1u << n); ++bits) {
      const GeneratorSet t(bits);
      const auto v = is_finite_type(sys, t);
      if (v.finite) {
        for (Gen g : t.members()) {
          GeneratorSet smaller = t;
          smaller.erase(g);
          CHECK(is_finite_type(sys, smaller).finite);
        }
      }
      // Same subset after relabeling: new index i holds old generator perm[i].
      GeneratorSet image;
      for (int i = 0; i < n; ++i)
        if (t.contains(perm[static_cast<std::size_t>(i)])) image.insert(i);
      const auto w = is_finite_type(relabeled, image);
      CHECK(w.finite == v.finite);
      CHECK(w.order == v.order);
      if (t.size() == 3) {
        CHECK(triangle_type(relabeled, image).kind == triangle_type(sys, t).kind);
        // On a triangle diagram finiteness is exactly the spherical case.
        bool all_finite_labels = true;
        for (Gen a : t.members())
          for (Gen b : t.members())
            if (a < b && sys.order(a, b).is_infinite()) all_finite_labels = false;
        if (all_finite_labels) CHECK(v.finite == (triangle_type(sys, t).kind == TriangleKind::Spherical));
      }
    }
  }
}

TEST_CASE("geometric representation: involutions, dihedral orders, affine form") {
  auto one = parse_system("gens s");
  auto rho1 = geometric_representation(one);
  REQUIRE(rho1.size() == 1);
  CHECK(rho1[0].rows() == 1);
  CHECK(rho1[0](0, 0) == doctest::Approx(-1.0));

  for (int m = 2; m <= 12; ++m) {
    CoxeterSystem sys({"s", "t"});
    sys.set_order(0, 1, Order::finite(m));
    const auto rho = geometric_representation(sys);
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(2, 2);
    CHECK((rho[0] * rho[0] - id).norm() < 1e-12);
    const Eigen::MatrixXd r = rho[0] * rho[1];
    Eigen::MatrixXd p = id;
    for (int k = 1; k <= m; ++k) {
      p = p * r;
      if (k < m) CHECK((p - id).norm() > 1e-6);
    }
    CHECK((p - id).norm() < 1e-9);
  }

  const auto sys = triangle(3, 3, 3);
  const auto rho = geometric_representation(sys);
  const Eigen::MatrixXd b = cosine_form(sys);
  for (const auto& r : rho) CHECK((r.transpose() * b * r - b).norm() < 1e-12);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b);
  CHECK(std::abs(es.eigenvalues()(0)) < 1e-12);
  CHECK(es.eigenvalues()(1) > 1e-6);

  // Matches the test-side construction.
  const oracle::MatrixRep ref(triangle(2, 3, 7));
  const auto lib = geometric_representation(triangle(2, 3, 7));
  for (std::size_t i = 0; i < 3; ++i) CHECK((ref.gens[i] - lib[i]).norm() < 1e-12);
}

TEST_CASE("finite verdicts agree with coset enumeration on small subsets") {
  for (int a : {2, 3, 4, 5, 0})
    for (int b : {2, 3, 4, 5, 0})
      for (int c : {2, 3, 4, 5, 0}) {
        CoxeterSystem sys({"r", "s", "t"});
        sys.set_order(0, 1, order_of(a));
        sys.set_order(1, 2, order_of(b));
        sys.set_order(0, 2, order_of(c));
        const auto v = is_finite_type(sys, sys.all());
        const auto table = todd_coxeter_enumerate(sys, sys.all(), 5000);
        CHECK(v.finite == (table.status == EnumerationStatus::Complete));
        if (v.finite) CHECK(table.order == v.order);
      }
}
