#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

#include "coxbound/carpet.hpp"

using namespace coxbound;

namespace {

// Recursive definition: a cell survives iff its parent survives and it is not
// the middle child.
bool kept_recursive(std::int64_t x, std::int64_t y, int level) {
  if (level == 0) return true;
  if (x % 3 == 1 && y % 3 == 1) return false;
  return kept_recursive(x / 3, y / 3, level - 1);
}

bool open_overlap(const GridSquare& a, const GridSquare& b) {
  const RPoint al = a.lower_left(), ah = a.upper_right(), bl = b.lower_left(), bh = b.upper_right();
  return al.x < bh.x && bl.x < ah.x && al.y < bh.y && bl.y < ah.y;
}

bool in_closed(const RPoint& p, const GridSquare& sq) {
  const RPoint lo = sq.lower_left(), hi = sq.upper_right();
  return lo.x <= p.x && p.x <= hi.x && lo.y <= p.y && p.y <= hi.y;
}

// Marked point at the midpoint of a random level-k cell edge on the given peripheral square.
MarkedPoint random_marked(std::mt19937_64& rng, const PeripheralRef& p, int level) {
  std::int64_t cells = 1;
  for (int i = 0; i < level - (p.outer ? 0 : p.square.level); ++i) cells *= 3;
  const auto side = static_cast<long>(rng() % 4);
  const auto a = static_cast<long>(rng() % static_cast<std::uint64_t>(cells));
  Rational theta = (Rational(side) + Rational(2 * a + 1) / Rational(2 * cells)) / 4;
  theta.canonicalize();
  return {p, perimeter_point(p, theta)};
}

// Independent re-check with the test oracles: sampled points avoid the closed
// removed squares (except a hole leg's own endpoint) and legs only share the centre.
void oracle_check(const CarpetApprox& c, const std::vector<MarkedPoint>& marked, const CarpetStar& star) {
  REQUIRE(star.legs.size() == marked.size());
  for (std::size_t i = 0; i < star.legs.size(); ++i) {
    const auto& leg = star.legs[i];
    REQUIRE(leg.size() >= 2);
    CHECK(leg.front() == star.center);
    CHECK(leg.back() == marked[i].point);
    for (std::size_t k = 0; k + 1 < leg.size(); ++k) {
      for (int step = 0; step <= 16; ++step) {
        const Rational u(step, 16);
        const RPoint p{leg[k].x + u * (leg[k + 1].x - leg[k].x), leg[k].y + u * (leg[k + 1].y - leg[k].y)};
        const bool endpoint = k + 2 == leg.size() && step == 16;
        if (!endpoint) CHECK((p.x > 0 && p.x < 1 && p.y > 0 && p.y < 1));
        for (const auto& sq : c.removed) {
          if (endpoint && !marked[i].peripheral.outer && sq == marked[i].peripheral.square) continue;
          CHECK_FALSE(in_closed(p, sq));
        }
      }
    }
  }
  for (std::size_t i = 0; i < star.legs.size(); ++i)
    for (std::size_t j = i + 1; j < star.legs.size(); ++j)
      for (std::size_t a = 0; a + 1 < star.legs[i].size(); ++a)
        for (std::size_t b = 0; b + 1 < star.legs[j].size(); ++b) {
          const RPoint &p = star.legs[i][a], &q = star.legs[i][a + 1], &r = star.legs[j][b], &s = star.legs[j][b + 1];
          std::vector<RPoint> shared;
          if (auto x = oracle::crossing(p, q, r, s)) shared.push_back(*x);
          for (const auto& e : {p, q})
            if (oracle::on_segment(e, r, s)) shared.push_back(e);
          for (const auto& e : {r, s})
            if (oracle::on_segment(e, p, q)) shared.push_back(e);
          for (const auto& x : shared) CHECK((a == 0 && b == 0 && x == star.center));
        }
}

}  // namespace

TEST_CASE("counts of kept and removed squares") {
  std::size_t kept = 1, removed = 0;
  for (int level = 0; level <= 5; ++level) {
    const auto c = build_carpet_approx(level);
    CHECK(c.kept.size() == kept);
    CHECK(c.removed.size() == removed);
    CHECK(c.removed.size() == (kept - 1) / 7);
    Rational area = 0;
    for (const auto& sq : c.kept) area += sq.side() * sq.side();
    Rational expected = 1;
    for (int i = 0; i < level; ++i) expected *= Rational(8, 9);
    CHECK(area == expected);
    kept *= 8;
    removed = removed * 8 + 1;
  }
  CHECK_THROWS_AS(build_carpet_approx(-1), std::invalid_argument);
  CHECK_THROWS_AS(build_carpet_approx(kMaxCarpetLevel + 1), std::invalid_argument);
}

TEST_CASE("kept cells follow the recursive definition and miss every removed square") {
  for (int level = 0; level <= 3; ++level) {
    const auto c = build_carpet_approx(level);
    std::int64_t n = 1;
    for (int i = 0; i < level; ++i) n *= 3;
    std::size_t count = 0;
    for (std::int64_t y = 0; y < n; ++y)
      for (std::int64_t x = 0; x < n; ++x) {
        CHECK(is_kept_cell(x, y, level) == kept_recursive(x, y, level));
        count += kept_recursive(x, y, level);
      }
    CHECK(count == c.kept.size());
    for (const auto& k : c.kept) {
      CHECK(k.level == level);
      CHECK(kept_recursive(k.x, k.y, level));
      for (const auto& r : c.removed) CHECK_FALSE(open_overlap(k, r));
    }
    for (std::size_t i = 1; i < c.removed.size(); ++i) CHECK(c.removed[i - 1].level <= c.removed[i].level);
  }
}

TEST_CASE("self-similarity") {
  for (int level = 0; level <= 3; ++level) {
    const auto coarse = build_carpet_approx(level);
    const auto fine = build_carpet_approx(level + 1);
    std::int64_t n = 1;
    for (int i = 0; i < level; ++i) n *= 3;
    std::set<std::pair<std::int64_t, std::int64_t>> corner, base;
    for (const auto& sq : fine.kept)
      if (sq.x < n && sq.y < n) corner.insert({sq.x, sq.y});
    for (const auto& sq : coarse.kept) base.insert({sq.x, sq.y});
    CHECK(corner == base);
  }
}

TEST_CASE("removed squares above a diameter threshold") {
  for (int level = 2; level <= 6; ++level) CHECK(null_family_check(build_carpet_approx(level), Rational(1, 5)) == 1);
  const auto c3 = build_carpet_approx(3);
  CHECK(null_family_check(build_carpet_approx(0), Rational(1, 5)) == 0);
  CHECK(null_family_check(c3, Rational(1, 10)) == 9);
  CHECK(null_family_check(c3, Rational(1, 1000)) == c3.removed.size());
  CHECK_THROWS_AS(null_family_check(c3, Rational(0)), std::invalid_argument);
  CHECK(null_family_check(c3, Rational(1)) == 0);
  // epsilon = sqrt(2)/9 is exactly the level-2 diameter, which is not strictly greater.
  CHECK(null_family_check_squared(c3, Rational(2, 81)) == 1);
  CHECK(null_family_check_squared(c3, Rational(2, 81) - Rational(1, 100000)) == 9);
  CHECK(GridSquare{2, 1, 1}.diameter_squared() == Rational(2, 81));
}

TEST_CASE("perimeter points and side midpoints") {
  const PeripheralRef outer{true, {}};
  CHECK(perimeter_point(outer, 0) == RPoint{0, 0});
  CHECK(perimeter_point(outer, Rational(1, 8)) == RPoint{Rational(1, 2), 0});
  CHECK(perimeter_point(outer, Rational(3, 8)) == RPoint{1, Rational(1, 2)});
  CHECK(perimeter_point(outer, Rational(5, 8)) == RPoint{Rational(1, 2), 1});
  CHECK(perimeter_point(outer, Rational(7, 8)) == RPoint{0, Rational(1, 2)});
  CHECK_THROWS_AS(perimeter_point(outer, 1), std::invalid_argument);
  const PeripheralRef hole{false, GridSquare{1, 1, 1}};
  CHECK(side_midpoint(hole, 0).point == RPoint{Rational(1, 2), Rational(1, 3)});
  CHECK(on_peripheral_boundary(hole, RPoint{Rational(1, 3), Rational(1, 2)}));
  CHECK_FALSE(on_peripheral_boundary(hole, RPoint{Rational(1, 2), Rational(1, 2)}));
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational theta = oracle::random_rational(rng, 0, Rational(1023, 1024));
    CHECK(on_peripheral_boundary(hole, perimeter_point(hole, theta)));
    CHECK(on_peripheral_boundary(outer, perimeter_point(outer, theta)));
  }
}

TEST_CASE("routed stars pass both checkers") {
  const auto c1 = build_carpet_approx(1);
  const std::vector<MarkedPoint> two{side_midpoint({true, {}}, 0), side_midpoint({false, GridSquare{1, 1, 1}}, 1)};
  const auto s1 = embed_star_in_carpet(c1, two);
  CHECK(verify_carpet_star(c1, two, s1).ok);
  oracle_check(c1, two, s1);

  const auto c2 = build_carpet_approx(2);
  const std::vector<MarkedPoint> four{side_midpoint({true, {}}, 0), side_midpoint({false, GridSquare{1, 1, 1}}, 1),
                                      side_midpoint({false, GridSquare{2, 1, 1}}, 2),
                                      side_midpoint({false, GridSquare{2, 7, 7}}, 3)};
  const auto s2 = embed_star_in_carpet(c2, four);
  const auto verdict = verify_carpet_star(c2, four, s2);
  CHECK_MESSAGE(verdict.ok, verdict.failure);
  oracle_check(c2, four, s2);
  const auto again = embed_star_in_carpet(c2, four);
  CHECK(again.center == s2.center);
  CHECK(again.legs == s2.legs);
}

TEST_CASE("random star requests at level 2 and 3") {
  std::mt19937_64 rng(43);
  for (int level : {2, 3}) {
    const auto c = build_carpet_approx(level);
    const auto per = peripheral_squares(c);
    int routed = 0, refused = 0;
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<PeripheralRef> pick = per;
      std::shuffle(pick.begin(), pick.end(), rng);
      const std::size_t k = 1 + rng() % 4;
      std::vector<MarkedPoint> marked;
      for (std::size_t i = 0; i < k; ++i) marked.push_back(random_marked(rng, pick[i], level));
      try {
        const auto star = embed_star_in_carpet(c, marked);
        const auto v = verify_carpet_star(c, marked, star);
        CHECK_MESSAGE(v.ok, v.failure);
        oracle_check(c, marked, star);
        ++routed;
      } catch (const RoutingError&) {
        ++refused;
      }
    }
    CAPTURE(level);
    CHECK(routed > 30);
    CHECK(routed + refused == 40);
  }
}

TEST_CASE("verifier rejects broken stars") {
  const auto c = build_carpet_approx(2);
  const std::vector<MarkedPoint> four{side_midpoint({true, {}}, 0), side_midpoint({false, GridSquare{1, 1, 1}}, 1),
                                      side_midpoint({false, GridSquare{2, 1, 1}}, 2),
                                      side_midpoint({false, GridSquare{2, 7, 7}}, 3)};
  const auto good = embed_star_in_carpet(c, four);
  REQUIRE(verify_carpet_star(c, four, good).ok);

  auto crossing = good;
  // Leg 0 first runs along leg 1's first segment.
  crossing.legs[0].insert(crossing.legs[0].begin() + 1, good.legs[1][1]);
  CHECK_FALSE(verify_carpet_star(c, four, crossing).ok);

  auto into_hole = good;
  into_hole.legs[0].insert(into_hole.legs[0].begin() + 1, RPoint{Rational(1, 2), Rational(1, 2)});
  CHECK_FALSE(verify_carpet_star(c, four, into_hole).ok);

  auto outside = good;
  outside.legs[2].insert(outside.legs[2].end() - 1, RPoint{Rational(-1, 10), Rational(1, 2)});
  CHECK_FALSE(verify_carpet_star(c, four, outside).ok);

  auto wrong_end = good;
  wrong_end.legs[3].back() = four[2].point;
  CHECK_FALSE(verify_carpet_star(c, four, wrong_end).ok);

  auto missing = good;
  missing.legs.pop_back();
  CHECK_FALSE(verify_carpet_star(c, four, missing).ok);

  auto moved_centre = good;
  moved_centre.center = RPoint{Rational(1, 2), Rational(1, 2)};
  CHECK_FALSE(verify_carpet_star(c, four, moved_centre).ok);
}

TEST_CASE("bad routing requests") {
  const auto c = build_carpet_approx(2);
  const PeripheralRef outer{true, {}};
  const PeripheralRef hole{false, GridSquare{1, 1, 1}};
  const std::vector<MarkedPoint> same{side_midpoint(outer, 0), side_midpoint(hole, 0), side_midpoint(outer, 0)};
  CHECK_THROWS_AS(embed_star_in_carpet(c, same), std::invalid_argument);
  const std::vector<MarkedPoint> shared{side_midpoint(outer, 0), side_midpoint(outer, 1)};
  CHECK_THROWS_AS(embed_star_in_carpet(c, shared), std::invalid_argument);
  const std::vector<MarkedPoint> not_removed{side_midpoint({false, GridSquare{3, 1, 1}}, 0)};
  CHECK_THROWS_AS(embed_star_in_carpet(c, not_removed), std::invalid_argument);
  const std::vector<MarkedPoint> off{{hole, RPoint{Rational(1, 2), Rational(1, 2)}}};
  CHECK_THROWS_AS(embed_star_in_carpet(c, off), std::invalid_argument);
  CHECK_THROWS_AS(embed_star_in_carpet(c, std::vector<MarkedPoint>{}), std::invalid_argument);
}

TEST_CASE("svg output") {
  const auto c = build_carpet_approx(2);
  const std::string svg = carpet_svg(c);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg == carpet_svg(c));
}
