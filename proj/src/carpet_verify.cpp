// Exact checker for carpet stars. It deliberately uses its own clipping and
// intersection code so that a router bug cannot hide behind a shared helper.

#include <algorithm>
#include <optional>

#include "coxbound/carpet.hpp"

namespace coxbound {
namespace {

struct Box {
  Rational x0, y0, x1, y1;
};

// Parameter range [lo, hi] of a + u (b - a), u in [0,1], inside the closed box.
std::optional<std::pair<Rational, Rational>> clip(const RPoint& a, const RPoint& b, const Box& box) {
  Rational lo = 0, hi = 1;
  const Rational dx = b.x - a.x, dy = b.y - a.y;
  const Rational p[4] = {-dx, dx, -dy, dy};
  const Rational q[4] = {a.x - box.x0, box.x1 - a.x, a.y - box.y0, box.y1 - a.y};
  for (int k = 0; k < 4; ++k) {
    if (p[k] == 0) {
      if (q[k] < 0) return std::nullopt;
      continue;
    }
    const Rational r = q[k] / p[k];
    if (p[k] < 0) {
      if (r > lo) lo = r;
    } else if (r < hi) {
      hi = r;
    }
    if (lo > hi) return std::nullopt;
  }
  return std::make_pair(lo, hi);
}

struct Meet {
  enum { None, Single, Many } kind = None;
  RPoint at;
};

// Intersection of closed segments [a,b] and [c,d], both non-degenerate.
Meet meet(const RPoint& a, const RPoint& b, const RPoint& c, const RPoint& d) {
  const RPoint r{b.x - a.x, b.y - a.y};
  const RPoint s{d.x - c.x, d.y - c.y};
  const Rational den = r.x * s.y - r.y * s.x;
  const RPoint ca{c.x - a.x, c.y - a.y};
  if (den == 0) {
    if (ca.x * r.y - ca.y * r.x != 0) return {};  // parallel, distinct lines
    // Same line: project onto r and intersect parameter intervals.
    const Rational rr = r.x * r.x + r.y * r.y;
    Rational t0 = (ca.x * r.x + ca.y * r.y) / rr;
    Rational t1 = t0 + (s.x * r.x + s.y * r.y) / rr;
    if (t0 > t1) std::swap(t0, t1);
    const Rational lo = std::max(t0, Rational(0));
    const Rational hi = std::min(t1, Rational(1));
    if (lo > hi) return {};
    const RPoint p{a.x + lo * r.x, a.y + lo * r.y};
    if (lo == hi) return {Meet::Single, p};
    return {Meet::Many, p};
  }
  const Rational u = (ca.x * s.y - ca.y * s.x) / den;
  const Rational v = (ca.x * r.y - ca.y * r.x) / den;
  if (u < 0 || u > 1 || v < 0 || v > 1) return {};
  return {Meet::Single, RPoint{a.x + u * r.x, a.y + u * r.y}};
}

bool strictly_inside_unit(const RPoint& p) { return p.x > 0 && p.x < 1 && p.y > 0 && p.y < 1; }

Box box_of(const GridSquare& sq) {
  const Rational side = sq.side();
  const Rational x0 = side * static_cast<long>(sq.x), y0 = side * static_cast<long>(sq.y);
  return {x0, y0, x0 + side, y0 + side};
}

StarCheck fail(std::string why) { return {false, std::move(why)}; }

}  // namespace

StarCheck verify_carpet_star(const CarpetApprox& c, std::span<const MarkedPoint> marked, const CarpetStar& star) {
  const std::size_t k = marked.size();
  if (star.legs.size() != k) return fail("leg count differs from marked point count");
  if (!strictly_inside_unit(star.center)) return fail("centre is not inside the open unit square");

  std::vector<Box> boxes;
  boxes.reserve(c.removed.size());
  for (const auto& sq : c.removed) boxes.push_back(box_of(sq));

  for (std::size_t i = 0; i < k; ++i) {
    const auto& leg = star.legs[i];
    const std::string name = "leg " + std::to_string(i + 1);
    if (leg.size() < 2) return fail(name + " has fewer than two vertices");
    if (!(leg.front() == star.center)) return fail(name + " does not start at the centre");
    if (!(leg.back() == marked[i].point)) return fail(name + " does not end at its marked point");

    // The open unit square is convex, so vertices decide containment.
    for (std::size_t v = 0; v + 1 < leg.size(); ++v) {
      if (!strictly_inside_unit(leg[v])) return fail(name + " leaves the open unit square at " + to_string(leg[v]));
    }
    if (!strictly_inside_unit(leg.back()) && !marked[i].peripheral.outer) {
      return fail(name + " reaches the outer boundary but its marked point is on a hole");
    }

    for (std::size_t v = 0; v + 1 < leg.size(); ++v) {
      if (leg[v] == leg[v + 1]) return fail(name + " has a repeated vertex");
      const bool last = v + 2 == leg.size();
      for (std::size_t h = 0; h < boxes.size(); ++h) {
        const auto range = clip(leg[v], leg[v + 1], boxes[h]);
        if (!range) continue;
        const bool own = !marked[i].peripheral.outer && marked[i].peripheral.square == c.removed[h];
        if (own && last && range->first == 1 && range->second == 1) continue;
        return fail(name + " meets removed square " + to_string(RPoint{boxes[h].x0, boxes[h].y0}) +
                    " of side " + c.removed[h].side().get_str());
      }
    }

    // Simplicity: adjacent segments share only their common vertex, others nothing.
    for (std::size_t a = 0; a + 1 < leg.size(); ++a) {
      for (std::size_t b = a + 1; b + 1 < leg.size(); ++b) {
        const Meet m = meet(leg[a], leg[a + 1], leg[b], leg[b + 1]);
        if (m.kind == Meet::None) continue;
        if (b == a + 1 && m.kind == Meet::Single && m.at == leg[b]) continue;
        return fail(name + " is not a simple arc near " + to_string(m.at));
      }
    }
  }

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const auto& p = star.legs[i];
      const auto& q = star.legs[j];
      for (std::size_t a = 0; a + 1 < p.size(); ++a) {
        for (std::size_t b = 0; b + 1 < q.size(); ++b) {
          const Meet m = meet(p[a], p[a + 1], q[b], q[b + 1]);
          if (m.kind == Meet::None) continue;
          if (m.kind == Meet::Single && m.at == star.center && a == 0 && b == 0) continue;
          return fail("legs " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " meet at " +
                      to_string(m.at));
        }
      }
    }
  }
  return {};
}

}  // namespace coxbound
