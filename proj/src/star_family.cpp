// The straight-line star family on the disk with three holes: for t in
// [-1/8, 1/8] the star g_t has centre (t, -t) and legs to p1 = (-1/4, 0),
// p2 = (0, 1/4), p3 = (0, -1/4), p4 = (1, 0). All predicates are exact.

#include <algorithm>

#include "coxbound/carpet.hpp"

namespace coxbound {

const HoledDisk& HoledDisk::standard() {
  static const HoledDisk disk{
      RCircle{{0, 0}, 1},
      {RCircle{{Rational(-1, 2), 0}, Rational(1, 16)}, RCircle{{0, Rational(1, 2)}, Rational(1, 16)},
       RCircle{{0, Rational(-1, 2)}, Rational(1, 16)}},
      {RPoint{Rational(-1, 4), 0}, RPoint{0, Rational(1, 4)}, RPoint{0, Rational(-1, 4)}, RPoint{1, 0}}};
  return disk;
}

bool HoledDisk::is_interior(const RPoint& p) const {
  if (dist2(p, outer.center) >= outer.radius_squared) return false;
  return std::all_of(holes.begin(), holes.end(),
                     [&](const RCircle& h) { return dist2(p, h.center) > h.radius_squared; });
}

int HoledDisk::boundary_circle_of(const RPoint& p) const {
  for (int i = 0; i < 3; ++i)
    if (dist2(p, holes[static_cast<std::size_t>(i)].center) == holes[static_cast<std::size_t>(i)].radius_squared) return i;
  if (dist2(p, outer.center) == outer.radius_squared) return 3;
  return -1;
}

namespace {

void check_t(const Rational& t) {
  if (t < kStarTMin || t > kStarTMax) throw std::invalid_argument("t must lie in [-1/8, 1/8]");
}

}  // namespace

StarEmbedding star_embedding(const Rational& t) {
  check_t(t);
  const auto& disk = HoledDisk::standard();
  StarEmbedding s{t, RPoint{t, -t}, {}};
  for (std::size_t i = 0; i < 4; ++i) s.legs[i] = Segment{s.center, disk.marked[i]};
  return s;
}

RPoint star_family_point(const Rational& t, int leg, const Rational& s) {
  check_t(t);
  if (leg < 1 || leg > 4) throw std::invalid_argument("leg index must be 1..4");
  if (s < 0 || s > 1) throw std::invalid_argument("leg parameter must lie in [0,1]");
  const RPoint& p = HoledDisk::standard().marked[static_cast<std::size_t>(leg - 1)];
  const Rational r = 1 - s;
  return {r * t + s * p.x, r * (-t) + s * p.y};
}

bool star_is_embedded(const StarEmbedding& star) {
  const auto& disk = HoledDisk::standard();
  if (!disk.is_interior(star.center)) return false;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      auto x = intersect_segments(star.legs[i], star.legs[j]);
      if (x.kind != SegmentIntersection::Kind::Point || !(x.p == star.center)) return false;
    }
    const Segment& leg = star.legs[i];
    const RPoint d{leg.b.x - leg.a.x, leg.b.y - leg.a.y};
    for (std::size_t h = 0; h < 3; ++h) {
      const RCircle& c = disk.holes[h];
      if (h == i) {
        // Approaching its own endpoint on the circle: |a + s d - o|^2 is convex in s
        // and equals r^2 at s = 1, so it stays above r^2 on [0,1) iff the
        // derivative at s = 1 is <= 0.
        const Rational deriv = d.x * (leg.b.x - c.center.x) + d.y * (leg.b.y - c.center.y);
        if (deriv > 0) return false;
      } else if (dist2_to_segment(c.center, leg) <= c.radius_squared) {
        return false;
      }
    }
    // The centre is inside the unit disk and every p_i is in the closed disk, so
    // by convexity only p4 reaches the outer circle.
  }
  return true;
}

std::vector<StarContact> star_contacts(const Rational& t, const Rational& t2) {
  const StarEmbedding a = star_embedding(t);
  const StarEmbedding b = star_embedding(t2);
  const auto& marked = HoledDisk::standard().marked;
  std::vector<StarContact> out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      auto x = intersect_segments(a.legs[static_cast<std::size_t>(i)], b.legs[static_cast<std::size_t>(j)]);
      if (x.kind == SegmentIntersection::Kind::None) continue;
      if (x.kind == SegmentIntersection::Kind::Point &&
          std::find(marked.begin(), marked.end(), x.p) != marked.end()) {
        continue;
      }
      out.push_back({i + 1, j + 1, x});
    }
  }
  return out;
}

bool verify_star_disjointness(const Rational& t, const Rational& t2) {
  if (t == t2) return false;
  return star_contacts(t, t2).empty();
}

TSelection select_t_avoiding(std::span<const RPoint> points) {
  const auto& disk = HoledDisk::standard();
  TSelection sel;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const RPoint& q = points[k];
    if (!disk.is_interior(q)) throw std::invalid_argument("point " + to_string(q) + " is not interior to the holed disk");
    for (int leg = 1; leg <= 4; ++leg) {
      // q lies on leg i of g_t iff the centre (t,-t) = p + lambda (q - p) for
      // some lambda >= 1, i.e. the ray from p_i through q meets the line y = -x
      // at or beyond q.
      const RPoint& p = disk.marked[static_cast<std::size_t>(leg - 1)];
      const Rational sp = p.x + p.y;
      const Rational den = (q.x + q.y) - sp;
      if (den == 0) continue;  // ray parallel to y = -x
      const Rational lambda = -sp / den;
      if (lambda < 1) continue;
      const Rational t = p.x + lambda * (q.x - p.x);
      if (t < kStarTMin || t > kStarTMax) continue;
      sel.excluded.push_back({k, leg, t});
    }
  }
  auto excluded = [&](const Rational& t) {
    return std::any_of(sel.excluded.begin(), sel.excluded.end(), [&](const ExcludedParameter& e) { return e.t == t; });
  };
  // Candidates 0, then +-j/2^d for growing d: the excluded set is finite, so this ends.
  if (!excluded(Rational(0))) {
    sel.t0 = 0;
    return sel;
  }
  for (unsigned long den = 16;; den *= 2) {
    for (unsigned long j = 1; j < den / 8; j += 2) {
      for (int sign : {1, -1}) {
        Rational t(static_cast<long>(j) * sign, den);
        t.canonicalize();
        if (!excluded(t)) {
          sel.t0 = t;
          return sel;
        }
      }
    }
  }
}

bool star_avoids(const Rational& t, std::span<const RPoint> points) {
  const StarEmbedding s = star_embedding(t);
  for (const auto& q : points)
    for (const auto& leg : s.legs)
      if (point_on_segment(q, leg)) return false;
  return true;
}

}  // namespace coxbound
