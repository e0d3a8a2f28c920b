#include "coxbound/exact_geometry.hpp"

#include <algorithm>

namespace coxbound {

std::string to_string(const RPoint& p) { return "(" + p.x.get_str() + ", " + p.y.get_str() + ")"; }

int orientation(const RPoint& a, const RPoint& b, const RPoint& c) {
  return sgn(Rational((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)));
}

bool point_on_segment(const RPoint& p, const Segment& s) {
  if (orientation(s.a, s.b, p) != 0) return false;
  return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) && std::min(s.a.y, s.b.y) <= p.y &&
         p.y <= std::max(s.a.y, s.b.y);
}

Rational dist2(const RPoint& a, const RPoint& b) {
  Rational dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

Rational dist2_to_segment(const RPoint& p, const Segment& s) {
  const Rational dx = s.b.x - s.a.x, dy = s.b.y - s.a.y;
  const Rational len2 = dx * dx + dy * dy;
  if (len2 == 0) return dist2(p, s.a);
  Rational u = ((p.x - s.a.x) * dx + (p.y - s.a.y) * dy) / len2;
  if (u < 0) u = 0;
  if (u > 1) u = 1;
  return dist2(p, RPoint{s.a.x + u * dx, s.a.y + u * dy});
}

namespace {

// Orders collinear points along the segment direction.
bool before(const RPoint& a, const RPoint& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }

}  // namespace

SegmentIntersection intersect_segments(const Segment& s1, const Segment& s2) {
  using K = SegmentIntersection::Kind;
  const int o1 = orientation(s1.a, s1.b, s2.a);
  const int o2 = orientation(s1.a, s1.b, s2.b);
  const int o3 = orientation(s2.a, s2.b, s1.a);
  const int o4 = orientation(s2.a, s2.b, s1.b);

  if (o1 == 0 && o2 == 0) {
    // Collinear (or degenerate): intersect the two ranges along the common line.
    RPoint lo1 = s1.a, hi1 = s1.b, lo2 = s2.a, hi2 = s2.b;
    if (before(hi1, lo1)) std::swap(lo1, hi1);
    if (before(hi2, lo2)) std::swap(lo2, hi2);
    if (o3 != 0 || o4 != 0) {
      // s1 degenerate to a point not on s2's line.
      return {};
    }
    const RPoint lo = before(lo1, lo2) ? lo2 : lo1;
    const RPoint hi = before(hi1, hi2) ? hi1 : hi2;
    if (before(hi, lo)) return {};
    if (lo == hi) return {K::Point, lo, lo};
    return {K::Overlap, lo, hi};
  }
  if (o1 * o2 > 0 || o3 * o4 > 0) return {};
  if (o3 == 0 && o4 == 0) {
    // s2 is a single point lying on s1's line; handled by the checks above unless degenerate.
    if (point_on_segment(s2.a, s1)) return {K::Point, s2.a, s2.a};
    return {};
  }
  // Proper crossing or touching at one point: solve a + u (b - a) on s1.
  const Rational dx1 = s1.b.x - s1.a.x, dy1 = s1.b.y - s1.a.y;
  const Rational dx2 = s2.b.x - s2.a.x, dy2 = s2.b.y - s2.a.y;
  const Rational den = dx1 * dy2 - dy1 * dx2;
  if (den == 0) return {};
  const Rational u = ((s2.a.x - s1.a.x) * dy2 - (s2.a.y - s1.a.y) * dx2) / den;
  RPoint p{s1.a.x + u * dx1, s1.a.y + u * dy1};
  return {K::Point, p, p};
}

}  // namespace coxbound
