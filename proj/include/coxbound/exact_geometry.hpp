#pragma once

#include <optional>
#include <string>

#include "coxbound/rational.hpp"

namespace coxbound {

struct RPoint {
  Rational x, y;
  friend bool operator==(const RPoint& a, const RPoint& b) { return a.x == b.x && a.y == b.y; }
};

struct Segment {
  RPoint a, b;
};

std::string to_string(const RPoint& p);

/// Sign of the cross product (b - a) x (c - a).
int orientation(const RPoint& a, const RPoint& b, const RPoint& c);
bool point_on_segment(const RPoint& p, const Segment& s);
Rational dist2(const RPoint& a, const RPoint& b);
Rational dist2_to_segment(const RPoint& p, const Segment& s);

struct SegmentIntersection {
  enum class Kind { None, Point, Overlap } kind = Kind::None;
  RPoint p, q;  // Point: p. Overlap: the shared closed sub-segment [p, q].
};

SegmentIntersection intersect_segments(const Segment& s1, const Segment& s2);

}  // namespace coxbound
