#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxbound/exact_geometry.hpp"

namespace coxbound {

// ---------------------------------------------------------------------------
// Middle-ninth carpet approximations

/// Closed square [x, x+1] x [y, y+1] scaled by 3^-level.
struct GridSquare {
  int level = 0;
  std::int64_t x = 0, y = 0;

  Rational side() const;
  RPoint lower_left() const;
  RPoint upper_right() const;
  /// Squared diameter: 2 * side^2.
  Rational diameter_squared() const;
  friend bool operator==(const GridSquare&, const GridSquare&) = default;
};

struct CarpetApprox {
  int level = 0;
  std::vector<GridSquare> kept;     // 8^level squares of side 3^-level
  std::vector<GridSquare> removed;  // open middle squares of all levels <= level, coarse first
};

inline constexpr int kMaxCarpetLevel = 7;

/// Throws std::invalid_argument outside 0..kMaxCarpetLevel.
CarpetApprox build_carpet_approx(int level);

/// Number of removed squares with diameter strictly greater than epsilon.
std::size_t null_family_check(const CarpetApprox& c, const Rational& epsilon);
/// Same with epsilon given by its square, which admits epsilon = sqrt(2)/9 exactly.
std::size_t null_family_check_squared(const CarpetApprox& c, const Rational& epsilon_squared);

/// Whether the level-k cell (x, y) survives: no ternary digit position where both are 1.
bool is_kept_cell(std::int64_t x, std::int64_t y, int level);

/// A peripheral square of an approximation: the outer boundary or one removed square.
struct PeripheralRef {
  bool outer = true;
  GridSquare square;  // ignored when outer
  friend bool operator==(const PeripheralRef&, const PeripheralRef&) = default;
};

std::vector<PeripheralRef> peripheral_squares(const CarpetApprox& c);
RPoint peripheral_lower_left(const PeripheralRef& p);
Rational peripheral_side(const PeripheralRef& p);
/// Boundary point at perimeter fraction theta in [0,1), counterclockwise from the lower-left corner.
RPoint perimeter_point(const PeripheralRef& p, const Rational& theta);
bool on_peripheral_boundary(const PeripheralRef& p, const RPoint& q);

struct MarkedPoint {
  PeripheralRef peripheral;
  RPoint point;
};

/// Marked point at the midpoint of the given side (0 bottom, 1 right, 2 top, 3 left).
MarkedPoint side_midpoint(const PeripheralRef& p, int side);

/// Four (or k) polylines from a common centre, leg i ending at marked point i.
struct CarpetStar {
  RPoint center;
  std::vector<std::vector<RPoint>> legs;
};

class RoutingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Routes a star along the midline grid of kept cells (centre to centre), using
/// vertex-disjoint paths from max-flow. Marked points must be midpoints of
/// level-k cell edges on distinct peripheral squares. Throws RoutingError when no
/// route exists at this level, std::invalid_argument for bad requests.
CarpetStar embed_star_in_carpet(const CarpetApprox& c, std::span<const MarkedPoint> marked);

struct StarCheck {
  bool ok = true;
  std::string failure;
};

/// Independent exact check: legs start at the centre and end at their marked
/// points, are pairwise disjoint except at the centre, avoid every closed
/// removed square except for touching their own peripheral square at the marked
/// point, and stay inside the open unit square except at an outer marked point.
StarCheck verify_carpet_star(const CarpetApprox& c, std::span<const MarkedPoint> marked, const CarpetStar& star);

std::string carpet_svg(const CarpetApprox& c, const CarpetStar* star = nullptr,
                       std::span<const MarkedPoint> marked = {});

// ---------------------------------------------------------------------------
// The disk with three holes and the straight-line star family g_t

struct RCircle {
  RPoint center;
  Rational radius_squared;
};

/// Unit disk with holes of radius 1/4 centred at (-1/2,0), (0,1/2), (0,-1/2);
/// marked points p1..p3 closest to the origin on each hole, p4 = (1,0).
struct HoledDisk {
  RCircle outer;
  std::array<RCircle, 3> holes;
  std::array<RPoint, 4> marked;

  static const HoledDisk& standard();
  /// Strictly inside the unit disk and strictly outside every closed hole.
  bool is_interior(const RPoint& p) const;
  /// Boundary circle index 0..2 for holes, 3 for the outer circle, or -1.
  int boundary_circle_of(const RPoint& p) const;
};

struct StarEmbedding {
  Rational t;
  RPoint center;               // (t, -t)
  std::array<Segment, 4> legs; // centre -> p_i
};

inline const Rational kStarTMin = Rational(-1, 8);
inline const Rational kStarTMax = Rational(1, 8);

StarEmbedding star_embedding(const Rational& t);

/// (1 - s)(t, -t) + s p_i for leg i in 1..4.
RPoint star_family_point(const Rational& t, int leg, const Rational& s);

/// Legs meet pairwise only at the centre and touch the boundary circles only at
/// their own endpoints.
bool star_is_embedded(const StarEmbedding& star);

struct StarContact {
  int leg_a, leg_b;  // 1-based leg of the first and second star
  SegmentIntersection where;
};

/// Every intersection of g_t(E4) and g_t'(E4) outside {p1, ..., p4}.
std::vector<StarContact> star_contacts(const Rational& t, const Rational& t2);

/// True iff the images of g_t and g_t' meet only in {p1, ..., p4}. Equal
/// parameters share everything and give false.
bool verify_star_disjointness(const Rational& t, const Rational& t2);

struct ExcludedParameter {
  std::size_t point_index;
  int leg;  // 1-based
  Rational t;
};

struct TSelection {
  Rational t0;
  /// Per point, every t in [-1/8, 1/8] whose star passes through it.
  std::vector<ExcludedParameter> excluded;
};

/// Picks t0 whose star misses every point of T. Points must be interior to the
/// holed disk (std::invalid_argument otherwise).
TSelection select_t_avoiding(std::span<const RPoint> points);

/// Incidence check used to re-verify a selection.
bool star_avoids(const Rational& t, std::span<const RPoint> points);

}  // namespace coxbound
