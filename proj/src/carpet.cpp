#include "coxbound/carpet.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace coxbound {
namespace {

std::int64_t pow3(int k) {
  std::int64_t p = 1;
  for (int i = 0; i < k; ++i) p *= 3;
  return p;
}

}  // namespace

Rational GridSquare::side() const { return Rational(1, static_cast<unsigned long>(pow3(level))); }

RPoint GridSquare::lower_left() const {
  const Rational s = side();
  return {Rational(static_cast<long>(x)) * s, Rational(static_cast<long>(y)) * s};
}

RPoint GridSquare::upper_right() const {
  const Rational s = side();
  return {Rational(static_cast<long>(x + 1)) * s, Rational(static_cast<long>(y + 1)) * s};
}

Rational GridSquare::diameter_squared() const {
  const Rational s = side();
  return 2 * s * s;
}

bool is_kept_cell(std::int64_t x, std::int64_t y, int level) {
  for (int i = 0; i < level; ++i) {
    if (x % 3 == 1 && y % 3 == 1) return false;
    x /= 3;
    y /= 3;
  }
  return true;
}

CarpetApprox build_carpet_approx(int level) {
  if (level < 0 || level > kMaxCarpetLevel) {
    throw std::invalid_argument("carpet level must be in 0.." + std::to_string(kMaxCarpetLevel));
  }
  CarpetApprox c{0, {GridSquare{0, 0, 0}}, {}};
  // Level k+1 = eight copies of level k, one per kept level-1 cell.
  for (int k = 0; k < level; ++k) {
    const std::int64_t n = pow3(k);
    CarpetApprox next{k + 1, {}, {GridSquare{1, 1, 1}}};
    for (std::int64_t b = 0; b < 3; ++b) {
      for (std::int64_t a = 0; a < 3; ++a) {
        if (a == 1 && b == 1) continue;
        for (const auto& sq : c.kept) next.kept.push_back({k + 1, a * n + sq.x, b * n + sq.y});
        for (const auto& sq : c.removed) {
          const std::int64_t m = pow3(sq.level - 1);
          next.removed.push_back({sq.level + 1, a * 3 * m + sq.x, b * 3 * m + sq.y});
        }
      }
    }
    c = std::move(next);
  }
  auto order = [](const GridSquare& p, const GridSquare& q) {
    return std::tie(p.level, p.y, p.x) < std::tie(q.level, q.y, q.x);
  };
  std::sort(c.kept.begin(), c.kept.end(), order);
  std::sort(c.removed.begin(), c.removed.end(), order);
  return c;
}

std::size_t null_family_check_squared(const CarpetApprox& c, const Rational& epsilon_squared) {
  if (epsilon_squared <= 0) throw std::invalid_argument("epsilon must be positive");
  return static_cast<std::size_t>(std::count_if(c.removed.begin(), c.removed.end(), [&](const GridSquare& sq) {
    return sq.diameter_squared() > epsilon_squared;
  }));
}

std::size_t null_family_check(const CarpetApprox& c, const Rational& epsilon) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  return null_family_check_squared(c, epsilon * epsilon);
}

std::vector<PeripheralRef> peripheral_squares(const CarpetApprox& c) {
  std::vector<PeripheralRef> out{PeripheralRef{true, {}}};
  for (const auto& sq : c.removed) out.push_back({false, sq});
  return out;
}

RPoint peripheral_lower_left(const PeripheralRef& p) {
  return p.outer ? RPoint{0, 0} : p.square.lower_left();
}

Rational peripheral_side(const PeripheralRef& p) { return p.outer ? Rational(1) : p.square.side(); }

RPoint perimeter_point(const PeripheralRef& p, const Rational& theta) {
  if (theta < 0 || theta >= 1) throw std::invalid_argument("perimeter fraction must lie in [0,1)");
  const RPoint o = peripheral_lower_left(p);
  const Rational len = peripheral_side(p);
  const Rational u = 4 * theta;
  if (u < 1) return {o.x + u * len, o.y};
  if (u < 2) return {o.x + len, o.y + (u - 1) * len};
  if (u < 3) return {o.x + len - (u - 2) * len, o.y + len};
  return {o.x, o.y + len - (u - 3) * len};
}

bool on_peripheral_boundary(const PeripheralRef& p, const RPoint& q) {
  const RPoint lo = peripheral_lower_left(p);
  const Rational len = peripheral_side(p);
  const RPoint hi{lo.x + len, lo.y + len};
  const bool in_x = lo.x <= q.x && q.x <= hi.x;
  const bool in_y = lo.y <= q.y && q.y <= hi.y;
  return (in_x && (q.y == lo.y || q.y == hi.y)) || (in_y && (q.x == lo.x || q.x == hi.x));
}

MarkedPoint side_midpoint(const PeripheralRef& p, int side) {
  if (side < 0 || side > 3) throw std::invalid_argument("side must be 0..3");
  return {p, perimeter_point(p, Rational(2 * side + 1, 8))};
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string carpet_svg(const CarpetApprox& c, const CarpetStar* star, std::span<const MarkedPoint> marked) {
  constexpr double kSize = 600.0, kMargin = 20.0, kScale = kSize - 2 * kMargin;
  auto X = [&](const Rational& x) { return num(kMargin + x.get_d() * kScale); };
  auto Y = [&](const Rational& y) { return num(kSize - kMargin - y.get_d() * kScale); };
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize << "\" height=\"" << kSize
     << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n"
     << "<title>carpet approximation, level " << c.level << "</title>\n"
     << "<rect x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\"" << num(kScale) << "\" height=\""
     << num(kScale) << "\" fill=\"#2f3e46\"/>\n";
  for (const auto& sq : c.removed) {
    const RPoint lo = sq.lower_left();
    const RPoint hi = sq.upper_right();
    os << "<rect x=\"" << X(lo.x) << "\" y=\"" << Y(hi.y) << "\" width=\"" << num(sq.side().get_d() * kScale)
       << "\" height=\"" << num(sq.side().get_d() * kScale) << "\" fill=\"#ffffff\"/>\n";
  }
  if (star) {
    static constexpr const char* kColours[] = {"#e63946", "#f4a261", "#2a9d8f", "#a8dadc", "#e9c46a", "#8338ec"};
    for (std::size_t i = 0; i < star->legs.size(); ++i) {
      os << "<polyline fill=\"none\" stroke=\"" << kColours[i % 6] << "\" stroke-width=\"2\" points=\"";
      for (const auto& p : star->legs[i]) os << X(p.x) << ',' << Y(p.y) << ' ';
      os << "\"/>\n";
    }
    os << "<circle cx=\"" << X(star->center.x) << "\" cy=\"" << Y(star->center.y)
       << "\" r=\"4\" fill=\"#ffffff\" stroke=\"#000\"/>\n";
  }
  for (const auto& m : marked) {
    os << "<circle cx=\"" << X(m.point.x) << "\" cy=\"" << Y(m.point.y) << "\" r=\"3\" fill=\"#000\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace coxbound
