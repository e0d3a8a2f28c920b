#include "coxbound/k5.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace coxbound {
namespace {

constexpr int kMaxAttempts = 50;

std::int64_t cells_along(const PeripheralRef& p, int level) {
  std::int64_t n = 1;
  for (int i = 0; i < level - (p.outer ? 0 : p.square.level); ++i) n *= 3;
  return n;
}

int slot_of(int carpet, int partner) {
  // Partners of carpet i are the other four indices in ascending order.
  return partner < carpet ? partner - 1 : partner - 2;
}

struct Routed {
  std::array<K5Carpet, 5> carpets;
  std::optional<RoutingFailure> failure;
};

Routed route_all(const CarpetApprox& approx, const std::vector<K5Identification>& ids) {
  Routed r;
  for (int i = 1; i <= 5; ++i) {
    K5Carpet& k = r.carpets[static_cast<std::size_t>(i - 1)];
    k.index = i;
    for (int j = 1; j <= 5; ++j)
      if (j != i) k.partners.push_back(j);
    k.marked.resize(4);
  }
  for (const auto& id : ids) {
    r.carpets[static_cast<std::size_t>(id.i - 1)].marked[static_cast<std::size_t>(slot_of(id.i, id.j))] = {id.circle_i, id.point_i};
    r.carpets[static_cast<std::size_t>(id.j - 1)].marked[static_cast<std::size_t>(slot_of(id.j, id.i))] = {id.circle_j, id.point_j};
  }
  for (auto& k : r.carpets) {
    try {
      k.star = embed_star_in_carpet(approx, k.marked);
    } catch (const RoutingError& e) {
      r.failure.emplace(k.index, e.what());
      return r;
    }
  }
  return r;
}

K5Identification identify(int i, int j, const Rational& theta) {
  const auto slots = k5_circle_slots();
  K5Identification id{i, j, slots[static_cast<std::size_t>(slot_of(i, j))],
                      slots[static_cast<std::size_t>(slot_of(j, i))], theta, {}, {}};
  id.point_i = perimeter_point(id.circle_i, theta);
  id.point_j = perimeter_point(id.circle_j, theta);
  return id;
}

}  // namespace

std::array<PeripheralRef, 4> k5_circle_slots() {
  return {PeripheralRef{true, {}}, PeripheralRef{false, GridSquare{1, 1, 1}},
          PeripheralRef{false, GridSquare{2, 1, 1}}, PeripheralRef{false, GridSquare{2, 7, 7}}};
}

K5Scaffold build_k5_scaffold(const K5Options& options) {
  K5Scaffold s;
  s.level = options.level;
  s.approx = build_carpet_approx(options.level);
  if (options.level < 2) {
    throw RoutingFailure(1, "a level-" + std::to_string(options.level) + " carpet has " +
                                std::to_string(peripheral_squares(s.approx).size()) +
                                " peripheral squares, a 4-pointed star needs 4");
  }

  std::optional<std::mt19937_64> rng;
  if (options.seed) rng.emplace(*options.seed);
  const int attempts = rng ? kMaxAttempts : 1;
  std::optional<RoutingFailure> last;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<K5Identification> ids;
    for (int i = 1; i <= 5; ++i) {
      for (int j = i + 1; j <= 5; ++j) {
        Rational theta;
        if (!rng) {
          theta = make_rational(2 * ((i + j) % 4) + 1, 8);
        } else {
          // A cell-edge midpoint on the coarser circle is one on the finer circle too,
          // since side lengths in cells differ by an odd factor.
          const auto slots = k5_circle_slots();
          const std::int64_t n = std::min(cells_along(slots[static_cast<std::size_t>(slot_of(i, j))], s.level),
                                          cells_along(slots[static_cast<std::size_t>(slot_of(j, i))], s.level));
          const auto side = static_cast<long>((*rng)() % 4);
          const auto a = static_cast<long>((*rng)() % static_cast<std::uint64_t>(n));
          theta = (side + make_rational(2 * a + 1, 2 * n)) / 4;
        }
        ids.push_back(identify(i, j, theta));
      }
    }
    Routed routed = route_all(s.approx, ids);
    if (routed.failure) {
      last = routed.failure;
      continue;
    }
    s.carpets = std::move(routed.carpets);
    s.identifications = std::move(ids);
    for (const auto& id : s.identifications) s.edges.emplace_back(id.i, id.j);
    return s;
  }
  throw *last;
}

K5Verdict verify_k5_detailed(const K5Scaffold& s) {
  K5Verdict v;
  auto fail = [&](std::string why) {
    v.ok = false;
    v.failures.push_back(std::move(why));
  };

  // Identifications: one per unordered pair, between distinct carpets.
  std::array<std::array<int, 5>, 5> seen{};
  for (const auto& id : s.identifications) {
    if (id.i < 1 || id.j > 5 || id.i >= id.j) {
      fail("identification (" + std::to_string(id.i) + "," + std::to_string(id.j) + ") is malformed");
      continue;
    }
    if (seen[static_cast<std::size_t>(id.i - 1)][static_cast<std::size_t>(id.j - 1)]++) {
      fail("carpets " + std::to_string(id.i) + " and " + std::to_string(id.j) + " are identified twice");
    }
    if (!(id.point_i == perimeter_point(id.circle_i, id.theta)) || !(id.point_j == perimeter_point(id.circle_j, id.theta))) {
      fail("p_{" + std::to_string(id.i) + "," + std::to_string(id.j) + "} does not match on the identified circles");
    }
  }

  // Graph from legs: leg e_j^i must end at the identified point on the identified circle.
  for (const auto& id : s.identifications) {
    if (id.i < 1 || id.j > 5 || id.i >= id.j) continue;
    bool found = true;
    for (const auto& [a, b, circle, point] :
         {std::tuple{id.i, id.j, id.circle_i, id.point_i}, std::tuple{id.j, id.i, id.circle_j, id.point_j}}) {
      const K5Carpet& k = s.carpets[static_cast<std::size_t>(a - 1)];
      const auto it = std::find(k.partners.begin(), k.partners.end(), b);
      if (it == k.partners.end()) {
        found = false;
        continue;
      }
      const auto leg = static_cast<std::size_t>(it - k.partners.begin());
      if (leg >= k.star.legs.size() || leg >= k.marked.size() || k.star.legs[leg].empty() ||
          !(k.star.legs[leg].back() == point) || !(k.marked[leg].peripheral == circle) ||
          !(k.marked[leg].point == point)) {
        found = false;
      }
    }
    if (!found) {
      fail("edge " + std::to_string(id.i) + "-" + std::to_string(id.j) + " is not realized by two legs");
      continue;
    }
    int& cell = v.adjacency[static_cast<std::size_t>(id.i - 1)][static_cast<std::size_t>(id.j - 1)];
    if (cell == 0) ++v.edge_count;
    cell = v.adjacency[static_cast<std::size_t>(id.j - 1)][static_cast<std::size_t>(id.i - 1)] = 1;
  }
  bool complete = true;
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b) complete = complete && v.adjacency[a][b] == (a == b ? 0 : 1);
  if (!complete) fail("adjacency matrix is not J - I (" + std::to_string(v.edge_count) + " edges)");

  // Every leg of every star must be accounted for by an identification.
  for (const auto& k : s.carpets) {
    if (k.partners.size() != 4 || k.star.legs.size() != 4 || k.marked.size() != 4) {
      fail("carpet " + std::to_string(k.index) + " does not carry a 4-pointed star");
      continue;
    }
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = a + 1; b < 4; ++b)
        if (k.marked[a].peripheral == k.marked[b].peripheral) {
          fail("carpet " + std::to_string(k.index) + " uses one circle for two legs");
        }
    const StarCheck check = verify_carpet_star(s.approx, k.marked, k.star);
    if (!check.ok) fail("carpet " + std::to_string(k.index) + ": " + check.failure);
  }
  return v;
}

bool verify_k5_graph(const K5Scaffold& s) { return verify_k5_detailed(s).ok; }

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
  return buf;
}

}  // namespace

std::string k5_svg(const K5Scaffold& s) {
  constexpr double kSize = 900.0, kTile = 220.0, kRadius = 300.0;
  static constexpr const char* kColours[] = {"#e63946", "#2a9d8f", "#e9c46a", "#457b9d", "#8338ec"};
  std::array<std::pair<double, double>, 5> origin;
  for (std::size_t i = 0; i < 5; ++i) {
    const double a = -M_PI / 2 + 2 * M_PI * static_cast<double>(i) / 5;
    origin[i] = {kSize / 2 + kRadius * std::cos(a) - kTile / 2, kSize / 2 + kRadius * std::sin(a) - kTile / 2};
  }
  auto X = [&](std::size_t c, const Rational& x) { return origin[c].first + x.get_d() * kTile; };
  auto Y = [&](std::size_t c, const Rational& y) { return origin[c].second + kTile - y.get_d() * kTile; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize << "\" height=\"" << kSize
     << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n"
     << "<title>K5 scaffold over five carpets, level " << s.level << "</title>\n";
  for (std::size_t c = 0; c < 5; ++c) {
    os << "<g id=\"carpet" << c + 1 << "\">\n"
       << "<rect x=\"" << fmt(origin[c].first) << "\" y=\"" << fmt(origin[c].second) << "\" width=\"" << fmt(kTile)
       << "\" height=\"" << fmt(kTile) << "\" fill=\"#dfe3e6\" stroke=\"#555\"/>\n";
    for (const auto& sq : s.approx.removed) {
      const RPoint lo = sq.lower_left();
      const RPoint hi = sq.upper_right();
      os << "<rect x=\"" << fmt(X(c, lo.x)) << "\" y=\"" << fmt(Y(c, hi.y)) << "\" width=\""
         << fmt(sq.side().get_d() * kTile) << "\" height=\"" << fmt(sq.side().get_d() * kTile)
         << "\" fill=\"#ffffff\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";
    }
    const K5Carpet& k = s.carpets[c];
    for (std::size_t l = 0; l < k.star.legs.size(); ++l) {
      os << "<polyline fill=\"none\" stroke=\"" << kColours[static_cast<std::size_t>(k.partners[l] - 1)]
         << "\" stroke-width=\"2\" points=\"";
      for (const auto& p : k.star.legs[l]) os << fmt(X(c, p.x)) << ',' << fmt(Y(c, p.y)) << ' ';
      os << "\"/>\n";
    }
    os << "<circle cx=\"" << fmt(X(c, k.star.center.x)) << "\" cy=\"" << fmt(Y(c, k.star.center.y)) << "\" r=\"4\" fill=\""
       << kColours[c] << "\" stroke=\"#000\"/>\n"
       << "<text x=\"" << fmt(origin[c].first) << "\" y=\"" << fmt(origin[c].second - 6)
       << "\" font-family=\"sans-serif\" font-size=\"14\">v" << c + 1 << "</text>\n"
       << "</g>\n";
  }
  for (const auto& id : s.identifications) {
    const auto a = static_cast<std::size_t>(id.i - 1), b = static_cast<std::size_t>(id.j - 1);
    os << "<line x1=\"" << fmt(X(a, id.point_i.x)) << "\" y1=\"" << fmt(Y(a, id.point_i.y)) << "\" x2=\""
       << fmt(X(b, id.point_j.x)) << "\" y2=\"" << fmt(Y(b, id.point_j.y))
       << "\" stroke=\"#333\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace coxbound
