// Star routing on the midline grid of kept cells. Purely combinatorial: cells
// are integer pairs at the approximation level, legs are vertex-disjoint paths
// found by unit-capacity max-flow with split vertices.

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

#include "coxbound/carpet.hpp"

namespace coxbound {
namespace {

struct Cell {
  std::int64_t x, y;
  friend bool operator==(const Cell&, const Cell&) = default;
};

std::int64_t pow3(int k) {
  std::int64_t p = 1;
  for (int i = 0; i < k; ++i) p *= 3;
  return p;
}

// Kept cell adjacent to the marked point, across the peripheral boundary.
Cell terminal_cell(const CarpetApprox& c, const MarkedPoint& m) {
  const std::int64_t n = pow3(c.level);
  const Rational px = m.point.x * static_cast<long>(n);
  const Rational py = m.point.y * static_cast<long>(n);
  auto half_integer = [](const Rational& v) { return v.get_den() == 2; };
  auto integer = [](const Rational& v) { return v.get_den() == 1; };
  auto floor_of = [](const Rational& v) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return static_cast<std::int64_t>(q.get_si());
  };
  std::int64_t x0 = 0, y0 = 0, x1 = n, y1 = n;
  if (!m.peripheral.outer) {
    const std::int64_t scale = pow3(c.level - m.peripheral.square.level);
    x0 = m.peripheral.square.x * scale;
    y0 = m.peripheral.square.y * scale;
    x1 = x0 + scale;
    y1 = y0 + scale;
  }
  const int inward = m.peripheral.outer ? 1 : -1;  // outer: step inside; hole: step outside
  if (integer(py) && half_integer(px) && px > x0 && px < x1) {
    const std::int64_t cx = floor_of(px);
    if (py == y0) return {cx, inward > 0 ? y0 : y0 - 1};
    if (py == y1) return {cx, inward > 0 ? y1 - 1 : y1};
  }
  if (integer(px) && half_integer(py) && py > y0 && py < y1) {
    const std::int64_t cy = floor_of(py);
    if (px == x0) return {inward > 0 ? x0 : x0 - 1, cy};
    if (px == x1) return {inward > 0 ? x1 - 1 : x1, cy};
  }
  throw std::invalid_argument("marked point " + to_string(m.point) +
                              " is not the midpoint of a cell edge on its peripheral square at level " +
                              std::to_string(c.level));
}

class FlowGraph {
 public:
  explicit FlowGraph(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

  void add_edge(int u, int v, int cap) {
    edges_.push_back({v, head_[static_cast<std::size_t>(u)], cap});
    head_[static_cast<std::size_t>(u)] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({u, head_[static_cast<std::size_t>(v)], 0});
    head_[static_cast<std::size_t>(v)] = static_cast<int>(edges_.size()) - 1;
  }

  int max_flow(int s, int t, int limit) {
    int flow = 0;
    while (flow < limit) {
      std::vector<int> via(head_.size(), -1);
      std::deque<int> queue{s};
      via[static_cast<std::size_t>(s)] = -2;
      while (!queue.empty() && via[static_cast<std::size_t>(t)] == -1) {
        const int u = queue.front();
        queue.pop_front();
        for (int e = head_[static_cast<std::size_t>(u)]; e >= 0; e = edges_[static_cast<std::size_t>(e)].next) {
          const auto& ed = edges_[static_cast<std::size_t>(e)];
          if (ed.cap > 0 && via[static_cast<std::size_t>(ed.to)] == -1) {
            via[static_cast<std::size_t>(ed.to)] = e;
            queue.push_back(ed.to);
          }
        }
      }
      if (via[static_cast<std::size_t>(t)] == -1) break;
      for (int v = t; v != s;) {
        const int e = via[static_cast<std::size_t>(v)];
        edges_[static_cast<std::size_t>(e)].cap -= 1;
        edges_[static_cast<std::size_t>(e ^ 1)].cap += 1;
        v = edges_[static_cast<std::size_t>(e ^ 1)].to;
      }
      ++flow;
    }
    return flow;
  }

  /// Saturated forward edges out of u (original capacity 1, now 0).
  std::vector<int> flow_targets(int u) const {
    std::vector<int> out;
    for (int e = head_[static_cast<std::size_t>(u)]; e >= 0; e = edges_[static_cast<std::size_t>(e)].next) {
      if (e % 2 == 0 && edges_[static_cast<std::size_t>(e)].cap == 0) out.push_back(edges_[static_cast<std::size_t>(e)].to);
    }
    return out;
  }

  /// Follow and consume one unit of flow from u.
  int take_flow(int u) {
    for (int e = head_[static_cast<std::size_t>(u)]; e >= 0; e = edges_[static_cast<std::size_t>(e)].next) {
      auto& ed = edges_[static_cast<std::size_t>(e)];
      if (e % 2 == 0 && edges_[static_cast<std::size_t>(e ^ 1)].cap > 0) {
        edges_[static_cast<std::size_t>(e ^ 1)].cap -= 1;
        return ed.to;
      }
    }
    return -1;
  }

 private:
  struct Edge {
    int to, next, cap;
  };
  std::vector<int> head_;
  std::vector<Edge> edges_;
};

// Drops interior points of straight runs.
std::vector<RPoint> simplify(std::vector<RPoint> pts) {
  std::vector<RPoint> out;
  for (auto& p : pts) {
    while (out.size() >= 2 && orientation(out[out.size() - 2], out.back(), p) == 0) out.pop_back();
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

CarpetStar embed_star_in_carpet(const CarpetApprox& c, std::span<const MarkedPoint> marked) {
  const std::size_t k = marked.size();
  if (k == 0) throw std::invalid_argument("a star needs at least one leg");
  if (k > 4) throw std::invalid_argument("the midline router supports at most 4 legs (one per grid direction)");
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (marked[i].point == marked[j].point) throw std::invalid_argument("two marked points coincide");
      if (marked[i].peripheral == marked[j].peripheral) {
        throw std::invalid_argument("marked points must lie on distinct peripheral squares");
      }
    }
    if (!marked[i].peripheral.outer &&
        std::find(c.removed.begin(), c.removed.end(), marked[i].peripheral.square) == c.removed.end()) {
      throw std::invalid_argument("peripheral square is not a removed square of this approximation");
    }
    if (!on_peripheral_boundary(marked[i].peripheral, marked[i].point)) {
      throw std::invalid_argument("marked point " + to_string(marked[i].point) + " is not on its peripheral square");
    }
  }

  const std::int64_t n = pow3(c.level);
  std::vector<Cell> terminals;
  for (const auto& m : marked) {
    Cell t = terminal_cell(c, m);
    if (t.x < 0 || t.y < 0 || t.x >= n || t.y >= n || !is_kept_cell(t.x, t.y, c.level)) {
      throw RoutingError("no kept cell next to marked point " + to_string(m.point));
    }
    if (std::find(terminals.begin(), terminals.end(), t) != terminals.end()) {
      throw RoutingError("two marked points share their access cell at level " + std::to_string(c.level));
    }
    terminals.push_back(t);
  }

  auto id = [n](Cell cell) { return static_cast<int>(cell.y * n + cell.x); };
  const int cells = static_cast<int>(n * n);

  // Candidate centres: kept, not a terminal, closest to the terminals first.
  std::vector<std::pair<std::int64_t, Cell>> candidates;
  for (std::int64_t y = 0; y < n; ++y)
    for (std::int64_t x = 0; x < n; ++x) {
      Cell cell{x, y};
      if (!is_kept_cell(x, y, c.level)) continue;
      if (std::find(terminals.begin(), terminals.end(), cell) != terminals.end()) continue;
      std::int64_t cost = 0;
      for (const auto& t : terminals) cost += std::llabs(t.x - x) + std::llabs(t.y - y);
      candidates.push_back({cost, cell});
    }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  const Rational h(1, static_cast<unsigned long>(n));
  auto centre_of = [&](Cell cell) {
    return RPoint{(Rational(static_cast<long>(2 * cell.x + 1)) * h) / 2, (Rational(static_cast<long>(2 * cell.y + 1)) * h) / 2};
  };

  for (const auto& [cost, centre] : candidates) {
    // Node layout: in(v) = 2v, out(v) = 2v + 1, sink = 2 * cells.
    const int sink = 2 * cells;
    FlowGraph g(2 * cells + 1);
    for (std::int64_t y = 0; y < n; ++y) {
      for (std::int64_t x = 0; x < n; ++x) {
        if (!is_kept_cell(x, y, c.level)) continue;
        const Cell cell{x, y};
        const int v = id(cell);
        g.add_edge(2 * v, 2 * v + 1, cell == centre ? static_cast<int>(k) : 1);
        static constexpr int kDx[] = {1, -1, 0, 0};
        static constexpr int kDy[] = {0, 0, 1, -1};
        for (int d = 0; d < 4; ++d) {
          const Cell nb{x + kDx[d], y + kDy[d]};
          if (nb.x < 0 || nb.y < 0 || nb.x >= n || nb.y >= n || !is_kept_cell(nb.x, nb.y, c.level)) continue;
          if (nb == centre) continue;
          g.add_edge(2 * v + 1, 2 * id(nb), 1);
        }
      }
    }
    for (const auto& t : terminals) g.add_edge(2 * id(t) + 1, sink, 1);
    if (g.max_flow(2 * id(centre) + 1, sink, static_cast<int>(k)) < static_cast<int>(k)) continue;

    CarpetStar star{centre_of(centre), std::vector<std::vector<RPoint>>(k)};
    for (std::size_t leg = 0; leg < k; ++leg) {
      std::vector<RPoint> pts{star.center};
      int node = 2 * id(centre) + 1;
      std::size_t which = k;
      while (true) {
        const int next = g.take_flow(node);
        if (next == sink) {
          const Cell last{static_cast<std::int64_t>((node / 2) % n), static_cast<std::int64_t>((node / 2) / n)};
          which = static_cast<std::size_t>(std::find(terminals.begin(), terminals.end(), last) - terminals.begin());
          break;
        }
        if (next < 0) throw std::logic_error("flow decomposition broke");
        const int v = next / 2;
        pts.push_back(centre_of({v % n, v / n}));
        node = 2 * v + 1;  // through the unit vertex capacity
      }
      if (which >= k || !star.legs[which].empty()) throw std::logic_error("flow reached an unexpected terminal");
      pts.push_back(marked[which].point);
      star.legs[which] = simplify(std::move(pts));
    }
    return star;
  }
  throw RoutingError("no vertex-disjoint star route exists at carpet level " + std::to_string(c.level));
}

}  // namespace coxbound
