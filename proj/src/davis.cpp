#include "coxbound/davis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace coxbound {

int DavisBall::max_finite_label() const {
  int best = 0;
  for (int s = 0; s < system.rank(); ++s)
    for (int t = s + 1; t < system.rank(); ++t)
      if (system.order(s, t).is_finite()) best = std::max(best, system.order(s, t).value());
  return best;
}

DavisBall build_davis_ball(const CoxeterSystem& sys, int radius) {
  if (radius < 1) throw std::invalid_argument("radius must be >= 1");
  const int n = sys.rank();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (is_finite_type(sys, GeneratorSet::of({a, b, c})).finite) {
          throw std::invalid_argument("nerve has a 2-simplex: the Davis complex is not 2-dimensional");
        }

  WordProblem wp(sys, std::max<std::size_t>(20, static_cast<std::size_t>(radius) + 1));
  DavisBall ball{sys, radius, cayley_ball(wp, radius), {}, {}};
  const auto& cb = ball.cayley;
  const auto nn = static_cast<std::size_t>(n);
  ball.faces_at.resize(cb.vertices.size());

  for (std::size_t v = 0; v < cb.vertices.size(); ++v) {
    const GeneratorSet desc = wp.right_descents(cb.elements[v]);
    for (Gen s = 0; s < n; ++s) {
      for (Gen t = s + 1; t < n; ++t) {
        const Order m = sys.order(s, t);
        if (m.is_infinite()) continue;
        // v is the minimal element of its <s,t>-coset; the coset's longest
        // element has length len(v) + m.
        if (desc.contains(s) || desc.contains(t)) continue;
        if (cb.lengths[v] + static_cast<std::uint32_t>(m.value()) > static_cast<std::uint32_t>(radius)) continue;
        DavisFace face{s, t, m.value(), {}};
        std::int32_t cur = static_cast<std::int32_t>(v);
        for (int k = 0; k < 2 * m.value(); ++k) {
          face.boundary.push_back(cur);
          const Gen g = k % 2 == 0 ? s : t;
          cur = cb.neighbor[static_cast<std::size_t>(cur) * nn + static_cast<std::size_t>(g)];
          if (cur < 0) throw std::logic_error("coset polygon left the ball");
        }
        if (cur != static_cast<std::int32_t>(v)) throw std::logic_error("coset polygon did not close");
        const auto fi = static_cast<std::int32_t>(ball.faces.size());
        for (auto u : face.boundary) ball.faces_at[static_cast<std::size_t>(u)].push_back(fi);
        ball.faces.push_back(std::move(face));
      }
    }
  }
  return ball;
}

LinkGraph vertex_link(const DavisBall& ball, std::int32_t vertex) {
  const auto& cb = ball.cayley;
  if (vertex < 0 || static_cast<std::size_t>(vertex) >= cb.vertices.size()) throw std::out_of_range("vertex");
  const int n = ball.system.rank();
  const int limit = ball.radius - ball.max_finite_label();
  if (static_cast<int>(cb.lengths[static_cast<std::size_t>(vertex)]) > limit) {
    throw std::invalid_argument("vertex is too close to the ball frontier for a complete link");
  }
  LinkGraph link;
  for (Gen s = 0; s < n; ++s) {
    if (cb.neighbor[static_cast<std::size_t>(vertex) * static_cast<std::size_t>(n) + static_cast<std::size_t>(s)] < 0) {
      throw std::logic_error("interior vertex is missing an incident edge");
    }
    link.directions.push_back(s);
  }
  // A corner of a polygon at v joins the two directions of its boundary edges at v.
  for (auto fi : ball.faces_at[static_cast<std::size_t>(vertex)]) {
    const auto& f = ball.faces[static_cast<std::size_t>(fi)];
    const auto len = f.boundary.size();
    const auto pos = static_cast<std::size_t>(
        std::find(f.boundary.begin(), f.boundary.end(), vertex) - f.boundary.begin());
    const auto prev = f.boundary[(pos + len - 1) % len];
    const auto next = f.boundary[(pos + 1) % len];
    auto direction_to = [&](std::int32_t u) {
      for (Gen s = 0; s < n; ++s)
        if (cb.neighbor[static_cast<std::size_t>(vertex) * static_cast<std::size_t>(n) + static_cast<std::size_t>(s)] == u) return s;
      throw std::logic_error("polygon neighbour is not adjacent");
    };
    Gen a = direction_to(prev), b = direction_to(next);
    if (a > b) std::swap(a, b);
    link.edges.push_back({a, b, f.m, Rational(1) - Rational(1, f.m)});
  }
  std::sort(link.edges.begin(), link.edges.end(), [](const LinkEdge& x, const LinkEdge& y) {
    return std::pair(x.s, x.t) < std::pair(y.s, y.t);
  });
  return link;
}

bool link_isomorphic_to_nerve(const LinkGraph& link, const NerveComplex& nerve) {
  const int n = static_cast<int>(nerve.vertices.size());
  if (static_cast<int>(link.directions.size()) != n || link.edges.size() != nerve.edges.size()) return false;
  std::map<std::pair<int, int>, int> link_label, nerve_label;
  for (const auto& e : link.edges) {
    if (e.s == e.t) return false;
    if (!link_label.emplace(std::pair(e.s, e.t), e.m).second) return false;  // not simple
    if (e.angle_over_pi <= 0 || e.angle_over_pi >= 1) return false;
  }
  for (const auto& e : nerve.edges) nerve_label.emplace(std::pair(e.s, e.t), e.label);

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& [key, m] : link_label) {
      auto k = std::minmax(perm[static_cast<std::size_t>(key.first)], perm[static_cast<std::size_t>(key.second)]);
      auto it = nerve_label.find({k.first, k.second});
      if (it == nerve_label.end() || it->second != m) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

long euler_characteristic(const DavisBall& ball) {
  return static_cast<long>(ball.vertex_count()) - static_cast<long>(ball.edge_count()) +
         static_cast<long>(ball.face_count());
}

}  // namespace coxbound
