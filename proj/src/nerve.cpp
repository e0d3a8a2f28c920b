#include "coxbound/nerve.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace coxbound {

SimpleGraph SimpleGraph::complete(int n) {
  SimpleGraph g{n, {}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
  return g;
}

SimpleGraph SimpleGraph::complete_bipartite(int a, int b) {
  SimpleGraph g{a + b, {}};
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.edges.emplace_back(i, a + j);
  return g;
}

bool SimpleGraph::has_edge(int i, int j) const {
  auto key = std::minmax(i, j);
  return std::find(edges.begin(), edges.end(), std::pair<int, int>(key.first, key.second)) != edges.end();
}

bool NerveComplex::contains(GeneratorSet simplex) const {
  if (simplex.size() <= 1) return simplex.size() == 1;
  return std::binary_search(simplices.begin(), simplices.end(), simplex, [](GeneratorSet a, GeneratorSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
  });
}

SimpleGraph NerveComplex::one_skeleton() const {
  SimpleGraph g{static_cast<int>(vertices.size()), {}};
  for (const auto& e : edges) g.edges.emplace_back(e.s, e.t);
  return g;
}

NerveComplex build_nerve(const CoxeterSystem& sys, int max_dim) {
  if (max_dim < 1) throw std::invalid_argument("max_dim must be >= 1");
  NerveComplex out;
  out.vertices = sys.generators();
  out.max_dim = max_dim;
  out.dimension = 0;
  const int n = sys.rank();

  std::vector<GeneratorSet> level;
  for (int s = 0; s < n; ++s) level.push_back(GeneratorSet::of({s}));

  for (int size = 2; size <= max_dim + 1 && !level.empty(); ++size) {
    std::set<std::uint64_t> present;
    for (auto s : level) present.insert(s.bits());
    std::set<std::uint64_t> next_bits;
    for (GeneratorSet base : level) {
      const auto members = base.members();
      // Extend only by generators above the current maximum to visit each subset once.
      for (Gen g = members.back() + 1; g < n; ++g) {
        GeneratorSet cand = base;
        cand.insert(g);
        bool facets_ok = true;
        for (Gen drop : cand.members()) {
          GeneratorSet facet = cand;
          facet.erase(drop);
          if (!present.count(facet.bits())) {
            facets_ok = false;
            break;
          }
        }
        if (facets_ok && is_finite_type(sys, cand).finite) next_bits.insert(cand.bits());
      }
    }
    level.clear();
    for (auto b : next_bits) level.emplace_back(b);
    if (!level.empty()) out.dimension = size - 1;
    out.simplices.insert(out.simplices.end(), level.begin(), level.end());
  }

  for (GeneratorSet e : out.simplices) {
    if (e.size() != 2) continue;
    auto m = e.members();
    const int label = sys.order(m[0], m[1]).value();
    out.edges.push_back({m[0], m[1], label, Rational(1) - Rational(1, label)});
  }
  return out;
}

int nerve_dimension(const NerveComplex& n) { return n.dimension; }

std::optional<int> is_complete_1d_nerve(const NerveComplex& n) {
  const int v = static_cast<int>(n.vertices.size());
  if (n.dimension != 1) return std::nullopt;
  if (static_cast<int>(n.edges.size()) != v * (v - 1) / 2) return std::nullopt;
  return v;
}

bool is_planar(const SimpleGraph& g) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph bg(static_cast<std::size_t>(g.vertex_count));
  for (auto [a, b] : g.edges) boost::add_edge(static_cast<std::size_t>(a), static_cast<std::size_t>(b), bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

bool is_planar(const NerveComplex& n) {
  if (n.dimension > 1) throw std::invalid_argument("planarity is only defined here for nerves of dimension <= 1");
  return is_planar(n.one_skeleton());
}

}  // namespace coxbound
