#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "coxbound/coxeter_system.hpp"

namespace coxbound {

struct SimpleGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, no duplicates

  static SimpleGraph complete(int n);
  static SimpleGraph complete_bipartite(int a, int b);
  bool has_edge(int i, int j) const;
};

struct NerveEdge {
  Gen s, t;  // s < t
  int label;
  /// Angular length as a multiple of pi: 1 - 1/m_st.
  Rational length_over_pi;
};

/// Nerve of a Coxeter system, stored up to simplices of size max_dim + 1.
struct NerveComplex {
  std::vector<std::string> vertices;
  /// Finite-type subsets of size >= 2 (vertices implicit), ordered by size then bits.
  std::vector<GeneratorSet> simplices;
  std::vector<NerveEdge> edges;
  int dimension = 0;
  int max_dim = 2;

  bool contains(GeneratorSet simplex) const;
  SimpleGraph one_skeleton() const;
};

/// Enumerates finite-type subsets level by level, only extending subsets whose
/// every facet is already present.
NerveComplex build_nerve(const CoxeterSystem& sys, int max_dim = 2);

int nerve_dimension(const NerveComplex& n);

/// n when the nerve is the complete graph K_n with no 2-simplex.
std::optional<int> is_complete_1d_nerve(const NerveComplex& n);

bool is_planar(const SimpleGraph& g);
/// Throws std::invalid_argument when the nerve has a 2-simplex.
bool is_planar(const NerveComplex& n);

}  // namespace coxbound
