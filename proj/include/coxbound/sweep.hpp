#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxbound/classify.hpp"

namespace coxbound {

struct SweepOptions {
  int n_min = 3, n_max = 6;
  std::vector<int> labels{3};
  /// Per n: enumerate every label assignment when there are at most this many,
  /// otherwise the uniform systems plus a seeded sample of distinct assignments.
  std::size_t limit = 5000;
  std::uint64_t seed = 1;
};

struct SweepRow {
  int n = 0;
  /// Edge labels joined by '-', pairs in order (0,1), (0,2), ..., (n-2,n-1).
  std::string signature;
  BoundaryKind boundary = BoundaryKind::OutOfScope;
  std::string boundary_note;
  bool hyperbolic = false;
};

/// Complete-graph systems s1..sn with labels drawn from the label set.
/// Throws std::invalid_argument outside n in [3,8] or labels in [2,12].
std::vector<CoxeterSystem> sweep_systems(const SweepOptions& opt);

/// Classifies every generated system; rows in generation order.
std::vector<SweepRow> run_sweep(const SweepOptions& opt);

std::string signature_of(const CoxeterSystem& sys);

}  // namespace coxbound
