#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxbound/carpet.hpp"

namespace coxbound {

struct K5Options {
  int level = 2;
  /// Without a seed every marked point is a side midpoint; with one, marked
  /// points are drawn among cell-edge midpoints shared by both identified circles.
  std::optional<std::uint64_t> seed;
};

/// Carpets are numbered 1..5. Circle a of carpet i is glued to circle b of carpet
/// j by matching perimeter fractions (counterclockwise from the lower-left
/// corner), and p_{i,j} = p_{j,i} is the point at fraction theta on both.
struct K5Identification {
  int i = 0, j = 0;  // i < j
  PeripheralRef circle_i, circle_j;
  Rational theta;
  RPoint point_i, point_j;
};

struct K5Carpet {
  int index = 0;
  /// partners[k] is the carpet reached by leg k, ascending.
  std::vector<int> partners;
  std::vector<MarkedPoint> marked;
  CarpetStar star;  // centre v_i, leg k = e_{partners[k]}^i
};

struct K5Scaffold {
  int level = 0;
  CarpetApprox approx;  // shared by all five carpets
  std::array<K5Carpet, 5> carpets;
  std::vector<K5Identification> identifications;
  /// Abstract graph: edge (i, j) is leg e_j^i followed by leg e_i^j.
  std::vector<std::pair<int, int>> edges;
};

class RoutingFailure : public std::runtime_error {
 public:
  RoutingFailure(int carpet, const std::string& what)
      : std::runtime_error("carpet " + std::to_string(carpet) + ": " + what), carpet_(carpet) {}
  int carpet() const { return carpet_; }

 private:
  int carpet_;
};

/// Peripheral squares used for the four legs of every carpet: the outer
/// boundary, the central level-1 hole, and two level-2 holes. Needs level >= 2.
std::array<PeripheralRef, 4> k5_circle_slots();

/// Throws RoutingFailure (with the carpet index) when a star cannot be routed,
/// std::invalid_argument for a bad level.
K5Scaffold build_k5_scaffold(const K5Options& options = {});

struct K5Verdict {
  bool ok = true;
  std::array<std::array<int, 5>, 5> adjacency{};
  std::size_t edge_count = 0;
  std::vector<std::string> failures;
};

/// Recomputes the abstract graph from the legs and identifications, checks it is
/// K5, and runs the exact star checker on each carpet.
K5Verdict verify_k5_detailed(const K5Scaffold& s);
bool verify_k5_graph(const K5Scaffold& s);

/// Five carpets on a pentagon, each with its star, and dashed links between identified points.
std::string k5_svg(const K5Scaffold& s);

}  // namespace coxbound
