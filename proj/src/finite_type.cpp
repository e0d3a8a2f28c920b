// Finite-type recognition by matching irreducible components against the
// classified finite Coxeter diagrams A_n, B_n, D_n, E6-8, F4, H3, H4, I2(m).

#include <algorithm>
#include <limits>
#include <sstream>

#include "coxbound/coxeter_system.hpp"

namespace coxbound {
namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(p);
}

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f = sat_mul(f, static_cast<std::uint64_t>(i));
  return f;
}

std::uint64_t pow2(int k) { return k >= 64 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << k; }

struct ComponentVerdict {
  bool finite;
  std::string name;  // diagram name or reason
  std::uint64_t order = 0;
};

std::string describe(const CoxeterSystem& sys, GeneratorSet comp) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Gen g : comp.members()) {
    os << (first ? "" : ",") << sys.name(g);
    first = false;
  }
  os << '}';
  return os.str();
}

ComponentVerdict classify_component(const CoxeterSystem& sys, GeneratorSet comp) {
  const auto gens = comp.members();
  const int k = static_cast<int>(gens.size());
  const std::string label = describe(sys, comp);
  if (k == 1) return {true, "A1", 2};
  if (k == 2) {
    Order m = sys.order(gens[0], gens[1]);
    if (m.is_infinite()) return {false, label + ": infinite dihedral (m = inf)"};
    const int v = m.value();
    std::string name = v == 3 ? "A2" : v == 4 ? "B2" : v == 6 ? "G2" : "I2(" + std::to_string(v) + ")";
    return {true, name, static_cast<std::uint64_t>(2 * v)};
  }

  std::vector<int> degree(static_cast<std::size_t>(k), 0);
  int edges = 0;
  std::vector<std::pair<int, int>> heavy;  // local endpoint indices of edges with m >= 4
  int heavy_label = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      Order m = sys.order(gens[i], gens[j]);
      if (m.is_infinite()) return {false, label + ": contains an edge labelled inf"};
      if (m.value() < 3) continue;
      ++edges;
      ++degree[i];
      ++degree[j];
      if (m.value() >= 4) {
        heavy.emplace_back(i, j);
        heavy_label = m.value();
      }
    }
  }
  if (edges != k - 1) {
    std::string reason = label + ": diagram contains a cycle";
    if (k == 3) {
      auto tt = triangle_type(sys, comp);
      reason += " (" + to_string(tt.kind) + " triangle " + tt.labels[0].to_string() + "," +
                tt.labels[1].to_string() + "," + tt.labels[2].to_string() + ")";
    }
    return {false, reason};
  }
  const int max_deg = *std::max_element(degree.begin(), degree.end());

  if (heavy.size() > 1) return {false, label + ": more than one edge labelled >= 4"};
  if (heavy.size() == 1) {
    if (max_deg > 2) return {false, label + ": branched diagram with an edge labelled >= 4"};
    const auto [a, b] = heavy.front();
    const bool at_end = degree[a] == 1 || degree[b] == 1;
    if (heavy_label == 4) {
      if (at_end) return {true, "B" + std::to_string(k), sat_mul(pow2(k), factorial(k))};
      if (k == 4) return {true, "F4", 1152};
      return {false, label + ": edge labelled 4 inside a path of length > 4"};
    }
    if (heavy_label == 5 && at_end) {
      if (k == 3) return {true, "H3", 120};
      if (k == 4) return {true, "H4", 14400};
    }
    return {false, label + ": edge labelled " + std::to_string(heavy_label) + " in a diagram of rank " +
                       std::to_string(k)};
  }

  if (max_deg <= 2) return {true, "A" + std::to_string(k), factorial(k + 1)};
  if (max_deg > 3) return {false, label + ": vertex of degree > 3"};
  if (std::count(degree.begin(), degree.end(), 3) > 1) return {false, label + ": two branch vertices"};

  // One branch vertex: measure the three arms.
  const int center = static_cast<int>(std::find(degree.begin(), degree.end(), 3) - degree.begin());
  auto adjacent = [&](int i, int j) {
    Order m = sys.order(gens[i], gens[j]);
    return i != j && m.value() >= 3;
  };
  std::vector<int> arms;
  for (int start = 0; start < k; ++start) {
    if (!adjacent(center, start)) continue;
    int prev = center, cur = start, len = 1;
    while (true) {
      int next = -1;
      for (int j = 0; j < k; ++j)
        if (j != prev && adjacent(cur, j)) next = j;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {true, "D" + std::to_string(k), sat_mul(pow2(k - 1), factorial(k))};
  if (arms[0] == 1 && arms[1] == 2) {
    if (arms[2] == 2) return {true, "E6", 51840};
    if (arms[2] == 3) return {true, "E7", 2903040};
    if (arms[2] == 4) return {true, "E8", 696729600};
  }
  return {false, label + ": branched simply-laced diagram that is not D or E"};
}

}  // namespace

FiniteTypeVerdict is_finite_type(const CoxeterSystem& sys, GeneratorSet subset) {
  FiniteTypeVerdict v;
  v.finite = true;
  v.order = 1;
  for (GeneratorSet comp : irreducible_components(sys, subset)) {
    auto cv = classify_component(sys, comp);
    if (!cv.finite) {
      if (v.finite) v.witness.clear();
      v.finite = false;
      v.order = 0;
      v.witness.push_back(cv.name);
    } else if (v.finite) {
      v.witness.push_back(cv.name);
      v.order = sat_mul(v.order, cv.order);
    }
  }
  return v;
}

}  // namespace coxbound
