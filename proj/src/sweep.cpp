#include "coxbound/sweep.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace coxbound {
namespace {

CoxeterSystem from_labels(int n, const std::vector<int>& labels) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("s" + std::to_string(i));
  CoxeterSystem sys(std::move(names));
  std::size_t k = 0;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) sys.set_order(s, t, Order::finite(labels[k++]));
  return sys;
}

}  // namespace

std::string signature_of(const CoxeterSystem& sys) {
  std::string out;
  for (int s = 0; s < sys.rank(); ++s)
    for (int t = s + 1; t < sys.rank(); ++t) out += (out.empty() ? "" : "-") + sys.order(s, t).to_string();
  return out;
}

std::vector<CoxeterSystem> sweep_systems(const SweepOptions& opt) {
  if (opt.n_min < 3 || opt.n_max > 8 || opt.n_min > opt.n_max) {
    throw std::invalid_argument("sweep range must satisfy 3 <= n_min <= n_max <= 8");
  }
  std::vector<int> labels = opt.labels;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.empty() || labels.front() < 2 || labels.back() > 12) {
    throw std::invalid_argument("sweep labels must be a nonempty subset of [2,12]");
  }

  std::vector<CoxeterSystem> out;
  std::mt19937_64 rng(opt.seed);
  const std::size_t base = labels.size();
  for (int n = opt.n_min; n <= opt.n_max; ++n) {
    const std::size_t pairs = static_cast<std::size_t>(n * (n - 1) / 2);
    // Total assignments, saturating once past the limit.
    std::size_t total = 1;
    for (std::size_t i = 0; i < pairs && total <= opt.limit; ++i) total *= base;

    if (total <= opt.limit) {
      std::vector<std::size_t> digit(pairs, 0);
      for (std::size_t count = 0; count < total; ++count) {
        std::vector<int> assign(pairs);
        for (std::size_t i = 0; i < pairs; ++i) assign[i] = labels[digit[i]];
        out.push_back(from_labels(n, assign));
        for (std::size_t i = pairs; i-- > 0;) {
          if (++digit[i] < base) break;
          digit[i] = 0;
        }
      }
      continue;
    }

    std::set<std::vector<int>> chosen;
    for (int m : labels) {
      std::vector<int> uniform(pairs, m);
      chosen.insert(uniform);
      out.push_back(from_labels(n, uniform));
    }
    while (chosen.size() < opt.limit) {
      std::vector<int> assign(pairs);
      for (auto& a : assign) a = labels[static_cast<std::size_t>(rng() % base)];
      if (chosen.insert(assign).second) out.push_back(from_labels(n, assign));
    }
  }
  return out;
}

std::vector<SweepRow> run_sweep(const SweepOptions& opt) {
  std::vector<SweepRow> rows;
  for (const auto& sys : sweep_systems(opt)) {
    const auto r = classify_boundary(sys);
    rows.push_back({sys.rank(), signature_of(sys), r.boundary.kind, r.boundary.detail, r.hyperbolic});
  }
  return rows;
}

}  // namespace coxbound
