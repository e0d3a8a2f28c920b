// HLT coset enumeration for W_T acting on the cosets of the trivial subgroup.
// All generators are involutions, so each column is its own inverse column and
// the relators s^2 hold by construction; only (st)^m_st needs scanning.

#include <numeric>

#include "coxbound/words.hpp"

namespace coxbound {
namespace {

class Enumerator {
 public:
  Enumerator(int gens, std::size_t cap) : k_(gens), cap_(cap) { new_coset(); }

  bool full() const { return parent_.size() >= cap_; }
  std::size_t defined() const { return parent_.size(); }
  bool alive(std::int32_t c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  std::int32_t& at(std::int32_t c, int x) { return table_[static_cast<std::size_t>(c) * k_ + static_cast<std::size_t>(x)]; }

  bool define(std::int32_t c, int x) {
    if (full()) return false;
    const std::int32_t d = new_coset();
    at(c, x) = d;
    at(d, x) = c;
    return true;
  }

  /// Returns false when the cap stopped a needed definition.
  bool scan_and_fill(std::int32_t c, const std::vector<int>& rel) {
    const int len = static_cast<int>(rel.size());
    std::int32_t f = c, b = c;
    int i = 0, j = len - 1;
    while (true) {
      while (i <= j && at(f, rel[i]) >= 0) f = at(f, rel[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && at(b, rel[j]) >= 0) b = at(b, rel[j--]);
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        at(f, rel[i]) = b;
        at(b, rel[i]) = f;
        return true;
      }
      if (!define(f, rel[i])) return false;
    }
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      std::int32_t next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t q = 0; q < queue_.size(); ++q) {
      const std::int32_t e = queue_[q];
      for (int x = 0; x < k_; ++x) {
        const std::int32_t f = at(e, x);
        if (f < 0) continue;
        at(f, x) = -1;
        const std::int32_t e1 = rep(e), f1 = rep(f);
        if (at(e1, x) >= 0) {
          merge(f1, at(e1, x));
        } else if (at(f1, x) >= 0) {
          merge(e1, at(f1, x));
        } else {
          at(e1, x) = f1;
          at(f1, x) = e1;
        }
      }
    }
  }

  int k_;

 private:
  std::int32_t new_coset() {
    const auto c = static_cast<std::int32_t>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + static_cast<std::size_t>(k_), -1);
    return c;
  }

  void merge(std::int32_t k, std::int32_t l) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    const std::int32_t lo = std::min(k, l), hi = std::max(k, l);
    parent_[static_cast<std::size_t>(hi)] = lo;
    queue_.push_back(hi);
  }

  std::size_t cap_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> queue_;
};

}  // namespace

CosetTable todd_coxeter_enumerate(const CoxeterSystem& sys, GeneratorSet subset, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("coset cap must be >= 1");
  CosetTable out;
  out.generators = subset.members();
  const int k = static_cast<int>(out.generators.size());

  std::vector<std::vector<int>> relators;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      const Order m = sys.order(out.generators[a], out.generators[b]);
      if (m.is_infinite()) continue;
      std::vector<int> rel;
      for (int r = 0; r < m.value(); ++r) {
        rel.push_back(a);
        rel.push_back(b);
      }
      relators.push_back(std::move(rel));
    }

  Enumerator en(k, cap);
  bool capped = false;
  for (std::int32_t c = 0; static_cast<std::size_t>(c) < en.defined() && !capped; ++c) {
    for (const auto& rel : relators) {
      if (!en.alive(c)) break;
      if (!en.scan_and_fill(c, rel)) {
        capped = true;
        break;
      }
    }
    for (int x = 0; x < k && !capped; ++x) {
      if (!en.alive(c)) break;
      if (en.at(c, x) < 0 && !en.define(c, x)) capped = true;
    }
  }
  out.cosets_defined = en.defined();

  std::vector<std::int32_t> live;
  std::vector<std::int32_t> renumber(en.defined(), -1);
  for (std::int32_t c = 0; static_cast<std::size_t>(c) < en.defined(); ++c) {
    if (en.alive(c)) {
      renumber[static_cast<std::size_t>(c)] = static_cast<std::int32_t>(live.size());
      live.push_back(c);
    }
  }
  for (std::int32_t c : live) {
    std::vector<std::int32_t> row(static_cast<std::size_t>(k), -1);
    for (int x = 0; x < k; ++x) {
      const std::int32_t d = en.at(c, x);
      if (d >= 0) row[static_cast<std::size_t>(x)] = renumber[static_cast<std::size_t>(en.rep(d))];
      if (d < 0) capped = true;
    }
    out.rows.push_back(std::move(row));
  }
  if (!capped) {
    out.status = EnumerationStatus::Complete;
    out.order = out.rows.size();
  }
  return out;
}

}  // namespace coxbound
