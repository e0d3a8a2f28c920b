#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxbound/coxeter_system.hpp"

namespace coxbound {

using Word = std::vector<Gen>;
using ElementId = std::int32_t;

/// ShortLex-least reduced word of a group element (generator order = input order).
struct NormalForm {
  Word word;
  std::size_t length() const { return word.size(); }
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

class WordLengthOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Word-problem kernel for one Coxeter system.
///
/// Elements are interned lazily. Each element stores its right descent set and a
/// parent link (w, t) with t = min right descent, so elements are keyed by the
/// right-greedy reduced word. Descents of a new element ws are found by peeling
/// the dihedral coset part: t is a descent of ws iff the {s,t}-component of ws
/// has length m_st, which only needs descents of shorter elements. This is Tits'
/// braid-move solution memoized per element.
///
/// Not thread-safe: the memo is mutated by every query. Use one instance per thread.
class WordProblem {
 public:
  explicit WordProblem(CoxeterSystem sys, std::size_t max_length = 20);

  const CoxeterSystem& system() const { return sys_; }
  std::size_t max_length() const { return max_length_; }

  ElementId identity() const { return 0; }
  ElementId multiply(ElementId w, Gen s);
  ElementId evaluate(std::span<const Gen> word);
  ElementId inverse(ElementId w);

  std::size_t length(ElementId w) const { return nodes_.at(static_cast<std::size_t>(w)).length; }
  GeneratorSet right_descents(ElementId w) const { return GeneratorSet(nodes_.at(static_cast<std::size_t>(w)).descents); }
  /// Reduced word whose last letter is always the smallest right descent.
  Word right_greedy_word(ElementId w) const;
  NormalForm normal_form_of(ElementId w);

  std::size_t interned() const { return nodes_.size(); }

 private:
  struct Node {
    ElementId parent;
    Gen last;
    std::uint32_t length;
    std::uint64_t descents;
  };

  ElementId down(ElementId w, Gen s);
  ElementId up(ElementId w, Gen s);
  ElementId& cached(ElementId w, Gen s) { return mult_[static_cast<std::size_t>(w) * n_ + static_cast<std::size_t>(s)]; }
  bool is_descent(ElementId w, Gen s) const { return (nodes_[static_cast<std::size_t>(w)].descents >> s) & 1u; }

  CoxeterSystem sys_;
  std::size_t n_;
  std::size_t max_length_;
  std::vector<Node> nodes_;
  std::vector<ElementId> mult_;  // nodes_.size() * n_, -1 = unknown
  std::unordered_map<std::uint64_t, ElementId> by_parent_;
};

NormalForm tits_normal_form(WordProblem& wp, std::span<const Gen> word);
NormalForm tits_normal_form(const CoxeterSystem& sys, std::span<const Gen> word);
bool words_equal(WordProblem& wp, std::span<const Gen> a, std::span<const Gen> b);
bool words_equal(const CoxeterSystem& sys, std::span<const Gen> a, std::span<const Gen> b);

/// Parses "s t s" style words against generator names; "" or "e" is the identity.
Word parse_word(const CoxeterSystem& sys, std::string_view text);
std::string format_word(const CoxeterSystem& sys, const Word& w);

enum class EnumerationStatus { Complete, Incomplete };

struct CosetTable {
  EnumerationStatus status = EnumerationStatus::Incomplete;
  std::vector<Gen> generators;  // column j is generator generators[j]
  /// Compacted rows when complete; row 0 is the trivial coset. -1 entries only when incomplete.
  std::vector<std::vector<std::int32_t>> rows;
  std::size_t cosets_defined = 0;
  /// Group order when complete.
  std::uint64_t order = 0;
};

/// HLT coset enumeration of W_T over the trivial subgroup with a hard coset cap.
CosetTable todd_coxeter_enumerate(const CoxeterSystem& sys, GeneratorSet subset, std::size_t cap);

struct CayleyEdge {
  std::int32_t from, to;  // indices into CayleyBall::vertices
  Gen label;
};

struct CayleyBall {
  int radius = 0;
  std::vector<ElementId> elements;  // BFS order
  std::vector<NormalForm> vertices;
  std::vector<std::uint32_t> lengths;
  std::vector<CayleyEdge> edges;    // each undirected edge once, from < to
  /// neighbor[v * n + s] = index of v*s in the ball, or -1.
  std::vector<std::int32_t> neighbor;
  std::vector<std::size_t> sphere_sizes;
};

CayleyBall cayley_ball(WordProblem& wp, int radius);
CayleyBall cayley_ball(const CoxeterSystem& sys, int radius);

}  // namespace coxbound
