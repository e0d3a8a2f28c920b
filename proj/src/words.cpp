#include "coxbound/words.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

namespace coxbound {

WordProblem::WordProblem(CoxeterSystem sys, std::size_t max_length)
    : sys_(std::move(sys)), n_(static_cast<std::size_t>(sys_.rank())), max_length_(max_length) {
  nodes_.push_back({-1, -1, 0, 0});
  mult_.assign(n_, -1);
}

ElementId WordProblem::multiply(ElementId w, Gen s) {
  if (s < 0 || static_cast<std::size_t>(s) >= n_) throw std::out_of_range("generator index out of range");
  if (ElementId c = cached(w, s); c >= 0) return c;
  const ElementId r = is_descent(w, s) ? down(w, s) : up(w, s);
  cached(w, s) = r;
  cached(r, s) = w;
  return r;
}

ElementId WordProblem::evaluate(std::span<const Gen> word) {
  ElementId x = identity();
  for (Gen g : word) x = multiply(x, g);
  return x;
}

ElementId WordProblem::inverse(ElementId w) {
  Word rw = right_greedy_word(w);
  std::reverse(rw.begin(), rw.end());
  return evaluate(rw);
}

Word WordProblem::right_greedy_word(ElementId w) const {
  Word out;
  for (ElementId x = w; x != 0; x = nodes_[static_cast<std::size_t>(x)].parent) {
    out.push_back(nodes_[static_cast<std::size_t>(x)].last);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

NormalForm WordProblem::normal_form_of(ElementId w) {
  Word rw = right_greedy_word(inverse(w));
  std::reverse(rw.begin(), rw.end());
  return {std::move(rw)};
}

// s is a right descent of w. The last letter t0 of the parent chain is the
// smallest descent; if s != t0 both are descents, so w ends in the longest
// element of <s,t0> and ws = u * (that longest element times s).
ElementId WordProblem::down(ElementId w, Gen s) {
  const Node node = nodes_[static_cast<std::size_t>(w)];
  if (node.last == s) return node.parent;
  const Gen t0 = node.last;
  const Order m = sys_.order(s, t0);
  if (m.is_infinite()) throw std::logic_error("two descents with infinite m_st");
  const int mm = m.value();

  ElementId x = w;
  Gen letter = t0;
  for (int k = 0; k < mm; ++k) {
    x = multiply(x, letter);
    letter = letter == t0 ? s : t0;
  }
  const int len = mm - 1;  // alternating word ending in t0
  for (int i = 0; i < len; ++i) x = multiply(x, (len - 1 - i) % 2 == 0 ? t0 : s);
  return x;
}

ElementId WordProblem::up(ElementId w, Gen s) {
  const std::size_t new_len = nodes_[static_cast<std::size_t>(w)].length + 1u;
  if (new_len > max_length_) {
    throw WordLengthOverflow("reduced length " + std::to_string(new_len) + " exceeds the configured cap " +
                             std::to_string(max_length_));
  }

  std::uint64_t mask = std::uint64_t{1} << s;
  for (Gen t = 0; static_cast<std::size_t>(t) < n_; ++t) {
    if (t == s) continue;
    const Order m = sys_.order(s, t);
    if (m.is_infinite()) continue;
    ElementId x = w;  // ws * s
    int count = 1;
    Gen letter = t;
    while (count < m.value()) {
      if (!is_descent(x, letter)) break;
      x = multiply(x, letter);
      ++count;
      letter = letter == t ? s : t;
    }
    if (count == m.value()) mask |= std::uint64_t{1} << t;
  }

  const Gen tstar = std::countr_zero(mask);
  ElementId parent = w;
  if (tstar != s) {
    const int mm = sys_.order(s, tstar).value();
    ElementId x = w;
    Gen letter = tstar;
    for (int k = 1; k < mm; ++k) {
      x = multiply(x, letter);
      letter = letter == tstar ? s : tstar;
    }
    const int len = mm - 1;  // alternating word ending in s
    for (int i = 0; i < len; ++i) x = multiply(x, (len - 1 - i) % 2 == 0 ? s : tstar);
    parent = x;
  }

  const std::uint64_t key = static_cast<std::uint64_t>(parent) * n_ + static_cast<std::uint64_t>(tstar);
  if (auto it = by_parent_.find(key); it != by_parent_.end()) return it->second;

  const auto id = static_cast<ElementId>(nodes_.size());
  nodes_.push_back({parent, tstar, static_cast<std::uint32_t>(new_len), mask});
  mult_.resize(mult_.size() + n_, -1);
  by_parent_.emplace(key, id);
  return id;
}

NormalForm tits_normal_form(WordProblem& wp, std::span<const Gen> word) {
  Word rev(word.rbegin(), word.rend());
  Word rw = wp.right_greedy_word(wp.evaluate(rev));
  std::reverse(rw.begin(), rw.end());
  return {std::move(rw)};
}

NormalForm tits_normal_form(const CoxeterSystem& sys, std::span<const Gen> word) {
  WordProblem wp(sys, std::max<std::size_t>(20, word.size()));
  return tits_normal_form(wp, word);
}

bool words_equal(WordProblem& wp, std::span<const Gen> a, std::span<const Gen> b) {
  return wp.evaluate(a) == wp.evaluate(b);
}

bool words_equal(const CoxeterSystem& sys, std::span<const Gen> a, std::span<const Gen> b) {
  WordProblem wp(sys, std::max<std::size_t>({20, a.size(), b.size()}));
  return words_equal(wp, a, b);
}

Word parse_word(const CoxeterSystem& sys, std::string_view text) {
  std::istringstream is{std::string(text)};
  std::vector<std::string> toks;
  for (std::string tok; is >> tok;) toks.push_back(tok);
  Word out;
  if (toks.size() == 1 && toks[0] == "e" && !sys.index_of("e")) return out;
  for (const auto& tok : toks) {
    if (auto g = sys.index_of(tok)) {
      out.push_back(*g);
      continue;
    }
    // Compact form "sts" when every character is a one-letter generator.
    for (char c : tok) {
      auto g = sys.index_of(std::string_view(&c, 1));
      if (!g) throw std::invalid_argument("unknown generator in word: '" + tok + "'");
      out.push_back(*g);
    }
  }
  return out;
}

std::string format_word(const CoxeterSystem& sys, const Word& w) {
  std::string out;
  for (Gen g : w) {
    if (!out.empty()) out += ' ';
    out += sys.name(g);
  }
  return out;
}

CayleyBall cayley_ball(WordProblem& wp, int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  const int n = wp.system().rank();
  CayleyBall ball;
  ball.radius = radius;
  std::unordered_map<ElementId, std::int32_t> index;
  ball.elements.push_back(wp.identity());
  index.emplace(wp.identity(), 0);
  for (std::size_t v = 0; v < ball.elements.size(); ++v) {
    if (wp.length(ball.elements[v]) >= static_cast<std::size_t>(radius)) continue;
    for (Gen s = 0; s < n; ++s) {
      const ElementId w = wp.multiply(ball.elements[v], s);
      if (index.count(w)) continue;
      index.emplace(w, static_cast<std::int32_t>(ball.elements.size()));
      ball.elements.push_back(w);
    }
  }
  ball.neighbor.assign(ball.elements.size() * static_cast<std::size_t>(n), -1);
  ball.sphere_sizes.assign(static_cast<std::size_t>(radius) + 1, 0);
  for (std::size_t v = 0; v < ball.elements.size(); ++v) {
    const ElementId g = ball.elements[v];
    ball.lengths.push_back(static_cast<std::uint32_t>(wp.length(g)));
    ++ball.sphere_sizes[wp.length(g)];
    ball.vertices.push_back(wp.normal_form_of(g));
    for (Gen s = 0; s < n; ++s) {
      // Neighbours of frontier vertices may lie outside; never extend past the ball.
      if (wp.length(g) >= static_cast<std::size_t>(radius) && !wp.right_descents(g).contains(s)) continue;
      auto it = index.find(wp.multiply(g, s));
      if (it == index.end()) continue;
      ball.neighbor[v * static_cast<std::size_t>(n) + static_cast<std::size_t>(s)] = it->second;
      if (static_cast<std::int32_t>(v) < it->second) ball.edges.push_back({static_cast<std::int32_t>(v), it->second, s});
    }
  }
  return ball;
}

CayleyBall cayley_ball(const CoxeterSystem& sys, int radius) {
  WordProblem wp(sys, std::max<std::size_t>(20, static_cast<std::size_t>(radius) + 1));
  return cayley_ball(wp, radius);
}

}  // namespace coxbound
