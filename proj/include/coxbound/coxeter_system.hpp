#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "coxbound/rational.hpp"

namespace coxbound {

using Gen = int;

/// Order m_st of a product of two generators: an integer >= 1 or infinity.
class Order {
 public:
  constexpr Order() = default;
  static constexpr Order finite(int m) { return Order(m); }
  static constexpr Order infinite() { return Order(0); }

  constexpr bool is_infinite() const { return m_ == 0; }
  constexpr bool is_finite() const { return m_ != 0; }
  /// Only meaningful when finite.
  constexpr int value() const { return m_; }

  /// 1/m, with infinity contributing 0.
  Rational reciprocal() const { return is_infinite() ? Rational(0) : Rational(1, m_); }

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(m_); }

  friend constexpr bool operator==(Order, Order) = default;

 private:
  constexpr explicit Order(int m) : m_(m) {}
  int m_ = 0;
};

/// A subset of the generators of one system, stored as a bitmask in input order.
class GeneratorSet {
 public:
  constexpr GeneratorSet() = default;
  constexpr explicit GeneratorSet(std::uint64_t bits) : bits_(bits) {}
  static GeneratorSet of(std::initializer_list<Gen> gens) {
    GeneratorSet s;
    for (Gen g : gens) s.insert(g);
    return s;
  }
  static constexpr GeneratorSet first(int n) {
    return GeneratorSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr bool contains(Gen g) const { return (bits_ >> g) & 1u; }
  constexpr void insert(Gen g) { bits_ |= std::uint64_t{1} << g; }
  constexpr void erase(Gen g) { bits_ &= ~(std::uint64_t{1} << g); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool is_subset_of(GeneratorSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<Gen> members() const {
    std::vector<Gen> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr bool operator==(GeneratorSet, GeneratorSet) = default;
  friend constexpr auto operator<=>(GeneratorSet a, GeneratorSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Generators plus a symmetric matrix of orders. Immutable after construction.
class CoxeterSystem {
 public:
  static constexpr int kMaxGenerators = 64;

  /// Every unspecified off-diagonal pair is infinite. Throws std::invalid_argument
  /// on duplicate names, too many generators, or an off-diagonal order below 2.
  explicit CoxeterSystem(std::vector<std::string> generators);

  /// Convenience: all pairs get the same order.
  static CoxeterSystem complete(int n, Order label);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& generators() const { return names_; }
  const std::string& name(Gen g) const { return names_.at(g); }
  std::optional<Gen> index_of(std::string_view name) const;
  GeneratorSet all() const { return GeneratorSet::first(rank()); }

  Order order(Gen s, Gen t) const;
  /// Sets m_st = m_ts. Used while building; rejects labels < 2.
  void set_order(Gen s, Gen t, Order m);

  /// Same group with generators renamed/reordered: new generator i is old generator perm[i].
  CoxeterSystem permuted(const std::vector<Gen>& perm) const;

  std::string to_presentation() const;

  friend bool operator==(const CoxeterSystem&, const CoxeterSystem&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> orders_;  // row-major, 0 = infinity, diagonal 1
};

/// Parses the presentation format: "gens a b c" then "a b 3" lines, "#" comments,
/// ";" also ends a line, labels are integers >= 2 or "inf".
CoxeterSystem parse_system(std::string_view text);
CoxeterSystem load_system(const std::string& path);

enum class TriangleKind { Spherical, Euclidean, Hyperbolic };

struct TriangleType {
  TriangleKind kind;
  std::array<Order, 3> labels;  // (m_rs, m_st, m_rt) for the sorted triple r < s < t
  Rational reciprocal_sum;
};

std::string to_string(TriangleKind k);

/// Classifies a 3-subset by comparing 1/m_rs + 1/m_st + 1/m_rt with 1 exactly.
TriangleType triangle_type(const CoxeterSystem& sys, GeneratorSet triple);

/// Connected components of the Coxeter diagram restricted to the subset
/// (edges: m_st >= 3 or infinite), ordered by smallest member.
std::vector<GeneratorSet> irreducible_components(const CoxeterSystem& sys, GeneratorSet subset);

struct FiniteTypeVerdict {
  bool finite = false;
  /// Finite: diagram names of the components ("A3", "H3", "I2(7)", ...).
  /// Infinite: a description of an infinite irreducible component.
  std::vector<std::string> witness;
  /// Group order when finite (saturates at UINT64_MAX, which no diagram here reaches).
  std::uint64_t order = 0;
};

FiniteTypeVerdict is_finite_type(const CoxeterSystem& sys, GeneratorSet subset);

/// Tits representation on the cosine form B(a_s, a_t) = -cos(pi/m_st), infinity -> -1.
std::vector<Eigen::MatrixXd> geometric_representation(const CoxeterSystem& sys);
Eigen::MatrixXd cosine_form(const CoxeterSystem& sys);

}  // namespace coxbound
