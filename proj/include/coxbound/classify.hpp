#pragma once

#include <string>
#include <vector>

#include "coxbound/coxeter_system.hpp"
#include "coxbound/nerve.hpp"

namespace coxbound {

enum class BoundaryKind { Circle, SierpinskiCarpet, MengerCurve, EmptyOrFinite, OutOfScope };

struct BoundaryClass {
  BoundaryKind kind = BoundaryKind::OutOfScope;
  /// Machine-readable reason for OutOfScope ("nerve_not_complete", "nerve_has_2_simplex", ...).
  /// For Circle: "euclidean" or "hyperbolic".
  std::string detail;
};

std::string to_string(BoundaryKind k);

struct TriangleCensusEntry {
  GeneratorSet triple;
  TriangleType type;
};

struct ClassificationReport {
  CoxeterSystem system;
  BoundaryClass boundary;
  int n = 0;
  bool serre_fa = false;
  std::vector<GeneratorSet> euclidean_triples;
  bool has_euclidean_triple = false;
  /// Absence of Euclidean triples; meaningful for complete 1-dimensional nerves.
  bool hyperbolic = false;
  bool isolated_flats = false;
  std::vector<TriangleCensusEntry> triangle_census;
  std::vector<std::string> citations;
};

/// True iff every pairwise product has finite order (sufficient for property FA).
bool serre_fa_criterion(const CoxeterSystem& sys);

/// All 3-subsets whose reciprocal label sum is exactly 1, in lexicographic order.
std::vector<GeneratorSet> euclidean_triple_scan(const CoxeterSystem& sys);

/// Precondition: the nerve is a complete graph of dimension 1. Confirms that no
/// vertex has two incident edges labelled 2 and returns true; throws
/// std::logic_error if the mechanism is violated, std::invalid_argument if the
/// precondition fails.
bool isolated_flats_check(const CoxeterSystem& sys, const NerveComplex& nerve);

ClassificationReport classify_boundary(const CoxeterSystem& sys);

}  // namespace coxbound
