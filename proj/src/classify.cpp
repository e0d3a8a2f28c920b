#include "coxbound/classify.hpp"

#include <stdexcept>

namespace coxbound {

std::string to_string(BoundaryKind k) {
  switch (k) {
    case BoundaryKind::Circle: return "Circle";
    case BoundaryKind::SierpinskiCarpet: return "SierpinskiCarpet";
    case BoundaryKind::MengerCurve: return "MengerCurve";
    case BoundaryKind::EmptyOrFinite: return "EmptyOrFinite";
    case BoundaryKind::OutOfScope: return "OutOfScope";
  }
  return "?";
}

bool serre_fa_criterion(const CoxeterSystem& sys) {
  for (int s = 0; s < sys.rank(); ++s)
    for (int t = s + 1; t < sys.rank(); ++t)
      if (sys.order(s, t).is_infinite()) return false;
  return true;
}

std::vector<GeneratorSet> euclidean_triple_scan(const CoxeterSystem& sys) {
  std::vector<GeneratorSet> out;
  const int n = sys.rank();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        auto triple = GeneratorSet::of({a, b, c});
        if (triangle_type(sys, triple).kind == TriangleKind::Euclidean) out.push_back(triple);
      }
  return out;
}

bool isolated_flats_check(const CoxeterSystem& sys, const NerveComplex& nerve) {
  if (!is_complete_1d_nerve(nerve)) {
    throw std::invalid_argument("isolated_flats_check needs a complete 1-dimensional nerve");
  }
  for (int s = 0; s < sys.rank(); ++s) {
    int right_angles = 0;
    for (const auto& e : nerve.edges)
      if ((e.s == s || e.t == s) && e.label == 2) ++right_angles;
    if (right_angles >= 2) {
      throw std::logic_error("vertex " + sys.name(s) +
                             " has two incident edges labelled 2 in a 1-dimensional nerve");
    }
  }
  return true;
}

namespace {

std::string triple_name(const CoxeterSystem& sys, GeneratorSet t) {
  std::string out = "{";
  for (Gen g : t.members()) out += (out.size() > 1 ? "," : "") + sys.name(g);
  return out + "}";
}

}  // namespace

ClassificationReport classify_boundary(const CoxeterSystem& sys) {
  ClassificationReport r{sys, {}, sys.rank(), serre_fa_criterion(sys), {}, false, false, false, {}, {}};
  const int n = sys.rank();

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        auto t = GeneratorSet::of({a, b, c});
        r.triangle_census.push_back({t, triangle_type(sys, t)});
      }
  r.euclidean_triples = euclidean_triple_scan(sys);
  r.has_euclidean_triple = !r.euclidean_triples.empty();
  r.hyperbolic = !r.has_euclidean_triple;

  if (r.serre_fa) {
    r.citations.push_back("every product st has finite order: Serre's criterion for property FA holds");
  } else {
    r.citations.push_back("some product st has infinite order: Serre's criterion fails");
  }
  for (auto t : r.euclidean_triples) {
    r.citations.push_back("triple " + triple_name(sys, t) +
                          " has reciprocal label sum exactly 1: a Euclidean triangle subgroup, so flats exist");
  }

  const auto whole = is_finite_type(sys, sys.all());
  if (whole.finite) {
    r.boundary = {BoundaryKind::EmptyOrFinite, ""};
    r.isolated_flats = true;
    std::string names;
    for (const auto& w : whole.witness) names += (names.empty() ? "" : " x ") + w;
    r.citations.push_back("W is finite of type " + names + " (order " + std::to_string(whole.order) +
                          "): empty boundary, no flats");
    return r;
  }

  const NerveComplex nerve = build_nerve(sys, 2);
  if (nerve.dimension >= 2) {
    r.boundary = {BoundaryKind::OutOfScope, "nerve_has_2_simplex"};
    r.citations.push_back("nerve contains a 2-simplex (a finite triple): outside the complete-graph regime");
    return r;
  }
  const auto complete = is_complete_1d_nerve(nerve);
  if (!complete) {
    r.boundary = {BoundaryKind::OutOfScope, "nerve_not_complete"};
    r.citations.push_back("some pair has m_st = inf: the nerve is not a complete graph");
    return r;
  }

  r.isolated_flats = isolated_flats_check(sys, nerve);
  r.citations.push_back("nerve is the complete graph K" + std::to_string(n) +
                        " of dimension 1; no two adjacent edges are labelled 2, so W has isolated flats");

  if (n == 3) {
    const bool euclidean = r.has_euclidean_triple;
    r.boundary = {BoundaryKind::Circle, euclidean ? "euclidean" : "hyperbolic"};
    r.citations.push_back(std::string("infinite triangle group acting as a reflection group on the ") +
                          (euclidean ? "Euclidean" : "hyperbolic") + " plane: boundary is a circle");
  } else if (n == 4) {
    r.boundary = {BoundaryKind::SierpinskiCarpet, ""};
    r.citations.push_back("nerve K4 is planar; the four triangle subgroups have disjoint circle limit sets: "
                          "boundary is the Sierpinski carpet");
  } else {
    r.boundary = {BoundaryKind::MengerCurve, ""};
    r.citations.push_back("nerve K" + std::to_string(n) +
                          " with n >= 5: K5 embeds in the boundary via five carpets, so it is non-planar: "
                          "boundary is the Menger curve");
  }
  return r;
}

}  // namespace coxbound
