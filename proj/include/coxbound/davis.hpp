#pragma once

#include <string>
#include <vector>

#include "coxbound/nerve.hpp"
#include "coxbound/words.hpp"

namespace coxbound {

struct DavisFace {
  Gen s, t;  // s < t
  int m;
  /// Vertex cycle g, gs, gst, ... of length 2m starting at the minimal coset element.
  std::vector<std::int32_t> boundary;
};

/// Finite ball of the Davis-Moussong 2-complex for a nerve of dimension <= 1.
/// Vertices and edges are those of the Cayley ball; a 2m-gon is attached for
/// every coset g<s,t> (m_st finite) lying entirely inside the ball.
struct DavisBall {
  CoxeterSystem system;
  int radius = 0;
  CayleyBall cayley;
  std::vector<DavisFace> faces;
  /// faces_at[v] lists indices into faces whose boundary passes through v.
  std::vector<std::vector<std::int32_t>> faces_at;

  std::size_t vertex_count() const { return cayley.vertices.size(); }
  std::size_t edge_count() const { return cayley.edges.size(); }
  std::size_t face_count() const { return faces.size(); }
  int max_finite_label() const;
};

DavisBall build_davis_ball(const CoxeterSystem& sys, int radius);

struct LinkEdge {
  Gen s, t;  // s < t, generator directions
  int m;
  Rational angle_over_pi;  // 1 - 1/m
};

struct LinkGraph {
  std::vector<Gen> directions;
  std::vector<LinkEdge> edges;
};

/// Link of an interior vertex (length <= radius - max m_st), read off from the
/// ball's polygons. Throws std::invalid_argument for frontier vertices.
LinkGraph vertex_link(const DavisBall& ball, std::int32_t vertex);

/// Label-preserving graph isomorphism between a link and the nerve's 1-skeleton
/// (brute force over vertex bijections; intended for small rank).
bool link_isomorphic_to_nerve(const LinkGraph& link, const NerveComplex& nerve);

long euler_characteristic(const DavisBall& ball);

}  // namespace coxbound
