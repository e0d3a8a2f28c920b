#pragma once

#include <array>
#include <string>
#include <vector>

#include "coxbound/coxeter_system.hpp"
#include "coxbound/words.hpp"

namespace coxbound {

enum class TessellationModel { EuclideanPlane, KleinDisk, SphereOrthographic };

struct Point2 {
  double x = 0, y = 0;
};

struct OrbitTriangle {
  NormalForm element;
  std::array<Point2, 3> corners;  // images of the chamber vertices opposite generators 0, 1, 2
  bool visible = true;            // false only for back-hemisphere triangles of a finite group
};

struct Tessellation {
  TessellationModel model;
  TriangleType triangle;
  int depth = 0;
  std::vector<OrbitTriangle> triangles;  // in Cayley-ball BFS order
};

/// Images of the fundamental triangle under all elements of length <= depth.
/// Euclidean triangles are drawn in an isometric affine chart, hyperbolic ones in
/// the projective (Klein) disk, spherical ones (finite groups) orthographically.
/// Throws std::invalid_argument unless the system has rank 3 with a complete nerve.
Tessellation triangle_orbit(const CoxeterSystem& sys, int depth);

/// Chamber vertex images for a word (same chart as triangle_orbit).
std::array<Point2, 3> chamber_image(const CoxeterSystem& sys, std::span<const Gen> word);

std::string tessellation_svg(const Tessellation& t);
std::string tessellation_svg(const CoxeterSystem& sys, int depth);

}  // namespace coxbound
