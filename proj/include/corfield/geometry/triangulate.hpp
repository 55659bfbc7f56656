#pragma once

#include <Eigen/Dense>

#include "corfield/geometry/camera.hpp"
#include "corfield/geometry/ray.hpp"

namespace corfield::geometry {

constexpr double kParallelTolerance = 1e-10;

struct TriangulationResult {
  Eigen::Vector3d x_q;       // closest point on the query ray
  Eigen::Vector3d x_s;       // closest point on the support ray
  Eigen::Vector3d midpoint;  // (x_q + x_s) / 2
  double gap = 0.0;          // ||x_q - x_s||
  double t_q = 0.0;
  double t_s = 0.0;

  // Both closest points lie in front of their ray origins.
  bool forward() const { return t_q > 0.0 && t_s > 0.0; }
};

// Closest pair of points between two ray-supporting lines, via the 2x2
// normal equations. Throws DegenerateGeometry when |1 - |d_q.d_s|| <=
// kParallelTolerance. Swapping the arguments swaps (x_q, x_s) and
// reproduces midpoint and gap bit-for-bit.
TriangulationResult closest_points(const Ray& ray_q, const Ray& ray_s);

// Symmetric reprojection error of the two closest points, in pixels:
// (||proj_q(x_s) - p_q|| + ||proj_s(x_q) - p_s||) / 2.
// Propagates DegenerateGeometry from the triangulation and DomainError
// when a closest point falls behind a camera.
double projected_ray_distance(const Camera& cam_q, const Camera& cam_s,
                              const PixelCoord& p_q, const PixelCoord& p_s);

}  // namespace corfield::geometry
