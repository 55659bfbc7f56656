#pragma once

#include <Eigen/Dense>

#include "corfield/geometry/camera.hpp"

namespace corfield::geometry {

// r(t) = origin + t * direction, ||direction|| = 1, 0 <= t_near < t_far.
struct Ray {
  Eigen::Vector3d origin;
  Eigen::Vector3d direction;
  double t_near = 0.0;
  double t_far = 1.0;

  Eigen::Vector3d at(double t) const { return origin + t * direction; }
};

// Normalizes the direction and validates the bounds.
Ray make_ray(const Eigen::Vector3d& origin, const Eigen::Vector3d& direction,
             double t_near, double t_far);

// Back-projects a pixel to the ray from the camera center through it.
// Throws DomainError for out-of-bounds pixels or a bad t range.
Ray pixel_to_ray(const Camera& camera, const PixelCoord& pixel, double t_near,
                 double t_far);

}  // namespace corfield::geometry
