#pragma once

#include <Eigen/Dense>

#include "corfield/error.hpp"

namespace corfield::geometry {

// Continuous pixel position. Convention: pixel centers sit at integer
// coordinates, origin at the top-left pixel, u rightward, v downward.
struct PixelCoord {
  double u = 0.0;
  double v = 0.0;
};

// Pinhole camera with a world-to-camera rigid transform.
class Camera {
 public:
  // Validates: rotation orthonormal with det +1 (1e-9), positive focal
  // lengths, principal point inside [0,width) x [0,height), no skew.
  Camera(const Eigen::Matrix3d& intrinsics, const Eigen::Matrix3d& rotation,
         const Eigen::Vector3d& translation, int width, int height);

  const Eigen::Matrix3d& intrinsics() const { return intrinsics_; }
  const Eigen::Matrix3d& rotation() const { return rotation_; }
  const Eigen::Vector3d& translation() const { return translation_; }
  int width() const { return width_; }
  int height() const { return height_; }

  double fx() const { return intrinsics_(0, 0); }
  double fy() const { return intrinsics_(1, 1); }
  double cx() const { return intrinsics_(0, 2); }
  double cy() const { return intrinsics_(1, 2); }

  Eigen::Vector3d center() const {
    return -(rotation_.transpose() * translation_);
  }

  Eigen::Vector3d world_to_camera(const Eigen::Vector3d& p) const {
    return rotation_ * p + translation_;
  }

  // True if (u,v) falls on the image footprint: integer-centered pixels
  // cover [-0.5, width-0.5) x [-0.5, height-0.5).
  bool in_bounds(const PixelCoord& p) const {
    return p.u >= -0.5 && p.u < width_ - 0.5 && p.v >= -0.5 &&
           p.v < height_ - 0.5;
  }

  double image_diagonal_px() const {
    return std::sqrt(static_cast<double>(width_) * width_ +
                     static_cast<double>(height_) * height_);
  }

 private:
  Eigen::Matrix3d intrinsics_;
  Eigen::Matrix3d rotation_;
  Eigen::Vector3d translation_;
  int width_;
  int height_;
};

// Pinhole projection of a world point. Throws DomainError when the point
// does not lie strictly in front of the camera.
PixelCoord project(const Camera& camera, const Eigen::Vector3d& point);

}  // namespace corfield::geometry
