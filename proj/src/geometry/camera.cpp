#include "corfield/geometry/camera.hpp"

#include <cmath>
#include <sstream>

namespace corfield::geometry {

Camera::Camera(const Eigen::Matrix3d& intrinsics,
               const Eigen::Matrix3d& rotation,
               const Eigen::Vector3d& translation, int width, int height)
    : intrinsics_(intrinsics),
      rotation_(rotation),
      translation_(translation),
      width_(width),
      height_(height) {
  if (width_ <= 0 || height_ <= 0) {
    throw DomainError("camera: width and height must be positive");
  }
  const double ortho =
      (rotation_ * rotation_.transpose() - Eigen::Matrix3d::Identity())
          .cwiseAbs()
          .maxCoeff();
  if (ortho > 1e-9) {
    std::ostringstream os;
    os << "camera: rotation not orthonormal (residual " << ortho << ")";
    throw DomainError(os.str());
  }
  if (std::abs(rotation_.determinant() - 1.0) > 1e-9) {
    throw DomainError("camera: rotation determinant is not +1");
  }
  if (!(fx() > 0.0) || !(fy() > 0.0)) {
    throw DomainError("camera: focal lengths must be strictly positive");
  }
  if (intrinsics_(0, 1) != 0.0 || intrinsics_(1, 0) != 0.0 ||
      intrinsics_(2, 0) != 0.0 || intrinsics_(2, 1) != 0.0 ||
      intrinsics_(2, 2) != 1.0) {
    throw DomainError("camera: intrinsics must be [fx 0 cx; 0 fy cy; 0 0 1]");
  }
  if (!(cx() >= 0.0 && cx() < width_ && cy() >= 0.0 && cy() < height_)) {
    throw DomainError("camera: principal point outside image");
  }
}

PixelCoord project(const Camera& camera, const Eigen::Vector3d& point) {
  const Eigen::Vector3d pc = camera.world_to_camera(point);
  if (!(pc.z() > 0.0)) {
    std::ostringstream os;
    os << "project: point at or behind the camera plane (depth " << pc.z()
       << ")";
    throw DomainError(os.str());
  }
  PixelCoord out;
  out.u = camera.fx() * pc.x() / pc.z() + camera.cx();
  out.v = camera.fy() * pc.y() / pc.z() + camera.cy();
  return out;
}

}  // namespace corfield::geometry
