#include "corfield/geometry/ray.hpp"

#include <cmath>
#include <sstream>

namespace corfield::geometry {

Ray make_ray(const Eigen::Vector3d& origin, const Eigen::Vector3d& direction,
             double t_near, double t_far) {
  const double norm = direction.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw DomainError("ray: direction must be a nonzero finite vector");
  }
  if (!(t_near >= 0.0) || !(t_near < t_far)) {
    std::ostringstream os;
    os << "ray: need 0 <= t_near < t_far, got [" << t_near << ", " << t_far
       << "]";
    throw DomainError(os.str());
  }
  return Ray{origin, direction / norm, t_near, t_far};
}

Ray pixel_to_ray(const Camera& camera, const PixelCoord& pixel, double t_near,
                 double t_far) {
  if (!camera.in_bounds(pixel)) {
    std::ostringstream os;
    os << "pixel_to_ray: pixel (" << pixel.u << ", " << pixel.v
       << ") outside " << camera.width() << "x" << camera.height()
       << " image";
    throw DomainError(os.str());
  }
  const Eigen::Vector3d dir_cam((pixel.u - camera.cx()) / camera.fx(),
                                (pixel.v - camera.cy()) / camera.fy(), 1.0);
  const Eigen::Vector3d dir_world = camera.rotation().transpose() * dir_cam;
  return make_ray(camera.center(), dir_world, t_near, t_far);
}

}  // namespace corfield::geometry
