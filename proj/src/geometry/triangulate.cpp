#include "corfield/geometry/triangulate.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace corfield::geometry {

TriangulationResult closest_points(const Ray& ray_q, const Ray& ray_s) {
  const Eigen::Vector3d& dq = ray_q.direction;
  const Eigen::Vector3d& ds = ray_s.direction;
  const Eigen::Vector3d w0 = ray_q.origin - ray_s.origin;

  const double b = dq.dot(ds);
  const double degeneracy = std::abs(1.0 - std::abs(b));
  if (degeneracy <= kParallelTolerance) {
    std::ostringstream os;
    os << "closest_points: rays near-parallel (|d_q.d_s| = " << std::abs(b)
       << ")";
    throw DegenerateGeometry(os.str(), std::abs(b));
  }

  // Normal equations for argmin_{t,u} ||r_q(t) - r_s(u)||^2, written in a
  // form whose floating-point evaluation is symmetric under swapping the
  // rays (t and u exchange bit-for-bit).
  const double dq_w0 = dq.dot(w0);
  const double ds_w0 = ds.dot(w0);
  const double denom = 1.0 - b * b;
  const double t = (b * ds_w0 - dq_w0) / denom;
  const double u = (ds_w0 - b * dq_w0) / denom;

  TriangulationResult result;
  result.x_q = ray_q.origin + t * dq;
  result.x_s = ray_s.origin + u * ds;
  result.midpoint = 0.5 * (result.x_q + result.x_s);
  result.gap = (result.x_q - result.x_s).norm();
  result.t_q = t;
  result.t_s = u;
  return result;
}

double projected_ray_distance(const Camera& cam_q, const Camera& cam_s,
                              const PixelCoord& p_q, const PixelCoord& p_s) {
  const double inf = std::numeric_limits<double>::infinity();
  const Ray ray_q = pixel_to_ray(cam_q, p_q, 0.0, inf);
  const Ray ray_s = pixel_to_ray(cam_s, p_s, 0.0, inf);
  const TriangulationResult tri = closest_points(ray_q, ray_s);

  const PixelCoord proj_q = project(cam_q, tri.x_s);
  const PixelCoord proj_s = project(cam_s, tri.x_q);
  const double err_q = std::hypot(proj_q.u - p_q.u, proj_q.v - p_q.v);
  const double err_s = std::hypot(proj_s.u - p_s.u, proj_s.v - p_s.v);
  return (err_q + err_s) / 2.0;
}

}  // namespace corfield::geometry
