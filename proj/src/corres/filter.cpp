#include "corfield/corres/filter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "corfield/error.hpp"
#include "corfield/geometry/triangulate.hpp"
#include "corfield/parallel.hpp"

namespace corfield::corres {

namespace {

using geometry::Camera;
using geometry::Ray;
using geometry::TriangulationResult;

const Camera& camera_of(const CameraMap& cameras, const std::string& image) {
  auto it = cameras.find(image);
  if (it == cameras.end()) {
    throw DomainError("no camera for image '" + image + "'");
  }
  return it->second;
}

struct PairGeometry {
  TriangulationResult tri;
  double d_proj = 0.0;
};

// Triangulation of a correspondence; nullopt when degenerate, out of
// bounds, or backward facing.
std::optional<TriangulationResult> triangulate_pair(const Correspondence& c,
                                                    const CameraMap& cameras) {
  const Camera& cam_q = camera_of(cameras, c.image_q);
  const Camera& cam_s = camera_of(cameras, c.image_s);
  const double inf = std::numeric_limits<double>::infinity();
  try {
    const Ray ray_q = geometry::pixel_to_ray(cam_q, c.p_q, 0.0, inf);
    const Ray ray_s = geometry::pixel_to_ray(cam_s, c.p_s, 0.0, inf);
    TriangulationResult tri = geometry::closest_points(ray_q, ray_s);
    if (!tri.forward()) return std::nullopt;
    return tri;
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

// Adds the projected ray distance on top of the triangulation; nullopt
// additionally when a closest point cannot be projected.
std::optional<PairGeometry> pair_geometry(const Correspondence& c,
                                          const CameraMap& cameras) {
  const auto tri = triangulate_pair(c, cameras);
  if (!tri.has_value()) return std::nullopt;
  const Camera& cam_q = camera_of(cameras, c.image_q);
  const Camera& cam_s = camera_of(cameras, c.image_s);
  try {
    const auto proj_q = geometry::project(cam_q, tri->x_s);
    const auto proj_s = geometry::project(cam_s, tri->x_q);
    PairGeometry g;
    g.tri = *tri;
    const double err_q = std::hypot(proj_q.u - c.p_q.u, proj_q.v - c.p_q.v);
    const double err_s = std::hypot(proj_s.u - c.p_s.u, proj_s.v - c.p_s.v);
    g.d_proj = (err_q + err_s) / 2.0;
    return g;
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

std::vector<double> brute_force_mean_knn(
    const std::vector<Eigen::Vector3d>& points, int k) {
  const std::size_t n = points.size();
  std::vector<double> means(n, 0.0);
  parallel_for(n, [&](std::size_t i) {
    std::vector<std::pair<double, std::size_t>> d2;
    d2.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      d2.emplace_back((points[i] - points[j]).squaredNorm(), j);
    }
    std::partial_sort(d2.begin(), d2.begin() + k, d2.end());
    double sum = 0.0;
    for (int m = 0; m < k; ++m) sum += std::sqrt(d2[m].first);
    means[i] = sum / k;
  });
  return means;
}

struct GridKey {
  std::int64_t x = 0, y = 0, z = 0;
  bool operator==(const GridKey&) const = default;
};
struct GridKeyHash {
  std::size_t operator()(const GridKey& k) const {
    std::size_t h = std::hash<std::int64_t>()(k.x);
    h = h * 0x9e3779b97f4a7c15ULL + std::hash<std::int64_t>()(k.y);
    h = h * 0x9e3779b97f4a7c15ULL + std::hash<std::int64_t>()(k.z);
    return h;
  }
};

// Grid-hash kNN. Collects candidate cells shell by shell until the k-th
// candidate distance is provably final, then sorts by (distance, index)
// exactly like the brute-force path.
std::vector<double> grid_mean_knn(const std::vector<Eigen::Vector3d>& points,
                                  int k) {
  const std::size_t n = points.size();
  Eigen::Vector3d lo = points[0], hi = points[0];
  for (const auto& p : points) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  const double extent = std::max((hi - lo).maxCoeff(), 1e-12);
  // Aim for ~2 points per cell.
  const double cell =
      std::max(extent / std::max(1.0, std::cbrt(static_cast<double>(n) / 2.0)),
               1e-12);

  std::unordered_map<GridKey, std::vector<std::size_t>, GridKeyHash> grid;
  auto key_of = [&](const Eigen::Vector3d& p) {
    return GridKey{static_cast<std::int64_t>(std::floor((p.x() - lo.x()) / cell)),
                   static_cast<std::int64_t>(std::floor((p.y() - lo.y()) / cell)),
                   static_cast<std::int64_t>(std::floor((p.z() - lo.z()) / cell))};
  };
  for (std::size_t i = 0; i < n; ++i) grid[key_of(points[i])].push_back(i);

  std::vector<double> means(n, 0.0);
  parallel_for(n, [&](std::size_t i) {
    const GridKey center = key_of(points[i]);
    std::vector<std::pair<double, std::size_t>> d2;
    int radius = 0;
    while (true) {
      // Add the new shell at this radius.
      for (std::int64_t dx = -radius; dx <= radius; ++dx) {
        for (std::int64_t dy = -radius; dy <= radius; ++dy) {
          for (std::int64_t dz = -radius; dz <= radius; ++dz) {
            if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) != radius)
              continue;
            auto it = grid.find(
                GridKey{center.x + dx, center.y + dy, center.z + dz});
            if (it == grid.end()) continue;
            for (std::size_t j : it->second) {
              if (j == i) continue;
              d2.emplace_back((points[i] - points[j]).squaredNorm(), j);
            }
          }
        }
      }
      if (d2.size() >= static_cast<std::size_t>(k)) {
        std::nth_element(d2.begin(), d2.begin() + (k - 1), d2.end());
        const double kth = d2[k - 1].first;
        // Any point outside the searched cube is at least radius*cell away.
        const double safe = static_cast<double>(radius) * cell;
        if (kth <= safe * safe) break;
      }
      ++radius;
    }
    std::partial_sort(d2.begin(), d2.begin() + k, d2.end());
    double sum = 0.0;
    for (int m = 0; m < k; ++m) sum += std::sqrt(d2[m].first);
    means[i] = sum / k;
  });
  return means;
}

}  // namespace

std::vector<double> mean_knn_distances(
    const std::vector<Eigen::Vector3d>& points, int k) {
  if (k < 1) throw DomainError("mean_knn_distances: k must be >= 1");
  if (points.size() <= static_cast<std::size_t>(k)) {
    std::ostringstream os;
    os << "mean_knn_distances: need more than k=" << k << " points, got "
       << points.size();
    throw DomainError(os.str());
  }
  if (points.size() < kKnnBruteForceLimit) {
    return brute_force_mean_knn(points, k);
  }
  return grid_mean_knn(points, k);
}

FilterResult filter_projection(const CorrespondenceSet& correspondences,
                               const CameraMap& cameras, double threshold_px) {
  if (!(threshold_px > 0.0) || !std::isfinite(threshold_px)) {
    throw DomainError("filter_projection: threshold must be positive finite");
  }
  FilterResult result;
  result.report.input_count = correspondences.size();
  result.report.threshold_px = threshold_px;

  std::vector<char> keep(correspondences.size(), 0);
  parallel_for(correspondences.size(), [&](std::size_t i) {
    const auto g = pair_geometry(correspondences[i], cameras);
    keep[i] = (g.has_value() && g->d_proj <= threshold_px) ? 1 : 0;
  });
  for (std::size_t i = 0; i < correspondences.size(); ++i) {
    if (keep[i]) result.correspondences.push_back(correspondences[i]);
  }
  result.report.after_projection_filter = result.correspondences.size();
  result.report.after_knn_filter = result.correspondences.size();
  result.report.finalize();
  return result;
}

FilterResult filter_statistical(const CorrespondenceSet& correspondences,
                                const CameraMap& cameras, int k,
                                double std_multiplier) {
  if (k < 1) throw DomainError("filter_statistical: k must be >= 1");
  if (!(std_multiplier > 0.0)) {
    throw DomainError("filter_statistical: std_multiplier must be positive");
  }

  // Triangulate to the midpoint set P; pairs without a valid point cannot
  // participate and are dropped.
  std::vector<Eigen::Vector3d> points;
  std::vector<std::size_t> owner;
  std::vector<std::optional<TriangulationResult>> tris(correspondences.size());
  parallel_for(correspondences.size(), [&](std::size_t i) {
    tris[i] = triangulate_pair(correspondences[i], cameras);
  });
  for (std::size_t i = 0; i < correspondences.size(); ++i) {
    if (tris[i].has_value()) {
      points.push_back(tris[i]->midpoint);
      owner.push_back(i);
    }
  }

  if (points.size() <= static_cast<std::size_t>(k)) {
    std::ostringstream os;
    os << "filter_statistical: need more than k=" << k << " points, got "
       << points.size();
    throw DomainError(os.str());
  }

  const std::vector<double> means = mean_knn_distances(points, k);
  double mu = 0.0;
  for (double m : means) mu += m;
  mu /= static_cast<double>(means.size());
  double var = 0.0;
  for (double m : means) var += (m - mu) * (m - mu);
  var /= static_cast<double>(means.size());
  const double threshold = mu + std_multiplier * std::sqrt(var);

  FilterResult result;
  result.report.input_count = correspondences.size();
  result.report.knn_k = k;
  result.report.knn_std_multiplier = std_multiplier;
  result.report.after_projection_filter = correspondences.size();
  for (std::size_t p = 0; p < points.size(); ++p) {
    if (means[p] <= threshold) {
      result.correspondences.push_back(correspondences[owner[p]]);
    }
  }
  result.report.after_knn_filter = result.correspondences.size();
  result.report.finalize();
  return result;
}

TriangulatedCloud triangulate_cloud(const CorrespondenceSet& correspondences,
                                    const CameraMap& cameras) {
  TriangulatedCloud cloud;
  std::vector<std::optional<TriangulationResult>> tris(correspondences.size());
  std::vector<char> degenerate(correspondences.size(), 0);
  parallel_for(correspondences.size(), [&](std::size_t i) {
    const Correspondence& c = correspondences[i];
    const Camera& cam_q = camera_of(cameras, c.image_q);
    const Camera& cam_s = camera_of(cameras, c.image_s);
    const double inf = std::numeric_limits<double>::infinity();
    try {
      const Ray ray_q = geometry::pixel_to_ray(cam_q, c.p_q, 0.0, inf);
      const Ray ray_s = geometry::pixel_to_ray(cam_s, c.p_s, 0.0, inf);
      tris[i] = geometry::closest_points(ray_q, ray_s);
    } catch (const DomainError&) {
      degenerate[i] = 1;
    }
  });
  for (std::size_t i = 0; i < correspondences.size(); ++i) {
    if (degenerate[i]) {
      ++cloud.skipped_degenerate;
      continue;
    }
    if (!tris[i]->forward()) {
      ++cloud.skipped_behind_camera;
      continue;
    }
    cloud.points.push_back(
        CloudPoint{tris[i]->midpoint, correspondences[i].confidence});
  }
  return cloud;
}

}  // namespace corfield::corres
