#pragma once

#include <Eigen/Dense>

#include "corfield/corres/types.hpp"

namespace corfield::corres {

struct FilterResult {
  CorrespondenceSet correspondences;
  FilterReport report;
};

// Keeps correspondences whose triangulation is non-degenerate, forward
// facing, and whose projected ray distance is <= threshold_px.
FilterResult filter_projection(const CorrespondenceSet& correspondences,
                               const CameraMap& cameras, double threshold_px);

// Triangulates every pair to its midpoint, computes each point's mean
// distance to its k nearest neighbors, and removes points above
// global_mean + std_multiplier * global_std. Requires more than k points.
FilterResult filter_statistical(const CorrespondenceSet& correspondences,
                                const CameraMap& cameras, int k,
                                double std_multiplier);

// Mean distance from each point to its k nearest neighbors. Exact brute
// force below kKnnBruteForceLimit points, grid-hash accelerated above;
// both paths visit neighbors in identical (distance, index) order.
std::vector<double> mean_knn_distances(
    const std::vector<Eigen::Vector3d>& points, int k);

constexpr std::size_t kKnnBruteForceLimit = 20000;

struct CloudPoint {
  Eigen::Vector3d position;
  double confidence = 1.0;
};

struct TriangulatedCloud {
  std::vector<CloudPoint> points;
  std::size_t skipped_degenerate = 0;
  std::size_t skipped_behind_camera = 0;
};

// One midpoint per correspondence, carrying its confidence. Degenerate or
// backward-facing pairs are skipped and counted.
TriangulatedCloud triangulate_cloud(const CorrespondenceSet& correspondences,
                                    const CameraMap& cameras);

}  // namespace corfield::corres
