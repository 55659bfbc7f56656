#pragma once

#include "corfield/corres/filter.hpp"
#include "corfield/corres/graph.hpp"
#include "corfield/corres/merge.hpp"

namespace corfield::corres {

struct PipelineConfig {
  int d_max = 2;
  double projection_threshold_px = 2.0;
  int knn_k = 16;
  double knn_std_multiplier = 2.0;
};

struct PipelineReport {
  MergeReport merge;
  std::size_t after_propagation = 0;
  FilterReport filter;
};

struct PipelineResult {
  CorrespondenceSet correspondences;
  PipelineReport report;
};

// merge_augmented -> build_graph -> propagate -> filter_projection ->
// filter_statistical. The filter report's input count is the
// post-propagation count, so survival_fraction measures the filters alone.
// The statistical stage is skipped (passthrough) when too few points
// remain for a k-neighborhood.
PipelineResult preprocess_pipeline(const std::vector<CorrespondenceSet>& sets,
                                   const std::vector<PixelMap>& transforms,
                                   const CameraMap& cameras,
                                   const PipelineConfig& config);

}  // namespace corfield::corres
