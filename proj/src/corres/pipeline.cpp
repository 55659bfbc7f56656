#include "corfield/corres/pipeline.hpp"

namespace corfield::corres {

PipelineResult preprocess_pipeline(const std::vector<CorrespondenceSet>& sets,
                                   const std::vector<PixelMap>& transforms,
                                   const CameraMap& cameras,
                                   const PipelineConfig& config) {
  PipelineResult result;

  MergeResult merged = merge_augmented(sets, transforms,
                                       dims_from_cameras(cameras));
  result.report.merge = merged.report;

  const CorrespondenceGraph graph = build_graph(merged.correspondences);
  CorrespondenceSet propagated = propagate(graph, config.d_max);
  result.report.after_propagation = propagated.size();

  FilterResult proj = filter_projection(propagated, cameras,
                                        config.projection_threshold_px);

  if (proj.correspondences.size() >
      static_cast<std::size_t>(config.knn_k)) {
    FilterResult stat = filter_statistical(proj.correspondences, cameras,
                                           config.knn_k,
                                           config.knn_std_multiplier);
    result.correspondences = std::move(stat.correspondences);
    result.report.filter.knn_k = stat.report.knn_k;
    result.report.filter.knn_std_multiplier = stat.report.knn_std_multiplier;
  } else {
    // Not enough points for a k-neighborhood; the statistical stage is a
    // passthrough.
    result.correspondences = std::move(proj.correspondences);
    result.report.filter.knn_k = config.knn_k;
    result.report.filter.knn_std_multiplier = config.knn_std_multiplier;
  }

  result.report.filter.input_count = propagated.size();
  result.report.filter.threshold_px = config.projection_threshold_px;
  result.report.filter.after_projection_filter =
      proj.report.after_projection_filter;
  result.report.filter.after_knn_filter = result.correspondences.size();
  result.report.filter.finalize();
  return result;
}

}  // namespace corfield::corres
