#pragma once

#include "corfield/corres/types.hpp"

namespace corfield::corres {

// Maps an augmented set's pixel coordinates back to original image
// coordinates. Flips need the target image width; scale holds the factor
// the augmented image was scaled by.
struct PixelMap {
  enum class Kind { kIdentity, kHorizontalFlip, kScale };
  Kind kind = Kind::kIdentity;
  double scale = 1.0;

  static PixelMap identity() { return {}; }
  static PixelMap horizontal_flip() { return {Kind::kHorizontalFlip, 1.0}; }
  static PixelMap scaled(double s) { return {Kind::kScale, s}; }

  geometry::PixelCoord apply(const geometry::PixelCoord& p,
                             const ImageSize& size) const;
};

struct MergeReport {
  std::size_t input_count = 0;
  std::size_t out_of_bounds_dropped = 0;
  std::size_t duplicates_collapsed = 0;
  std::size_t output_count = 0;
};

struct MergeResult {
  CorrespondenceSet correspondences;
  MergeReport report;
};

// Expresses every set in original coordinates, canonicalizes query/support
// order by image id, and collapses duplicates (both endpoints within
// kDedupRadiusPx) keeping the highest-confidence record. Pixels mapped out
// of bounds are dropped and counted, never an error.
MergeResult merge_augmented(const std::vector<CorrespondenceSet>& sets,
                            const std::vector<PixelMap>& transforms,
                            const ImageDims& dims);

constexpr double kDedupRadiusPx = 0.5;

}  // namespace corfield::corres
