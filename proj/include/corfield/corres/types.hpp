#pragma once

#include <map>
#include <string>
#include <vector>

#include "corfield/geometry/camera.hpp"

namespace corfield::corres {

enum class Provenance { kDirect, kAugmented, kPropagated };

const char* provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& name);

// A matched pixel pair between two images with the matcher's confidence.
struct Correspondence {
  std::string image_q;
  std::string image_s;
  geometry::PixelCoord p_q;
  geometry::PixelCoord p_s;
  double confidence = 1.0;
  Provenance provenance = Provenance::kDirect;
};

// Throws DomainError if the record violates its invariants. Direct matcher
// confidences must lie in [0.5, 1]; derived ones only in (0, 1].
void validate(const Correspondence& c);

using CorrespondenceSet = std::vector<Correspondence>;

struct ImageSize {
  int width = 0;
  int height = 0;
};
using ImageDims = std::map<std::string, ImageSize>;

using CameraMap = std::map<std::string, geometry::Camera>;

ImageDims dims_from_cameras(const CameraMap& cameras);

// Counts for one pass of the outlier filters.
struct FilterReport {
  std::size_t input_count = 0;
  std::size_t after_projection_filter = 0;
  std::size_t after_knn_filter = 0;
  double survival_fraction = 1.0;  // after_knn / input, 1 when input == 0
  double threshold_px = 0.0;
  int knn_k = 0;
  double knn_std_multiplier = 0.0;

  void finalize() {
    survival_fraction =
        input_count == 0
            ? 1.0
            : static_cast<double>(after_knn_filter) / input_count;
  }
};

}  // namespace corfield::corres
