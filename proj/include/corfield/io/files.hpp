#pragma once

#include <string>

#include "corfield/corres/filter.hpp"
#include "corfield/corres/types.hpp"

namespace corfield::io {

// Scene camera file: {"cameras": [{"name", "intrinsics" (row-major 9),
// "rotation" (row-major 9), "translation" (3), "width", "height"}, ...]}.
corres::CameraMap read_cameras(const std::string& path);
void write_cameras(const std::string& path, const corres::CameraMap& cameras);

// Correspondence records as JSON lines:
//   {"image_q":..,"image_s":..,"u_q":..,"v_q":..,"u_s":..,"v_s":..,
//    "confidence":..}
// Unknown extra fields are ignored; malformed lines raise IoError with the
// line number.
corres::CorrespondenceSet read_correspondences(const std::string& path);
void write_correspondences(const std::string& path,
                           const corres::CorrespondenceSet& set);

// Binary little-endian PLY with double x, y, z, confidence properties.
void write_ply(const std::string& path,
               const std::vector<corres::CloudPoint>& points);
std::vector<corres::CloudPoint> read_ply(const std::string& path);

void write_filter_report(const std::string& path,
                         const corres::FilterReport& report);

}  // namespace corfield::io
