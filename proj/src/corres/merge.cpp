#include "corfield/corres/merge.hpp"

#include <cmath>
#include <unordered_map>

#include "corfield/error.hpp"

namespace corfield::corres {

namespace {

bool in_bounds(const geometry::PixelCoord& p, const ImageSize& size) {
  return p.u >= -0.5 && p.u < size.width - 0.5 && p.v >= -0.5 &&
         p.v < size.height - 0.5;
}

const ImageSize& dims_of(const ImageDims& dims, const std::string& image) {
  auto it = dims.find(image);
  if (it == dims.end()) {
    throw DomainError("merge_augmented: no image dimensions for '" + image +
                      "'");
  }
  return it->second;
}

struct CellKey {
  std::int64_t x = 0;
  std::int64_t y = 0;
  bool operator==(const CellKey&) const = default;
};

struct CellKeyHash {
  std::size_t operator()(const CellKey& k) const {
    return std::hash<std::int64_t>()(k.x * 0x9e3779b97f4a7c15LL + k.y);
  }
};

double dist(const geometry::PixelCoord& a, const geometry::PixelCoord& b) {
  return std::hypot(a.u - b.u, a.v - b.v);
}

}  // namespace

geometry::PixelCoord PixelMap::apply(const geometry::PixelCoord& p,
                                     const ImageSize& size) const {
  switch (kind) {
    case Kind::kIdentity:
      return p;
    case Kind::kHorizontalFlip:
      return {size.width - 1.0 - p.u, p.v};
    case Kind::kScale:
      if (!(scale > 0.0)) {
        throw DomainError("PixelMap: scale factor must be positive");
      }
      return {p.u / scale, p.v / scale};
  }
  return p;
}

MergeResult merge_augmented(const std::vector<CorrespondenceSet>& sets,
                            const std::vector<PixelMap>& transforms,
                            const ImageDims& dims) {
  if (sets.size() != transforms.size()) {
    throw DomainError("merge_augmented: one transform required per set");
  }

  MergeResult result;
  // One dedup grid per canonical image pair, keyed by the query pixel's
  // integer cell (cell size 1 px covers the 0.5 px dedup radius with a
  // 3x3 neighborhood search).
  std::map<std::pair<std::string, std::string>,
           std::unordered_map<CellKey, std::vector<std::size_t>, CellKeyHash>>
      grids;

  for (std::size_t si = 0; si < sets.size(); ++si) {
    const PixelMap& map = transforms[si];
    for (const Correspondence& raw : sets[si]) {
      ++result.report.input_count;
      Correspondence c = raw;
      const ImageSize& size_q = dims_of(dims, c.image_q);
      const ImageSize& size_s = dims_of(dims, c.image_s);
      c.p_q = map.apply(c.p_q, size_q);
      c.p_s = map.apply(c.p_s, size_s);
      if (!in_bounds(c.p_q, size_q) || !in_bounds(c.p_s, size_s)) {
        ++result.report.out_of_bounds_dropped;
        continue;
      }
      if (c.image_s < c.image_q) {
        std::swap(c.image_q, c.image_s);
        std::swap(c.p_q, c.p_s);
      }

      auto& grid = grids[{c.image_q, c.image_s}];
      const CellKey cell{static_cast<std::int64_t>(std::floor(c.p_q.u)),
                         static_cast<std::int64_t>(std::floor(c.p_q.v))};
      bool collapsed = false;
      for (std::int64_t dx = -1; dx <= 1 && !collapsed; ++dx) {
        for (std::int64_t dy = -1; dy <= 1 && !collapsed; ++dy) {
          auto it = grid.find(CellKey{cell.x + dx, cell.y + dy});
          if (it == grid.end()) continue;
          for (std::size_t idx : it->second) {
            Correspondence& kept = result.correspondences[idx];
            if (dist(kept.p_q, c.p_q) <= kDedupRadiusPx &&
                dist(kept.p_s, c.p_s) <= kDedupRadiusPx) {
              if (c.confidence > kept.confidence) {
                kept.p_q = c.p_q;
                kept.p_s = c.p_s;
                kept.confidence = c.confidence;
                kept.provenance = c.provenance;
              }
              ++result.report.duplicates_collapsed;
              collapsed = true;
              break;
            }
          }
        }
      }
      if (!collapsed) {
        result.correspondences.push_back(c);
        grid[cell].push_back(result.correspondences.size() - 1);
      }
    }
  }
  result.report.output_count = result.correspondences.size();
  return result;
}

}  // namespace corfield::corres
