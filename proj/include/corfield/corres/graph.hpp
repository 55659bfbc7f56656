#pragma once

#include <map>
#include <tuple>

#include "corfield/corres/types.hpp"

namespace corfield::corres {

// Undirected graph over rays (image, pixel) with per-edge confidence.
// At most one edge per vertex pair; the highest-confidence record wins.
class CorrespondenceGraph {
 public:
  struct Vertex {
    std::string image;
    geometry::PixelCoord pixel;
  };
  struct Edge {
    int a = 0;
    int b = 0;
    double confidence = 0.0;
    Provenance provenance = Provenance::kDirect;
  };

  int add_vertex(const std::string& image, const geometry::PixelCoord& p);
  // Adds or upgrades the undirected edge (a, b).
  void add_edge(int a, int b, double confidence, Provenance provenance);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::vector<std::pair<int, int>>>& adjacency() const {
    return adjacency_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  // adjacency_[v] = (neighbor vertex, edge index)
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
  // exact-coordinate vertex interning
  std::map<std::tuple<std::string, double, double>, int> index_;
};

CorrespondenceGraph build_graph(const CorrespondenceSet& correspondences);

// Returns all original edges plus one correspondence per vertex pair at
// shortest-path distance d, 2 <= d <= d_max, whose endpoints live in
// different images. The new confidence is the maximal product of edge
// confidences over the shortest paths.
CorrespondenceSet propagate(const CorrespondenceGraph& graph, int d_max);

}  // namespace corfield::corres
