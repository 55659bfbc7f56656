#include "corfield/corres/graph.hpp"

#include <algorithm>

#include "corfield/error.hpp"

namespace corfield::corres {

int CorrespondenceGraph::add_vertex(const std::string& image,
                                    const geometry::PixelCoord& p) {
  const auto key = std::make_tuple(image, p.u, p.v);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  const int id = static_cast<int>(vertices_.size());
  vertices_.push_back(Vertex{image, p});
  adjacency_.emplace_back();
  index_.emplace(key, id);
  return id;
}

void CorrespondenceGraph::add_edge(int a, int b, double confidence,
                                   Provenance provenance) {
  if (a == b) throw ContractError("graph: self edge");
  for (auto& [nbr, eidx] : adjacency_[a]) {
    if (nbr == b) {
      if (confidence > edges_[eidx].confidence) {
        edges_[eidx].confidence = confidence;
        edges_[eidx].provenance = provenance;
      }
      return;
    }
  }
  const int eidx = static_cast<int>(edges_.size());
  edges_.push_back(Edge{a, b, confidence, provenance});
  adjacency_[a].emplace_back(b, eidx);
  adjacency_[b].emplace_back(a, eidx);
}

CorrespondenceGraph build_graph(const CorrespondenceSet& correspondences) {
  CorrespondenceGraph g;
  for (const Correspondence& c : correspondences) {
    const int vq = g.add_vertex(c.image_q, c.p_q);
    const int vs = g.add_vertex(c.image_s, c.p_s);
    g.add_edge(vq, vs, c.confidence, c.provenance);
  }
  return g;
}

CorrespondenceSet propagate(const CorrespondenceGraph& graph, int d_max) {
  if (d_max < 1) throw DomainError("propagate: d_max must be >= 1");

  CorrespondenceSet out;
  const auto& vertices = graph.vertices();
  for (const auto& e : graph.edges()) {
    Correspondence c;
    c.image_q = vertices[e.a].image;
    c.p_q = vertices[e.a].pixel;
    c.image_s = vertices[e.b].image;
    c.p_s = vertices[e.b].pixel;
    c.confidence = e.confidence;
    c.provenance = e.provenance;
    if (c.image_s < c.image_q) {
      std::swap(c.image_q, c.image_s);
      std::swap(c.p_q, c.p_s);
    }
    out.push_back(c);
  }
  if (d_max == 1) return out;

  const int n = static_cast<int>(graph.vertex_count());
  std::vector<int> dist(n, -1);
  std::vector<double> best(n, 0.0);
  std::vector<int> touched;

  // Level-by-level BFS from each root: best[w] is the maximal confidence
  // product over shortest paths root -> w.
  for (int root = 0; root < n; ++root) {
    touched.clear();
    dist[root] = 0;
    best[root] = 1.0;
    touched.push_back(root);
    std::vector<int> level{root};
    for (int depth = 1; depth <= d_max && !level.empty(); ++depth) {
      std::vector<int> next;
      for (int v : level) {
        for (const auto& [nbr, eidx] : graph.adjacency()[v]) {
          const double product = best[v] * graph.edges()[eidx].confidence;
          if (dist[nbr] == -1) {
            dist[nbr] = depth;
            best[nbr] = product;
            touched.push_back(nbr);
            next.push_back(nbr);
          } else if (dist[nbr] == depth && product > best[nbr]) {
            best[nbr] = product;
          }
        }
      }
      level = std::move(next);
    }

    for (int w : touched) {
      if (w <= root || dist[w] < 2) continue;
      if (vertices[w].image == vertices[root].image) continue;
      Correspondence c;
      c.image_q = vertices[root].image;
      c.p_q = vertices[root].pixel;
      c.image_s = vertices[w].image;
      c.p_s = vertices[w].pixel;
      c.confidence = best[w];
      c.provenance = Provenance::kPropagated;
      if (c.image_s < c.image_q) {
        std::swap(c.image_q, c.image_s);
        std::swap(c.p_q, c.p_s);
      }
      out.push_back(c);
    }

    for (int v : touched) {
      dist[v] = -1;
      best[v] = 0.0;
    }
  }
  return out;
}

}  // namespace corfield::corres
