#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ddg {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

enum class LabelKind : std::uint8_t { kNone, kPoint, kLine, kClique };

// Where a vertex came from: a geometry point or line (index into the
// enumeration), or slot `b` of the clique that replaced target `a`.
struct VertexLabel {
  LabelKind kind = LabelKind::kNone;
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

std::string to_string(const VertexLabel& label);

// Undirected simple graph in compressed adjacency form. Neighbor lists are
// sorted ascending; the structure never changes after construction.
class Graph {
 public:
  Graph() = default;

  // Throws VertexOutOfRange or SelfLoop. Duplicate edges (in either
  // orientation) collapse to one.
  static Graph from_edges(std::size_t order, std::span<const Edge> edges,
                          std::vector<VertexLabel> labels = {});

  std::size_t order() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return adjacency_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  // Each edge once as (u, v) with u < v, ascending.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<VertexLabel>& labels() const { return labels_; }
  VertexLabel label(Vertex v) const { return labels_.empty() ? VertexLabel{} : labels_[v]; }

  // Same vertex count and adjacency (labels ignored).
  bool same_adjacency(const Graph& other) const {
    return offsets_ == other.offsets_ && adjacency_ == other.adjacency_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<VertexLabel> labels_;
};

inline Graph build_graph(std::span<const Edge> edges, std::size_t order) {
  return Graph::from_edges(order, edges);
}

}  // namespace ddg
