#include "ddg/graph.hpp"

#include <algorithm>

#include "ddg/error.hpp"

namespace ddg {

std::string to_string(const VertexLabel& label) {
  switch (label.kind) {
    case LabelKind::kNone: return "-";
    case LabelKind::kPoint: return "point:" + std::to_string(label.a);
    case LabelKind::kLine: return "line:" + std::to_string(label.a);
    case LabelKind::kClique: return "clique:" + std::to_string(label.a) + "." + std::to_string(label.b);
  }
  return "-";
}

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges, std::vector<VertexLabel> labels) {
  if (!labels.empty() && labels.size() != order) {
    throw Error(ErrorCode::kInvalidArgument, "label count differs from graph order");
  }
  std::vector<std::size_t> degree(order, 0);
  for (const auto& [u, v] : edges) {
    if (u >= order || v >= order) {
      throw Error(ErrorCode::kVertexOutOfRange, "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                                    ") outside order " + std::to_string(order));
    }
    if (u == v) throw Error(ErrorCode::kSelfLoop, "self-loop at vertex " + std::to_string(u));
    ++degree[u];
    ++degree[v];
  }

  Graph g;
  g.offsets_.assign(order + 1, 0);
  for (std::size_t v = 0; v < order; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.adjacency_.resize(g.offsets_[order]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.adjacency_[fill[u]++] = v;
    g.adjacency_[fill[v]++] = u;
  }

  // Sort each list, drop duplicates, then compact.
  std::size_t write = 0;
  std::size_t begin = 0;
  for (std::size_t v = 0; v < order; ++v) {
    const std::size_t end = g.offsets_[v + 1];
    auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(begin);
    auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(end);
    std::sort(first, last);
    last = std::unique(first, last);
    g.offsets_[v] = write;
    for (auto it = first; it != last; ++it) g.adjacency_[write++] = *it;
    begin = end;
  }
  g.offsets_[order] = write;
  g.adjacency_.resize(write);
  g.adjacency_.shrink_to_fit();
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  auto n = neighbors(u);
  return std::binary_search(n.begin(), n.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace ddg
