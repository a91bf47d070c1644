#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ddg/graph.hpp"

namespace ddg {

// Distance vectors use the graph order as the "unreachable" value.
std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source);

// Number of vertices at each distance from `source` (reachable part only).
std::vector<std::size_t> level_sizes(const Graph& g, Vertex source);

// Eccentricities of many sources at once, 64 per sweep, using one machine
// word per vertex as the frontier of all sources in the batch. Throws
// Disconnected when some source does not reach every vertex.
std::vector<std::uint32_t> eccentricities(const Graph& g, std::span<const Vertex> sources,
                                          unsigned workers = 1);

// Sum over sources of the number of vertices farther than `limit` (or
// unreachable). Same 64-wide sweeps as eccentricities, stopped at `limit`.
std::uint64_t count_far_pairs(const Graph& g, std::span<const Vertex> sources, std::uint32_t limit,
                              unsigned workers = 1);

enum class DiameterMode { kExact, kBounded };
std::string to_string(DiameterMode mode);

struct DiameterOptions {
  DiameterMode mode = DiameterMode::kExact;
  unsigned workers = 1;
  // Bounded mode only: maximum number of single-source BFS runs.
  std::uint64_t bfs_budget = 10'000;
};

struct DiameterResult {
  std::uint32_t value = 0;
  DiameterMode method = DiameterMode::kExact;
  std::uint32_t lower = 0;
  std::uint32_t upper = 0;
  std::uint64_t bfs_runs = 0;
};

// Exact mode: maximum eccentricity over all sources. Bounded mode: iFUB
// fringe processing from a 4-sweep root; returns only when the lower and
// upper bounds meet and throws BudgetExceeded otherwise. Throws Disconnected.
DiameterResult diameter(const Graph& g, const DiameterOptions& options = {});

// Length of a shortest cycle. Throws Acyclic for forests.
std::uint32_t girth(const Graph& g, unsigned workers = 1);

struct Bipartition {
  std::vector<Vertex> side_a;  // contains vertex 0
  std::vector<Vertex> side_b;
};

struct OddCycle {
  std::vector<Vertex> cycle;
};

// 2-colouring by BFS parity over every component. Components are coloured
// so that their smallest vertex lands on side A.
std::variant<Bipartition, OddCycle> bipartition(const Graph& g);

// Maximum number of internally vertex-disjoint shortest u-v paths.
std::uint32_t disjoint_shortest_paths(const Graph& g, Vertex u, Vertex v);

struct DegreeStats {
  std::size_t min = 0;
  std::size_t max = 0;
  std::map<std::size_t, std::size_t> histogram;
};

DegreeStats degree_stats(const Graph& g);

// (D(D-1)^k - 2) / (D - 2) and 2((D-1)^k - 1) / (D - 2), with the D = 2
// limits 2k + 1 and 2k.
std::uint64_t moore_bound(std::uint64_t max_degree, std::uint32_t diam);
std::uint64_t bipartite_moore_bound(std::uint64_t max_degree, std::uint32_t diam);

struct Certificate {
  std::size_t order = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  bool bipartite = false;
  std::size_t side_a = 0;
  std::size_t side_b = 0;
  std::optional<std::uint32_t> girth;  // empty for forests
  std::uint32_t diameter = 0;
  DiameterMode diameter_method = DiameterMode::kExact;
  std::uint32_t diameter_lower = 0;
  std::uint32_t diameter_upper = 0;
  std::uint64_t bfs_runs = 0;
  double elapsed_ms = 0;
  std::map<std::string, double> phase_ms;
};

struct CertifyOptions {
  DiameterOptions diameter;
  bool compute_girth = true;
};

// Order, degrees, bipartition, girth and diameter of a connected graph.
Certificate certify(const Graph& g, const CertifyOptions& options = {});

}  // namespace ddg
