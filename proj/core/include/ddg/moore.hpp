#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "ddg/geometry.hpp"
#include "ddg/graph.hpp"
#include "ddg/metrics.hpp"

namespace ddg {

// Bipartite Moore graphs from generalized polygons: the projective plane
// (diameter 3), the generalized quadrangle on the parabolic quadric of
// PG(4, q) (diameter 4) and the split Cayley hexagon (diameter 6).
enum class MooreFamily { kPlane, kQuadrangle, kHexagon };

std::string to_string(MooreFamily family);
MooreFamily parse_moore_family(const std::string& name);  // "pp", "gq", "gh"

struct MooreSpec {
  MooreFamily family;
  std::uint32_t q;

  std::uint32_t diameter() const;
  std::uint32_t degree() const { return q + 1; }
  std::uint32_t girth() const { return 2 * diameter(); }
  // 2(q^2+q+1), 2(q^4-1)/(q-1), 2(q^6-1)/(q-1)
  std::uint64_t expected_order() const;
};

// Points become vertices 0..point_count-1 and lines follow in order; a point
// and a line are adjacent iff the point is on the line. Throws UnknownPoint
// for line entries outside [0, point_count).
Graph build_incidence_graph(std::size_t point_count, std::span<const GeometryLine> lines);

Graph build_Pq(std::uint32_t q);
Graph build_Qq(std::uint32_t q);
Graph build_Hq(std::uint32_t q);
Graph build_moore(const MooreSpec& spec);

// Checks order against the bipartite Moore bound for degree q+1, (q+1)-
// regularity, girth 2D and diameter D, in that order. Throws
// ValidationFailed naming the first predicate that fails.
Certificate validate_moore(const Graph& g, std::uint32_t q, std::uint32_t diam,
                           const CertifyOptions& options = {});

// Level sizes of a bipartite Moore graph seen from any vertex:
// 1, D, D(D-1), ..., D(D-1)^(k-2), (D-1)^(k-1) for degree D, diameter k.
std::vector<std::size_t> moore_level_sizes(std::uint32_t q, std::uint32_t diam);

}  // namespace ddg
