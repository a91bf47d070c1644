#include "ddg/moore.hpp"

#include "ddg/error.hpp"

namespace ddg {

std::string to_string(MooreFamily family) {
  switch (family) {
    case MooreFamily::kPlane: return "pp";
    case MooreFamily::kQuadrangle: return "gq";
    case MooreFamily::kHexagon: return "gh";
  }
  return "?";
}

MooreFamily parse_moore_family(const std::string& name) {
  if (name == "pp" || name == "plane") return MooreFamily::kPlane;
  if (name == "gq" || name == "quadrangle") return MooreFamily::kQuadrangle;
  if (name == "gh" || name == "hexagon") return MooreFamily::kHexagon;
  throw Error(ErrorCode::kInvalidArgument, "unknown family '" + name + "' (expected pp, gq or gh)");
}

std::uint32_t MooreSpec::diameter() const {
  switch (family) {
    case MooreFamily::kPlane: return 3;
    case MooreFamily::kQuadrangle: return 4;
    case MooreFamily::kHexagon: return 6;
  }
  return 0;
}

std::uint64_t MooreSpec::expected_order() const {
  return bipartite_moore_bound(degree(), diameter());
}

Graph build_incidence_graph(std::size_t point_count, std::span<const GeometryLine> lines) {
  std::vector<Edge> edges;
  std::vector<VertexLabel> labels;
  const std::size_t order = point_count + lines.size();
  labels.reserve(order);
  for (std::size_t i = 0; i < point_count; ++i) {
    labels.push_back({LabelKind::kPoint, static_cast<std::uint32_t>(i), 0});
  }
  for (std::size_t l = 0; l < lines.size(); ++l) {
    labels.push_back({LabelKind::kLine, static_cast<std::uint32_t>(l), 0});
    const auto line_vertex = static_cast<Vertex>(point_count + l);
    for (std::uint32_t p : lines[l].points) {
      if (p >= point_count) {
        throw Error(ErrorCode::kUnknownPoint,
                    "line " + std::to_string(l) + " refers to unknown point " + std::to_string(p));
      }
      edges.emplace_back(p, line_vertex);
    }
  }
  return Graph::from_edges(order, edges, std::move(labels));
}

Graph build_Pq(std::uint32_t q) {
  const Field field = Field::make(q);
  const PointSet points(2, field, enumerate_projective_points(2, field));
  return build_incidence_graph(points.size(), projective_plane_lines(field, points));
}

Graph build_Qq(std::uint32_t q) {
  const Field field = Field::make(q);
  const QuadraticForm form = QuadraticForm::parabolic(4);
  const PointSet points = quadric_points(form, field);
  return build_incidence_graph(points.size(), lines_on_quadric(form, field, points));
}

Graph build_Hq(std::uint32_t q) {
  const Field field = Field::make(q);
  const PointSet points = quadric_points(QuadraticForm::parabolic(6), field);
  return build_incidence_graph(points.size(), hexagon_lines(field, points));
}

Graph build_moore(const MooreSpec& spec) {
  switch (spec.family) {
    case MooreFamily::kPlane: return build_Pq(spec.q);
    case MooreFamily::kQuadrangle: return build_Qq(spec.q);
    case MooreFamily::kHexagon: return build_Hq(spec.q);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown family");
}

Certificate validate_moore(const Graph& g, std::uint32_t q, std::uint32_t diam, const CertifyOptions& options) {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::kValidationFailed, what); };
  const std::uint64_t degree = static_cast<std::uint64_t>(q) + 1;
  if (degree <= 2) fail("degree " + std::to_string(degree) + " does not exceed 2");
  const std::uint64_t bound = bipartite_moore_bound(degree, diam);
  if (g.order() != bound) {
    fail("order " + std::to_string(g.order()) + " differs from bipartite Moore bound " + std::to_string(bound));
  }
  const DegreeStats ds = degree_stats(g);
  if (ds.min != degree || ds.max != degree) {
    fail("degrees range over [" + std::to_string(ds.min) + ", " + std::to_string(ds.max) + "], expected " +
         std::to_string(degree) + "-regular");
  }
  CertifyOptions opts = options;
  opts.compute_girth = true;
  const Certificate c = certify(g, opts);
  if (!c.girth || *c.girth != 2 * diam) {
    fail("girth " + (c.girth ? std::to_string(*c.girth) : std::string("none")) + " differs from " +
         std::to_string(2 * diam));
  }
  if (c.diameter != diam) fail("diameter " + std::to_string(c.diameter) + " differs from " + std::to_string(diam));
  return c;
}

std::vector<std::size_t> moore_level_sizes(std::uint32_t q, std::uint32_t diam) {
  std::vector<std::size_t> sizes{1};
  std::size_t level = q + 1;
  for (std::uint32_t k = 1; k < diam; ++k) {
    sizes.push_back(level);
    level *= q;
  }
  sizes.push_back(level / (q + 1));
  return sizes;
}

}  // namespace ddg
