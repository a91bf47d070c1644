#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "ddg/compound.hpp"
#include "ddg/graph.hpp"
#include "ddg/metrics.hpp"
#include "ddg/moore.hpp"

namespace ddg {

// edgelist: "# order N" then one "u v" line per edge, u < v, ascending, 0-based.
// dimacs:   "p edge N M" then "e u v" lines, 1-based.
// graph6:   printable encoding of the upper-triangular adjacency bits.
enum class GraphFormat { kEdgeList, kDimacs, kGraph6 };

std::string to_string(GraphFormat format);
GraphFormat parse_graph_format(std::string_view name);  // throws FormatUnsupported
// By extension: .edges/.txt, .dimacs/.col, .g6; throws FormatUnsupported.
GraphFormat format_for_path(const std::filesystem::path& path);

// graph6 is refused above this order (the encoding is quadratic).
inline constexpr std::size_t kGraph6MaxOrder = 65'535;

std::string export_graph(const Graph& g, GraphFormat format);
Graph import_graph(std::string_view text, GraphFormat format);  // throws ParseError

void write_graph_file(const std::filesystem::path& path, const Graph& g, GraphFormat format);
Graph read_graph_file(const std::filesystem::path& path, std::optional<GraphFormat> format = std::nullopt);

std::string certificate_json(const Certificate& c, int indent = 2);

// Plans carry their base so that they can be replayed on their own.
struct StoredPlan {
  MooreSpec base;
  ReplacementPlan plan;
};

std::string plan_json(const MooreSpec& base, const ReplacementPlan& plan, int indent = 2);
StoredPlan parse_plan_json(std::string_view text);  // throws ParseError

std::string read_text_file(const std::filesystem::path& path);                    // throws Io
void write_text_file(const std::filesystem::path& path, std::string_view text);  // throws Io

}  // namespace ddg
