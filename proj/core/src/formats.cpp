#include "ddg/formats.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ddg/error.hpp"
#include "json.hpp"

namespace ddg {
namespace {

using nlohmann::ordered_json;

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

// Splits into lines, dropping '\r' and empty lines.
std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) out.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

std::vector<std::uint64_t> numbers(std::string_view line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  const char* p = line.data();
  const char* end = line.data() + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p == end) break;
    std::uint64_t v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc{}) parse_error("line " + std::to_string(line_no) + ": expected a number");
    out.push_back(v);
    p = next;
  }
  return out;
}

Graph checked_graph(std::size_t order, const std::vector<Edge>& edges) {
  try {
    return Graph::from_edges(order, edges);
  } catch (const Error& e) {
    parse_error(e.what());
  }
}

std::string edgelist(const Graph& g) {
  std::string out = "# order " + std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

Graph parse_edgelist(std::string_view text) {
  std::optional<std::size_t> order;
  std::vector<Edge> edges;
  std::size_t max_id = 0;
  std::size_t line_no = 0;
  for (std::string_view line : lines_of(text)) {
    ++line_no;
    if (line.front() == '#') {
      constexpr std::string_view kOrder = "# order ";
      if (line.substr(0, kOrder.size()) == kOrder) {
        const auto n = numbers(line.substr(kOrder.size()), line_no);
        if (n.size() != 1) parse_error("malformed order header");
        order = n[0];
      }
      continue;
    }
    const auto n = numbers(line, line_no);
    if (n.size() != 2) parse_error("line " + std::to_string(line_no) + ": expected two vertex ids");
    if (n[0] > 0xffffffffu || n[1] > 0xffffffffu) parse_error("vertex id too large");
    edges.emplace_back(static_cast<Vertex>(n[0]), static_cast<Vertex>(n[1]));
    max_id = std::max<std::size_t>({max_id, n[0] + 1, n[1] + 1});
  }
  if (order && *order < max_id) parse_error("edge endpoint beyond declared order");
  return checked_graph(order.value_or(max_id), edges);
}

std::string dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges()) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

Graph parse_dimacs(std::string_view text) {
  std::optional<std::size_t> order;
  std::size_t declared = 0;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  for (std::string_view line : lines_of(text)) {
    ++line_no;
    if (line.front() == 'c') continue;
    if (line.substr(0, 7) == "p edge ") {
      if (order) parse_error("second problem line");
      const auto n = numbers(line.substr(7), line_no);
      if (n.size() != 2) parse_error("malformed problem line");
      order = n[0];
      declared = n[1];
      continue;
    }
    if (line.substr(0, 2) == "e ") {
      if (!order) parse_error("edge before problem line");
      const auto n = numbers(line.substr(2), line_no);
      if (n.size() != 2 || n[0] == 0 || n[1] == 0 || n[0] > *order || n[1] > *order) {
        parse_error("line " + std::to_string(line_no) + ": bad edge");
      }
      edges.emplace_back(static_cast<Vertex>(n[0] - 1), static_cast<Vertex>(n[1] - 1));
      continue;
    }
    parse_error("line " + std::to_string(line_no) + ": unknown record");
  }
  if (!order) parse_error("missing problem line");
  if (edges.size() != declared) {
    parse_error("problem line declares " + std::to_string(declared) + " edges, found " + std::to_string(edges.size()));
  }
  return checked_graph(*order, edges);
}

std::string graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) {
    throw Error(ErrorCode::kFormatUnsupported,
                "graph6 output limited to " + std::to_string(kGraph6MaxOrder) + " vertices");
  }
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
  }
  int bits = 0;
  unsigned acc = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++bits == 6) {
        out += static_cast<char>(63 + acc);
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits > 0) out += static_cast<char>(63 + (acc << (6 - bits)));
  out += '\n';
  return out;
}

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.substr(0, 10) == ">>graph6<<") text.remove_prefix(10);
  if (text.empty()) parse_error("empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) parse_error("graph6 character out of range");
  }
  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else if (text.size() >= 4 && text[1] != 126) {
    for (int k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::size_t>(text[k] - 63);
    pos = 4;
  } else {
    parse_error("graph6 orders above 258047 are not supported");
  }
  const std::size_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t need = (bit_count + 5) / 6;
  if (text.size() - pos != need) {
    parse_error("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " + std::to_string(need));
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int byte = text[pos + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return checked_graph(n, edges);
}

std::string reading_name(ConditionReading r) { return r == ConditionReading::kStrict ? "strict" : "weak"; }

LinkRole parse_role(const std::string& s) {
  if (s == "b") return LinkRole::kBlock;
  if (s == "c") return LinkRole::kCross;
  if (s == "d") return LinkRole::kClass;
  if (s == "x") return LinkRole::kExtra;
  parse_error("unknown link role '" + s + "'");
}

}  // namespace

std::string to_string(GraphFormat format) {
  switch (format) {
    case GraphFormat::kEdgeList: return "edgelist";
    case GraphFormat::kDimacs: return "dimacs";
    case GraphFormat::kGraph6: return "graph6";
  }
  return "?";
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edgelist") return GraphFormat::kEdgeList;
  if (name == "dimacs") return GraphFormat::kDimacs;
  if (name == "graph6" || name == "g6") return GraphFormat::kGraph6;
  throw Error(ErrorCode::kFormatUnsupported, "unknown format '" + std::string(name) + "' (edgelist, dimacs, graph6)");
}

GraphFormat format_for_path(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".edges" || ext == ".txt") return GraphFormat::kEdgeList;
  if (ext == ".dimacs" || ext == ".col") return GraphFormat::kDimacs;
  if (ext == ".g6") return GraphFormat::kGraph6;
  throw Error(ErrorCode::kFormatUnsupported, "cannot tell the format of '" + path.string() + "'");
}

std::string export_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::kEdgeList: return edgelist(g);
    case GraphFormat::kDimacs: return dimacs(g);
    case GraphFormat::kGraph6: return graph6(g);
  }
  throw Error(ErrorCode::kFormatUnsupported, "unknown format");
}

Graph import_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::kEdgeList: return parse_edgelist(text);
    case GraphFormat::kDimacs: return parse_dimacs(text);
    case GraphFormat::kGraph6: return parse_graph6(text);
  }
  throw Error(ErrorCode::kFormatUnsupported, "unknown format");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::kIo, "write to '" + path.string() + "' failed");
}

void write_graph_file(const std::filesystem::path& path, const Graph& g, GraphFormat format) {
  write_text_file(path, export_graph(g, format));
}

Graph read_graph_file(const std::filesystem::path& path, std::optional<GraphFormat> format) {
  return import_graph(read_text_file(path), format.value_or(format_for_path(path)));
}

std::string certificate_json(const Certificate& c, int indent) {
  ordered_json j;
  j["order"] = c.order;
  j["min_degree"] = c.min_degree;
  j["max_degree"] = c.max_degree;
  j["bipartite"] = c.bipartite;
  if (c.bipartite) j["sides"] = {c.side_a, c.side_b};
  j["girth"] = c.girth ? ordered_json(*c.girth) : ordered_json(nullptr);
  j["diameter"] = c.diameter;
  j["diameter_method"] = to_string(c.diameter_method);
  j["diameter_lower"] = c.diameter_lower;
  j["diameter_upper"] = c.diameter_upper;
  j["bfs_runs"] = c.bfs_runs;
  j["elapsed_ms"] = c.elapsed_ms;
  ordered_json phases = ordered_json::object();
  for (const auto& [name, ms] : c.phase_ms) phases[name] = ms;
  j["elapsed_phase_ms"] = phases;
  return j.dump(indent);
}

std::string plan_json(const MooreSpec& base, const ReplacementPlan& plan, int indent) {
  ordered_json j;
  j["format"] = "ddg-plan";
  j["version"] = 1;
  j["base"] = {{"family", to_string(base.family)}, {"q", base.q}};
  j["h"] = plan.h;
  j["degree"] = plan.degree;
  j["depth"] = plan.depth;
  j["ranges"] = {plan.ranges.I, plan.ranges.J, plan.ranges.K};
  j["use_d"] = plan.use_d;
  j["reading"] = reading_name(plan.reading);
  j["seed"] = plan.seed;
  ordered_json targets = ordered_json::array();
  for (const PlannedTarget& t : plan.targets) {
    ordered_json former = ordered_json::array();
    for (const FormerEdge& f : t.former) former.push_back({f.neighbor, f.slot});
    targets.push_back({{"ijk", {t.index.i, t.index.j, t.index.k}},
                       {"vertex", t.index.vertex},
                       {"parent", t.index.parent},
                       {"former", former}});
  }
  j["targets"] = targets;
  ordered_json links = ordered_json::array();
  for (const CliqueLink& l : plan.links) {
    links.push_back({{"a", {l.a.target, l.a.slot}}, {"b", {l.b.target, l.b.slot}}, {"role", to_string(l.role)}});
  }
  j["links"] = links;
  return j.dump(indent);
}

StoredPlan parse_plan_json(std::string_view text) {
  try {
    const ordered_json j = ordered_json::parse(text);
    if (j.at("format") != "ddg-plan" || j.at("version") != 1) parse_error("not a version-1 plan document");
    StoredPlan s{{parse_moore_family(j.at("base").at("family").get<std::string>()),
                  j.at("base").at("q").get<std::uint32_t>()},
                 {}};
    ReplacementPlan& p = s.plan;
    p.h = j.at("h");
    p.degree = j.at("degree");
    p.depth = j.at("depth");
    const auto& r = j.at("ranges");
    p.ranges = {r.at(0), r.at(1), r.at(2)};
    p.use_d = j.at("use_d");
    const std::string reading = j.at("reading");
    if (reading != "strict" && reading != "weak") parse_error("unknown reading '" + reading + "'");
    p.reading = reading == "strict" ? ConditionReading::kStrict : ConditionReading::kWeak;
    p.seed = j.at("seed");
    for (const auto& t : j.at("targets")) {
      PlannedTarget pt;
      pt.index = {t.at("ijk").at(0), t.at("ijk").at(1), t.at("ijk").at(2), t.at("vertex"), t.at("parent")};
      for (const auto& f : t.at("former")) pt.former.push_back({f.at(0), f.at(1)});
      p.targets.push_back(std::move(pt));
    }
    for (const auto& l : j.at("links")) {
      p.links.push_back({{l.at("a").at(0), l.at("a").at(1)}, {l.at("b").at(0), l.at("b").at(1)},
                         parse_role(l.at("role").get<std::string>())});
    }
    return s;
  } catch (const ordered_json::exception& e) {
    parse_error(std::string("plan document: ") + e.what());
  }
}

}  // namespace ddg
