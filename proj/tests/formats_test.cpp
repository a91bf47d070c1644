#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>

#include "ddg/constructions.hpp"
#include "ddg/error.hpp"
#include "ddg/formats.hpp"
#include "ddg/moore.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace ddg;
namespace fs = std::filesystem;

namespace {

// graph6 reader written straight from the format description, kept apart
// from the library's decoder.
std::vector<Edge> decode_graph6(const std::string& s, std::size_t& n) {
  std::size_t pos = 0;
  if (s[0] != 126) {
    n = s[0] - 63;
    pos = 1;
  } else {
    n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
    pos = 4;
  }
  std::vector<int> bits;
  for (; pos < s.size() && s[pos] != '\n'; ++pos)
    for (int b = 5; b >= 0; --b) bits.push_back(((s[pos] - 63) >> b) & 1);
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (bits.at(k++)) edges.emplace_back(i, j);
  return edges;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kIo;
}

}  // namespace

TEST(Graph6, Triangle) {
  std::string s = export_graph(test::complete(3), GraphFormat::kGraph6);
  while (!s.empty() && s.back() == '\n') s.pop_back();
  EXPECT_EQ(s, "Bw");
  std::size_t n = 0;
  EXPECT_EQ(decode_graph6(s, n).size(), 3u);
  EXPECT_EQ(n, 3u);
}

TEST(Graph6, AgreesWithIndependentDecoder) {
  for (const Graph& g : {build_Hq(2), build_Qq(3), test::cycle(70), test::path(1)}) {
    std::size_t n = 0;
    auto edges = decode_graph6(export_graph(g, GraphFormat::kGraph6), n);
    std::sort(edges.begin(), edges.end());
    EXPECT_EQ(n, g.order());
    EXPECT_EQ(edges, g.edges());
  }
}

TEST(Graph6, LongHeader) {
  const Graph g = test::cycle(100);
  const std::string s = export_graph(g, GraphFormat::kGraph6);
  EXPECT_EQ(s[0], 126);
  EXPECT_TRUE(import_graph(s, GraphFormat::kGraph6).same_adjacency(g));
}

TEST(Dimacs, Triangle) {
  EXPECT_EQ(export_graph(test::complete(3), GraphFormat::kDimacs), "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
}

TEST(EdgeList, Triangle) {
  const std::string s = export_graph(test::complete(3), GraphFormat::kEdgeList);
  EXPECT_NE(s.find("0 1\n0 2\n1 2\n"), std::string::npos);
}

TEST(Formats, RoundTripHexagon) {
  const Graph g = build_Hq(2);
  for (auto f : {GraphFormat::kEdgeList, GraphFormat::kDimacs, GraphFormat::kGraph6}) {
    EXPECT_TRUE(import_graph(export_graph(g, f), f).same_adjacency(g)) << to_string(f);
  }
}

TEST(Formats, IsolatedVerticesSurvive) {
  const Graph g = build_graph({}, 4);
  for (auto f : {GraphFormat::kEdgeList, GraphFormat::kDimacs, GraphFormat::kGraph6}) {
    EXPECT_EQ(import_graph(export_graph(g, f), f).order(), 4u) << to_string(f);
  }
}

TEST(Formats, Names) {
  EXPECT_EQ(parse_graph_format("dimacs"), GraphFormat::kDimacs);
  EXPECT_EQ(code_of([] { parse_graph_format("sparse6"); }), ErrorCode::kFormatUnsupported);
  EXPECT_EQ(format_for_path("x/y.g6"), GraphFormat::kGraph6);
  EXPECT_EQ(format_for_path("a.edges"), GraphFormat::kEdgeList);
  EXPECT_EQ(code_of([] { format_for_path("a.gml"); }), ErrorCode::kFormatUnsupported);
}

TEST(Formats, ParseErrors) {
  EXPECT_EQ(code_of([] { import_graph("p edge 3 2\ne 1 2\n", GraphFormat::kDimacs); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { import_graph("p edge 2 1\ne 1 5\n", GraphFormat::kDimacs); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { import_graph("0 x\n", GraphFormat::kEdgeList); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { import_graph("B", GraphFormat::kGraph6); }), ErrorCode::kParseError);
}

TEST(Formats, Files) {
  const fs::path dir = fs::temp_directory_path() / "ddg_formats_test";
  fs::remove_all(dir);
  const Graph g = build_Pq(3);
  write_graph_file(dir / "p3.dimacs", g, GraphFormat::kDimacs);
  EXPECT_TRUE(read_graph_file(dir / "p3.dimacs").same_adjacency(g));
  EXPECT_EQ(code_of([&] { read_graph_file(dir / "missing.g6"); }), ErrorCode::kIo);
  fs::remove_all(dir);
}

TEST(CertificateJson, Keys) {
  const auto j = nlohmann::json::parse(certificate_json(certify(build_Pq(2))));
  for (const char* key : {"order", "min_degree", "max_degree", "bipartite", "girth", "diameter", "diameter_method",
                          "elapsed_ms"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["order"], 14);
  EXPECT_EQ(j["diameter_method"], "exact");
}

TEST(PlanJson, RoundTrip) {
  const Construction c = build_H3K3();
  const MooreSpec base = recipe(NamedCompound::kH3K3).base;
  const StoredPlan back = parse_plan_json(plan_json(base, c.plan));
  EXPECT_EQ(back.base.family, base.family);
  EXPECT_EQ(back.base.q, base.q);
  EXPECT_EQ(back.plan, c.plan);
  EXPECT_TRUE(replay_plan(back.base, back.plan).same_adjacency(c.graph));
  EXPECT_EQ(code_of([] { parse_plan_json("{\"format\":\"other\"}"); }), ErrorCode::kParseError);
}
