#include <gtest/gtest.h>

#include <random>

#include "ddg/compound.hpp"
#include "ddg/constructions.hpp"
#include "ddg/error.hpp"
#include "ddg/formats.hpp"
#include "ddg/moore.hpp"

using namespace ddg;

namespace {

const std::vector<std::uint32_t> kSmallOrders{2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

class FieldAxioms : public ::testing::TestWithParam<std::uint32_t> {};

}  // namespace

TEST_P(FieldAxioms, Exhaustive) {
  const Field f = Field::make(GetParam());
  const auto el = f.elements();
  for (auto a : el) {
    EXPECT_EQ(f.add(a, f.neg(a)), f.zero());
    EXPECT_EQ(f.mul(a, f.one()), a);
    if (a != f.zero()) {
      EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
    }
    for (auto b : el) {
      ASSERT_EQ(f.add(a, b), f.add(b, a));
      ASSERT_EQ(f.mul(a, b), f.mul(b, a));
      ASSERT_EQ(f.sub(f.add(a, b), b), a);
      for (auto c : el) {
        ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

TEST_P(FieldAxioms, FrobeniusAndFermat) {
  const Field f = Field::make(GetParam());
  for (auto a : f.elements()) {
    if (a != f.zero()) {
      EXPECT_EQ(f.pow(a, f.q() - 1), f.one());
    }
    for (auto b : f.elements()) ASSERT_EQ(f.pow(f.add(a, b), f.p()), f.add(f.pow(a, f.p()), f.pow(b, f.p())));
  }
}

INSTANTIATE_TEST_SUITE_P(SmallOrders, FieldAxioms, ::testing::ValuesIn(kSmallOrders));

TEST(FieldProperties, FermatSampledOnLargerFields) {
  std::mt19937_64 rng(11);
  for (std::uint32_t q : {121u, 169u, 343u, 1024u}) {
    const Field f = Field::make(q);
    for (int t = 0; t < 200; ++t) {
      const FieldElement a = f.element(1 + rng() % (q - 1));
      EXPECT_EQ(f.pow(a, q - 1), f.one()) << q;
    }
  }
}

TEST(MooreProperties, MooreBoundHoldsForCertifiedGraphs) {
  std::vector<Certificate> certs;
  for (std::uint32_t q : {2u, 3u, 4u}) {
    certs.push_back(certify(build_Pq(q)));
    certs.push_back(certify(build_Qq(q)));
    certs.push_back(certify(build_Hq(q)));
  }
  for (auto* build : {&build_Q4K3, &build_H3K3}) certs.push_back(*build({}).certificate);
  for (const Certificate& c : certs) {
    EXPECT_LE(c.order, moore_bound(c.max_degree, c.diameter));
    if (c.bipartite) {
      EXPECT_LE(c.order, bipartite_moore_bound(c.max_degree, c.diameter));
    }
  }
}

TEST(MooreProperties, CrossSideDistancesBelowDiameter) {
  for (const MooreSpec spec : {MooreSpec{MooreFamily::kQuadrangle, 3}, MooreSpec{MooreFamily::kHexagon, 3}}) {
    const Graph g = build_moore(spec);
    const auto sides = std::get<Bipartition>(bipartition(g));
    for (std::size_t s = 0; s < sides.side_a.size(); s += 37) {
      const auto d = bfs_distances(g, sides.side_a[s]);
      for (Vertex v : sides.side_b) ASSERT_LE(d[v], spec.diameter() - 1);
    }
  }
}

TEST(MooreProperties, EveryVertexHasMooreLevels) {
  for (const MooreSpec spec : {MooreSpec{MooreFamily::kPlane, 4}, MooreSpec{MooreFamily::kQuadrangle, 3},
                               MooreSpec{MooreFamily::kHexagon, 2}}) {
    const Graph g = build_moore(spec);
    const auto expected = moore_level_sizes(spec.q, spec.diameter());
    for (Vertex v = 0; v < g.order(); ++v) ASSERT_EQ(level_sizes(g, v), expected);
  }
}

TEST(MooreProperties, DisjointPathsAtFullDistance) {
  std::mt19937_64 rng(5);
  for (std::uint32_t q : {2u, 3u}) {
    const Graph g = build_Hq(q);
    int pairs = 0;
    while (pairs < 50) {
      const Vertex u = rng() % g.order();
      const auto d = bfs_distances(g, u);
      const Vertex v = rng() % g.order();
      if (d[v] != 6) continue;
      ASSERT_EQ(disjoint_shortest_paths(g, u, v), q + 1);
      ++pairs;
    }
  }
}

TEST(FormatProperties, RoundTripRandomGraphs) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    const std::uint32_t n = 1 + rng() % 90;
    std::vector<Edge> e;
    const std::uint32_t m = rng() % (2 * n + 1);
    for (std::uint32_t i = 0; i < m && n > 1; ++i) {
      const Vertex a = rng() % n, b = rng() % n;
      if (a != b) e.emplace_back(a, b);
    }
    const Graph g = build_graph(e, n);
    for (auto f : {GraphFormat::kEdgeList, GraphFormat::kDimacs, GraphFormat::kGraph6}) {
      const std::string once = export_graph(g, f);
      const Graph back = import_graph(once, f);
      ASSERT_TRUE(back.same_adjacency(g)) << to_string(f);
      ASSERT_EQ(export_graph(back, f), once);
    }
  }
}

TEST(CompoundProperties, SameSeedSameBytes) {
  for (std::uint64_t seed : {0u, 3u}) {
    ConstructOptions o;
    o.first_seed = seed;
    const Construction a = construct_named(NamedCompound::kH3K3, o);
    const Construction b = construct_named(NamedCompound::kH3K3, o);
    EXPECT_EQ(export_graph(a.graph, GraphFormat::kEdgeList), export_graph(b.graph, GraphFormat::kEdgeList));
    EXPECT_EQ(plan_json(recipe(NamedCompound::kH3K3).base, a.plan), plan_json(recipe(NamedCompound::kH3K3).base, b.plan));
  }
  const Graph h5 = build_Hq(5);
  const TreeIndex t = index_tree(h5, 0, {1, 4, 4});
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    EXPECT_EQ(export_graph(apply_plan(h5, make_plan(h5, t, 4, seed)), GraphFormat::kGraph6),
              export_graph(apply_plan(h5, make_plan(h5, t, 4, seed)), GraphFormat::kGraph6));
  }
}

TEST(CompoundProperties, OrderAndDegreeLaws) {
  std::mt19937_64 rng(21);
  for (std::uint32_t q : {3u, 4u}) {
    const Graph g = build_Hq(q);
    int built = 0;
    for (int trial = 0; trial < 40; ++trial) {
      const RangeSpec r{1 + static_cast<std::uint32_t>(rng() % 2), 1 + static_cast<std::uint32_t>(rng() % q),
                        1 + static_cast<std::uint32_t>(rng() % q)};
      const std::uint32_t h = 2 + rng() % (q - 1);
      const TreeIndex t = index_tree(g, rng() % g.order(), r);
      ReplacementPlan p;
      try {
        p = make_plan(g, t, h, trial, rng() % 2);
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), ErrorCode::kInfeasible);
        continue;
      }
      const Graph c = apply_plan(g, p);
      ++built;
      EXPECT_EQ(c.order(), g.order() + r.count() * (h - 1));
      EXPECT_LE(degree_stats(c).max, q + 1);
      for (const auto& x : t.targets)
        for (Vertex n : g.neighbors(x.vertex)) ASSERT_EQ(c.degree(n), g.degree(n));
      EXPECT_NO_THROW(diameter(c));  // connected
    }
    EXPECT_GT(built, 10);
  }
}

// The locality bound must agree with all-sources BFS, including on
// compounds damaged by dropping links, where the diameter grows.
TEST(CompoundProperties, LocalityMatchesExact) {
  std::mt19937 rng(17);
  int grown = 0, total = 0;
  for (std::uint32_t q : {3u, 4u}) {
    const Graph g = build_Hq(q);
    for (int trial = 0; trial < 24; ++trial) {
      const RangeSpec r{1 + static_cast<std::uint32_t>(rng() % 2), 1 + static_cast<std::uint32_t>(rng() % q),
                        1 + static_cast<std::uint32_t>(rng() % q)};
      const std::uint32_t h = 2 + rng() % (q - 1);
      const TreeIndex t = index_tree(g, rng() % g.order(), r);
      ReplacementPlan p;
      try {
        p = make_plan(g, t, h, trial, rng() % 2);
      } catch (const Error&) {
        continue;
      }
      std::erase_if(p.links, [&](const CliqueLink&) { return rng() % 3 == 0; });
      const Graph c = apply_plan(g, p);
      CompoundCertifyOptions exact, bounded;
      exact.force_mode = DiameterMode::kExact;
      bounded.force_mode = DiameterMode::kBounded;
      bounded.bfs_budget = c.order();
      const std::uint32_t de = certify_compound(c, g, 6, p, exact).diameter;
      const Certificate cb = certify_compound(c, g, 6, p, bounded);
      EXPECT_EQ(cb.diameter, de);
      EXPECT_EQ(cb.diameter_lower, cb.diameter_upper);
      EXPECT_LT(cb.bfs_runs, c.order());
      grown += de > 6;
      ++total;
    }
  }
  EXPECT_GT(total, 20);
  EXPECT_GT(grown, 0);
}
