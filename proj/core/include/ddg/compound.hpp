#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ddg/graph.hpp"
#include "ddg/metrics.hpp"

namespace ddg {

// How many branches of the rooted tree are modified: targets are x_ijk with
// i < I, j < J, k < K.
struct RangeSpec {
  std::uint32_t I = 1;
  std::uint32_t J = 1;
  std::uint32_t K = 1;

  std::uint32_t count() const { return I * J * K; }
  friend bool operator==(const RangeSpec&, const RangeSpec&) = default;
};

struct IndexedTarget {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::uint32_t k = 0;
  Vertex vertex = 0;
  Vertex parent = 0;  // w_ij for depth-3 targets, u_i for depth-2 targets
};

// BFS-tree coordinates around a root of a bipartite Moore graph:
//   u_i   = i-th neighbor of the root
//   w_ij  = j-th neighbor of u_i other than the root
//   x_ijk = k-th neighbor of w_ij other than u_i
// "i-th" means ascending vertex id. Depth-3 targets are the x_ijk; depth-2
// targets are the w_ij (K is then 1).
struct TreeIndex {
  Vertex root = 0;
  std::uint32_t depth = 3;
  std::uint32_t degree = 0;
  std::uint32_t base_diameter = 0;
  RangeSpec ranges;
  std::vector<Vertex> u;
  std::vector<std::vector<Vertex>> w;
  std::vector<IndexedTarget> targets;  // lexicographic in (i, j, k)
};

// Throws RangeExceedsDegree when I > degree or J, K > degree-1, and NotMoore
// when the graph is not a regular bipartite Moore graph of diameter >= 4 as
// seen from the root (order, regularity and Moore level sizes).
TreeIndex index_tree(const Graph& g, Vertex root, RangeSpec ranges, std::uint32_t depth = 3);

// External edge slots of one clique against what a plan must place on them.
struct SlotLedger {
  std::uint32_t degree = 0;
  std::uint32_t h = 0;
  std::uint32_t per_vertex = 0;  // degree - (h - 1)
  std::uint32_t capacity = 0;    // h * per_vertex
  std::uint32_t former = 0;      // degree
  std::uint32_t block = 0;       // K - 1
  std::uint32_t cross = 0;       // J - 1
  std::uint32_t cls = 0;         // h (I - 1) when condition (d) is used
  std::uint32_t demand = 0;
  std::uint32_t surplus = 0;
};

// Throws Infeasible when demand exceeds capacity or h >= degree.
SlotLedger slot_balance(std::uint32_t degree, std::uint32_t h, RangeSpec ranges, bool use_d);

// Which condition an inter-clique edge serves.
enum class LinkRole : std::uint8_t { kBlock, kCross, kClass, kExtra };
std::string to_string(LinkRole role);

struct CliqueEnd {
  std::uint32_t target = 0;
  std::uint32_t slot = 0;

  friend bool operator==(const CliqueEnd&, const CliqueEnd&) = default;
  friend auto operator<=>(const CliqueEnd&, const CliqueEnd&) = default;
};

struct CliqueLink {
  CliqueEnd a;
  CliqueEnd b;
  LinkRole role = LinkRole::kExtra;

  friend bool operator==(const CliqueLink&, const CliqueLink&) = default;
};

struct FormerEdge {
  Vertex neighbor = 0;
  std::uint32_t slot = 0;

  friend bool operator==(const FormerEdge&, const FormerEdge&) = default;
};

struct PlannedTarget {
  IndexedTarget index;
  std::vector<FormerEdge> former;  // one entry per original neighbor

  friend bool operator==(const PlannedTarget& a, const PlannedTarget& b) {
    return a.index.vertex == b.index.vertex && a.index.parent == b.index.parent && a.index.i == b.index.i &&
           a.index.j == b.index.j && a.index.k == b.index.k && a.former == b.former;
  }
};

// Strict: (b) an edge between every two cliques of a block, (c) an edge from
// every clique to every other block of its class. Weak: at least one such
// edge per clique.
enum class ConditionReading : std::uint8_t { kStrict, kWeak };

struct ReplacementPlan {
  std::uint32_t h = 0;
  std::uint32_t degree = 0;
  std::uint32_t depth = 3;
  RangeSpec ranges;
  bool use_d = true;
  ConditionReading reading = ConditionReading::kStrict;
  std::uint64_t seed = 0;
  std::vector<PlannedTarget> targets;
  std::vector<CliqueLink> links;

  friend bool operator==(const ReplacementPlan&, const ReplacementPlan&) = default;
};

// Complete edge ledger for the strict conditions: former edges spread over
// the clique with the parent on slot 0 and at least one non-parent edge per
// slot; one (b) edge per clique pair of a block; a perfect matching of
// cliques for every pair of blocks of a class, rotated by the seed, as (c);
// with use_d, a rotated perfect matching of clique vertices between every
// two classes as (d). Non-zero seeds also permute former-edge order.
// Throws Infeasible when the slots cannot hold the demand.
ReplacementPlan make_plan(const Graph& g, const TreeIndex& index, std::uint32_t h, std::uint64_t seed,
                          bool use_d = true);

// Vertex of `slot` in the clique replacing target number `target`: slot 0
// keeps the replaced vertex's id, the rest are appended after the base
// order in target-major order.
Vertex clique_vertex(const ReplacementPlan& plan, std::size_t base_order, std::uint32_t target,
                     std::uint32_t slot);

// Throws PlanGraphMismatch when a target, parent or former neighbor of the
// plan disagrees with the graph.
Graph apply_plan(const Graph& g, const ReplacementPlan& plan);

struct ConditionResult {
  char condition = 'a';
  bool evaluated = true;  // false when vacuous or disabled
  bool passed = true;
  std::size_t checks = 0;
  std::string witness;         // a satisfying edge, when passed
  std::string counterexample;  // first violation, when failed
};

struct ConditionsReport {
  std::vector<ConditionResult> results;  // a, b, c, d, e in order

  bool all_passed() const;
  const ConditionResult& operator[](char condition) const;
};

// Evaluates (a)-(e) on the realized graph. (d) is skipped when use_d is
// false; (b)/(c) follow plan.reading.
ConditionsReport check_conditions(const Graph& compound, const ReplacementPlan& plan, bool use_d);

// Distances that the diameter argument relies on.
struct ProofObligations {
  std::uint32_t max_intra_block = 0;  // between cliques of one (i, j) block
  std::uint32_t max_cross_block = 0;  // between cliques of one class, different j
  std::size_t intra_pairs = 0;
  std::size_t cross_pairs = 0;
};

ProofObligations measure_proof_obligations(const Graph& compound, const ReplacementPlan& plan,
                                           std::size_t max_cross_sources = 256);

struct CompoundCertifyOptions {
  unsigned workers = 1;
  // Exact all-sources diameter up to this order, locality-bounded above it.
  std::size_t exact_limit = 10'000;
  std::uint64_t bfs_budget = 10'000;
  std::optional<DiameterMode> force_mode;
  bool compute_girth = false;
};

// Certificate for a compound built from `base`. Above the exact limit the
// diameter is bounded with the locality argument: only pairs whose every
// shortest base path meets a replaced vertex can change, so BFS runs from
// the clique vertices, from vertices closer than D/2 to a target, and from
// the vertices at distance exactly D/2 that see targets on all of their
// branches bound every eccentricity that can exceed the base diameter D.
// Requires a generalized polygon as base (bipartite Moore, even D).
Certificate certify_compound(const Graph& compound, const Graph& base, std::uint32_t base_diameter,
                             const ReplacementPlan& plan, const CompoundCertifyOptions& options = {});

// Sources the locality bound has to run BFS from (compound vertex ids).
std::vector<Vertex> locality_sources(const Graph& base, std::uint32_t base_diameter, const ReplacementPlan& plan);

}  // namespace ddg
