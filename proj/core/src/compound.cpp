#include "ddg/compound.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>

#include "ddg/error.hpp"
#include "ddg/moore.hpp"

namespace ddg {
namespace {

std::string edge_text(Vertex a, Vertex b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; }

std::uint32_t target_number(const RangeSpec& r, std::uint32_t i, std::uint32_t j, std::uint32_t k) {
  return (i * r.J + j) * r.K + k;
}

// Per compound vertex: owning target or kNoOwner.
constexpr std::uint32_t kNoOwner = 0xffffffffu;

std::vector<std::uint32_t> clique_owner(const ReplacementPlan& plan, std::size_t base_order, std::size_t order) {
  std::vector<std::uint32_t> owner(order, kNoOwner);
  for (std::uint32_t t = 0; t < plan.targets.size(); ++t) {
    for (std::uint32_t s = 0; s < plan.h; ++s) owner[clique_vertex(plan, base_order, t, s)] = t;
  }
  return owner;
}

std::size_t base_order_of(const Graph& compound, const ReplacementPlan& plan) {
  const std::size_t added = plan.targets.size() * (plan.h - 1);
  if (compound.order() < added) throw Error(ErrorCode::kPlanGraphMismatch, "compound smaller than its plan");
  return compound.order() - added;
}

// Vertices within `depth` of `source`, with distances (source included).
class TruncatedBfs {
 public:
  explicit TruncatedBfs(std::size_t order) : dist_(order, kUnseen) {}

  template <class Visit>
  void run(const Graph& g, Vertex source, std::uint32_t depth, Visit&& visit) {
    queue_.assign(1, source);
    dist_[source] = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Vertex v = queue_[head];
      visit(v, dist_[v]);
      if (dist_[v] == depth) continue;
      for (Vertex w : g.neighbors(v)) {
        if (dist_[w] != kUnseen) continue;
        dist_[w] = dist_[v] + 1;
        queue_.push_back(w);
      }
    }
    for (Vertex v : queue_) dist_[v] = kUnseen;
  }

 private:
  static constexpr std::uint32_t kUnseen = 0xffffffffu;
  std::vector<std::uint32_t> dist_;
  std::vector<Vertex> queue_;
};

}  // namespace

TreeIndex index_tree(const Graph& g, Vertex root, RangeSpec ranges, std::uint32_t depth) {
  if (depth != 2 && depth != 3) throw Error(ErrorCode::kInvalidArgument, "tree depth must be 2 or 3");
  if (root >= g.order()) throw Error(ErrorCode::kVertexOutOfRange, "root out of range");
  const std::size_t degree = g.degree(root);
  if (degree < 3) throw Error(ErrorCode::kNotMoore, "root degree below 3");
  const std::uint32_t q = static_cast<std::uint32_t>(degree - 1);
  if (ranges.I < 1 || ranges.J < 1 || ranges.K < 1) {
    throw Error(ErrorCode::kInvalidArgument, "ranges must be at least 1");
  }
  if (ranges.I > degree || ranges.J > q || ranges.K > q) {
    throw Error(ErrorCode::kRangeExceedsDegree,
                "ranges (" + std::to_string(ranges.I) + ", " + std::to_string(ranges.J) + ", " +
                    std::to_string(ranges.K) + ") exceed degree " + std::to_string(degree));
  }
  if (depth == 2 && ranges.K != 1) throw Error(ErrorCode::kInvalidArgument, "depth-2 targets need K = 1");

  std::uint32_t diam = 0;
  for (std::uint32_t d : {4u, 6u}) {
    if (bipartite_moore_bound(degree, d) == g.order()) diam = d;
  }
  if (diam == 0) {
    throw Error(ErrorCode::kNotMoore, "order " + std::to_string(g.order()) +
                                          " is not a bipartite Moore order of diameter 4 or 6 for degree " +
                                          std::to_string(degree));
  }
  const DegreeStats ds = degree_stats(g);
  if (ds.min != degree || ds.max != degree) throw Error(ErrorCode::kNotMoore, "graph is not regular");
  if (level_sizes(g, root) != moore_level_sizes(q, diam)) {
    throw Error(ErrorCode::kNotMoore, "BFS levels from the root differ from the Moore counts");
  }

  TreeIndex ti;
  ti.root = root;
  ti.depth = depth;
  ti.degree = static_cast<std::uint32_t>(degree);
  ti.base_diameter = diam;
  ti.ranges = ranges;
  const auto children = [&](Vertex v, Vertex exclude) {
    std::vector<Vertex> out;
    for (Vertex x : g.neighbors(v)) {
      if (x != exclude) out.push_back(x);
    }
    return out;
  };
  ti.u.assign(g.neighbors(root).begin(), g.neighbors(root).end());
  ti.w.resize(degree);
  for (std::uint32_t i = 0; i < degree; ++i) ti.w[i] = children(ti.u[i], root);
  for (std::uint32_t i = 0; i < ranges.I; ++i) {
    for (std::uint32_t j = 0; j < ranges.J; ++j) {
      if (depth == 2) {
        ti.targets.push_back({i, j, 0, ti.w[i][j], ti.u[i]});
        continue;
      }
      const auto xs = children(ti.w[i][j], ti.u[i]);
      for (std::uint32_t k = 0; k < ranges.K; ++k) ti.targets.push_back({i, j, k, xs[k], ti.w[i][j]});
    }
  }
  return ti;
}

SlotLedger slot_balance(std::uint32_t degree, std::uint32_t h, RangeSpec ranges, bool use_d) {
  if (h < 2 || h >= degree) {
    throw Error(ErrorCode::kInfeasible, "clique size " + std::to_string(h) + " must lie in [2, " +
                                            std::to_string(degree) + ")");
  }
  SlotLedger s;
  s.degree = degree;
  s.h = h;
  s.per_vertex = degree - (h - 1);
  s.capacity = h * s.per_vertex;
  s.former = degree;
  s.block = ranges.K - 1;
  s.cross = ranges.J - 1;
  s.cls = use_d ? h * (ranges.I - 1) : 0;
  s.demand = s.former + s.block + s.cross + s.cls;
  if (s.demand > s.capacity) {
    throw Error(ErrorCode::kInfeasible, "clique demand " + std::to_string(s.demand) + " exceeds capacity " +
                                            std::to_string(s.capacity));
  }
  s.surplus = s.capacity - s.demand;
  return s;
}

std::string to_string(LinkRole role) {
  switch (role) {
    case LinkRole::kBlock: return "b";
    case LinkRole::kCross: return "c";
    case LinkRole::kClass: return "d";
    case LinkRole::kExtra: return "x";
  }
  return "?";
}

ReplacementPlan make_plan(const Graph& g, const TreeIndex& index, std::uint32_t h, std::uint64_t seed, bool use_d) {
  const RangeSpec r = index.ranges;
  const SlotLedger ledger = slot_balance(index.degree, h, r, use_d);
  const std::uint32_t d_per_vertex = use_d ? r.I - 1 : 0;
  if (ledger.per_vertex < d_per_vertex + 2) {
    throw Error(ErrorCode::kInfeasible, "slot 0 cannot hold the parent edge and another former edge");
  }
  std::mt19937_64 rng(seed);

  ReplacementPlan plan;
  plan.h = h;
  plan.degree = index.degree;
  plan.depth = index.depth;
  plan.ranges = r;
  plan.use_d = use_d;
  plan.reading = ConditionReading::kStrict;
  plan.seed = seed;

  // Room left on each clique vertex after the (d) edges.
  const std::uint32_t t_count = r.count();
  std::vector<std::vector<std::uint32_t>> room(t_count, std::vector<std::uint32_t>(h, ledger.per_vertex - d_per_vertex));

  plan.targets.reserve(t_count);
  for (const IndexedTarget& t : index.targets) plan.targets.push_back({t, {}});

  // (b): every clique pair inside a block.
  for (std::uint32_t i = 0; i < r.I; ++i) {
    for (std::uint32_t j = 0; j < r.J; ++j) {
      for (std::uint32_t k = 0; k < r.K; ++k) {
        for (std::uint32_t l = k + 1; l < r.K; ++l) {
          plan.links.push_back({{target_number(r, i, j, k), 0}, {target_number(r, i, j, l), 0}, LinkRole::kBlock});
        }
      }
    }
  }
  // (c): perfect matching of cliques between every two blocks of a class.
  const std::uint64_t shift = seed % std::max<std::uint32_t>(r.K, 1);
  for (std::uint32_t i = 0; i < r.I; ++i) {
    for (std::uint32_t j = 0; j < r.J; ++j) {
      for (std::uint32_t m = j + 1; m < r.J; ++m) {
        for (std::uint32_t k = 0; k < r.K; ++k) {
          const auto partner = static_cast<std::uint32_t>((k + j + m + shift) % r.K);
          plan.links.push_back(
              {{target_number(r, i, j, k), 0}, {target_number(r, i, m, partner), 0}, LinkRole::kCross});
        }
      }
    }
  }
  // Link ends go to the slot with the most room; the ledger guarantees the
  // total fits once former edges are placed, so reserve their room first.
  const std::uint32_t q = index.degree - 1;
  std::vector<std::vector<std::uint32_t>> former_count(t_count, std::vector<std::uint32_t>(h, 0));
  for (std::uint32_t t = 0; t < t_count; ++t) {
    former_count[t][0] = 1;  // parent
    for (std::uint32_t n = 0; n < q; ++n) ++former_count[t][(n + 1) % h];
    for (std::uint32_t s = 0; s < h; ++s) {
      if (former_count[t][s] > room[t][s]) {
        throw Error(ErrorCode::kInfeasible, "former edges overflow a clique vertex");
      }
      room[t][s] -= former_count[t][s];
    }
  }
  std::vector<std::size_t> order(plan.links.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (seed != 0) std::shuffle(order.begin(), order.end(), rng);
  auto place = [&](CliqueEnd& end) {
    auto& slots = room[end.target];
    std::uint32_t best = 0;
    for (std::uint32_t s = 1; s < h; ++s) {
      if (slots[s] > slots[best]) best = s;
    }
    if (slots[best] == 0) throw Error(ErrorCode::kInfeasible, "no free slot for an inter-clique edge");
    --slots[best];
    end.slot = best;
  };
  for (std::size_t idx : order) {
    place(plan.links[idx].a);
    place(plan.links[idx].b);
  }

  // (d): rotated perfect matching between the vertices of every two classes.
  if (use_d) {
    const std::uint32_t per_class = r.J * r.K * h;
    for (std::uint32_t i = 0; i < r.I; ++i) {
      for (std::uint32_t o = i + 1; o < r.I; ++o) {
        const std::uint64_t rot = (o - i + seed) % per_class;
        for (std::uint32_t n = 0; n < per_class; ++n) {
          const auto m = static_cast<std::uint32_t>((n + rot) % per_class);
          const CliqueEnd a{i * r.J * r.K + n / h, n % h};
          const CliqueEnd b{o * r.J * r.K + m / h, m % h};
          plan.links.push_back({a, b, LinkRole::kClass});
        }
      }
    }
  }

  // Former edges: parent on slot 0, the others round-robin from slot 1.
  for (std::uint32_t t = 0; t < t_count; ++t) {
    PlannedTarget& pt = plan.targets[t];
    if (pt.index.vertex >= g.order() || g.degree(pt.index.vertex) != index.degree) {
      throw Error(ErrorCode::kPlanGraphMismatch, "index does not belong to this graph");
    }
    pt.former.push_back({pt.index.parent, 0});
    std::vector<std::uint32_t> slots(q);
    for (std::uint32_t n = 0; n < q; ++n) slots[n] = (n + 1) % h;
    if (seed != 0) std::shuffle(slots.begin(), slots.end(), rng);
    std::uint32_t n = 0;
    for (Vertex y : g.neighbors(pt.index.vertex)) {
      if (y != pt.index.parent) pt.former.push_back({y, slots[n++]});
    }
  }
  return plan;
}

Vertex clique_vertex(const ReplacementPlan& plan, std::size_t base_order, std::uint32_t target, std::uint32_t slot) {
  if (slot == 0) return plan.targets[target].index.vertex;
  return static_cast<Vertex>(base_order + static_cast<std::size_t>(target) * (plan.h - 1) + (slot - 1));
}

Graph apply_plan(const Graph& g, const ReplacementPlan& plan) {
  const std::size_t n = g.order();
  const std::size_t t_count = plan.targets.size();
  std::vector<char> is_target(n, 0);
  for (const PlannedTarget& t : plan.targets) {
    const Vertex x = t.index.vertex;
    if (x >= n) throw Error(ErrorCode::kPlanGraphMismatch, "target " + std::to_string(x) + " out of range");
    if (is_target[x]) throw Error(ErrorCode::kPlanGraphMismatch, "target " + std::to_string(x) + " repeated");
    is_target[x] = 1;
  }
  for (const PlannedTarget& t : plan.targets) {
    const Vertex x = t.index.vertex;
    const auto nb = g.neighbors(x);
    if (t.former.size() != nb.size()) {
      throw Error(ErrorCode::kPlanGraphMismatch, "target " + std::to_string(x) + " has " +
                                                     std::to_string(nb.size()) + " neighbors, plan lists " +
                                                     std::to_string(t.former.size()));
    }
    std::vector<Vertex> listed;
    for (const FormerEdge& f : t.former) {
      if (f.slot >= plan.h) throw Error(ErrorCode::kPlanGraphMismatch, "former edge slot out of range");
      listed.push_back(f.neighbor);
    }
    std::sort(listed.begin(), listed.end());
    if (!std::equal(listed.begin(), listed.end(), nb.begin(), nb.end())) {
      throw Error(ErrorCode::kPlanGraphMismatch, "former neighbors of " + std::to_string(x) + " differ from the graph");
    }
    if (!g.adjacent(x, t.index.parent)) {
      throw Error(ErrorCode::kPlanGraphMismatch, "parent of " + std::to_string(x) + " is not adjacent");
    }
    for (Vertex y : nb) {
      if (is_target[y]) throw Error(ErrorCode::kPlanGraphMismatch, "adjacent targets " + edge_text(x, y));
    }
  }

  const std::size_t order = n + t_count * (plan.h - 1);
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() + t_count * plan.h * plan.h + plan.links.size());
  for (const auto& [u, v] : g.edges()) {
    if (!is_target[u] && !is_target[v]) edges.emplace_back(u, v);
  }
  for (std::uint32_t t = 0; t < t_count; ++t) {
    for (std::uint32_t s = 0; s < plan.h; ++s) {
      for (std::uint32_t s2 = s + 1; s2 < plan.h; ++s2) {
        edges.emplace_back(clique_vertex(plan, n, t, s), clique_vertex(plan, n, t, s2));
      }
    }
    for (const FormerEdge& f : plan.targets[t].former) edges.emplace_back(clique_vertex(plan, n, t, f.slot), f.neighbor);
  }
  for (const CliqueLink& l : plan.links) {
    if (l.a.target >= t_count || l.b.target >= t_count || l.a.slot >= plan.h || l.b.slot >= plan.h) {
      throw Error(ErrorCode::kPlanGraphMismatch, "link refers to a missing clique");
    }
    if (l.a.target == l.b.target) throw Error(ErrorCode::kPlanGraphMismatch, "link inside one clique");
    edges.emplace_back(clique_vertex(plan, n, l.a.target, l.a.slot), clique_vertex(plan, n, l.b.target, l.b.slot));
  }

  std::vector<VertexLabel> labels(order);
  if (g.has_labels()) std::copy(g.labels().begin(), g.labels().end(), labels.begin());
  for (std::uint32_t t = 0; t < t_count; ++t) {
    for (std::uint32_t s = 0; s < plan.h; ++s) labels[clique_vertex(plan, n, t, s)] = {LabelKind::kClique, t, s};
  }
  return Graph::from_edges(order, edges, std::move(labels));
}

bool ConditionsReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const ConditionResult& r) { return r.passed; });
}

const ConditionResult& ConditionsReport::operator[](char condition) const {
  for (const ConditionResult& r : results) {
    if (r.condition == condition) return r;
  }
  throw Error(ErrorCode::kInvalidArgument, std::string("no condition '") + condition + "'");
}

ConditionsReport check_conditions(const Graph& compound, const ReplacementPlan& plan, bool use_d) {
  const std::size_t base = base_order_of(compound, plan);
  const std::vector<std::uint32_t> owner = clique_owner(plan, base, compound.order());
  const RangeSpec r = plan.ranges;
  const auto& targets = plan.targets;
  ConditionsReport report;

  auto clique_members = [&](std::uint32_t t) {
    std::vector<Vertex> out;
    for (std::uint32_t s = 0; s < plan.h; ++s) out.push_back(clique_vertex(plan, base, t, s));
    return out;
  };
  // First edge from clique t to a clique accepted by `pred`, if any.
  auto edge_to = [&](std::uint32_t t, auto&& pred) -> std::optional<Edge> {
    for (Vertex v : clique_members(t)) {
      for (Vertex w : compound.neighbors(v)) {
        if (owner[w] != kNoOwner && owner[w] != t && pred(owner[w])) return Edge{v, w};
      }
    }
    return std::nullopt;
  };

  {
    ConditionResult a;
    a.condition = 'a';
    for (std::uint32_t t = 0; t < targets.size() && a.passed; ++t) {
      std::vector<Vertex> former;
      for (const FormerEdge& f : targets[t].former) {
        if (f.neighbor != targets[t].index.parent) former.push_back(f.neighbor);
      }
      std::sort(former.begin(), former.end());
      for (Vertex v : clique_members(t)) {
        ++a.checks;
        bool found = false;
        for (Vertex w : compound.neighbors(v)) {
          if (std::binary_search(former.begin(), former.end(), w)) {
            if (a.witness.empty()) a.witness = edge_text(v, w);
            found = true;
            break;
          }
        }
        if (!found) {
          a.passed = false;
          a.counterexample = "vertex " + std::to_string(v) + " of clique " + std::to_string(t) +
                             " has no former non-parent neighbor";
          break;
        }
      }
    }
    report.results.push_back(a);
  }

  {
    ConditionResult b;
    b.condition = 'b';
    b.evaluated = r.K > 1;
    for (std::uint32_t t = 0; b.evaluated && t < targets.size() && b.passed; ++t) {
      const auto& ti = targets[t].index;
      auto same_block = [&](std::uint32_t o) {
        return targets[o].index.i == ti.i && targets[o].index.j == ti.j;
      };
      if (plan.reading == ConditionReading::kWeak) {
        ++b.checks;
        if (auto e = edge_to(t, same_block)) {
          if (b.witness.empty()) b.witness = edge_text(e->first, e->second);
        } else {
          b.passed = false;
          b.counterexample = "clique " + std::to_string(t) + " has no edge inside its block";
        }
        continue;
      }
      for (std::uint32_t l = 0; l < r.K && b.passed; ++l) {
        if (l == ti.k) continue;
        const std::uint32_t other = target_number(r, ti.i, ti.j, l);
        ++b.checks;
        if (auto e = edge_to(t, [&](std::uint32_t o) { return o == other; })) {
          if (b.witness.empty()) b.witness = edge_text(e->first, e->second);
        } else {
          b.passed = false;
          b.counterexample = "cliques " + std::to_string(t) + " and " + std::to_string(other) + " are not joined";
        }
      }
    }
    report.results.push_back(b);
  }

  {
    ConditionResult c;
    c.condition = 'c';
    c.evaluated = r.J > 1;
    for (std::uint32_t t = 0; c.evaluated && t < targets.size() && c.passed; ++t) {
      const auto& ti = targets[t].index;
      if (plan.reading == ConditionReading::kWeak) {
        ++c.checks;
        auto other_block = [&](std::uint32_t o) {
          return targets[o].index.i == ti.i && targets[o].index.j != ti.j;
        };
        if (auto e = edge_to(t, other_block)) {
          if (c.witness.empty()) c.witness = edge_text(e->first, e->second);
        } else {
          c.passed = false;
          c.counterexample = "clique " + std::to_string(t) + " has no edge to another block";
        }
        continue;
      }
      for (std::uint32_t m = 0; m < r.J && c.passed; ++m) {
        if (m == ti.j) continue;
        ++c.checks;
        auto in_block = [&](std::uint32_t o) { return targets[o].index.i == ti.i && targets[o].index.j == m; };
        if (auto e = edge_to(t, in_block)) {
          if (c.witness.empty()) c.witness = edge_text(e->first, e->second);
        } else {
          c.passed = false;
          c.counterexample = "clique " + std::to_string(t) + " has no edge to block j=" + std::to_string(m);
        }
      }
    }
    report.results.push_back(c);
  }

  {
    ConditionResult d;
    d.condition = 'd';
    d.evaluated = use_d && r.I > 1;
    for (std::uint32_t t = 0; d.evaluated && t < targets.size() && d.passed; ++t) {
      const auto& ti = targets[t].index;
      for (Vertex v : clique_members(t)) {
        for (std::uint32_t o = 0; o < r.I && d.passed; ++o) {
          if (o == ti.i) continue;
          ++d.checks;
          bool found = false;
          for (Vertex w : compound.neighbors(v)) {
            if (owner[w] != kNoOwner && targets[owner[w]].index.i == o) {
              if (d.witness.empty()) d.witness = edge_text(v, w);
              found = true;
              break;
            }
          }
          if (!found) {
            d.passed = false;
            d.counterexample = "vertex " + std::to_string(v) + " has no neighbor in class i=" + std::to_string(o);
          }
        }
      }
    }
    report.results.push_back(d);
  }

  {
    ConditionResult e;
    e.condition = 'e';
    for (Vertex v = 0; v < compound.order(); ++v) {
      ++e.checks;
      if (compound.degree(v) > plan.degree) {
        e.passed = false;
        e.counterexample = "vertex " + std::to_string(v) + " has degree " + std::to_string(compound.degree(v));
        break;
      }
    }
    if (e.passed) e.witness = "max degree <= " + std::to_string(plan.degree);
    report.results.push_back(e);
  }
  return report;
}

ProofObligations measure_proof_obligations(const Graph& compound, const ReplacementPlan& plan,
                                           std::size_t max_cross_sources) {
  const std::size_t base = base_order_of(compound, plan);
  const std::vector<std::uint32_t> owner = clique_owner(plan, base, compound.order());
  const auto& targets = plan.targets;
  ProofObligations out;
  TruncatedBfs bfs(compound.order());

  // Intra-block: every clique vertex, depth 4 so that a violation shows as 4.
  for (std::uint32_t t = 0; t < targets.size(); ++t) {
    const auto& ti = targets[t].index;
    std::size_t partners = 0;
    for (std::uint32_t o = 0; o < targets.size(); ++o) {
      if (o != t && targets[o].index.i == ti.i && targets[o].index.j == ti.j) ++partners;
    }
    if (partners == 0) continue;
    for (std::uint32_t s = 0; s < plan.h; ++s) {
      std::size_t seen = 0;
      std::uint32_t worst = 0;
      bfs.run(compound, clique_vertex(plan, base, t, s), 3, [&](Vertex v, std::uint32_t d) {
        const std::uint32_t o = owner[v];
        if (o == kNoOwner || o == t) return;
        if (targets[o].index.i == ti.i && targets[o].index.j == ti.j) {
          ++seen;
          worst = std::max(worst, d);
        }
      });
      out.intra_pairs += partners * plan.h;
      if (seen < partners * plan.h) worst = 4;  // something lies beyond distance 3
      out.max_intra_block = std::max(out.max_intra_block, worst);
    }
  }

  // Cross-block: evenly spaced sample of clique vertices, depth 6.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> sources;
  for (std::uint32_t t = 0; t < targets.size(); ++t) {
    for (std::uint32_t s = 0; s < plan.h; ++s) sources.emplace_back(t, s);
  }
  const std::size_t stride = std::max<std::size_t>(1, (sources.size() + max_cross_sources - 1) / max_cross_sources);
  for (std::size_t idx = 0; idx < sources.size(); idx += stride) {
    const auto [t, s] = sources[idx];
    const auto& ti = targets[t].index;
    std::size_t partners = 0;
    for (std::uint32_t o = 0; o < targets.size(); ++o) {
      if (targets[o].index.i == ti.i && targets[o].index.j != ti.j) ++partners;
    }
    if (partners == 0) continue;
    std::size_t seen = 0;
    std::uint32_t worst = 0;
    bfs.run(compound, clique_vertex(plan, base, t, s), 5, [&](Vertex v, std::uint32_t d) {
      const std::uint32_t o = owner[v];
      if (o == kNoOwner || o == t) return;
      if (targets[o].index.i == ti.i && targets[o].index.j != ti.j) {
        ++seen;
        worst = std::max(worst, d);
      }
    });
    out.cross_pairs += partners * plan.h;
    if (seen < partners * plan.h) worst = 6;
    out.max_cross_block = std::max(out.max_cross_block, worst);
  }
  return out;
}

std::vector<Vertex> locality_sources(const Graph& base, std::uint32_t base_diameter, const ReplacementPlan& plan) {
  const std::size_t n = base.order();
  const std::uint32_t half = base_diameter / 2;
  constexpr std::uint32_t kFar = 0xffffffffu;
  std::vector<std::uint32_t> dist(n, kFar);
  std::vector<Vertex> queue;
  for (const PlannedTarget& t : plan.targets) {
    dist[t.index.vertex] = 0;
    queue.push_back(t.index.vertex);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    if (dist[v] == half) continue;
    for (Vertex w : base.neighbors(v)) {
      if (dist[w] != kFar) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  auto parts = bipartition(base);
  const auto* sides = std::get_if<Bipartition>(&parts);
  if (sides == nullptr) throw Error(ErrorCode::kInvalidArgument, "locality bound needs a bipartite base");
  std::vector<char> side_a(n, 0);
  for (Vertex v : sides->side_a) side_a[v] = 1;
  for (const PlannedTarget& t : plan.targets) {
    if (side_a[t.index.vertex] != side_a[plan.targets.front().index.vertex]) {
      throw Error(ErrorCode::kInvalidArgument, "locality bound needs all targets on one side");
    }
  }
  std::vector<Vertex> sources;
  for (std::uint32_t t = 0; t < plan.targets.size(); ++t) {
    for (std::uint32_t s = 0; s < plan.h; ++s) sources.push_back(clique_vertex(plan, n, t, s));
  }
  // A pair loses its base distance only if every shortest base path meets a
  // target; a target at position p needs both ends at least p and len - p
  // away from T. Crossing a clique costs one extra edge.
  auto count_at = [&](Vertex v, std::uint32_t d) {
    const auto nb = base.neighbors(v);
    return static_cast<std::size_t>(std::count_if(nb.begin(), nb.end(), [&](Vertex a) { return dist[a] == d; }));
  };
  for (Vertex v = 0; v < n; ++v) {
    if (dist[v] == 0 || dist[v] == kFar) continue;
    const std::size_t deg = base.degree(v);
    if (base_diameter == 6 && dist[v] == 2) {
      // Targets sit at even positions from v, so a bad partner at distance
      // 3 or 4 from T needs every branch of v to hit a target at position 2,
      // and a bad partner at distance 2 splits the branches between the two
      // ends: one of them has at least half its neighbors next to T.
      if (2 * count_at(v, 1) >= deg) sources.push_back(v);
      continue;
    }
    if (dist[v] < half) {
      sources.push_back(v);
      continue;
    }
    // Distance exactly half: only a problem when every branch leads to a
    // target at that distance.
    if (count_at(v, half - 1) == deg) sources.push_back(v);
  }
  std::sort(sources.begin(), sources.end());
  return sources;
}

Certificate certify_compound(const Graph& compound, const Graph& base, std::uint32_t base_diameter,
                             const ReplacementPlan& plan, const CompoundCertifyOptions& options) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const DiameterMode mode =
      options.force_mode.value_or(compound.order() <= options.exact_limit ? DiameterMode::kExact : DiameterMode::kBounded);
  if (mode == DiameterMode::kExact) {
    CertifyOptions co;
    co.compute_girth = options.compute_girth;
    co.diameter.mode = DiameterMode::kExact;
    co.diameter.workers = options.workers;
    return certify(compound, co);
  }

  Certificate c;
  c.order = compound.order();
  const DegreeStats ds = degree_stats(compound);
  c.min_degree = ds.min;
  c.max_degree = ds.max;
  auto parts = bipartition(compound);
  if (const auto* b = std::get_if<Bipartition>(&parts)) {
    c.bipartite = true;
    c.side_a = b->side_a.size();
    c.side_b = b->side_b.size();
  }
  if (options.compute_girth) c.girth = girth(compound, options.workers);
  c.phase_ms["structure"] =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();

  const auto t0 = Clock::now();
  if (base_diameter % 2 != 0) throw Error(ErrorCode::kInvalidArgument, "locality bound needs an even base diameter");
  const std::vector<Vertex> sources = locality_sources(base, base_diameter, plan);
  if (sources.size() > options.bfs_budget) {
    throw Error(ErrorCode::kBudgetExceeded, "locality bound needs " + std::to_string(sources.size()) +
                                                " BFS runs, budget is " + std::to_string(options.bfs_budget));
  }
  const auto ecc = eccentricities(compound, sources, options.workers);
  const std::uint32_t worst = ecc.empty() ? 0 : *std::max_element(ecc.begin(), ecc.end());
  c.diameter_lower = worst;
  c.diameter_upper = std::max(worst, base_diameter);
  if (c.diameter_lower != c.diameter_upper) {
    throw Error(ErrorCode::kCertificationFailed, "locality bounds [" + std::to_string(c.diameter_lower) + ", " +
                                                     std::to_string(c.diameter_upper) + "] do not meet");
  }
  c.diameter = worst;
  c.diameter_method = DiameterMode::kBounded;
  c.bfs_runs = sources.size();
  c.phase_ms["diameter"] = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  c.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return c;
}

}  // namespace ddg
