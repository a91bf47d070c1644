#include "ddg/metrics.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>
#include <numeric>

#include "ddg/error.hpp"
#include "parallel.hpp"

namespace ddg {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct BfsResult {
  std::vector<std::uint32_t> dist;
  std::vector<Vertex> parent;
  std::vector<Vertex> order;  // visit order
};

BfsResult bfs_full(const Graph& g, Vertex source) {
  const auto n = static_cast<std::uint32_t>(g.order());
  BfsResult r;
  r.dist.assign(n, n);
  r.parent.assign(n, n);
  r.order.reserve(n);
  r.dist[source] = 0;
  r.order.push_back(source);
  for (std::size_t head = 0; head < r.order.size(); ++head) {
    const Vertex v = r.order[head];
    for (Vertex w : g.neighbors(v)) {
      if (r.dist[w] != n) continue;
      r.dist[w] = r.dist[v] + 1;
      r.parent[w] = v;
      r.order.push_back(w);
    }
  }
  return r;
}

// Lowest-numbered vertex at maximum distance; throws if unreachable parts.
Vertex farthest(const BfsResult& r) {
  if (r.order.size() != r.dist.size()) throw Error(ErrorCode::kDisconnected, "graph is disconnected");
  const std::uint32_t ecc = r.dist[r.order.back()];
  for (Vertex v = 0; v < r.dist.size(); ++v) {
    if (r.dist[v] == ecc) return v;
  }
  return r.order.back();
}

Vertex walk_up(const BfsResult& r, Vertex v, std::uint32_t steps) {
  while (steps-- > 0) v = r.parent[v];
  return v;
}

class BudgetTracker {
 public:
  explicit BudgetTracker(std::uint64_t budget) : budget_(budget) {}

  void charge(std::uint64_t runs, std::uint32_t lower, std::uint32_t upper) {
    if (runs_ + runs > budget_) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "bounded diameter needs more than " + std::to_string(budget_) + " BFS runs; bounds [" +
                      std::to_string(lower) + ", " + std::to_string(upper) + "] after " +
                      std::to_string(runs_));
    }
    runs_ += runs;
  }
  std::uint64_t runs() const { return runs_; }

 private:
  std::uint64_t budget_;
  std::uint64_t runs_ = 0;
};

DiameterResult bounded_diameter(const Graph& g, const DiameterOptions& options) {
  BudgetTracker budget(options.bfs_budget);
  const auto n = static_cast<std::uint32_t>(g.order());
  std::uint32_t lower = 0;
  std::uint32_t upper = n;

  auto sweep = [&](Vertex s) {
    budget.charge(1, lower, upper);
    BfsResult r = bfs_full(g, s);
    const Vertex far = farthest(r);
    lower = std::max(lower, r.dist[far]);
    return std::pair{std::move(r), far};
  };

  // 4-sweep: two double sweeps, each restarted from the middle of the
  // previous diametral path.
  Vertex start = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (g.degree(v) > g.degree(start)) start = v;
  }
  auto [r1, a1] = sweep(start);
  auto [r2, b1] = sweep(a1);
  const Vertex mid1 = walk_up(r2, b1, r2.dist[b1] / 2);
  auto [r3, a2] = sweep(mid1);
  auto [r4, b2] = sweep(a2);
  const Vertex root = walk_up(r4, b2, r4.dist[b2] / 2);

  budget.charge(1, lower, upper);
  const BfsResult rr = bfs_full(g, root);
  const std::uint32_t root_ecc = rr.dist[farthest(rr)];
  lower = std::max(lower, root_ecc);
  upper = 2 * root_ecc;

  std::vector<std::vector<Vertex>> fringe(root_ecc + 1);
  for (Vertex v = 0; v < n; ++v) fringe[rr.dist[v]].push_back(v);

  for (std::uint32_t level = root_ecc; upper > lower && level > 0; --level) {
    budget.charge(fringe[level].size(), lower, upper);
    const std::vector<std::uint32_t> ecc = eccentricities(g, fringe[level], options.workers);
    const std::uint32_t best = ecc.empty() ? 0 : *std::max_element(ecc.begin(), ecc.end());
    lower = std::max(lower, best);
    if (lower > 2 * (level - 1)) {
      upper = lower;
      break;
    }
    upper = 2 * (level - 1);
  }
  upper = std::max(upper, lower);
  if (upper != lower) {
    throw Error(ErrorCode::kBudgetExceeded, "bounded diameter did not converge");
  }
  return {lower, DiameterMode::kBounded, lower, upper, budget.runs()};
}

bool has_triangle(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    auto nu = g.neighbors(u);
    for (Vertex v : nu) {
      if (v <= u) continue;
      auto nv = g.neighbors(v);
      auto a = nu.begin();
      auto b = nv.begin();
      while (a != nu.end() && b != nv.end()) {
        if (*a == *b) return true;
        if (*a < *b) {
          ++a;
        } else {
          ++b;
        }
      }
    }
  }
  return false;
}

// Small unit-capacity max-flow (Edmonds-Karp); flows here are at most the
// maximum degree.
class UnitFlow {
 public:
  explicit UnitFlow(std::size_t nodes) : adj_(nodes) {}

  void add_arc(std::size_t from, std::size_t to, std::uint32_t cap) {
    adj_[from].push_back(arcs_.size());
    arcs_.push_back({to, cap});
    adj_[to].push_back(arcs_.size());
    arcs_.push_back({from, 0});
  }

  std::uint32_t max_flow(std::size_t s, std::size_t t) {
    std::uint32_t flow = 0;
    std::vector<std::size_t> via(adj_.size());
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    for (;;) {
      std::fill(via.begin(), via.end(), kNone);
      std::vector<std::size_t> queue{s};
      via[s] = kNone - 1;
      for (std::size_t head = 0; head < queue.size() && via[t] == kNone; ++head) {
        const std::size_t x = queue[head];
        for (std::size_t id : adj_[x]) {
          const Arc& a = arcs_[id];
          if (a.cap == 0 || via[a.to] != kNone) continue;
          via[a.to] = id;
          queue.push_back(a.to);
        }
      }
      if (via[t] == kNone) return flow;
      for (std::size_t x = t; x != s;) {
        const std::size_t id = via[x];
        --arcs_[id].cap;
        ++arcs_[id ^ 1].cap;
        x = arcs_[id ^ 1].to;
      }
      ++flow;
    }
  }

 private:
  struct Arc {
    std::size_t to;
    std::uint32_t cap;
  };
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Arc> arcs_;
};

}  // namespace

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.order()) throw Error(ErrorCode::kVertexOutOfRange, "BFS source out of range");
  return bfs_full(g, source).dist;
}

std::vector<std::size_t> level_sizes(const Graph& g, Vertex source) {
  const auto dist = bfs_distances(g, source);
  std::vector<std::size_t> sizes;
  for (std::uint32_t d : dist) {
    if (d == g.order()) continue;
    if (d >= sizes.size()) sizes.resize(d + 1, 0);
    ++sizes[d];
  }
  return sizes;
}

std::uint64_t count_far_pairs(const Graph& g, std::span<const Vertex> sources, std::uint32_t limit, unsigned workers) {
  const std::size_t n = g.order();
  for (Vertex s : sources) {
    if (s >= n) throw Error(ErrorCode::kVertexOutOfRange, "source out of range");
  }
  const std::size_t batches = (sources.size() + 63) / 64;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(batches, 1))));
  std::vector<std::uint64_t> far(batches, 0);
  struct Buffers {
    std::vector<std::uint64_t> visited, frontier, next;
  };
  std::vector<Buffers> buffers(workers);
  detail::parallel_for(batches, workers, [&](std::size_t batch, unsigned w) {
    Buffers& b = buffers[w];
    b.visited.assign(n, 0);
    b.frontier.assign(n, 0);
    b.next.assign(n, 0);
    const std::size_t first = batch * 64;
    const std::size_t count = std::min<std::size_t>(64, sources.size() - first);
    const std::uint64_t full = count == 64 ? ~0ull : ((1ull << count) - 1);
    for (std::size_t k = 0; k < count; ++k) {
      b.visited[sources[first + k]] |= 1ull << k;
      b.frontier[sources[first + k]] |= 1ull << k;
    }
    for (std::uint32_t level = 1; level <= limit; ++level) {
      std::uint64_t any = 0;
      for (std::size_t v = 0; v < n; ++v) {
        const std::uint64_t seen = b.visited[v];
        std::uint64_t acc = 0;
        if (seen != full) {
          for (Vertex x : g.neighbors(static_cast<Vertex>(v))) acc |= b.frontier[x];
          acc &= ~seen;
        }
        b.next[v] = acc;
        any |= acc;
      }
      if (any == 0) break;
      for (std::size_t v = 0; v < n; ++v) b.visited[v] |= b.next[v];
      std::swap(b.frontier, b.next);
    }
    std::uint64_t missing = 0;
    for (std::size_t v = 0; v < n; ++v) missing += static_cast<std::uint64_t>(std::popcount(full & ~b.visited[v]));
    far[batch] = missing;
  });
  return std::accumulate(far.begin(), far.end(), std::uint64_t{0});
}

std::vector<std::uint32_t> eccentricities(const Graph& g, std::span<const Vertex> sources, unsigned workers) {
  const std::size_t n = g.order();
  for (Vertex s : sources) {
    if (s >= n) throw Error(ErrorCode::kVertexOutOfRange, "eccentricity source out of range");
  }
  std::vector<std::uint32_t> ecc(sources.size(), 0);
  const std::size_t batches = (sources.size() + 63) / 64;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(batches, 1))));

  struct Buffers {
    std::vector<std::uint64_t> visited, frontier, next;
  };
  std::vector<Buffers> buffers(workers);

  detail::parallel_for(batches, workers, [&](std::size_t batch, unsigned w) {
    Buffers& b = buffers[w];
    b.visited.assign(n, 0);
    b.frontier.assign(n, 0);
    b.next.assign(n, 0);
    const std::size_t first = batch * 64;
    const std::size_t count = std::min<std::size_t>(64, sources.size() - first);
    const std::uint64_t full = count == 64 ? ~0ull : ((1ull << count) - 1);
    for (std::size_t k = 0; k < count; ++k) {
      const Vertex s = sources[first + k];
      b.visited[s] |= 1ull << k;
      b.frontier[s] |= 1ull << k;
    }
    std::uint32_t level = 0;
    for (;;) {
      ++level;
      std::uint64_t any = 0;
      for (std::size_t v = 0; v < n; ++v) {
        const std::uint64_t seen = b.visited[v];
        if (seen == full) {
          b.next[v] = 0;
          continue;
        }
        std::uint64_t acc = 0;
        for (Vertex w : g.neighbors(static_cast<Vertex>(v))) acc |= b.frontier[w];
        acc &= ~seen;
        b.next[v] = acc;
        any |= acc;
      }
      if (any == 0) break;
      for (std::size_t v = 0; v < n; ++v) b.visited[v] |= b.next[v];
      for (std::uint64_t bits = any; bits != 0; bits &= bits - 1) {
        ecc[first + static_cast<std::size_t>(std::countr_zero(bits))] = level;
      }
      std::swap(b.frontier, b.next);
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (b.visited[v] != full) {
        throw Error(ErrorCode::kDisconnected, "graph is disconnected (vertex " + std::to_string(v) +
                                                  " unreachable from a source)");
      }
    }
  });
  return ecc;
}

std::string to_string(DiameterMode mode) { return mode == DiameterMode::kExact ? "exact" : "bounded"; }

DiameterResult diameter(const Graph& g, const DiameterOptions& options) {
  if (g.order() == 0) throw Error(ErrorCode::kInvalidArgument, "diameter of the empty graph");
  if (options.mode == DiameterMode::kBounded) return bounded_diameter(g, options);
  std::vector<Vertex> all(g.order());
  std::iota(all.begin(), all.end(), Vertex{0});
  const auto ecc = eccentricities(g, all, options.workers);
  const std::uint32_t d = *std::max_element(ecc.begin(), ecc.end());
  return {d, DiameterMode::kExact, d, d, g.order()};
}

std::uint32_t girth(const Graph& g, unsigned workers) {
  if (has_triangle(g)) return 3;
  const auto n = static_cast<std::uint32_t>(g.order());
  constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  workers = std::max(1u, workers);
  std::vector<std::uint32_t> best(workers, kInf);
  struct Scratch {
    std::vector<std::uint32_t> dist;
    std::vector<Vertex> parent, queue;
  };
  std::vector<Scratch> scratch(workers);

  detail::parallel_for(n, workers, [&](std::size_t s, unsigned w) {
    Scratch& sc = scratch[w];
    if (sc.dist.empty()) {
      sc.dist.assign(n, kInf);
      sc.parent.assign(n, n);
    }
    std::uint32_t& local = best[w];
    sc.queue.clear();
    sc.queue.push_back(static_cast<Vertex>(s));
    sc.dist[s] = 0;
    for (std::size_t head = 0; head < sc.queue.size(); ++head) {
      const Vertex v = sc.queue[head];
      if (local != kInf && 2 * sc.dist[v] + 1 >= local) break;
      for (Vertex x : g.neighbors(v)) {
        if (sc.dist[x] == kInf) {
          sc.dist[x] = sc.dist[v] + 1;
          sc.parent[x] = v;
          sc.queue.push_back(x);
        } else if (x != sc.parent[v]) {
          local = std::min(local, sc.dist[v] + sc.dist[x] + 1);
        }
      }
    }
    for (Vertex v : sc.queue) {
      sc.dist[v] = kInf;
      sc.parent[v] = n;
    }
  });
  const std::uint32_t result = *std::min_element(best.begin(), best.end());
  if (result == kInf) throw Error(ErrorCode::kAcyclic, "graph has no cycle");
  return result;
}

std::variant<Bipartition, OddCycle> bipartition(const Graph& g) {
  const auto n = static_cast<std::uint32_t>(g.order());
  std::vector<std::int8_t> colour(n, -1);
  std::vector<Vertex> parent(n, n);
  std::vector<std::uint32_t> depth(n, 0);
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex w : g.neighbors(v)) {
        if (colour[w] == -1) {
          colour[w] = static_cast<std::int8_t>(1 - colour[v]);
          parent[w] = v;
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          // Climb both tree paths to their meeting point.
          std::vector<Vertex> left{v}, right{w};
          Vertex a = v, b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          OddCycle cyc;
          cyc.cycle = std::move(left);
          cyc.cycle.insert(cyc.cycle.end(), right.rbegin(), right.rend());
          return cyc;
        }
      }
    }
  }
  Bipartition out;
  for (Vertex v = 0; v < n; ++v) (colour[v] == 0 ? out.side_a : out.side_b).push_back(v);
  return out;
}

std::uint32_t disjoint_shortest_paths(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.order() || v >= g.order()) throw Error(ErrorCode::kVertexOutOfRange, "path endpoint out of range");
  if (u == v) throw Error(ErrorCode::kInvalidArgument, "path endpoints must differ");
  const auto n = static_cast<std::uint32_t>(g.order());
  const auto du = bfs_distances(g, u);
  const auto dv = bfs_distances(g, v);
  const std::uint32_t d = du[v];
  if (d == n) throw Error(ErrorCode::kDisconnected, "endpoints are in different components");

  std::vector<std::uint32_t> slot(n, n);
  std::vector<Vertex> members;
  for (Vertex w = 0; w < n; ++w) {
    if (du[w] != n && dv[w] != n && du[w] + dv[w] == d) {
      slot[w] = static_cast<std::uint32_t>(members.size());
      members.push_back(w);
    }
  }
  // node 2i = in(w), 2i+1 = out(w)
  UnitFlow flow(2 * members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Vertex w = members[i];
    const bool endpoint = w == u || w == v;
    flow.add_arc(2 * i, 2 * i + 1, endpoint ? n : 1);
    for (Vertex x : g.neighbors(w)) {
      if (slot[x] != n && du[x] == du[w] + 1) flow.add_arc(2 * i + 1, 2 * slot[x], 1);
    }
  }
  return flow.max_flow(2 * slot[u] + 1, 2 * slot[v]);
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  if (g.order() == 0) return s;
  s.min = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::size_t d = g.degree(v);
    s.min = std::min(s.min, d);
    s.max = std::max(s.max, d);
    ++s.histogram[d];
  }
  return s;
}

std::uint64_t moore_bound(std::uint64_t max_degree, std::uint32_t diam) {
  if (max_degree == 0) return 1;
  if (max_degree == 1) return 2;
  if (max_degree == 2) return 2ull * diam + 1;
  std::uint64_t pw = 1;
  for (std::uint32_t i = 0; i < diam; ++i) pw *= max_degree - 1;
  return (max_degree * pw - 2) / (max_degree - 2);
}

std::uint64_t bipartite_moore_bound(std::uint64_t max_degree, std::uint32_t diam) {
  if (max_degree == 0) return 1;
  if (max_degree == 1) return 2;
  if (max_degree == 2) return 2ull * diam;
  std::uint64_t pw = 1;
  for (std::uint32_t i = 0; i < diam; ++i) pw *= max_degree - 1;
  return 2 * (pw - 1) / (max_degree - 2);
}

Certificate certify(const Graph& g, const CertifyOptions& options) {
  const auto start = Clock::now();
  Certificate c;
  c.order = g.order();

  auto t = Clock::now();
  const DegreeStats ds = degree_stats(g);
  c.min_degree = ds.min;
  c.max_degree = ds.max;
  c.phase_ms["degree"] = ms_since(t);

  t = Clock::now();
  auto parts = bipartition(g);
  if (const auto* b = std::get_if<Bipartition>(&parts)) {
    c.bipartite = true;
    c.side_a = b->side_a.size();
    c.side_b = b->side_b.size();
  }
  c.phase_ms["bipartition"] = ms_since(t);

  if (options.compute_girth) {
    t = Clock::now();
    try {
      c.girth = girth(g, options.diameter.workers);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kAcyclic) throw;
    }
    c.phase_ms["girth"] = ms_since(t);
  }

  t = Clock::now();
  const DiameterResult d = diameter(g, options.diameter);
  c.diameter = d.value;
  c.diameter_method = d.method;
  c.diameter_lower = d.lower;
  c.diameter_upper = d.upper;
  c.bfs_runs = d.bfs_runs;
  c.phase_ms["diameter"] = ms_since(t);

  c.elapsed_ms = ms_since(start);
  return c;
}

}  // namespace ddg
