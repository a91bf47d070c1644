#include "ddg/constructions.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "ddg/error.hpp"

namespace ddg {
namespace {

constexpr auto kGh = MooreFamily::kHexagon;

const std::array<CompoundRecipe, 9> kRecipes{{
    {NamedCompound::kQ4K3, {MooreFamily::kQuadrangle, 4}, 2, {4, 2, 1}, 3, false, ConditionReading::kStrict, true, 186},
    {NamedCompound::kH3K3, {kGh, 3}, 3, {2, 3, 1}, 3, false, ConditionReading::kWeak, true, 740},
    {NamedCompound::kH4K4, {kGh, 4}, 3, {2, 4, 1}, 4, false, ConditionReading::kWeak, true, 2754},
    {NamedCompound::kH5K4, {kGh, 5}, 3, {1, 4, 4}, 4, true, ConditionReading::kStrict, false, 7860},
    {NamedCompound::kH7K6, {kGh, 7}, 3, {1, 6, 6}, 6, true, ConditionReading::kStrict, false, 39396},
    {NamedCompound::kH8K6, {kGh, 8}, 3, {2, 6, 5}, 6, true, ConditionReading::kStrict, false, 75198},
    {NamedCompound::kH9K6, {kGh, 9}, 3, {2, 8, 8}, 6, true, ConditionReading::kStrict, false, 133500},
    {NamedCompound::kH11K6, {kGh, 11}, 3, {3, 10, 10}, 6, true, ConditionReading::kStrict, false, 355812},
    {NamedCompound::kH13K7, {kGh, 13}, 3, {4, 12, 11}, 7, true, ConditionReading::kStrict, false, 806636},
}};

// Mutable search state; converted to a plan for every evaluation.
class Assignment {
 public:
  Assignment(const Graph& g, const TreeIndex& index, std::uint32_t h, ConditionReading reading)
      : index_(&index), h_(h), reading_(reading), cap_(index.degree - (h - 1)) {
    for (const IndexedTarget& t : index.targets) {
      std::vector<Vertex> others;
      for (Vertex y : g.neighbors(t.vertex)) {
        if (y != t.parent) others.push_back(y);
      }
      others_.push_back(std::move(others));
    }
    slot_.resize(others_.size());
    load_.assign(others_.size(), std::vector<std::uint32_t>(h, 0));
  }

  std::size_t cliques() const { return others_.size(); }

  bool initialize(std::mt19937_64& rng) {
    const std::uint32_t q = index_->degree - 1;
    if (cap_ < 2 || q < h_) return false;
    links_.clear();
    for (std::size_t t = 0; t < cliques(); ++t) {
      std::vector<std::uint32_t> slots(q);
      for (std::uint32_t n = 0; n < q; ++n) slots[n] = (n + 1) % h_;
      std::shuffle(slots.begin(), slots.end(), rng);
      slot_[t] = slots;
      std::fill(load_[t].begin(), load_[t].end(), 0);
      load_[t][0] = 1;
      for (std::uint32_t s : slots) ++load_[t][s];
      if (*std::max_element(load_[t].begin(), load_[t].end()) > cap_) return false;
    }
    // One link of each required kind first, then pair up all free ends.
    auto link_to = [&](std::uint32_t t, auto&& pred, LinkRole role) {
      std::vector<std::uint32_t> partners;
      for (std::uint32_t o = 0; o < cliques(); ++o) {
        if (o != t && pred(o) && free_slot(o, rng)) partners.push_back(o);
      }
      if (partners.empty()) return false;
      const std::uint32_t o = partners[rng() % partners.size()];
      const auto a = free_slot(t, rng);
      const auto b = free_slot(o, rng);
      if (!a || !b) return false;
      add_link({{t, *a}, {o, *b}, role});
      return true;
    };
    std::vector<std::uint32_t> order(cliques());
    for (std::uint32_t t = 0; t < cliques(); ++t) order[t] = t;
    std::shuffle(order.begin(), order.end(), rng);
    const RangeSpec r = index_->ranges;
    const bool strict = reading_ == ConditionReading::kStrict;
    for (std::uint32_t t : order) {
      const auto& ti = index_->targets[t];
      if (strict) {
        for (std::uint32_t o = 0; o < cliques(); ++o) {
          if (o == t || !same_block(t, o) || has_link(t, [&](std::uint32_t x) { return x == o; })) continue;
          if (!link_to(t, [&](std::uint32_t x) { return x == o; }, LinkRole::kBlock)) return false;
        }
        for (std::uint32_t m = 0; m < r.J; ++m) {
          auto in_block = [&](std::uint32_t o) {
            return index_->targets[o].i == ti.i && index_->targets[o].j == m;
          };
          if (m == ti.j || has_link(t, in_block)) continue;
          if (!link_to(t, in_block, LinkRole::kCross)) return false;
        }
        continue;
      }
      if (r.K > 1 && !has_link(t, [&](std::uint32_t o) { return same_block(t, o); }) &&
          !link_to(t, [&](std::uint32_t o) { return same_block(t, o); }, LinkRole::kBlock)) {
        return false;
      }
      if (r.J > 1 && !has_link(t, [&](std::uint32_t o) { return other_block(t, o); })) {
        if (!link_to(t, [&](std::uint32_t o) { return other_block(t, o); }, LinkRole::kCross)) return false;
      }
    }
    std::vector<CliqueEnd> ends;
    for (std::uint32_t t = 0; t < cliques(); ++t) {
      for (std::uint32_t s = 0; s < h_; ++s) {
        for (std::uint32_t f = load_[t][s]; f < cap_; ++f) ends.push_back({t, s});
      }
    }
    std::shuffle(ends.begin(), ends.end(), rng);
    while (ends.size() >= 2) {
      const CliqueEnd a = ends.back();
      ends.pop_back();
      auto it = std::find_if(ends.begin(), ends.end(), [&](const CliqueEnd& b) {
        return b.target != a.target && !joined(a, b);
      });
      if (it == ends.end()) continue;
      const CliqueEnd b = *it;
      ends.erase(it);
      add_link({a, b, LinkRole::kExtra});
    }
    return true;
  }

  // One random move; returns false when the drawn move is not applicable.
  bool mutate(std::mt19937_64& rng) {
    const std::uint32_t kind = static_cast<std::uint32_t>(rng() % 4);
    if (kind <= 1) return swap_former(rng);
    if (kind == 2) return move_end(rng);
    return rewire(rng);
  }

  ReplacementPlan plan(std::uint64_t seed) const {
    ReplacementPlan p;
    p.h = h_;
    p.degree = index_->degree;
    p.depth = index_->depth;
    p.ranges = index_->ranges;
    p.use_d = false;
    p.reading = reading_;
    p.seed = seed;
    for (std::size_t t = 0; t < cliques(); ++t) {
      PlannedTarget pt{index_->targets[t], {}};
      pt.former.push_back({pt.index.parent, 0});
      for (std::size_t n = 0; n < others_[t].size(); ++n) pt.former.push_back({others_[t][n], slot_[t][n]});
      p.targets.push_back(std::move(pt));
    }
    p.links = links_;
    return p;
  }

 private:
  bool same_block(std::uint32_t t, std::uint32_t o) const {
    const auto& a = index_->targets[t];
    const auto& b = index_->targets[o];
    return a.i == b.i && a.j == b.j;
  }
  bool other_block(std::uint32_t t, std::uint32_t o) const {
    const auto& a = index_->targets[t];
    const auto& b = index_->targets[o];
    return a.i == b.i && a.j != b.j;
  }

  template <class Pred>
  bool has_link(std::uint32_t t, Pred&& pred) const {
    for (const CliqueLink& l : links_) {
      if (l.a.target == t && pred(l.b.target)) return true;
      if (l.b.target == t && pred(l.a.target)) return true;
    }
    return false;
  }

  // Strict: every sibling clique and every other block reached.
  bool conditions_hold() const {
    const RangeSpec r = index_->ranges;
    for (std::uint32_t t = 0; t < cliques(); ++t) {
      const auto& ti = index_->targets[t];
      if (reading_ == ConditionReading::kWeak) {
        if (r.K > 1 && !has_link(t, [&](std::uint32_t o) { return same_block(t, o); })) return false;
        if (r.J > 1 && !has_link(t, [&](std::uint32_t o) { return other_block(t, o); })) return false;
        continue;
      }
      for (std::uint32_t o = 0; o < cliques(); ++o) {
        if (o != t && same_block(t, o) && !has_link(t, [&](std::uint32_t x) { return x == o; })) return false;
      }
      for (std::uint32_t m = 0; m < r.J; ++m) {
        if (m == ti.j) continue;
        auto in_block = [&](std::uint32_t o) {
          return index_->targets[o].i == ti.i && index_->targets[o].j == m;
        };
        if (!has_link(t, in_block)) return false;
      }
    }
    return true;
  }

  bool joined(const CliqueEnd& a, const CliqueEnd& b) const {
    return std::any_of(links_.begin(), links_.end(), [&](const CliqueLink& l) {
      return (l.a == a && l.b == b) || (l.a == b && l.b == a);
    });
  }

  std::optional<std::uint32_t> free_slot(std::uint32_t t, std::mt19937_64& rng) const {
    std::vector<std::uint32_t> open;
    for (std::uint32_t s = 0; s < h_; ++s) {
      if (load_[t][s] < cap_) open.push_back(s);
    }
    if (open.empty()) return std::nullopt;
    return open[rng() % open.size()];
  }

  void add_link(const CliqueLink& l) {
    links_.push_back(l);
    ++load_[l.a.target][l.a.slot];
    ++load_[l.b.target][l.b.slot];
  }

  std::uint32_t non_parent_on(std::uint32_t t, std::uint32_t s) const {
    return static_cast<std::uint32_t>(std::count(slot_[t].begin(), slot_[t].end(), s));
  }

  bool swap_former(std::mt19937_64& rng) {
    const auto t = static_cast<std::uint32_t>(rng() % cliques());
    auto& slots = slot_[t];
    const std::size_t a = rng() % slots.size();
    const std::size_t b = rng() % slots.size();
    if (slots[a] == slots[b]) return false;
    std::swap(slots[a], slots[b]);
    return true;
  }

  // Moves one link end to another slot of its clique, trading places with
  // a former edge when the new slot is full.
  bool move_end(std::mt19937_64& rng) {
    if (links_.empty()) return false;
    CliqueLink& l = links_[rng() % links_.size()];
    CliqueEnd& end = (rng() & 1) ? l.a : l.b;
    const CliqueEnd& far = (&end == &l.a) ? l.b : l.a;
    const auto to = static_cast<std::uint32_t>(rng() % h_);
    if (to == end.slot || joined({end.target, to}, far)) return false;
    const std::uint32_t from = end.slot;
    if (load_[end.target][to] < cap_) {
      --load_[end.target][from];
      ++load_[end.target][to];
      end.slot = to;
      return true;
    }
    if (non_parent_on(end.target, to) < 2) return false;
    auto& slots = slot_[end.target];
    std::vector<std::size_t> movable;
    for (std::size_t n = 0; n < slots.size(); ++n) {
      if (slots[n] == to) movable.push_back(n);
    }
    slots[movable[rng() % movable.size()]] = from;
    end.slot = to;
    return true;
  }

  // Exchanges partners between two links.
  bool rewire(std::mt19937_64& rng) {
    if (links_.size() < 2) return false;
    const std::size_t x = rng() % links_.size();
    const std::size_t y = rng() % links_.size();
    if (x == y) return false;
    const CliqueLink old_x = links_[x];
    const CliqueLink old_y = links_[y];
    CliqueLink nx = old_x;
    CliqueLink ny = old_y;
    std::swap(nx.b, ny.b);
    if (nx.a.target == nx.b.target || ny.a.target == ny.b.target) return false;
    const bool clash = joined(nx.a, nx.b) || joined(ny.a, ny.b) || (nx.a == ny.a && nx.b == ny.b);
    links_[x] = nx;
    links_[y] = ny;
    if (clash || !conditions_hold()) {
      links_[x] = old_x;
      links_[y] = old_y;
      return false;
    }
    return true;
  }

  const TreeIndex* index_;
  std::uint32_t h_;
  ConditionReading reading_;
  std::uint32_t cap_;
  std::vector<std::vector<Vertex>> others_;
  std::vector<std::vector<std::uint32_t>> slot_;
  std::vector<std::vector<std::uint32_t>> load_;
  std::vector<CliqueLink> links_;
};

}  // namespace

std::string to_string(NamedCompound id) {
  switch (id) {
    case NamedCompound::kQ4K3: return "Q4K3";
    case NamedCompound::kH3K3: return "H3K3";
    case NamedCompound::kH4K4: return "H4K4";
    case NamedCompound::kH5K4: return "H5K4";
    case NamedCompound::kH7K6: return "H7K6";
    case NamedCompound::kH8K6: return "H8K6";
    case NamedCompound::kH9K6: return "H9K6";
    case NamedCompound::kH11K6: return "H11K6";
    case NamedCompound::kH13K7: return "H13K7";
  }
  return "?";
}

NamedCompound parse_named_compound(const std::string& name) {
  for (const CompoundRecipe& r : kRecipes) {
    if (to_string(r.id) == name) return r.id;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown compound '" + name + "'");
}

const CompoundRecipe& recipe(NamedCompound id) {
  for (const CompoundRecipe& r : kRecipes) {
    if (r.id == id) return r;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown compound");
}

std::span<const CompoundRecipe> all_recipes() { return kRecipes; }

std::optional<SearchOutcome> search_plan(const Graph& g, const TreeIndex& index, std::uint32_t h,
                                         ConditionReading reading, std::uint64_t seed, const SearchOptions& options) {
  std::mt19937_64 rng(seed);
  Assignment current(g, index, h, reading);
  if (!current.initialize(rng)) return std::nullopt;

  ReplacementPlan probe = current.plan(seed);
  const std::vector<Vertex> sources = locality_sources(g, options.diameter, probe);
  auto score = [&](const Assignment& a) {
    const Graph compound = apply_plan(g, a.plan(seed));
    return count_far_pairs(compound, sources, options.diameter, options.workers);
  };
  std::uint64_t best = score(current);
  for (std::uint64_t step = 0; best > 0 && step < options.max_steps; ++step) {
    Assignment next = current;
    if (!next.mutate(rng)) continue;
    const std::uint64_t s = score(next);
    if (s <= best) {
      best = s;
      current = std::move(next);
    }
  }
  return SearchOutcome{current.plan(seed), best};
}

void check_base_structure(const Graph& g, std::uint32_t q, std::uint32_t diam, std::size_t samples) {
  const std::uint64_t degree = std::uint64_t{q} + 1;
  if (g.order() != bipartite_moore_bound(degree, diam)) {
    throw Error(ErrorCode::kValidationFailed, "base order " + std::to_string(g.order()) + " is not the Moore order");
  }
  const DegreeStats ds = degree_stats(g);
  if (ds.min != degree || ds.max != degree) throw Error(ErrorCode::kValidationFailed, "base is not regular");
  const std::vector<std::size_t> expected = moore_level_sizes(q, diam);
  const std::size_t step = std::max<std::size_t>(1, g.order() / std::max<std::size_t>(samples, 1));
  for (std::size_t v = 0; v < g.order(); v += step) {
    if (level_sizes(g, static_cast<Vertex>(v)) != expected) {
      throw Error(ErrorCode::kValidationFailed, "BFS levels from vertex " + std::to_string(v) + " are not Moore");
    }
  }
}

Graph replay_plan(const MooreSpec& base, const ReplacementPlan& plan) { return apply_plan(build_moore(base), plan); }

Construction construct_named(NamedCompound id, const ConstructOptions& options) {
  const CompoundRecipe& r = recipe(id);
  Construction out{id, options.base_provider ? options.base_provider(r.base) : build_moore(r.base), {}, {}, {}, {},
                   {}, {}, 0};
  CompoundCertifyOptions cert_opts = options.certify;
  cert_opts.workers = std::max(cert_opts.workers, options.workers);

  if (out.base.order() <= cert_opts.exact_limit) {
    CertifyOptions co;
    co.diameter.workers = cert_opts.workers;
    validate_moore(out.base, r.base.q, r.diameter(), co);
    out.base_check = "exact";
  } else {
    check_base_structure(out.base, r.base.q, r.diameter());
    out.base_check = "structural";
  }
  const TreeIndex index = index_tree(out.base, 0, r.ranges, r.depth);
  SearchOptions search = options.search;
  search.diameter = r.diameter();
  search.workers = std::max(search.workers, options.workers);

  std::string last_failure = "no seed tried";
  for (std::uint32_t attempt = 0; attempt < options.retry_budget; ++attempt) {
    const std::uint64_t seed = options.first_seed + attempt;
    out.seeds_tried = attempt + 1;
    std::optional<ReplacementPlan> plan;
    try {
      if (!r.searched) {
        plan = make_plan(out.base, index, r.h, seed, r.use_d);
      } else if (auto found = search_plan(out.base, index, r.h, r.reading, seed, search)) {
        if (found->far_pairs == 0) {
          plan = std::move(found->plan);
        } else {
          last_failure = "best arrangement for seed " + std::to_string(seed) + " leaves " +
                         std::to_string(found->far_pairs) + " far pairs";
          continue;
        }
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInfeasible) throw;
      last_failure = e.what();
      continue;
    }
    if (!plan) {
      last_failure = "no initial arrangement for seed " + std::to_string(seed);
      continue;
    }
    Graph compound = apply_plan(out.base, *plan);
    ConditionsReport conditions = check_conditions(compound, *plan, r.use_d);
    if (!conditions.all_passed()) {
      last_failure = "conditions failed for seed " + std::to_string(seed);
      continue;
    }
    if (degree_stats(compound).max != r.degree()) {
      last_failure = "maximum degree differs from " + std::to_string(r.degree());
      continue;
    }
    std::optional<Certificate> cert;
    if (options.certify_diameter) {
      cert = certify_compound(compound, out.base, r.diameter(), *plan, cert_opts);
      if (cert->diameter != r.diameter()) {
        last_failure = "diameter " + std::to_string(cert->diameter) + " for seed " + std::to_string(seed);
        continue;
      }
    }
    out.obligations = measure_proof_obligations(compound, *plan);
    out.graph = std::move(compound);
    out.plan = std::move(*plan);
    out.conditions = std::move(conditions);
    out.certificate = std::move(cert);
    return out;
  }
  throw Error(ErrorCode::kCertificationFailed, to_string(id) + ": no certified arrangement after " +
                                                   std::to_string(options.retry_budget) + " seeds (last: " +
                                                   last_failure + ")");
}

}  // namespace ddg
