#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include "ddg/compound.hpp"
#include "ddg/moore.hpp"

namespace ddg {

enum class NamedCompound { kQ4K3, kH3K3, kH4K4, kH5K4, kH7K6, kH8K6, kH9K6, kH11K6, kH13K7 };

std::string to_string(NamedCompound id);
NamedCompound parse_named_compound(const std::string& name);  // "H5K4", ...

// How a named compound is obtained from its base graph.
struct CompoundRecipe {
  NamedCompound id;
  MooreSpec base;
  std::uint32_t depth;  // 3: targets x_ijk, 2: targets w_ij
  RangeSpec ranges;
  std::uint32_t h;
  bool use_d;
  ConditionReading reading;
  bool searched;  // edge arrangement found by local search instead of make_plan
  std::uint64_t table_order;  // order listed in the published table

  std::uint32_t degree() const { return base.degree(); }
  std::uint32_t diameter() const { return base.diameter(); }
  std::uint64_t order() const { return base.expected_order() + std::uint64_t{ranges.count()} * (h - 1); }
};

const CompoundRecipe& recipe(NamedCompound id);
std::span<const CompoundRecipe> all_recipes();

struct SearchOptions {
  std::uint32_t diameter = 6;
  std::uint64_t max_steps = 4000;
  unsigned workers = 1;
};

// Seeded local search over former-edge slots and inter-clique links with
// (d) off: all free clique capacity is filled with links, (b)/(c) hold in
// the plan's reading, and the score is the number of (source, vertex)
// pairs farther apart than the target diameter, taken over the locality
// sources. Stops when the score reaches 0 or after max_steps; empty when
// no initial arrangement fits the slots.
struct SearchOutcome {
  ReplacementPlan plan;
  std::uint64_t far_pairs = 0;
};
std::optional<SearchOutcome> search_plan(const Graph& g, const TreeIndex& index, std::uint32_t h,
                                         ConditionReading reading, std::uint64_t seed,
                                         const SearchOptions& options = {});

struct ConstructOptions {
  unsigned workers = 1;
  std::uint32_t retry_budget = 64;
  std::uint64_t first_seed = 0;
  bool certify_diameter = true;
  CompoundCertifyOptions certify;
  SearchOptions search;
  // Supplies the base graph, e.g. from a cache; defaults to build_moore.
  std::function<Graph(const MooreSpec&)> base_provider;
};

struct Construction {
  NamedCompound id;
  Graph base;
  Graph graph;
  ReplacementPlan plan;
  ConditionsReport conditions;
  std::optional<Certificate> certificate;  // empty when certification was skipped
  ProofObligations obligations;
  std::string base_check;  // "exact" or "structural"
  std::uint32_t seeds_tried = 0;
};

// Builds, checks and certifies a named compound. Seeds are tried in order
// from first_seed; the first that yields maximum degree = degree, all
// conditions and certified diameter wins. Throws CertificationFailed after
// retry_budget seeds and propagates BudgetExceeded from bounded mode.
Construction construct_named(NamedCompound id, const ConstructOptions& options = {});

inline Construction build_Q4K3(const ConstructOptions& options = {}) {
  return construct_named(NamedCompound::kQ4K3, options);
}
inline Construction build_H3K3(const ConstructOptions& options = {}) {
  return construct_named(NamedCompound::kH3K3, options);
}
inline Construction build_H4K4(const ConstructOptions& options = {}) {
  return construct_named(NamedCompound::kH4K4, options);
}

// Rebuilds a compound from its base and a stored plan.
Graph replay_plan(const MooreSpec& base, const ReplacementPlan& plan);

// Regularity, Moore order and Moore level sizes from `samples` evenly
// spaced vertices; throws ValidationFailed. Used for bases too large for
// exact validation.
void check_base_structure(const Graph& g, std::uint32_t q, std::uint32_t diam, std::size_t samples = 16);

}  // namespace ddg
