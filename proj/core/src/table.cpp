#include "ddg/table.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "ddg/cache.hpp"
#include "ddg/error.hpp"
#include "json.hpp"

namespace ddg {
namespace {

// Rows whose published order is known to disagree with the construction.
bool flagged(NamedCompound id) { return id == NamedCompound::kH13K7; }

std::string error_note(const Error& e) { return std::string(e.name()) + ": " + e.what(); }

}  // namespace

std::string to_string(TableScope scope) { return scope == TableScope::kFast ? "fast" : "full"; }

TableScope parse_table_scope(const std::string& name) {
  if (name == "fast") return TableScope::kFast;
  if (name == "full") return TableScope::kFull;
  throw Error(ErrorCode::kInvalidArgument, "scope must be fast or full, got '" + name + "'");
}

std::string to_string(RowStatus status) {
  switch (status) {
    case RowStatus::kMatch: return "match";
    case RowStatus::kMismatch: return "mismatch";
    case RowStatus::kSkipped: return "skipped";
    case RowStatus::kFlagged: return "flagged";
  }
  return "?";
}

std::vector<NamedCompound> table_rows(TableScope scope) {
  std::vector<NamedCompound> rows{NamedCompound::kQ4K3, NamedCompound::kH3K3, NamedCompound::kH4K4,
                                  NamedCompound::kH5K4};
  if (scope == TableScope::kFull) {
    rows.insert(rows.end(), {NamedCompound::kH7K6, NamedCompound::kH8K6, NamedCompound::kH9K6, NamedCompound::kH11K6,
                             NamedCompound::kH13K7});
  }
  return rows;
}

ConstructOptions construct_options(const RunConfig& config) {
  ConstructOptions o;
  o.workers = config.workers;
  o.retry_budget = config.retry_budget;
  o.first_seed = config.seed;
  o.certify.workers = config.workers;
  o.certify.bfs_budget = config.bfs_budget;
  o.certify.force_mode = config.diameter_mode;
  o.search.workers = config.workers;
  if (config.cache_dir) {
    auto cache = std::make_shared<GraphCache>(*config.cache_dir);
    o.base_provider = [cache](const MooreSpec& spec) { return cache->get_or_build(spec); };
  }
  return o;
}

TableEntry run_table_row(NamedCompound id, const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const CompoundRecipe& r = recipe(id);
  TableEntry e;
  e.degree = r.degree();
  e.diameter = r.diameter();
  e.name = to_string(id);
  e.expected_order = r.table_order;
  ConstructOptions opts = construct_options(config);
  opts.certify_diameter = !flagged(id);
  try {
    Construction c = construct_named(id, opts);
    e.computed_order = c.graph.order();
    e.base_check = c.base_check;
    e.seed = c.plan.seed;
    if (flagged(id)) {
      e.status = RowStatus::kFlagged;
      e.note = "computed order " + std::to_string(e.computed_order) + " vs published " +
               std::to_string(e.expected_order);
      try {
        e.certificate = certify_compound(c.graph, c.base, r.diameter(), c.plan, opts.certify);
        e.note += "; diameter " + std::to_string(e.certificate->diameter) + " certified";
      } catch (const Error& err) {
        e.note += "; diameter not certified (" + error_note(err) + ")";
      }
    } else {
      e.certificate = c.certificate;
      const bool ok = e.computed_order == e.expected_order && e.certificate &&
                      e.certificate->max_degree == e.degree && e.certificate->diameter == e.diameter;
      e.status = ok ? RowStatus::kMatch : RowStatus::kMismatch;
      if (!ok) e.note = "order, degree or diameter differs from the published entry";
    }
  } catch (const Error& err) {
    e.status = RowStatus::kMismatch;
    e.note = error_note(err);
  }
  e.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return e;
}

std::vector<TableEntry> run_table(TableScope scope, const RunConfig& config,
                                  const std::function<void(const TableEntry&)>& on_row) {
  std::vector<TableEntry> rows;
  for (NamedCompound id : table_rows(scope)) {
    rows.push_back(run_table_row(id, config));
    if (on_row) on_row(rows.back());
  }
  return rows;
}

bool table_passed(const std::vector<TableEntry>& rows) {
  return std::none_of(rows.begin(), rows.end(), [](const TableEntry& e) { return e.status == RowStatus::kMismatch; });
}

std::string table_text(const std::vector<TableEntry>& rows) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-3s %-2s %-7s %9s %9s %-8s %-10s %s\n", "deg", "D", "graph", "published",
                "computed", "method", "status", "note");
  out += line;
  for (const TableEntry& e : rows) {
    const std::string method = e.certificate ? to_string(e.certificate->diameter_method) : "-";
    std::snprintf(line, sizeof line, "%-3u %-2u %-7s %9llu %9llu %-8s %-10s ", e.degree, e.diameter, e.name.c_str(),
                  static_cast<unsigned long long>(e.expected_order), static_cast<unsigned long long>(e.computed_order),
                  method.c_str(), to_string(e.status).c_str());
    out += line;
    out += e.note;
    out += '\n';
  }
  return out;
}

std::string table_json(const std::vector<TableEntry>& rows, int indent) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const TableEntry& e : rows) {
    nlohmann::ordered_json j;
    j["name"] = e.name;
    j["degree"] = e.degree;
    j["diameter"] = e.diameter;
    j["expected_order"] = e.expected_order;
    j["computed_order"] = e.computed_order;
    j["status"] = to_string(e.status);
    j["seed"] = e.seed;
    j["base_check"] = e.base_check;
    if (e.certificate) {
      j["certificate"] = {{"max_degree", e.certificate->max_degree},
                          {"diameter", e.certificate->diameter},
                          {"diameter_method", to_string(e.certificate->diameter_method)},
                          {"bfs_runs", e.certificate->bfs_runs}};
    } else {
      j["certificate"] = nullptr;
    }
    j["note"] = e.note;
    j["elapsed_ms"] = e.elapsed_ms;
    arr.push_back(j);
  }
  return arr.dump(indent);
}

}  // namespace ddg
