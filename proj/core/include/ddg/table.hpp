#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ddg/constructions.hpp"
#include "ddg/run_config.hpp"

namespace ddg {

enum class TableScope { kFast, kFull };
enum class RowStatus { kMatch, kMismatch, kSkipped, kFlagged };

std::string to_string(TableScope scope);
TableScope parse_table_scope(const std::string& name);
std::string to_string(RowStatus status);

struct TableEntry {
  std::uint32_t degree = 0;
  std::uint32_t diameter = 0;
  std::string name;
  std::uint64_t expected_order = 0;  // as printed in the published table
  std::uint64_t computed_order = 0;
  std::optional<Certificate> certificate;
  std::string base_check;
  std::uint64_t seed = 0;
  std::string note;
  RowStatus status = RowStatus::kSkipped;
  double elapsed_ms = 0;
};

// Fast: Q4K3, H3K3, H4K4, H5K4. Full adds H7K6, H8K6, H9K6, H11K6, H13K7.
std::vector<NamedCompound> table_rows(TableScope scope);

// Never throws for library errors: they turn into a mismatch row. Rows
// whose computed order differs from the published one for a known reason
// (H13K7) are flagged instead, with diameter certification best-effort.
TableEntry run_table_row(NamedCompound id, const RunConfig& config);
std::vector<TableEntry> run_table(TableScope scope, const RunConfig& config,
                                  const std::function<void(const TableEntry&)>& on_row = {});

// True when no row is a mismatch.
bool table_passed(const std::vector<TableEntry>& rows);

std::string table_text(const std::vector<TableEntry>& rows);
std::string table_json(const std::vector<TableEntry>& rows, int indent = 2);

// Options for construct_named derived from a run configuration, including
// the cache-backed base provider when a cache directory is set.
ConstructOptions construct_options(const RunConfig& config);

}  // namespace ddg
