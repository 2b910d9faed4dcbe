#pragma once

#include <string>
#include <vector>

#include "genuscount/count_table.hpp"

namespace genuscount {

// Reference-format table emission.  Rows follow the published layout: types
// ordered by increasing number of parts then lexicographically (C-tables),
// or by k (S / Shat tables); genus ascends along each row.

enum class TableKind { CTable, STable, ShatTable };
enum class EmitFormat { Csv, Json, Markdown };

TableKind table_kind_from_name(const std::string& name);
EmitFormat emit_format_from_name(const std::string& name);

struct EmittedRow {
  std::string key;  // type key or block count
  std::vector<BigInt> counts;
};

struct EmittedTable {
  TableKind kind = TableKind::CTable;
  int n = 0;
  std::vector<EmittedRow> rows;
};

// Builds the table from a fresh enumeration (one by-type pass).
EmittedTable build_table(TableKind kind, int n, int threads);

// Builds it from an existing by-type count table (min_block_size 1).
EmittedTable table_from_counts(TableKind kind, const GenusCountTable& types);

std::string render_table(const EmittedTable& table, EmitFormat format);

// Parses the CSV form back; used for round-trip verification.
EmittedTable parse_table_csv(const std::string& text);

}  // namespace genuscount
