#include "genuscount/tables.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "genuscount/enumerate.hpp"

namespace genuscount {

using nlohmann::json;

TableKind table_kind_from_name(const std::string& name) {
  if (name == "c") return TableKind::CTable;
  if (name == "s") return TableKind::STable;
  if (name == "shat") return TableKind::ShatTable;
  throw std::invalid_argument("table kind: expected c|s|shat");
}

EmitFormat emit_format_from_name(const std::string& name) {
  if (name == "csv") return EmitFormat::Csv;
  if (name == "json") return EmitFormat::Json;
  if (name == "markdown" || name == "md") return EmitFormat::Markdown;
  throw std::invalid_argument("format: expected csv|json|markdown");
}

namespace {

void trim_trailing_zeros(std::vector<BigInt>& counts) {
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
}

std::string kind_name(TableKind kind) {
  switch (kind) {
    case TableKind::CTable: return "c";
    case TableKind::STable: return "s";
    case TableKind::ShatTable: return "shat";
  }
  throw std::logic_error("kind_name: bad kind");
}

}  // namespace

EmittedTable table_from_counts(TableKind kind, const GenusCountTable& types) {
  if (types.mode != TableMode::ByType) {
    throw std::invalid_argument("table_from_counts: need a by-type table");
  }
  const int n = types.n;
  EmittedTable out;
  out.kind = kind;
  out.n = n;
  if (kind == TableKind::CTable) {
    // no-singleton types in reference order (the map key order already sorts by
    // parts then lexicographically)
    std::map<PartitionType, std::vector<BigInt>> rows;
    for (const auto& [key, value] : types.counts) {
      if (key.type.has_singletons()) continue;
      auto& row = rows[key.type];
      if (static_cast<int>(row.size()) <= key.genus) {
        row.resize(static_cast<std::size_t>(key.genus) + 1, BigInt(0));
      }
      row[static_cast<std::size_t>(key.genus)] = value;
    }
    for (auto& [type, counts] : rows) {
      trim_trailing_zeros(counts);
      if (!counts.empty()) out.rows.push_back({type.key(), std::move(counts)});
    }
  } else {
    const bool no_singletons = kind == TableKind::ShatTable;
    std::map<int, std::vector<BigInt>> rows;
    for (const auto& [key, value] : types.counts) {
      if (no_singletons && key.type.has_singletons()) continue;
      auto& row = rows[key.type.parts()];
      if (static_cast<int>(row.size()) <= key.genus) {
        row.resize(static_cast<std::size_t>(key.genus) + 1, BigInt(0));
      }
      row[static_cast<std::size_t>(key.genus)] += value;
    }
    for (auto& [k, counts] : rows) {
      trim_trailing_zeros(counts);
      if (!counts.empty()) out.rows.push_back({std::to_string(k), std::move(counts)});
    }
  }
  return out;
}

EmittedTable build_table(TableKind kind, int n, int threads) {
  return table_from_counts(kind, count_types(n, 1, threads));
}

std::string render_table(const EmittedTable& table, EmitFormat format) {
  std::ostringstream out;
  switch (format) {
    case EmitFormat::Csv: {
      // type keys contain commas, so the key field is always quoted
      out << "kind,n,key,counts\n";
      for (const auto& row : table.rows) {
        out << kind_name(table.kind) << ',' << table.n << ",\"" << row.key << "\",";
        for (std::size_t i = 0; i < row.counts.size(); ++i) {
          if (i) out << ' ';
          out << row.counts[i];
        }
        out << '\n';
      }
      break;
    }
    case EmitFormat::Json: {
      json j;
      j["kind"] = kind_name(table.kind);
      j["n"] = table.n;
      json rows = json::array();
      for (const auto& row : table.rows) {
        json counts = json::array();
        for (const auto& c : row.counts) counts.push_back(c.str());
        rows.push_back({{"key", row.key}, {"counts", std::move(counts)}});
      }
      j["rows"] = std::move(rows);
      out << j.dump(2);
      break;
    }
    case EmitFormat::Markdown: {
      int genus_cols = 0;
      for (const auto& row : table.rows) {
        genus_cols = std::max(genus_cols, static_cast<int>(row.counts.size()));
      }
      out << "| " << (table.kind == TableKind::CTable ? "type" : "k") << " |";
      for (int g = 0; g < genus_cols; ++g) out << " g=" << g << " |";
      out << "\n|---|";
      for (int g = 0; g < genus_cols; ++g) out << "---|";
      out << '\n';
      for (const auto& row : table.rows) {
        out << "| " << row.key << " |";
        for (int g = 0; g < genus_cols; ++g) {
          out << ' ';
          if (g < static_cast<int>(row.counts.size())) out << row.counts[static_cast<std::size_t>(g)];
          else out << 0;
          out << " |";
        }
        out << '\n';
      }
      break;
    }
  }
  return out.str();
}

EmittedTable parse_table_csv(const std::string& text) {
  EmittedTable table;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::istringstream fields(line);
    std::string kind, n_str, key, counts_str;
    if (!std::getline(fields, kind, ',') || !std::getline(fields, n_str, ',')) {
      throw std::invalid_argument("table csv: malformed line '" + line + "'");
    }
    if (fields.peek() == '"') {
      fields.get();
      if (!std::getline(fields, key, '"')) {
        throw std::invalid_argument("table csv: unterminated quote in '" + line + "'");
      }
      fields.get();  // consume the comma after the closing quote
    } else if (!std::getline(fields, key, ',')) {
      throw std::invalid_argument("table csv: malformed line '" + line + "'");
    }
    if (!std::getline(fields, counts_str)) {
      throw std::invalid_argument("table csv: malformed line '" + line + "'");
    }
    table.kind = table_kind_from_name(kind);
    table.n = std::stoi(n_str);
    EmittedRow row;
    row.key = key;
    std::istringstream counts(counts_str);
    std::string value;
    while (counts >> value) row.counts.push_back(parse_bigint(value));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace genuscount
