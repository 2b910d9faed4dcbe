#include "genuscount/count_table.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace genuscount {

using nlohmann::json;

std::string table_mode_name(TableMode mode) {
  switch (mode) {
    case TableMode::ByGenus: return "genus";
    case TableMode::ByParts: return "parts";
    case TableMode::ByType: return "type";
  }
  throw std::logic_error("table_mode_name: bad mode");
}

TableMode table_mode_from_name(const std::string& name) {
  if (name == "genus") return TableMode::ByGenus;
  if (name == "parts") return TableMode::ByParts;
  if (name == "type") return TableMode::ByType;
  throw std::invalid_argument("table_mode_from_name: unknown mode '" + name + "'");
}

void GenusCountTable::add(const TableKey& key, const BigInt& delta) {
  if (delta == 0) return;
  counts[key] += delta;
}

void GenusCountTable::merge(const GenusCountTable& other) {
  for (const auto& [key, value] : other.counts) add(key, value);
}

BigInt GenusCountTable::genus_count(int g) const {
  auto it = counts.find(TableKey{-1, {}, g});
  return it == counts.end() ? BigInt(0) : it->second;
}

BigInt GenusCountTable::parts_count(int k, int g) const {
  auto it = counts.find(TableKey{k, {}, g});
  return it == counts.end() ? BigInt(0) : it->second;
}

BigInt GenusCountTable::type_count(const PartitionType& t, int g) const {
  auto it = counts.find(TableKey{-1, t, g});
  return it == counts.end() ? BigInt(0) : it->second;
}

BigInt GenusCountTable::total() const {
  BigInt sum = 0;
  for (const auto& [key, value] : counts) sum += value;
  return sum;
}

int GenusCountTable::max_genus() const {
  int g = 0;
  for (const auto& [key, value] : counts) {
    if (value != 0 && key.genus > g) g = key.genus;
  }
  return g;
}

std::string GenusCountTable::to_json() const {
  json j;
  j["schema"] = "genuscount/table-v1";
  j["n"] = n;
  j["mode"] = table_mode_name(mode);
  json c;
  c["min_block_size"] = constraint.min_block_size;
  if (constraint.parts) c["parts"] = *constraint.parts;
  if (constraint.ctype) c["type"] = constraint.ctype->key();
  j["constraint"] = c;
  json rows = json::array();
  for (const auto& [key, value] : counts) {
    json row;
    if (mode == TableMode::ByParts) row["k"] = key.k;
    if (mode == TableMode::ByType) row["type"] = key.type.key();
    row["genus"] = key.genus;
    row["count"] = value.str();
    rows.push_back(std::move(row));
  }
  j["counts"] = std::move(rows);
  j["meta"] = {{"generated_at", generated_at}, {"workers", workers}};
  return j.dump(2);
}

GenusCountTable GenusCountTable::from_json(const std::string& text) {
  json j = json::parse(text);
  if (j.value("schema", "") != "genuscount/table-v1") {
    throw std::invalid_argument("GenusCountTable: unknown schema");
  }
  GenusCountTable table;
  table.n = j.at("n").get<int>();
  table.mode = table_mode_from_name(j.at("mode").get<std::string>());
  const json& c = j.at("constraint");
  table.constraint.min_block_size = c.value("min_block_size", 1);
  if (c.contains("parts")) table.constraint.parts = c.at("parts").get<int>();
  if (c.contains("type")) table.constraint.ctype = PartitionType::parse(c.at("type").get<std::string>());
  for (const auto& row : j.at("counts")) {
    TableKey key;
    if (row.contains("k")) key.k = row.at("k").get<int>();
    if (row.contains("type")) key.type = PartitionType::parse(row.at("type").get<std::string>());
    key.genus = row.at("genus").get<int>();
    table.counts[key] = parse_bigint(row.at("count").get<std::string>());
  }
  if (j.contains("meta")) {
    table.generated_at = j["meta"].value("generated_at", "");
    table.workers = j["meta"].value("workers", 1);
  }
  return table;
}

}  // namespace genuscount
