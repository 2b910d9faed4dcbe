#pragma once

#include <map>
#include <optional>
#include <string>

#include "genuscount/bigint.hpp"
#include "genuscount/constraint.hpp"
#include "genuscount/partition_type.hpp"

namespace genuscount {

enum class TableMode { ByGenus, ByParts, ByType };

std::string table_mode_name(TableMode mode);
TableMode table_mode_from_name(const std::string& name);

// Aggregation key.  mode ByGenus uses genus only; ByParts uses (k, genus);
// ByType uses (type, genus).  Types order as in the reference tables.
struct TableKey {
  int k = -1;
  PartitionType type;
  int genus = 0;

  bool operator<(const TableKey& other) const {
    if (!(type == other.type)) return type < other.type;
    if (k != other.k) return k < other.k;
    return genus < other.genus;
  }
  bool operator==(const TableKey& other) const {
    return k == other.k && type == other.type && genus == other.genus;
  }
};

// Exact counts of partitions keyed per aggregation mode, with the constraint
// they were collected under.  Merging is an associative commutative cell-wise
// sum, so parallel runs reduce to the same table regardless of scheduling.
struct GenusCountTable {
  int n = 0;
  Constraint constraint;
  TableMode mode = TableMode::ByGenus;
  std::map<TableKey, BigInt> counts;
  std::string generated_at;  // meta only, never part of comparisons
  int workers = 1;

  void add(const TableKey& key, const BigInt& delta);
  void merge(const GenusCountTable& other);

  BigInt genus_count(int g) const;
  BigInt parts_count(int k, int g) const;
  BigInt type_count(const PartitionType& t, int g) const;
  BigInt total() const;
  int max_genus() const;

  bool same_counts(const GenusCountTable& other) const { return counts == other.counts; }

  // JSON schema: {schema, n, mode, constraint, counts:[{genus, count} | {k,
  // genus, count} | {type, genus, count}], meta}.  Counts are decimal strings.
  std::string to_json() const;
  static GenusCountTable from_json(const std::string& text);
};

}  // namespace genuscount
