#pragma once

#include <map>
#include <optional>
#include <vector>

#include "genuscount/bigint.hpp"
#include "genuscount/partition_type.hpp"

namespace genuscount {

// Embedded reference tables, maintained as versioned JSON under
// data/golden/ (with a SHA-256 audit file) and compiled into the library.
// counts vectors run over ascending genus with trailing zeros trimmed.

struct GoldenTypeRow {
  PartitionType type;
  std::vector<BigInt> counts;
};

struct GoldenCTable {
  int n = 0;
  std::vector<GoldenTypeRow> rows;  // reference order: by parts, then lex
};

struct GoldenKRow {
  int k = 0;
  std::vector<BigInt> counts;
};

struct GoldenSTable {
  int n = 0;
  std::vector<GoldenKRow> rows;
};

struct GoldenPkCell {
  int p = 0;
  int k = 0;
  std::vector<BigInt> counts;
  bool partial = false;  // the published row ends in "..."
};

class GoldenData {
 public:
  static const GoldenData& instance();

  const std::vector<GoldenCTable>& c_tables() const { return c_tables_; }     // n = 2..15
  const std::vector<GoldenSTable>& s_tables() const { return s_tables_; }     // n = 1..15
  const std::vector<GoldenSTable>& shat_tables() const { return shat_tables_; }  // n = 2..15

  // Table 1: k -> counts over genus.
  const std::map<int, std::vector<BigInt>>& pairings_table() const { return pairings_; }
  // Table 2: n -> counts over genus for type [n-5, 5].
  const std::map<int, std::vector<BigInt>>& twopart_table() const { return twopart_; }
  const std::vector<GoldenPkCell>& pk_table() const { return pk_; }

  const GoldenCTable* find_c(int n) const;
  const GoldenSTable* find_s(int n) const;
  const GoldenSTable* find_shat(int n) const;
  const GoldenPkCell* find_pk(int p, int k) const;

  BigInt c_value(int n, const PartitionType& type, int g) const;  // 0 when absent
  BigInt s_value(int n, int k, int g) const;
  BigInt shat_value(int n, int k, int g) const;

 private:
  GoldenData();

  std::vector<GoldenCTable> c_tables_;
  std::vector<GoldenSTable> s_tables_;
  std::vector<GoldenSTable> shat_tables_;
  std::map<int, std::vector<BigInt>> pairings_;
  std::map<int, std::vector<BigInt>> twopart_;
  std::vector<GoldenPkCell> pk_;
};

}  // namespace genuscount
