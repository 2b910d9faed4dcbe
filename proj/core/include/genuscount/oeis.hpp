#pragma once

#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "genuscount/bigint.hpp"

namespace genuscount {

// Offline OEIS b-file support.  Format: optional '#' comment lines, data
// lines "index value" separated by whitespace.

struct BFileEntry {
  long index = 0;
  BigInt value;
};

// Throws std::invalid_argument with the 1-based line number on parse errors.
std::vector<BFileEntry> parse_bfile(std::istream& in);
std::vector<BFileEntry> parse_bfile_text(const std::string& text);

// Generator over b-file indices; nullopt when the index is outside the
// generator's domain (such entries are skipped, not failed).
using SequenceGenerator = std::function<std::optional<BigInt>(long index)>;

struct OeisReport {
  std::string sequence;
  int compared = 0;           // entries with a generated counterpart
  int skipped = 0;            // entries outside the generator domain
  bool diverged = false;
  long first_divergence_index = 0;
  std::string expected;  // file value at the divergence
  std::string actual;    // generated value

  std::string to_text() const;
};

// Compares file entries against the generator; index_shift is added to each
// file index before generation (for sequences whose OEIS offset differs from
// the n-indexing of the tables here).  max_terms < 0 means all entries.
OeisReport oeis_check(const std::vector<BFileEntry>& entries, const SequenceGenerator& generator,
                      const std::string& sequence_id, long index_shift = 0, long max_terms = -1);

struct OeisBinding {
  std::string id;           // "A000108"
  std::string description;  // what the generator produces at index i
  SequenceGenerator generator;
};

// Built-in bindings for the sequences the tables rely on.
const std::vector<OeisBinding>& oeis_bindings();
const OeisBinding* find_oeis_binding(const std::string& id);

}  // namespace genuscount
