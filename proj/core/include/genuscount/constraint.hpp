#pragma once

#include <optional>
#include <string>

#include "genuscount/partition_type.hpp"

namespace genuscount {

// Filter applied during enumeration.  min_block_size is 1 or 2 (2 = no
// singleton blocks); parts fixes the exact block count; ctype fixes the exact
// cyclic type.  When ctype is set, parts (if set) must equal |ctype| and
// min_block_size must be consistent with ctype.
struct Constraint {
  int min_block_size = 1;
  std::optional<int> parts;
  std::optional<PartitionType> ctype;

  static Constraint none() { return {}; }
  static Constraint no_singletons() { return {2, std::nullopt, std::nullopt}; }
  static Constraint with_parts(int k, int min_block = 1) { return {min_block, k, std::nullopt}; }
  static Constraint with_type(PartitionType t);

  // Throws std::invalid_argument on inconsistent combinations.
  void validate(int n) const;

  // Stable key used for cache filenames and table metadata.
  std::string key() const;

  bool operator==(const Constraint& other) const;
};

}  // namespace genuscount
