#pragma once

#include <map>
#include <string>
#include <vector>

namespace genuscount {

// The cyclic type [1^a1, 2^a2, ...] of a set partition: a_l counts the blocks
// of size l.  Weight is n = sum l*a_l, parts() is the number of blocks.
class PartitionType {
 public:
  PartitionType() = default;
  explicit PartitionType(std::map<int, int> multiplicities);

  // Builds the type from a list of block sizes, e.g. {2,2,3}.
  static PartitionType from_parts(const std::vector<int>& sizes);

  // Parses the canonical text key, e.g. "2^2,3" or "5".  Throws on bad input.
  static PartitionType parse(const std::string& key);

  int multiplicity(int block_size) const;
  const std::map<int, int>& multiplicities() const { return mult_; }

  int weight() const;       // n
  int parts() const;        // |alpha|
  int min_part() const;     // 0 when empty
  int max_part() const;

  bool has_singletons() const { return multiplicity(1) > 0; }
  bool empty() const { return mult_.empty(); }

  // Block sizes in ascending order, one entry per block: [2,2,3].
  std::vector<int> part_list() const;

  // Canonical text key: sizes ascending, repetition as "l^a": "2^2,3".
  std::string key() const;

  // Type with r singleton blocks removed (r <= multiplicity(1)).
  PartitionType without_singletons(int r) const;

  bool operator==(const PartitionType& other) const { return mult_ == other.mult_; }
  // Reference-table order: fewer parts first, then ascending lexicographic on
  // the ascending part list.
  bool operator<(const PartitionType& other) const;

 private:
  std::map<int, int> mult_;  // block size -> count, counts > 0 only
};

}  // namespace genuscount
