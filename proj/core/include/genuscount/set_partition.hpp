#pragma once

#include <string>
#include <vector>

#include "genuscount/partition_type.hpp"

namespace genuscount {

// A partition of {1..n} into nonempty blocks.  Canonical form: every block is
// strictly increasing and blocks are ordered by their minimum element.
// Immutable after construction.
class SetPartition {
 public:
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  // From a restricted growth string a[0..n-1] (1-based block ids, a[0] = 1).
  static SetPartition from_rgs(const std::vector<int>& rgs);

  // Parses the canonical text form "1,3,4,6,7|2,5,9|8|10".
  static SetPartition parse(const std::string& text);

  int n() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }

  // Index (0-based) of the block containing element x.
  int block_of(int x) const;

  PartitionType type() const;
  std::vector<int> to_rgs() const;
  std::string to_text() const;

  bool operator==(const SetPartition& other) const {
    return n_ == other.n_ && blocks_ == other.blocks_;
  }

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_index_;  // element -> block, size n_+1
};

}  // namespace genuscount
