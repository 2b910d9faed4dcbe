#pragma once

#include "genuscount/partition_type.hpp"
#include "genuscount/permutation.hpp"
#include "genuscount/set_partition.hpp"

namespace genuscount {

// The permutation tau whose cycles are the blocks of p, each block traversed
// in increasing order: {a1 < a2 < ... < am} maps a1->a2->...->am->a1.
Permutation tau_of(const SetPartition& p);

// Number of cycles of sigma∘tau^{-1} with sigma = (1,2,...,n).  These cycles
// bound the faces of the map attached to the partition.
int faces_of(const SetPartition& p);

// Genus g = (n + 1 - |alpha| - f) / 2.  Throws std::logic_error if the
// quantity is odd or negative (impossible for a valid partition).
int genus_of(const SetPartition& p);

inline PartitionType type_of(const SetPartition& p) { return p.type(); }

struct TwoPartStats {
  int s1 = 0;       // singleton faces attributed to the first canonical block
  int s2 = 0;       // singleton faces attributed to the second block
  int f_prime = 0;  // remaining faces; equals 1 for every two-block partition
};

// For a partition with exactly two blocks: counts the singleton cycles of
// sigma∘tau^{-1} (points x with tau(x-1) = x, cyclically), classed by the
// block containing x.  s1 is the count for the first canonical block (the one
// containing 1); s2 - s1 = n - 2*|block 1| always holds.
TwoPartStats two_part_stats(const SetPartition& p);

}  // namespace genuscount
