#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "genuscount/constraint.hpp"
#include "genuscount/count_table.hpp"
#include "genuscount/set_partition.hpp"

namespace genuscount {

// Streaming enumeration of set partitions of {1..n} in restricted-growth-
// string lexicographic order.  Nothing is materialized: partitions are
// produced one at a time with O(n) state beyond the recursion.
//
// Supported ceiling: n <= 25 (per-unit accumulators are 64-bit words and
// B_25 < 2^63).  Everything up to n = 15 is exercised by the test suite.

inline constexpr int kMaxEnumerationN = 25;

// A prefix-defined slice of the search space: all partitions whose RGS starts
// with `prefix`.  Units from split_workload are disjoint and cover everything.
struct WorkUnit {
  int n = 0;
  Constraint constraint;
  std::vector<int> prefix;

  std::string prefix_key() const;
};

// Visitor returns true to continue, false to stop the enumeration.
using PartitionVisitor = std::function<bool(const SetPartition&)>;

// Invokes `visitor` once per partition satisfying `c`; returns the number of
// invocations.
std::uint64_t visit_partitions(int n, const Constraint& c, const PartitionVisitor& visitor);

// Work splitting: all feasible RGS prefixes of length `depth` (1 <= depth < n).
std::vector<WorkUnit> split_workload(int n, const Constraint& c, int depth);

// Counts the partitions of one work unit, aggregated per `mode`.
GenusCountTable count_unit(const WorkUnit& unit, TableMode mode);

// Full counts.  threads <= 1 runs the plain enumeration; threads > 1 splits
// the workload and merges per-unit tables (bit-identical to the serial run).
// depth = 0 picks a splitting depth automatically.
GenusCountTable count_partitions(int n, const Constraint& c, TableMode mode, int threads = 1,
                                 int depth = 0);

GenusCountTable count_by_genus(int n, const Constraint& c, int threads = 1);
// Stirling-style table keyed by (k, genus); no_singletons switches to the
// associated numbers.
GenusCountTable count_stirling(int n, bool no_singletons = false, int threads = 1);
// Faa di Bruno-style table keyed by (type, genus).
GenusCountTable count_types(int n, int min_block_size = 1, int threads = 1);

// Worker default: GENUSCOUNT_THREADS env var, else hardware concurrency.
int default_thread_count();

}  // namespace genuscount
