#include "genuscount/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace genuscount {

namespace {

std::string timestamp_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

// DFS over restricted growth strings with constraint pruning.  Pruning is
// conservative (never drops a satisfying completion); the leaf check is exact.
class RgsEnumerator {
 public:
  RgsEnumerator(int n, const Constraint& c) : n_(n), constraint_(c) {
    if (n < 1 || n > kMaxEnumerationN) {
      throw std::invalid_argument("enumerate: n out of supported range 1..25");
    }
    c.validate(n);
    rgs_.assign(static_cast<std::size_t>(n) + 1, 0);
    block_size_.assign(static_cast<std::size_t>(n) + 1, 0);
    if (constraint_.ctype) {
      needed_desc_ = constraint_.ctype->part_list();
      std::sort(needed_desc_.rbegin(), needed_desc_.rend());
    }
    pred_.assign(static_cast<std::size_t>(n) + 1, 0);
    last_.assign(static_cast<std::size_t>(n) + 1, 0);
    first_.assign(static_cast<std::size_t>(n) + 1, 0);
    visited_.assign(static_cast<std::size_t>(n) + 1, 0);
    sorted_sizes_.reserve(static_cast<std::size_t>(n));
  }

  // Leaf callback: bool leaf(rgs, block_count, genus, block_sizes); rgs and
  // block_sizes are 1-based scratch arrays valid only during the call.
  // Return false to stop.  Enumerates completions of `prefix`.
  template <class Leaf>
  std::uint64_t run(const std::vector<int>& prefix, Leaf&& leaf) {
    reset();
    for (int i = 0; i < static_cast<int>(prefix.size()); ++i) {
      const int b = prefix[static_cast<std::size_t>(i)];
      if (b < 1 || b > block_count_ + 1 || i + 1 > n_) {
        throw std::invalid_argument("enumerate: invalid RGS prefix");
      }
      place(i + 1, b);
    }
    visits_ = 0;
    dfs(static_cast<int>(prefix.size()) + 1, leaf);
    return visits_;
  }

  // Collects feasible prefixes of length `depth` in lexicographic order.
  std::vector<std::vector<int>> prefixes(int depth) {
    reset();
    std::vector<std::vector<int>> result;
    prefix_dfs(1, depth, result);
    return result;
  }

 private:
  void reset() {
    std::fill(block_size_.begin(), block_size_.end(), 0);
    block_count_ = 0;
    singleton_blocks_ = 0;
  }

  void place(int pos, int b) {
    rgs_[static_cast<std::size_t>(pos)] = b;
    if (b > block_count_) block_count_ = b;
    const int size = ++block_size_[static_cast<std::size_t>(b)];
    if (size == 1) ++singleton_blocks_;
    else if (size == 2) --singleton_blocks_;
  }

  void unplace(int b) {
    const int size = block_size_[static_cast<std::size_t>(b)]--;
    if (size == 1) {
      --singleton_blocks_;
      --block_count_;
    } else if (size == 2) {
      ++singleton_blocks_;
    }
  }

  // True if the current open blocks can still be grown into the target type:
  // the i-th largest block must fit inside the i-th largest needed part.
  bool type_feasible() {
    if (block_count_ > static_cast<int>(needed_desc_.size())) return false;
    sorted_sizes_.assign(block_size_.begin() + 1, block_size_.begin() + 1 + block_count_);
    std::sort(sorted_sizes_.rbegin(), sorted_sizes_.rend());
    for (std::size_t i = 0; i < sorted_sizes_.size(); ++i) {
      if (sorted_sizes_[i] > needed_desc_[i]) return false;
    }
    return true;
  }

  bool choice_feasible(int pos) {
    const int remaining_after = n_ - pos;
    if (constraint_.min_block_size == 2 && singleton_blocks_ > remaining_after) return false;
    if (constraint_.parts) {
      if (block_count_ > *constraint_.parts) return false;
      if (block_count_ + remaining_after < *constraint_.parts) return false;
    }
    if (constraint_.ctype && !type_feasible()) return false;
    return true;
  }

  bool accept_leaf() {
    if (constraint_.min_block_size == 2 && singleton_blocks_ > 0) return false;
    if (constraint_.parts && block_count_ != *constraint_.parts) return false;
    if (constraint_.ctype) {
      if (block_count_ != constraint_.ctype->parts()) return false;
      for (int b = 1; b <= block_count_; ++b) {
        ++type_check_[static_cast<std::size_t>(block_size_[static_cast<std::size_t>(b)])];
      }
      bool ok = true;
      for (const auto& [size, count] : constraint_.ctype->multiplicities()) {
        if (type_check_[static_cast<std::size_t>(size)] != count) ok = false;
      }
      for (int b = 1; b <= block_count_; ++b) {
        type_check_[static_cast<std::size_t>(block_size_[static_cast<std::size_t>(b)])] = 0;
      }
      return ok;
    }
    return true;
  }

  // Faces of the map: cycles of sigma∘tau^{-1}, where tau's cycles are the
  // blocks in increasing order.  pred[x] is tau^{-1}(x); the product sends x
  // to pred[x] + 1 (cyclically).
  int leaf_faces() {
    const int n = n_;
    for (int b = 1; b <= block_count_; ++b) last_[static_cast<std::size_t>(b)] = 0;
    for (int i = 1; i <= n; ++i) {
      const int b = rgs_[static_cast<std::size_t>(i)];
      if (last_[static_cast<std::size_t>(b)]) {
        pred_[static_cast<std::size_t>(i)] = last_[static_cast<std::size_t>(b)];
      } else {
        first_[static_cast<std::size_t>(b)] = i;
      }
      last_[static_cast<std::size_t>(b)] = i;
    }
    for (int b = 1; b <= block_count_; ++b) {
      pred_[static_cast<std::size_t>(first_[static_cast<std::size_t>(b)])] =
          last_[static_cast<std::size_t>(b)];
    }
    std::fill(visited_.begin(), visited_.begin() + n + 1, 0);
    int faces = 0;
    for (int x = 1; x <= n; ++x) {
      if (visited_[static_cast<std::size_t>(x)]) continue;
      ++faces;
      int y = x;
      while (!visited_[static_cast<std::size_t>(y)]) {
        visited_[static_cast<std::size_t>(y)] = 1;
        y = pred_[static_cast<std::size_t>(y)] % n + 1;
      }
    }
    return faces;
  }

  template <class Leaf>
  bool dfs(int pos, Leaf& leaf) {
    if (pos > n_) {
      if (!accept_leaf()) return true;
      const int faces = leaf_faces();
      const int twice_genus = n_ + 1 - block_count_ - faces;
      if (twice_genus < 0 || twice_genus % 2 != 0) {
        throw std::logic_error("enumerate: genus integrality violated");
      }
      ++visits_;
      return leaf(rgs_, block_count_, twice_genus / 2, block_size_);
    }
    const int limit = block_count_ + 1;
    for (int b = 1; b <= limit; ++b) {
      place(pos, b);
      bool keep_going = true;
      if (choice_feasible(pos)) keep_going = dfs(pos + 1, leaf);
      unplace(b);
      if (!keep_going) return false;
    }
    return true;
  }

  void prefix_dfs(int pos, int depth, std::vector<std::vector<int>>& out) {
    if (pos > depth) {
      out.emplace_back(rgs_.begin() + 1, rgs_.begin() + 1 + depth);
      return;
    }
    const int limit = block_count_ + 1;
    for (int b = 1; b <= limit; ++b) {
      place(pos, b);
      if (choice_feasible(pos)) prefix_dfs(pos + 1, depth, out);
      unplace(b);
    }
  }

  int n_;
  Constraint constraint_;
  std::vector<int> rgs_;         // 1-based positions
  std::vector<int> block_size_;  // 1-based block ids
  int block_count_ = 0;
  int singleton_blocks_ = 0;
  std::vector<int> needed_desc_;
  std::vector<int> sorted_sizes_;
  std::array<int, kMaxEnumerationN + 1> type_check_{};
  std::uint64_t visits_ = 0;
  std::vector<int> pred_, last_, first_;
  std::vector<char> visited_;
};

// Per-unit accumulator with 64-bit cells, promoted to BigInt on merge.
struct LocalCounts {
  TableMode mode;
  std::array<std::uint64_t, 16> by_genus{};
  std::array<std::array<std::uint64_t, 16>, kMaxEnumerationN + 1> by_parts{};
  std::map<std::vector<int>, std::array<std::uint64_t, 16>> by_type;  // key: size histogram

  explicit LocalCounts(TableMode m) : mode(m) {}
};

GenusCountTable to_table(const LocalCounts& local, int n, const Constraint& c) {
  GenusCountTable table;
  table.n = n;
  table.constraint = c;
  table.mode = local.mode;
  switch (local.mode) {
    case TableMode::ByGenus:
      for (int g = 0; g < 16; ++g) {
        if (local.by_genus[static_cast<std::size_t>(g)]) {
          table.add(TableKey{-1, {}, g}, local.by_genus[static_cast<std::size_t>(g)]);
        }
      }
      break;
    case TableMode::ByParts:
      for (int k = 1; k <= n; ++k) {
        for (int g = 0; g < 16; ++g) {
          const std::uint64_t v =
              local.by_parts[static_cast<std::size_t>(k)][static_cast<std::size_t>(g)];
          if (v) table.add(TableKey{k, {}, g}, v);
        }
      }
      break;
    case TableMode::ByType:
      for (const auto& [histogram, row] : local.by_type) {
        std::map<int, int> mult;
        for (int size = 1; size < static_cast<int>(histogram.size()); ++size) {
          if (histogram[static_cast<std::size_t>(size)]) {
            mult[size] = histogram[static_cast<std::size_t>(size)];
          }
        }
        PartitionType type{mult};
        for (int g = 0; g < 16; ++g) {
          if (row[static_cast<std::size_t>(g)]) {
            table.add(TableKey{-1, type, g}, row[static_cast<std::size_t>(g)]);
          }
        }
      }
      break;
  }
  return table;
}

GenusCountTable run_unit(int n, const Constraint& c, TableMode mode,
                         const std::vector<int>& prefix) {
  RgsEnumerator enumerator(n, c);
  LocalCounts local(mode);
  std::vector<int> histogram;
  enumerator.run(prefix, [&](const std::vector<int>& rgs, int block_count, int genus,
                             const std::vector<int>& block_sizes) {
    (void)rgs;
    switch (mode) {
      case TableMode::ByGenus:
        ++local.by_genus[static_cast<std::size_t>(genus)];
        break;
      case TableMode::ByParts:
        ++local.by_parts[static_cast<std::size_t>(block_count)][static_cast<std::size_t>(genus)];
        break;
      case TableMode::ByType:
        histogram.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int b = 1; b <= block_count; ++b) {
          ++histogram[static_cast<std::size_t>(block_sizes[static_cast<std::size_t>(b)])];
        }
        ++local.by_type[histogram][static_cast<std::size_t>(genus)];
        break;
    }
    return true;
  });
  return to_table(local, n, c);
}

int auto_split_depth(int n, int threads) {
  if (threads <= 1) return 1;
  // B_6 = 203 units saturates typical worker counts; never beyond n-1.
  return std::max(1, std::min(6, n - 1));
}

}  // namespace

std::string WorkUnit::prefix_key() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (i) out << '.';
    out << prefix[i];
  }
  return out.str();
}

std::uint64_t visit_partitions(int n, const Constraint& c, const PartitionVisitor& visitor) {
  RgsEnumerator enumerator(n, c);
  std::vector<int> rgs_copy;
  return enumerator.run({}, [&](const std::vector<int>& rgs, int block_count, int genus,
                                const std::vector<int>& block_sizes) {
    (void)block_count;
    (void)genus;
    (void)block_sizes;
    rgs_copy.assign(rgs.begin() + 1, rgs.begin() + 1 + n);
    return visitor(SetPartition::from_rgs(rgs_copy));
  });
}

std::vector<WorkUnit> split_workload(int n, const Constraint& c, int depth) {
  if (depth < 1 || depth >= n) throw std::invalid_argument("split_workload: depth out of range");
  RgsEnumerator enumerator(n, c);
  std::vector<WorkUnit> units;
  for (auto& prefix : enumerator.prefixes(depth)) {
    units.push_back(WorkUnit{n, c, std::move(prefix)});
  }
  return units;
}

GenusCountTable count_unit(const WorkUnit& unit, TableMode mode) {
  return run_unit(unit.n, unit.constraint, mode, unit.prefix);
}

GenusCountTable count_partitions(int n, const Constraint& c, TableMode mode, int threads,
                                 int depth) {
  c.validate(n);
  GenusCountTable result;
  if ((threads <= 1 && depth == 0) || n < 2) {  // n = 1 has no splittable prefix
    result = run_unit(n, c, mode, {});
    result.workers = 1;
  } else {
    if (depth == 0) depth = auto_split_depth(n, threads);
    depth = std::max(1, std::min(depth, n - 1));
    const std::vector<WorkUnit> units = split_workload(n, c, depth);
    std::vector<GenusCountTable> partials(units.size());
    std::atomic<std::size_t> next{0};
    const int worker_count = std::max(1, std::min<int>(threads, static_cast<int>(units.size())));
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(worker_count));
    for (int w = 0; w < worker_count; ++w) {
      workers.emplace_back([&]() {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= units.size()) break;
          partials[i] = count_unit(units[i], mode);
        }
      });
    }
    for (auto& worker : workers) worker.join();
    result.n = n;
    result.constraint = c;
    result.mode = mode;
    for (const auto& partial : partials) result.merge(partial);
    result.workers = worker_count;
  }
  result.generated_at = timestamp_now();
  return result;
}

GenusCountTable count_by_genus(int n, const Constraint& c, int threads) {
  return count_partitions(n, c, TableMode::ByGenus, threads);
}

GenusCountTable count_stirling(int n, bool no_singletons, int threads) {
  const Constraint c = no_singletons ? Constraint::no_singletons() : Constraint::none();
  return count_partitions(n, c, TableMode::ByParts, threads);
}

GenusCountTable count_types(int n, int min_block_size, int threads) {
  Constraint c;
  c.min_block_size = min_block_size;
  return count_partitions(n, c, TableMode::ByType, threads);
}

int default_thread_count() {
  if (const char* env = std::getenv("GENUSCOUNT_THREADS")) {
    const int value = std::atoi(env);
    if (value >= 1) return value;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

}  // namespace genuscount
