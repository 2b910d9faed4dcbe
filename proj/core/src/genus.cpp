#include "genuscount/genus.hpp"

#include <stdexcept>

namespace genuscount {

Permutation tau_of(const SetPartition& p) {
  return Permutation::from_cycles(p.n(), p.blocks());
}

int faces_of(const SetPartition& p) {
  const Permutation sigma = Permutation::full_cycle(p.n());
  return sigma.compose(tau_of(p).inverse()).cycle_count();
}

int genus_of(const SetPartition& p) {
  const int n = p.n();
  const int k = p.block_count();
  const int f = faces_of(p);
  const int twice_genus = n + 1 - k - f;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw std::logic_error("genus_of: n + 1 - k - f is odd or negative");
  }
  return twice_genus / 2;
}

TwoPartStats two_part_stats(const SetPartition& p) {
  if (p.block_count() != 2) {
    throw std::invalid_argument("two_part_stats: partition must have exactly 2 blocks");
  }
  const int n = p.n();
  const Permutation tau = tau_of(p);
  TwoPartStats stats;
  int singletons = 0;
  for (int x = 1; x <= n; ++x) {
    const int prev = (x == 1) ? n : x - 1;  // sigma^{-1}(x)
    if (tau.apply(prev) == x) {
      ++singletons;
      if (p.block_of(x) == 0) ++stats.s1; else ++stats.s2;
    }
  }
  stats.f_prime = faces_of(p) - singletons;
  const int q = static_cast<int>(p.block(0).size());
  if (stats.s2 - stats.s1 != n - 2 * q) {
    throw std::logic_error("two_part_stats: s2 - s1 != n - 2q");
  }
  return stats;
}

}  // namespace genuscount
