#include "genuscount/classic.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace genuscount {

namespace {

// Row-extensible memo tables.  The lock is never held while computing, so the
// recurrences below may call back into the public functions freely.
class RowTable {
 public:
  bool lookup(std::size_t row, BigInt& out) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (row < rows_.size() && rows_[row].second) {
      out = rows_[row].first;
      return true;
    }
    return false;
  }
  void store(std::size_t row, const BigInt& value) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (rows_.size() <= row) rows_.resize(row + 1);
    rows_[row] = {value, true};
  }

 private:
  std::mutex mutex_;
  std::vector<std::pair<BigInt, bool>> rows_;
};

class PairTable {
 public:
  bool lookup(long a, long b, BigInt& out) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = map_.find({a, b});
    if (it == map_.end()) return false;
    out = it->second;
    return true;
  }
  void store(long a, long b, const BigInt& value) {
    std::lock_guard<std::mutex> lock(mutex_);
    map_.emplace(std::make_pair(a, b), value);
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<long, long>, BigInt> map_;
};

RowTable bell_table;
RowTable assoc_bell_table;
PairTable stirling2_table;
PairTable stirling1_table;

}  // namespace

BigInt bell(long n) {
  if (n < 0) throw std::invalid_argument("bell: n must be >= 0");
  BigInt cached;
  if (bell_table.lookup(static_cast<std::size_t>(n), cached)) return cached;
  BigInt value;
  if (n == 0) {
    value = 1;
  } else {
    // B_{n} = sum_p binom(n-1, p) B_p
    value = 0;
    for (long p = 0; p <= n - 1; ++p) value += binomial(n - 1, p) * bell(p);
  }
  bell_table.store(static_cast<std::size_t>(n), value);
  return value;
}

BigInt stirling2(long n, long k) {
  if (n < 0 || k < 0) return 0;
  if (k > n) return 0;
  if (n == 0) return 1;  // S_{0,0}
  if (k == 0) return 0;
  BigInt cached;
  if (stirling2_table.lookup(n, k, cached)) return cached;
  // S_{n,k} = k S_{n-1,k} + S_{n-1,k-1}
  BigInt value = k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
  stirling2_table.store(n, k, value);
  return value;
}

BigInt catalan(long n) {
  if (n < 0) return 0;
  return binomial(2 * n, n) / (n + 1);
}

BigInt faa_di_bruno(long n, const PartitionType& type) {
  if (type.weight() != n) throw std::invalid_argument("faa_di_bruno: type is not a type of n");
  BigInt denom = 1;
  for (const auto& [size, count] : type.multiplicities()) {
    denom *= factorial(count);
    denom *= pow_int(factorial(size), static_cast<unsigned long>(count));
  }
  return factorial(n) / denom;
}

BigInt assoc_bell(long n) {
  if (n < 0) throw std::invalid_argument("assoc_bell: n must be >= 0");
  if (n == 0) return 1;  // the empty partition has no singletons
  BigInt cached;
  if (assoc_bell_table.lookup(static_cast<std::size_t>(n), cached)) return cached;
  BigInt value = 0;
  for (long j = 0; j <= n - 2; ++j) {
    const BigInt term = bell(n - 1 - j);
    value += (j % 2 == 0) ? term : -term;
  }
  assoc_bell_table.store(static_cast<std::size_t>(n), value);
  return value;
}

BigInt ward(long n, long k) {
  if (n < 0 || k < 0) return 0;
  BigInt value = 0;
  for (long l = 0; l <= k; ++l) {
    const BigInt term = binomial(n, l) * stirling2(n - l, k - l);
    value += (l % 2 == 0) ? term : -term;
  }
  return value;
}

BigInt eulerian2(long n, long k) {
  if (n < 0 || k < 0) return 0;
  if (n == 0) return k == 0 ? 1 : 0;
  if (k >= n) return 0;
  // The Stirling-sum formula indexes columns from 1; shift to the standard
  // triangle <<n,k>> with 0 <= k <= n-1.
  const long kk = k + 1;
  BigInt value = 0;
  for (long j = 0; j <= kk; ++j) {
    const BigInt term = binomial(2 * n + 1, kk - j) * stirling2(n + j, j);
    value += ((kk - j) % 2 == 0) ? term : -term;
  }
  return value;
}

BigInt stirling1_unsigned(long p, long q) {
  if (p < 0 || q < 0) return 0;
  if (p == 0) return q == 0 ? 1 : 0;
  if (q == 0 || q > p) return 0;
  BigInt cached;
  if (stirling1_table.lookup(p, q, cached)) return cached;
  // c_{p,q} = c_{p-1,q-1} + (p-1) c_{p-1,q}
  BigInt value = stirling1_unsigned(p - 1, q - 1) + (p - 1) * stirling1_unsigned(p - 1, q);
  stirling1_table.store(p, q, value);
  return value;
}

BigInt stirling1_signed(long p, long q) {
  const BigInt c = stirling1_unsigned(p, q);
  return ((p - q) % 2 == 0) ? c : -c;
}

}  // namespace genuscount
