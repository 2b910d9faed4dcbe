#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "genuscount/classic.hpp"

using namespace genuscount;

namespace {

// Explicit alternating-binomial sum: the independent route for S_{n,k}.
BigInt stirling2_sum(long n, long k) {
  BigInt acc = 0;
  for (long s = 0; s <= k; ++s) {
    const BigInt term = binomial(k, s) * pow_int(BigInt(s), static_cast<unsigned long>(n));
    acc += ((k - s) % 2 == 0) ? term : -term;
  }
  return acc / factorial(k);
}

// Second-order Eulerian recurrence, the oracle for the Stirling-sum route:
// <<n,k>> = (k+1) <<n-1,k>> + (2n-1-k) <<n-1,k-1>>.
BigInt eulerian2_rec(long n, long k) {
  if (n == 0) return k == 0 ? 1 : 0;
  if (k < 0 || k >= n) return 0;
  return (k + 1) * eulerian2_rec(n - 1, k) + (2 * n - 1 - k) * eulerian2_rec(n - 1, k - 1);
}

// Cycle counts over all permutations of {1..p}, brute force.
BigInt count_perms_with_cycles(int p, int q) {
  std::vector<int> perm(static_cast<std::size_t>(p));
  std::iota(perm.begin(), perm.end(), 1);
  BigInt count = 0;
  do {
    std::vector<char> seen(static_cast<std::size_t>(p) + 1, 0);
    int cycles = 0;
    for (int x = 1; x <= p; ++x) {
      if (seen[static_cast<std::size_t>(x)]) continue;
      ++cycles;
      for (int y = x; !seen[static_cast<std::size_t>(y)];
           y = perm[static_cast<std::size_t>(y - 1)]) {
        seen[static_cast<std::size_t>(y)] = 1;
      }
    }
    if (cycles == q) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

TEST_SUITE("classic") {

TEST_CASE("bell numbers") {
  CHECK(bell(0) == 1);
  CHECK(bell(1) == 1);
  CHECK(bell(5) == 52);
  CHECK(bell(12) == 4213597);
  CHECK(bell(15) == BigInt("1382958545"));
}

TEST_CASE("stirling2 against the explicit sum") {
  CHECK(stirling2(1, 1) == 1);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2_sum(4, 2) == 7);
  for (long n = 1; n <= 12; ++n) {
    for (long k = 1; k <= n; ++k) CHECK(stirling2(n, k) == stirling2_sum(n, k));
  }
  // sum rule
  for (long n = 1; n <= 20; ++n) {
    BigInt total = 0;
    for (long k = 0; k <= n; ++k) total += stirling2(n, k);
    CHECK(total == bell(n));
  }
}

TEST_CASE("faa di bruno coefficients") {
  CHECK(faa_di_bruno(4, PartitionType::parse("2^2")) == 3);
  CHECK(faa_di_bruno(10, PartitionType::parse("2,3,5")) == 2520);
  for (long k = 1; k <= 8; ++k) {
    CHECK(faa_di_bruno(2 * k, PartitionType{{std::map<int, int>{{2, static_cast<int>(k)}}}}) ==
          double_factorial_odd(k));
  }
  CHECK_THROWS_AS(faa_di_bruno(5, PartitionType::parse("2^2")), std::invalid_argument);
  // sum rule over types with |alpha| = k
  // (covered cell-wise by the enumeration suite; here the k=2 slice)
  for (long n = 4; n <= 10; ++n) {
    BigInt total = 0;
    for (long p = 1; 2 * p <= n; ++p) {
      total += faa_di_bruno(
          n, p * 2 == n
                 ? PartitionType{{std::map<int, int>{{static_cast<int>(p), 2}}}}
                 : PartitionType::from_parts({static_cast<int>(p), static_cast<int>(n - p)}));
    }
    CHECK(total == stirling2(n, 2));
  }
}

TEST_CASE("associated bell numbers") {
  CHECK(assoc_bell(0) == 1);
  CHECK(assoc_bell(2) == 1);
  CHECK(assoc_bell(5) == 11);
  for (long n = 0; n <= 20; ++n) CHECK(assoc_bell(n) + assoc_bell(n + 1) == bell(n));
}

TEST_CASE("ward numbers both ways") {
  CHECK(ward(4, 2) == 3);
  CHECK(ward(6, 3) == 15);
  // inverse identity S_{n,k} = sum_l binom(n,l) Ward(n-l, k-l); the l = k
  // term is zero except at n = k, where it supplies the all-singleton cell
  for (long n = 1; n <= 12; ++n) {
    for (long k = 1; k <= n; ++k) {
      BigInt total = 0;
      for (long l = 0; l <= k; ++l) total += binomial(n, l) * ward(n - l, k - l);
      CHECK(total == stirling2(n, k));
    }
  }
}

TEST_CASE("second-order eulerian numbers") {
  CHECK(eulerian2(1, 0) == 1);
  CHECK(eulerian2(2, 1) == 2);
  CHECK(eulerian2_rec(2, 1) == 2);
  for (long n = 0; n <= 9; ++n) {
    for (long k = 0; k <= n; ++k) CHECK(eulerian2(n, k) == eulerian2_rec(n, k));
  }
  // ward via eulerian2 equals ward via stirling2.  The identity indexes the
  // triangle the way the Stirling-sum formula lays it out, one column later
  // than the standard triangle, hence the -1.
  for (long n = 2; n <= 12; ++n) {
    for (long k = 1; 2 * k <= n; ++k) {
      BigInt total = 0;
      for (long l = 0; l <= n - k; ++l) {
        total += binomial(l, n - 2 * k) * eulerian2(n - k, n - k - l - 1);
      }
      CHECK(total == ward(n, k));
    }
  }
}

TEST_CASE("stirling first kind") {
  CHECK(stirling1_unsigned(3, 1) == 2);
  CHECK(count_perms_with_cycles(3, 1) == 2);
  for (int p = 1; p <= 6; ++p) {
    CHECK(stirling1_unsigned(p, p) == 1);
    for (int q = 1; q <= p; ++q) CHECK(stirling1_unsigned(p, q) == count_perms_with_cycles(p, q));
  }
  // orthogonality: sum_p S_{n,p} s_{p,q} = delta_{n,q}
  for (long n = 1; n <= 10; ++n) {
    for (long q = 1; q <= n; ++q) {
      BigInt total = 0;
      for (long p = 1; p <= n; ++p) total += stirling2(n, p) * stirling1_signed(p, q);
      CHECK(total == (n == q ? 1 : 0));
    }
  }
}

TEST_CASE("binomial and factorial conventions") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(-2, 1) == 0);
  CHECK(binomial(3, 7) == 0);
  CHECK(factorial(0) == 1);
  CHECK(double_factorial_odd(0) == 1);
  CHECK(double_factorial_odd(6) == 10395);
  CHECK(catalan(4) == 14);
  CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
  CHECK_THROWS_AS(rational_to_int(Rational(1, 2)), std::logic_error);
}

}  // TEST_SUITE
