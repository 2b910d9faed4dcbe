#pragma once

#include "genuscount/bigint.hpp"
#include "genuscount/partition_type.hpp"

namespace genuscount {

// Classical (genus-blind) partition counts.  All functions are exact, memoized
// and safe for concurrent callers.

// Bell number B_n: number of partitions of an n-set.  B_0 = B_1 = 1.
BigInt bell(long n);

// Stirling number of the second kind S_{n,k}: partitions with k blocks.
// S_{0,0} = 1.
BigInt stirling2(long n, long k);

// Catalan number C_n = binom(2n, n)/(n+1).
BigInt catalan(long n);

// Faa di Bruno coefficient C_{n,[alpha]} = n! / prod(a_l! * (l!)^a_l):
// partitions of a given cyclic type.  Throws if the type is not a type of n.
BigInt faa_di_bruno(long n, const PartitionType& type);

// Associated Bell number: partitions with no singleton blocks.
// Computed from the alternating sum over Bell numbers.
BigInt assoc_bell(long n);

// Ward number / associated Stirling number of the second kind.
BigInt ward(long n, long k);

// Second-order Eulerian number <<n,k>> (triangle rows n >= 1, 0 <= k < n),
// via the alternating binomial sum over Stirling numbers.
BigInt eulerian2(long n, long k);

// Unsigned Stirling number of the first kind: permutations of p elements with
// q cycles.
BigInt stirling1_unsigned(long p, long q);

// Signed Stirling number of the first kind s_{p,q} = (-1)^{p-q} c_{p,q}.
BigInt stirling1_signed(long p, long q);

}  // namespace genuscount
