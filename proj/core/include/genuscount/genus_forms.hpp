#pragma once

#include <string>

#include "genuscount/bigint.hpp"
#include "genuscount/partition_type.hpp"
#include "genuscount/polynomial.hpp"
#include "genuscount/series.hpp"

namespace genuscount {

// Epistemic status of a formula value.  Conjectured formulas are confirmed
// against the brute-force oracle by the verification suite before any table
// labels them confirmed; the tag is data, not documentation.
enum class Status { Exact, Conjectured, Unavailable };

std::string status_name(Status s);

struct FormulaResult {
  BigInt value = 0;
  Status status = Status::Unavailable;

  static FormulaResult exact(BigInt v) { return {std::move(v), Status::Exact}; }
  static FormulaResult conjectured(BigInt v) { return {std::move(v), Status::Conjectured}; }
  static FormulaResult unavailable() { return {0, Status::Unavailable}; }

  bool available() const { return status != Status::Unavailable; }
};

// --- Genus-dependent Bell numbers ----------------------------------------

// B_n^(g): closed forms for g <= 3 (exact for g <= 2, conjectured for g = 3);
// for g = 4 only n = 10..15 are known (conjectured).  n below the genus bound
// 2g+2 gives an exact zero.
FormulaResult bell_genus(long n, int g);

// Associated (no-singleton) numbers via the removal recurrence
// iB_n = B_n - sum_s binom(n,s) iB_{n-s}; availability follows bell_genus.
FormulaResult assoc_bell_genus(long n, int g);

// Direct double-factorial sum for genus 1; must agree with assoc_bell_genus.
BigInt assoc_bell_genus1_direct(long n);

// --- Genus-dependent Stirling numbers ------------------------------------

// S_{n,k}^(g): Narayana for g=0; the chi-contraction formula for g >= 1
// (exact for g <= 2, conjectured for g = 3, partial for g = 4 where values
// depending on UNKNOWN chi entries come back unavailable).
FormulaResult stirling_genus(long n, long k, int g);

// S_{n,2}^(g) = binom(n, 2g+2) (exact, from the two-part solution).
BigInt stirling_k2(long n, int g);

// Conjectured k=3 closed form ((4^{g+1}-1)/3) ((n-g-1)/(g+2)) binom(n,2g+3).
FormulaResult stirling_k3_conjecture(long n, int g);

// Associated Stirling numbers: closed forms for g = 0, 1 only.
FormulaResult assoc_stirling_genus(long n, long k, int g);

// --- Fixed-type families ---------------------------------------------------

// Kreweras: noncrossing (genus 0) partitions of a given type.
BigInt kreweras(long n, const PartitionType& type);

// Two-part partitions [p, n-p]: (n/(g+1)) binom(p-1,g) binom(n-p-1,g),
// halved when n = 2p.
BigInt two_part(long n, long p, int g);

// Independent oracle: coefficient of z^p u^{p-1-g} in tr(M^n) computed via
// the transfer-matrix recurrence t_n = t_1 t_{n-1} + z(1-u) t_{n-2}.
BigInt two_part_transfer(long n, long p, int g);

// The trace polynomial t_n itself (z outer, u inner), for direct inspection.
Polynomial<RationalPolynomial> transfer_trace(long n);

// Generating function x^{2g+2}(2 - x(v+1/v)) / (2 (1-xv)^{g+2} (1-x/v)^{g+2}),
// symmetric under v <-> 1/v.  At v=1 the x^n row sums reduce to S_{n,2}^(g).
LaurentBiSeries two_part_gf(int g, int N);

// Reads a count back out of the symmetric expansion: combines the v^{2p-n}
// and v^{n-2p} wings (one term at n = 2p); equals two_part(n, p, g).
BigInt two_part_gf_count(const LaurentBiSeries& gf, long n, long p);

// Three-part partitions [p, q, n-p-q] for genus 0 and 1 (exact), with the
// 1/2 and 1/6 symmetry factors for coincident part sizes applied internally.
FormulaResult three_part(long n, long p, long q, int g);

// C_{2p,[p^2]}^(g) = binom(p-1,g) binom(p,g+1).
BigInt p_squared(long p, int g);

// Type [p^k] at genus 1: exact for k <= 3, conjectured for 4 <= k <= 7.
FormulaResult pk_genus1(long p, int k);

// Type [p^k] at genus 2: conjectured, k in {3,4,5}.
FormulaResult pk_genus2(long p, int k);

}  // namespace genuscount
