#pragma once

#include "genuscount/bigint.hpp"
#include "genuscount/polynomial.hpp"
#include "genuscount/series.hpp"

namespace genuscount {

// Counts of genus-g partitions of {1..2k} into pairs (type [2^k]).

// Coefficient-extraction route: (2k)!/((k+1)!(k-2g)!) times the coefficient
// of u^{2g} in ((u/2)/tanh(u/2))^{k+1}, with the even series produced by
// exact division of the exponential series.  Zero when 2g > k.
BigInt epsilon(int k, int g);

// Recurrence route: (k+1) e_g(k) = 2(2k-1) e_g(k-1)
//                     + (1/2)(2k-1)(2k-2)(2k-3) e_{g-1}(k-2), e_0 = Catalan.
BigInt epsilon_recurrence_hz(int k, int g);

// Checks the fixed-k recurrence that descends through the genus:
// 2g e_g(k) = sum_{h=1}^{g} binom(k+2h+1-2g, 2h+1) e_{g-h}(k).
bool epsilon_recurrence_in_genus(int k, int g);

// The degree-3g polynomial R_g with e_g(k) = C_k R_g(k) / 2^g, evaluated via
// the double sum over unsigned Stirling numbers of the first kind.
BigInt R_eval(int g, long k);

// R_g reconstructed by exact Lagrange interpolation at k = 0..3g.
RationalPolynomial R_poly(int g);

// Q^(g)(0) = (4g)!/(2^{2g} (2g+1)!).
BigInt pairings_q0(int g);

// Numerator polynomial of the pairings G.F., from the coefficient recurrence
// (2g+1+r) q_r + 4(g-r) q_{r-1} = [D^ Q^(g-1)]_{u^r}; degree exactly g-1,
// integer coefficients.
RationalPolynomial Q_poly(int g);

// u^{2g} Q^(g)(u) / (1-4u)^{(6g-1)/2}; coefficient of u^k is epsilon(k, g).
RationalSeries pairings_gf(int g, int N);

}  // namespace genuscount
