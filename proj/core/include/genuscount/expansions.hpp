#pragma once

#include "genuscount/series.hpp"

namespace genuscount {

// Generating-function expansions.  valid_to caps the x-degree up to which the
// coefficients are meaningful: the genus-4..6 numerators are only partially
// known, so the tail of those series must not be read.

struct BoundedSeries {
  RationalSeries series;
  int valid_to = 0;

  BigInt coeff_int(int n) const;  // exact integer coefficient, checked range
};

struct BoundedBiSeries {
  BiSeries series;
  int valid_to = 0;

  BigInt coeff_int(int n, int k) const;
};

// B^(g)(x): Catalan G.F. for g = 0, x^{2g+2} P^(g)(x) (1-4x)^{-(6g-1)/2}
// for 1 <= g <= 6 (partial numerators cap valid_to at 15 for g >= 4).
BoundedSeries expand_bell_gf(int g, int N);

// iB^(g)(x): the no-singleton analogue over the discriminant (1-3x)(1+x).
BoundedSeries expand_assoc_bell_gf(int g, int N);

// S^(g)(x,y): coefficient of x^n y^k is S_{n,k}^(g); g <= 3.
BoundedBiSeries expand_stirling_gf(int g, int N);

// iS^(g)(x,y) for g <= 2.
BoundedBiSeries expand_assoc_stirling_gf(int g, int N);

}  // namespace genuscount
