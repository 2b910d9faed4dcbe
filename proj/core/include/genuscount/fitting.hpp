#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "genuscount/bigint.hpp"
#include "genuscount/chi.hpp"
#include "genuscount/polynomial.hpp"

namespace genuscount {

// Inverse problems: recover the ansatz numerator polynomial (or the chi
// array) from count data.  These routines never extrapolate -- they report
// exactly which coefficients were consumed to solve and which were checked.

enum class GfFamily { Bell, AssocBell, Pairings };

std::string gf_family_name(GfFamily family);
GfFamily gf_family_from_name(const std::string& name);

struct NumeratorFit {
  bool ok = false;
  RationalPolynomial numerator;   // valid when ok
  int first_bad_index = -1;       // series index of the first nonzero excess
  std::string message;
  int consumed_to = 0;            // indices 0..consumed_to determine the polynomial
  int residual_checked_to = 0;    // indices consumed_to+1..residual_checked_to verified zero

  std::string to_json() const;
};

// counts[i] must be the coefficient of x^i of the target G.F. (so the leading
// zeros below the x^{2g+2} prefactor are part of the input).  Requires at
// least two coefficients beyond the expected numerator degree.
NumeratorFit fit_numerator(const std::vector<BigInt>& counts, int g, GfFamily family);

// Optional structural constraints added to the chi linear system.  Default:
// assume nothing, verify everything.
struct ChiAssumptions {
  bool column_symmetry = false;
  bool first_column = false;
  bool second_column = false;
  bool last_line = false;
};

struct ChiFit {
  bool consistent = false;  // data admits a solution
  bool complete = false;    // every entry pinned
  ChiArray array;           // determined entries known, others UNKNOWN
  std::vector<std::pair<int, int>> undetermined;  // (t, s) cells not pinned
  std::string inconsistency;                      // set when !consistent
  int cells_used = 0;
  int cells_checked = 0;
  long max_n_used = 0;

  std::string to_json() const;
};

// Solves the exact linear system chi *_{4g-4} G_{n,k} = C(g) S_{n,k}^{(g)}
// over the rationals for the given data cells (n,k) -> count.
ChiFit fit_chi(int g, const std::map<std::pair<long, long>, BigInt>& data,
               const ChiAssumptions& assume = {});

}  // namespace genuscount
