#pragma once

#include <string>
#include <vector>

#include "genuscount/bigint.hpp"
#include "genuscount/polynomial.hpp"

namespace genuscount {

// Triangular integer array chi^(g)(t,s), 0 <= s <= t <= 4(g-1), parameterizing
// the genus-g Stirling-number formula.  Entries beyond the published data are
// UNKNOWN (known() == false).
class ChiArray {
 public:
  ChiArray(int g, std::vector<std::vector<std::pair<BigInt, bool>>> rows);

  int genus() const { return g_; }
  int row_count() const { return static_cast<int>(rows_.size()); }  // 4g-3
  int last_row() const { return row_count() - 1; }                  // 4(g-1)

  bool known(int t, int s) const;
  const BigInt& value(int t, int s) const;  // throws std::logic_error if unknown

  // Sum of all known entries; throws if any entry is unknown.
  BigInt entry_sum() const;

  std::string to_json() const;  // UNKNOWN entries serialized as null
  static ChiArray from_json(const std::string& text);

 private:
  int g_;
  std::vector<std::vector<std::pair<BigInt, bool>>> rows_;
};

// The published arrays: g=1 (the 1x1 array [1]), g=2, g=3 in full, g=4
// partial with the last line filled in from the closed-form construction.
ChiArray chi_array(int g);

// d(g) = (4^{g+1} - 1 - 3(6g-1)) / 3: the factor on the second column.
BigInt chi_column_two_factor(int g);

// C(g) = 12(2g-1)(6g-5)!/(3g-3)!: overall denominator of the genus-g
// Stirling formula.
BigInt stirling_genus_denominator(int g);

// Row 4(g-1) of the sub-Pascal array: coefficients of (1+x)(1-x)^{4g-6}.
std::vector<BigInt> sub_pascal_row(int g);

// Last line of chi^(g) built from signed Stirling numbers of the first kind:
// (1-y)^{2(g-1)} times the polynomial part of
// (1-y)^{4g+1} y^{-2g-3} sum_j 2 s_{2g+2+j,j+1} / ((2g+j+2)(2g+j+1)) y^{-j}.
RationalPolynomial chi_last_line(int g);

struct ChiCheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ChiCheckReport {
  std::vector<ChiCheckItem> items;
  bool all_pass() const;
  std::string to_text() const;
};

// Structural checks: column symmetry, first column = signed binomials, second
// column = d(g) * sub-Pascal row, vanishing sums of the last g-1 rows.
// Checks apply only where entries are known.
ChiCheckReport chi_structure_checks(const ChiArray& chi);

// The *_p contraction of two triangular arrays: sum over 0 <= s <= t <= p of
// a[t][s] * b[t][s].  Throws if either array lacks an index in range.
BigInt contract(const std::vector<std::vector<BigInt>>& a,
                const std::vector<std::vector<BigInt>>& b, int p);

}  // namespace genuscount
