#pragma once

#include <map>
#include <vector>

#include "genuscount/bigint.hpp"
#include "genuscount/partition_type.hpp"
#include "genuscount/series.hpp"

namespace genuscount {

// Multivariate series in x with kappa-indeterminate monomials: each term is
// c * x^n * prod_l kappa_l^{a_l}, stored sparsely per x-degree with the
// kappa-exponents canonicalized as a PartitionType.  In the partition
// generating functions the kappa-weight of every term equals its x-degree.
class KappaSeries {
 public:
  explicit KappaSeries(int order);

  static KappaSeries one(int order);
  // The bare monomial kappa_l x^deg (deg usually l).
  static KappaSeries kappa_term(int order, int ell, int deg);

  int order() const { return static_cast<int>(slices_.size()) - 1; }
  const std::map<PartitionType, Rational>& slice(int n) const;
  Rational coeff(int n, const PartitionType& type) const;

  KappaSeries operator+(const KappaSeries& other) const;
  KappaSeries operator-(const KappaSeries& other) const;
  KappaSeries operator*(const KappaSeries& other) const;
  // Division by a unit (constant term = nonzero rational, empty type).
  KappaSeries operator/(const KappaSeries& den) const;

  KappaSeries scaled(const Rational& factor) const;
  KappaSeries shifted(int k) const;  // multiply by x^k
  KappaSeries pow(int e) const;
  // Multiply every term by the indeterminate kappa_l (no x-degree change).
  KappaSeries append_kappa(int ell) const;

  bool operator==(const KappaSeries& other) const { return slices_ == other.slices_; }

  // Substitutes numeric values for the kappas (unlisted ones become 0).
  RationalSeries specialize(const std::map<int, Rational>& kappa_values) const;

 private:
  void add_term(int n, const PartitionType& type, const Rational& value);

  std::vector<std::map<PartitionType, Rational>> slices_;
};

// Planar functional equation Z = 1 + W(x Z) with W(x) = sum_{l<=L} kappa_l
// x^l, solved by fixed-point iteration in the graded ring.  Coefficient of
// x^n prod kappa^alpha is the noncrossing count of type alpha.
KappaSeries solve_Z0(int kappa_cutoff, int N);

// Genus-1 generating function assembled from the planar solution:
// Z1 = X2(xt) Y2(xt) / ((1 - X2(xt))^4 (1 - V(x))), with xt = x Z0(x),
// V = xW', X2 = xW' - W, Y2 = x^2 W''/2.
KappaSeries solve_Z1(int kappa_cutoff, int N);

}  // namespace genuscount
