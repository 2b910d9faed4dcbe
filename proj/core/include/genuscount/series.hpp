#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "genuscount/bigint.hpp"
#include "genuscount/polynomial.hpp"

namespace genuscount {

namespace series_detail {

inline Rational ring_one(const Rational*) { return Rational(1); }
inline RationalPolynomial ring_one(const RationalPolynomial*) {
  return RationalPolynomial::constant(Rational(1));
}

inline Rational scalar_mul(const Rational& v, const Rational& s) { return v * s; }
inline RationalPolynomial scalar_mul(const RationalPolynomial& v, const Rational& s) {
  return v.scaled(s);
}

// Leading coefficient as a scalar; throws unless it is a unit of the scalar
// field (for polynomials: a nonzero constant).
inline Rational unit_scalar(const Rational& v) {
  if (v == 0) throw std::invalid_argument("series: leading coefficient is zero");
  return v;
}
inline Rational unit_scalar(const RationalPolynomial& v) {
  if (v.degree() > 0) throw std::invalid_argument("series: leading coefficient is not a constant");
  return unit_scalar(v.coeff(0));
}

}  // namespace series_detail

// Truncated formal power series with exact coefficients, everything modulo
// x^{order+1}.  The coefficient ring T is Rational for univariate series and
// Polynomial<Rational> (polynomials in y) for the two-variable series.
template <class T>
class PowerSeries {
 public:
  explicit PowerSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1, T{}) {
    if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
  }
  PowerSeries(int order, std::vector<T> coeffs) : PowerSeries(order) {
    for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) {
      coeffs_[i] = std::move(coeffs[i]);
    }
  }

  static PowerSeries one(int order) {
    PowerSeries s(order);
    s.set(0, series_detail::ring_one(static_cast<const T*>(nullptr)));
    return s;
  }
  static PowerSeries from_poly(const Polynomial<T>& p, int order) {
    PowerSeries s(order);
    for (int i = 0; i <= std::min(order, p.degree()); ++i) s.set(i, p.coeff(i));
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const T& coeff(int i) const {
    if (i < 0 || i > order()) throw std::out_of_range("PowerSeries: index beyond truncation");
    return coeffs_[static_cast<std::size_t>(i)];
  }
  void set(int i, T value) { coeffs_.at(static_cast<std::size_t>(i)) = std::move(value); }

  // Smallest index with a nonzero coefficient; order()+1 when all zero.
  int valuation() const {
    for (int i = 0; i <= order(); ++i) {
      if (!(coeffs_[static_cast<std::size_t>(i)] == T{})) return i;
    }
    return order() + 1;
  }

  PowerSeries operator+(const PowerSeries& other) const {
    PowerSeries result(common_order(other));
    for (int i = 0; i <= result.order(); ++i) result.set(i, coeff(i) + other.coeff(i));
    return result;
  }
  PowerSeries operator-(const PowerSeries& other) const {
    PowerSeries result(common_order(other));
    for (int i = 0; i <= result.order(); ++i) result.set(i, coeff(i) - other.coeff(i));
    return result;
  }
  PowerSeries operator-() const {
    PowerSeries result(order());
    for (int i = 0; i <= order(); ++i) result.set(i, -coeff(i));
    return result;
  }
  PowerSeries operator*(const PowerSeries& other) const {
    PowerSeries result(common_order(other));
    for (int i = 0; i <= result.order(); ++i) {
      for (int j = 0; i + j <= result.order() && j <= other.order(); ++j) {
        if (i > order()) break;
        result.coeffs_[static_cast<std::size_t>(i + j)] =
            result.coeffs_[static_cast<std::size_t>(i + j)] + coeff(i) * other.coeff(j);
      }
    }
    return result;
  }

  PowerSeries scaled(const Rational& factor) const {
    PowerSeries result(order());
    for (int i = 0; i <= order(); ++i) {
      result.set(i, series_detail::scalar_mul(coeff(i), factor));
    }
    return result;
  }

  // Multiplication by x^k (coefficients shifted up, truncation kept).
  PowerSeries shifted(int k) const {
    PowerSeries result(order());
    for (int i = 0; i + k <= order(); ++i) {
      if (i + k >= 0) result.set(i + k, coeff(i));
    }
    return result;
  }

  // Division: the denominator's constant term must be a unit scalar.
  PowerSeries operator/(const PowerSeries& den) const {
    const Rational lead = series_detail::unit_scalar(den.coeff(0));
    PowerSeries result(common_order(den));
    for (int i = 0; i <= result.order(); ++i) {
      T acc = coeff(i);
      for (int j = 1; j <= i && j <= den.order(); ++j) {
        acc = acc - den.coeff(j) * result.coeff(i - j);
      }
      result.set(i, series_detail::scalar_mul(acc, Rational(1) / lead));
    }
    return result;
  }

  PowerSeries pow(long e) const {
    if (e < 0) throw std::invalid_argument("PowerSeries::pow: negative exponent");
    PowerSeries result = one(order());
    PowerSeries base = *this;
    while (e) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  // f^alpha for any rational alpha, requiring f(0) = 1.  Uses the logarithmic
  // derivative recurrence n*t_n = sum_{j>=1} (alpha*j - (n-j)) d_j t_{n-j}.
  PowerSeries pow_alpha(const Rational& alpha) const {
    if (!(coeff(0) == series_detail::ring_one(static_cast<const T*>(nullptr)))) {
      throw std::invalid_argument("pow_alpha: constant term must be 1");
    }
    PowerSeries result = one(order());
    for (int m = 1; m <= order(); ++m) {
      T acc{};
      for (int j = 1; j <= m; ++j) {
        const Rational factor = alpha * j - Rational(m - j);
        acc = acc + series_detail::scalar_mul(coeff(j) * result.coeff(m - j), factor);
      }
      result.set(m, series_detail::scalar_mul(acc, Rational(1, m)));
    }
    return result;
  }

  // Composition f(g) with val(g) >= 1, truncated. Horner over the truncated ring.
  PowerSeries compose(const PowerSeries& inner) const {
    if (!(inner.coeff(0) == T{})) {
      throw std::invalid_argument("compose: inner series must have valuation >= 1");
    }
    PowerSeries acc(order());
    for (int i = order(); i >= 0; --i) {
      acc = acc * inner;
      acc.set(0, acc.coeff(0) + coeff(i));
    }
    return acc;
  }

  bool operator==(const PowerSeries& other) const { return coeffs_ == other.coeffs_; }

 private:
  int common_order(const PowerSeries& other) const {
    if (order() != other.order()) {
      throw std::invalid_argument("PowerSeries: mixed truncation orders");
    }
    return order();
  }

  std::vector<T> coeffs_;
};

using RationalSeries = PowerSeries<Rational>;
// Bivariate series: exact in x up to the truncation order, with a finite
// polynomial in y at each x-degree.
using BiSeries = PowerSeries<RationalPolynomial>;

// (1 - 4x)^{sign * m/2} for odd m, to order N.
RationalSeries half_power(int m, bool negative, int N);

// Two-variable series that is Laurent in v: used for the two-part partition
// generating function, where the v-exponent 2p-n may be negative.
struct LaurentBiSeries {
  int order = 0;
  std::vector<std::map<int, Rational>> by_x;  // x-degree -> (v-degree -> coeff)

  explicit LaurentBiSeries(int N) : order(N), by_x(static_cast<std::size_t>(N) + 1) {}
  Rational coeff(int x_deg, int v_deg) const {
    if (x_deg < 0 || x_deg > order) return Rational(0);
    const auto& row = by_x[static_cast<std::size_t>(x_deg)];
    auto it = row.find(v_deg);
    return it == row.end() ? Rational(0) : it->second;
  }
};

}  // namespace genuscount
