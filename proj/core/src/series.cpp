#include "genuscount/series.hpp"

#include <sstream>

namespace genuscount {

RationalSeries half_power(int m, bool negative, int N) {
  if (m < 0 || m % 2 == 0) throw std::invalid_argument("half_power: m must be odd and positive");
  RationalSeries base(N);
  base.set(0, Rational(1));
  if (N >= 1) base.set(1, Rational(-4));
  const Rational alpha = negative ? Rational(-m, 2) : Rational(m, 2);
  return base.pow_alpha(alpha);
}

std::string to_string(const RationalPolynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    const Rational c = p.coeff(i);
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const Rational a = c < 0 ? Rational(-c) : c;
    const bool unit_coeff = (a == 1) && i > 0;
    if (!unit_coeff) {
      out << boost::multiprecision::numerator(a).str();
      if (boost::multiprecision::denominator(a) != 1) {
        out << "/" << boost::multiprecision::denominator(a).str();
      }
    }
    if (i > 0) {
      if (!unit_coeff) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

RationalPolynomial interpolate(const std::vector<Rational>& points,
                               const std::vector<Rational>& values) {
  if (points.size() != values.size() || points.empty()) {
    throw std::invalid_argument("interpolate: points and values must match and be nonempty");
  }
  RationalPolynomial result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    RationalPolynomial basis{Rational(1)};
    Rational denom(1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * RationalPolynomial{-points[j], Rational(1)};
      denom *= points[i] - points[j];
    }
    result = result + basis.scaled(values[i] / denom);
  }
  return result;
}

}  // namespace genuscount
