#include "genuscount/expansions.hpp"

#include <stdexcept>

#include "genuscount/chi.hpp"

namespace genuscount {

namespace {

BiSeries truncate_to(const BiSeries& s, int N) {
  BiSeries out(N);
  for (int i = 0; i <= N && i <= s.order(); ++i) out.set(i, s.coeff(i));
  return out;
}

// Published numerator prefixes of B^(g)(x); degree 3(g-1) when complete.
std::vector<long> bell_numerator(int g, bool& complete) {
  complete = true;
  switch (g) {
    case 1: return {1};
    case 2: return {1, 6, -19, 21};
    case 3: return {1, 60, -66, -130, 1065, -2262, 1738};
    case 4: complete = false; return {1, 306, 4035, -16669, 63735, -136164};
    case 5: complete = false; return {1, 1320, 75068, 218300};
    case 6: complete = false; return {1, 5406};
    default: throw std::invalid_argument("expand_bell_gf: 0 <= g <= 6");
  }
}

std::vector<long> assoc_bell_numerator(int g, bool& complete) {
  complete = true;
  switch (g) {
    case 1: return {1};
    case 2: return {1, 9, -4, 9};
    case 3: return {1, 66, 249, 226, 894, -480, 406};
    case 4: complete = false; return {1, 315, 6519, 20228, 65718, 95247};
    default: throw std::invalid_argument("expand_assoc_bell_gf: 1 <= g <= 4");
  }
}

RationalPolynomial chi_row_polynomials_to_p(const ChiArray& chi, int t) {
  std::vector<Rational> coeffs;
  for (int s = 0; s <= t; ++s) coeffs.emplace_back(chi.value(t, s));
  return RationalPolynomial(std::move(coeffs));
}

}  // namespace

BigInt BoundedSeries::coeff_int(int n) const {
  if (n < 0 || n > valid_to) throw std::out_of_range("BoundedSeries: coefficient beyond validity");
  return rational_to_int(series.coeff(n));
}

BigInt BoundedBiSeries::coeff_int(int n, int k) const {
  if (n < 0 || n > valid_to) {
    throw std::out_of_range("BoundedBiSeries: coefficient beyond validity");
  }
  return rational_to_int(series.coeff(n).coeff(k));
}

BoundedSeries expand_bell_gf(int g, int N) {
  if (N < 0) throw std::invalid_argument("expand_bell_gf: N must be >= 0");
  if (g == 0) {
    // (1 - sqrt(1-4x)) / (2x)
    RationalSeries base(N + 1);
    base.set(0, Rational(1));
    if (N + 1 >= 1) base.set(1, Rational(-4));
    const RationalSeries root = base.pow_alpha(Rational(1, 2));
    RationalSeries numer = RationalSeries::one(N + 1) - root;
    RationalSeries shifted(N);
    for (int i = 0; i <= N; ++i) shifted.set(i, numer.coeff(i + 1) / 2);
    return {shifted, N};
  }
  bool complete = true;
  const std::vector<long> numerator = bell_numerator(g, complete);
  std::vector<Rational> coeffs(numerator.begin(), numerator.end());
  const RationalSeries p = RationalSeries::from_poly(RationalPolynomial(std::move(coeffs)), N);
  const RationalSeries series = (p * half_power(6 * g - 1, true, N)).shifted(2 * g + 2);
  const int valid_to =
      complete ? N : std::min<long>(N, 2 * g + 2 + static_cast<long>(numerator.size()) - 1);
  return {series, valid_to};
}

BoundedSeries expand_assoc_bell_gf(int g, int N) {
  if (N < 0) throw std::invalid_argument("expand_assoc_bell_gf: N must be >= 0");
  if (g == 0) {
    // (1 - sqrt((1-3x)/(1+x))) / (2x)
    const int M = N + 1;
    RationalSeries one_minus_3x(M), one_plus_x(M);
    one_minus_3x.set(0, Rational(1));
    one_plus_x.set(0, Rational(1));
    one_minus_3x.set(1, Rational(-3));
    one_plus_x.set(1, Rational(1));
    const RationalSeries root = (one_minus_3x / one_plus_x).pow_alpha(Rational(1, 2));
    const RationalSeries numer = RationalSeries::one(M) - root;
    RationalSeries shifted(N);
    for (int i = 0; i <= N; ++i) shifted.set(i, numer.coeff(i + 1) / 2);
    return {shifted, N};
  }
  bool complete = true;
  const std::vector<long> numerator = assoc_bell_numerator(g, complete);
  std::vector<Rational> coeffs(numerator.begin(), numerator.end());
  RationalSeries p = RationalSeries::from_poly(RationalPolynomial(std::move(coeffs)), N);
  // (1+x)^{g-1}
  RationalSeries one_plus_x(N);
  one_plus_x.set(0, Rational(1));
  if (N >= 1) one_plus_x.set(1, Rational(1));
  p = p * one_plus_x.pow(g - 1);
  // Delta = (1-3x)(1+x) = 1 - 2x - 3x^2
  RationalSeries delta(N);
  delta.set(0, Rational(1));
  if (N >= 1) delta.set(1, Rational(-2));
  if (N >= 2) delta.set(2, Rational(-3));
  const RationalSeries series =
      (p * delta.pow_alpha(Rational(-(6 * g - 1), 2))).shifted(2 * (g + 1));
  const int valid_to =
      complete ? N : std::min<long>(N, 2 * (g + 1) + static_cast<long>(numerator.size()) - 1);
  return {series, valid_to};
}

BoundedBiSeries expand_stirling_gf(int g, int N) {
  if (N < 0 || g < 0 || g > 3) {
    throw std::invalid_argument("expand_stirling_gf: need 0 <= g <= 3");
  }
  const RationalPolynomial one_minus_y{Rational(1), Rational(-1)};
  if (g == 0) {
    // (1 + x - xy - sqrt((1+x-xy)^2 - 4x)) / (2x)
    const int M = N + 1;
    BiSeries d(M);
    d.set(0, RationalPolynomial{Rational(1)});
    if (M >= 1) d.set(1, RationalPolynomial{Rational(-2), Rational(-2)});
    if (M >= 2) d.set(2, one_minus_y * one_minus_y);
    const BiSeries root = d.pow_alpha(Rational(1, 2));
    BiSeries numer(M);
    numer.set(0, RationalPolynomial{Rational(1)});
    if (M >= 1) numer.set(1, one_minus_y);
    numer = numer - root;
    BiSeries shifted(N);
    for (int i = 0; i <= N; ++i) shifted.set(i, numer.coeff(i + 1).scaled(Rational(1, 2)));
    return {shifted, N};
  }
  // x^{2g+2} y^2 p^(g)(x,y) / ((1+x-xy)^2 - 4x)^{(6g-1)/2}
  const ChiArray chi = chi_array(g);
  BiSeries p(N);
  for (int t = 0; t <= chi.last_row() && t <= N; ++t) {
    p.set(t, chi_row_polynomials_to_p(chi, t));
  }
  BiSeries d(N);
  d.set(0, RationalPolynomial{Rational(1)});
  if (N >= 1) d.set(1, RationalPolynomial{Rational(-2), Rational(-2)});
  if (N >= 2) d.set(2, one_minus_y * one_minus_y);
  const RationalPolynomial y2{Rational(0), Rational(0), Rational(1)};
  BiSeries series = p * d.pow_alpha(Rational(-(6 * g - 1), 2));
  series = series * BiSeries::from_poly(Polynomial<RationalPolynomial>{y2}, N);
  return {truncate_to(series, N).shifted(2 * g + 2), N};
}

BoundedBiSeries expand_assoc_stirling_gf(int g, int N) {
  if (N < 0 || g < 0 || g > 2) {
    throw std::invalid_argument("expand_assoc_stirling_gf: need 0 <= g <= 2");
  }
  if (g == 0) {
    // (1 + x - sqrt((1-x)^2 - 4x^2 y)) / (2x(xy+1))
    const int M = N + 1;
    BiSeries d(M);
    d.set(0, RationalPolynomial{Rational(1)});
    if (M >= 1) d.set(1, RationalPolynomial{Rational(-2)});
    if (M >= 2) d.set(2, RationalPolynomial{Rational(1), Rational(-4)});
    const BiSeries root = d.pow_alpha(Rational(1, 2));
    BiSeries numer(M);
    numer.set(0, RationalPolynomial{Rational(1)});
    if (M >= 1) numer.set(1, RationalPolynomial{Rational(1)});
    numer = numer - root;
    BiSeries shifted(N);
    for (int i = 0; i <= N; ++i) shifted.set(i, numer.coeff(i + 1).scaled(Rational(1, 2)));
    BiSeries den(N);
    den.set(0, RationalPolynomial{Rational(1)});
    if (N >= 1) den.set(1, RationalPolynomial{Rational(0), Rational(1)});
    return {shifted / den, N};
  }
  // x^{2g+2} y^2 ip^(g)(x,y) / ((1-x)^2 - 4x^2 y)^{(6g-1)/2}
  BiSeries p(N);
  if (g == 1) {
    p.set(0, RationalPolynomial{Rational(1)});
  } else {
    p.set(0, RationalPolynomial{Rational(1)});
    if (N >= 1) p.set(1, RationalPolynomial{Rational(-4), Rational(14)});
    if (N >= 2) p.set(2, RationalPolynomial{Rational(6), Rational(-22), Rational(21)});
    if (N >= 3) p.set(3, RationalPolynomial{Rational(-4), Rational(2), Rational(7)});
    if (N >= 4) {
      p.set(4, RationalPolynomial{Rational(1), Rational(6), Rational(-19), Rational(21)});
    }
  }
  BiSeries d(N);
  d.set(0, RationalPolynomial{Rational(1)});
  if (N >= 1) d.set(1, RationalPolynomial{Rational(-2)});
  if (N >= 2) d.set(2, RationalPolynomial{Rational(1), Rational(-4)});
  const RationalPolynomial y2{Rational(0), Rational(0), Rational(1)};
  BiSeries series = p * d.pow_alpha(Rational(-(6 * g - 1), 2));
  series = series * BiSeries::from_poly(Polynomial<RationalPolynomial>{y2}, N);
  return {series.shifted(2 * g + 2), N};
}

}  // namespace genuscount
