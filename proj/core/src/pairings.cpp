#include "genuscount/pairings.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "genuscount/classic.hpp"

namespace genuscount {

namespace {

// (u/2)/tanh(u/2) = ((u/2)cosh(u/2)) / sinh(u/2), an even unit series,
// computed to the requested order by dividing the two exponential halves.
RationalSeries half_coth_series(int order) {
  RationalSeries numerator(order), denominator(order);
  for (int j = 0; 2 * j <= order; ++j) {
    // cosh(u/2) = sum (u/2)^{2j} / (2j)!,  sinh(u/2)/(u/2) = sum (u/2)^{2j} / (2j+1)!
    const Rational half_pow = Rational(1, pow_int(BigInt(2), static_cast<unsigned long>(2 * j)));
    numerator.set(2 * j, half_pow / Rational(factorial(2 * j)));
    denominator.set(2 * j, half_pow / Rational(factorial(2 * j + 1)));
  }
  return numerator / denominator;
}

}  // namespace

BigInt epsilon(int k, int g) {
  if (k < 1 || g < 0) throw std::invalid_argument("epsilon: need k >= 1, g >= 0");
  if (2 * g > k) return 0;  // the 1/(k-2g)! factor vanishes
  const RationalSeries coth = half_coth_series(2 * g);
  const Rational coeff = coth.pow(k + 1).coeff(2 * g);
  const Rational value =
      Rational(factorial(2 * k), factorial(k + 1) * factorial(k - 2 * g)) * coeff;
  return rational_to_int(value);
}

namespace {
std::mutex eps_mutex;
std::map<std::pair<int, int>, BigInt> eps_cache;
}  // namespace

BigInt epsilon_recurrence_hz(int k, int g) {
  if (g < 0) throw std::invalid_argument("epsilon_recurrence_hz: g must be >= 0");
  if (k < 0) return 0;
  if (g == 0) return catalan(k);
  if (k < 2 * g) return 0;
  {
    std::lock_guard<std::mutex> lock(eps_mutex);
    auto it = eps_cache.find({k, g});
    if (it != eps_cache.end()) return it->second;
  }
  const BigInt rhs = 2 * BigInt(2 * k - 1) * epsilon_recurrence_hz(k - 1, g) +
                     BigInt(2 * k - 1) * (2 * k - 2) * (2 * k - 3) / 2 *
                         epsilon_recurrence_hz(k - 2, g - 1);
  if (rhs % (k + 1) != 0) throw std::logic_error("epsilon_recurrence_hz: non-integral step");
  const BigInt value = rhs / (k + 1);
  std::lock_guard<std::mutex> lock(eps_mutex);
  eps_cache.emplace(std::make_pair(k, g), value);
  return value;
}

bool epsilon_recurrence_in_genus(int k, int g) {
  if (k < 1 || g < 0) throw std::invalid_argument("epsilon_recurrence_in_genus: bad arguments");
  BigInt rhs = 0;
  for (int h = 1; h <= g; ++h) {
    rhs += binomial(k + 2 * h + 1 - 2 * g, 2 * h + 1) * epsilon(k, g - h);
  }
  return 2 * g * epsilon(k, g) == rhs;
}

BigInt R_eval(int g, long k) {
  if (g < 0 || k < 0) throw std::invalid_argument("R_eval: need g >= 0, k >= 0");
  BigInt sum = 0;
  for (long s = 0; s <= k; ++s) {
    BigInt inner = 0;
    for (long j = 0; j <= k + 2 - 2 * g; ++j) {
      const BigInt term =
          stirling1_unsigned(k - s + 1, k + 2 - 2 * g - j) * stirling1_unsigned(s + 1, j);
      inner += ((s + 1 - j) % 2 == 0) ? term : -term;
    }
    sum += binomial(k, s) * inner;
  }
  // The double sum carries a factor 2^{k-g} relative to R_g(k); removing it
  // makes e_g(k) = C_k R_g(k) / 2^g come out right (checked against Table 1).
  Rational value(sum);
  if (k >= g) value /= pow_int(BigInt(2), static_cast<unsigned long>(k - g));
  else value *= pow_int(BigInt(2), static_cast<unsigned long>(g - k));
  return rational_to_int(value);
}

RationalPolynomial R_poly(int g) {
  if (g < 0) throw std::invalid_argument("R_poly: g must be >= 0");
  std::vector<Rational> points, values;
  for (long k = 0; k <= 3 * g; ++k) {
    points.emplace_back(k);
    values.emplace_back(R_eval(g, k));
  }
  return interpolate(points, values);
}

BigInt pairings_q0(int g) {
  if (g < 1) throw std::invalid_argument("pairings_q0: g must be >= 1");
  return factorial(4 * g) / (pow_int(BigInt(2), 2 * static_cast<unsigned long>(g)) *
                             factorial(2 * g + 1));
}

namespace {

// The differential operator D^ from the Q-recurrence proof, applied to the
// (g-1)-level polynomial; everything is exact polynomial arithmetic in u.
RationalPolynomial apply_dhat(const RationalPolynomial& q, int g) {
  const BigInt bg = g;
  const RationalPolynomial u{Rational(0), Rational(1)};
  const RationalPolynomial one_minus_4u{Rational(1), Rational(-4)};

  const RationalPolynomial a{
      Rational(3 * binomial(4 * g - 1, 3)),
      Rational(6 * (4 * bg - 1) * (8 * bg * bg - 14 * bg + 1)),
      Rational(96 * (bg - 2) * (4 * bg * bg - 8 * bg - 1)),
      Rational(128 * (bg - 2) * (bg - 3) * (2 * bg - 5))};
  const RationalPolynomial b{Rational(48 * bg * bg - 24 * bg + 3),
                             Rational(24 * (8 * bg * bg - 20 * bg - 1)),
                             Rational(192 * (bg - 3) * (bg - 3))};
  const RationalPolynomial c =
      RationalPolynomial{Rational(bg), Rational(2 * bg - 7)}.scaled(Rational(24));

  const RationalPolynomial q1 = q.derivative();
  const RationalPolynomial q2 = q1.derivative();
  const RationalPolynomial q3 = q2.derivative();

  RationalPolynomial result = a * q;
  result = result + b * u * one_minus_4u * q1;
  result = result + c * u * u * one_minus_4u * one_minus_4u * q2;
  result = result +
           (u * u * u * one_minus_4u * one_minus_4u * one_minus_4u * q3).scaled(Rational(4));
  return result;
}

}  // namespace

RationalPolynomial Q_poly(int g) {
  if (g < 1) throw std::invalid_argument("Q_poly: g must be >= 1");
  RationalPolynomial q{Rational(1)};  // Q^(1) = 1
  for (int level = 2; level <= g; ++level) {
    const RationalPolynomial rhs = apply_dhat(q, level);
    std::vector<Rational> coeffs(static_cast<std::size_t>(level), Rational(0));
    coeffs[0] = Rational(pairings_q0(level));
    if (rhs.coeff(0) != coeffs[0] * (2 * level + 1)) {
      throw std::logic_error("Q_poly: inconsistent constant term in the recurrence");
    }
    for (int r = 1; r <= level - 1; ++r) {
      coeffs[static_cast<std::size_t>(r)] =
          (rhs.coeff(r) - Rational(4 * (level - r)) * coeffs[static_cast<std::size_t>(r - 1)]) /
          Rational(2 * level + 1 + r);
    }
    q = RationalPolynomial(std::move(coeffs));
    if (q.degree() != level - 1) throw std::logic_error("Q_poly: degree mismatch");
    if (rhs.degree() > level - 1) {
      // coefficients above u^{g-1} must cancel identically
      for (int r = level; r <= rhs.degree(); ++r) {
        const Rational excess = rhs.coeff(r) - Rational(4 * (level - r)) * q.coeff(r - 1) -
                                Rational(2 * level + 1 + r) * q.coeff(r);
        if (excess != 0) throw std::logic_error("Q_poly: recurrence leaves a nonzero tail");
      }
    }
    for (int r = 0; r <= q.degree(); ++r) {
      rational_to_int(q.coeff(r));  // coefficients are integers
    }
  }
  return q;
}

RationalSeries pairings_gf(int g, int N) {
  if (g < 1 || N < 0) throw std::invalid_argument("pairings_gf: need g >= 1, N >= 0");
  const RationalSeries denom = half_power(6 * g - 1, true, N);
  const RationalSeries q = RationalSeries::from_poly(Q_poly(g), N);
  return (q * denom).shifted(2 * g);
}

}  // namespace genuscount
