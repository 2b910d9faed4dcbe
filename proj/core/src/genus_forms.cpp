#include "genuscount/genus_forms.hpp"

#include <array>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "genuscount/chi.hpp"
#include "genuscount/classic.hpp"

namespace genuscount {

std::string status_name(Status s) {
  switch (s) {
    case Status::Exact: return "exact";
    case Status::Conjectured: return "conjectured";
    case Status::Unavailable: return "unavailable";
  }
  throw std::logic_error("status_name: bad status");
}

namespace {

// Conjectured values of B_n^(4) for n = 10..15; the remaining numerator
// coefficients of the genus-4 G.F. are undetermined.
const std::array<long, 6> kBell4{1, 352, 19261, 541541, 10571561, 162718556};

BigInt bell_genus_closed(long n, int g) {
  // All three closed forms share the shape
  //   (1/scale) * poly(n) / prod_odd * (2n)!/(n! (n-2g-2)!)
  // and vanish below the genus bound via the factorial guard.
  if (n < 2 * g + 2) return 0;
  BigInt poly, scale;
  int first_odd = 0;  // product (2n-first_odd)(2n-first_odd+2)...(2n-1)
  switch (g) {
    case 1:
      poly = 1;
      scale = BigInt(16) * 3;
      first_odd = 3;
      break;
    case 2:
      poly = BigInt(5) * n * n * n - 39 * BigInt(n) * n + 88 * n - 84;
      scale = BigInt(512) * 9 * 5;
      first_odd = 7;
      break;
    case 3: {
      const BigInt m = n;
      poly = 35 * m * m * m * m * m * m - 819 * m * m * m * m * m + 7589 * m * m * m * m -
             36009 * m * m * m + 93464 * m * m - 129060 * m + 95040;
      scale = BigInt(8192) * 81 * 5 * 7;
      first_odd = 11;
      break;
    }
    default:
      throw std::logic_error("bell_genus_closed: unsupported genus");
  }
  BigInt odd_product = 1;
  for (int d = first_odd; d >= 1; d -= 2) odd_product *= (2 * n - d);
  const Rational value =
      Rational(poly, scale * odd_product) * Rational(factorial(2 * n), factorial(n)) /
      Rational(factorial(n - 2 * g - 2));
  return rational_to_int(value);
}

}  // namespace

FormulaResult bell_genus(long n, int g) {
  if (n < 1 || g < 0) throw std::invalid_argument("bell_genus: need n >= 1, g >= 0");
  if (g == 0) return FormulaResult::exact(catalan(n));
  if (n < 2 * g + 2) return FormulaResult::exact(0);  // genus bound n >= 2g+k >= 2g+2
  switch (g) {
    case 1:
    case 2:
      return FormulaResult::exact(bell_genus_closed(n, g));
    case 3:
      return FormulaResult::conjectured(bell_genus_closed(n, g));
    case 4:
      if (n >= 10 && n <= 15) {
        return FormulaResult::conjectured(kBell4[static_cast<std::size_t>(n - 10)]);
      }
      return FormulaResult::unavailable();
    default:
      return FormulaResult::unavailable();
  }
}

namespace {

// Memo for assoc_bell_genus, per genus.
std::mutex assoc_mutex;
std::map<int, std::vector<FormulaResult>> assoc_cache;

}  // namespace

FormulaResult assoc_bell_genus(long n, int g) {
  if (n < 0 || g < 0) throw std::invalid_argument("assoc_bell_genus: need n >= 0, g >= 0");
  if (n < 2 * g + 2 && !(g == 0 && n == 0)) {
    // below the genus bound; only the empty partition survives at (0, 0)
    return g == 0 && n == 0 ? FormulaResult::exact(1) : FormulaResult::exact(0);
  }
  if (g == 0 && n == 0) return FormulaResult::exact(1);
  {
    std::lock_guard<std::mutex> lock(assoc_mutex);
    auto it = assoc_cache.find(g);
    if (it != assoc_cache.end() && static_cast<long>(it->second.size()) > n &&
        it->second[static_cast<std::size_t>(n)].status != Status::Unavailable) {
      return it->second[static_cast<std::size_t>(n)];
    }
  }
  // iB_n^(g) = B_n^(g) - sum_{s=1}^{n} binom(n,s) iB_{n-s}^(g)
  const FormulaResult bn = bell_genus(n, g);
  if (!bn.available()) return FormulaResult::unavailable();
  BigInt acc = bn.value;
  Status status = bn.status;
  for (long s = 1; s <= n; ++s) {
    const FormulaResult lower = assoc_bell_genus(n - s, g);
    if (!lower.available()) return FormulaResult::unavailable();
    if (lower.status == Status::Conjectured) status = Status::Conjectured;
    acc -= binomial(n, s) * lower.value;
  }
  FormulaResult result{acc, status};
  {
    std::lock_guard<std::mutex> lock(assoc_mutex);
    auto& row = assoc_cache[g];
    if (static_cast<long>(row.size()) <= n) row.resize(static_cast<std::size_t>(n) + 1);
    row[static_cast<std::size_t>(n)] = result;
  }
  return result;
}

BigInt assoc_bell_genus1_direct(long n) {
  if (n < 0) throw std::invalid_argument("assoc_bell_genus1_direct: n must be >= 0");
  if (n < 4) return 0;
  Rational sum = 0;
  for (long l = 0; l <= n - 4; ++l) {
    Rational term = Rational(double_factorial_odd(l + 2) * double_factorial_odd(n - l - 2),
                             factorial(l) * factorial(n - 4 - l));
    // (-1)^{n-l} 3^{l-2} / 2^{n-4}
    term *= Rational(pow_int(BigInt(3), static_cast<unsigned long>(l)),
                     BigInt(9) * pow_int(BigInt(2), static_cast<unsigned long>(n - 4)));
    if ((n - l) % 2 != 0) term = -term;
    sum += term;
  }
  return rational_to_int(sum);
}

namespace {

// Gamma-ratio term of the genus-g Stirling formula, in the equivalent
// binomial form; all binomials vanish outside 0 <= r <= m, which implements
// the 1/Gamma(m) = 0 convention at nonpositive m.
BigInt stirling_gamma_term(long n, long k, int g, int t, int s) {
  const long u = n - k + s - t;
  return factorial(3 * g - 1) * binomial(u + g - 1, u - 2 * g) *
         binomial(n - t + g - 3, k - s - 2) * binomial(n - t + 4 * g - 4, u + g - 1);
}

const ChiArray& cached_chi(int g) {
  static std::mutex mutex;
  static std::map<int, ChiArray> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(g);
  if (it == cache.end()) it = cache.emplace(g, chi_array(g)).first;
  return it->second;
}

}  // namespace

FormulaResult stirling_genus(long n, long k, int g) {
  if (n < 1 || k < 1 || k > n || g < 0) {
    throw std::invalid_argument("stirling_genus: need n >= 1, 1 <= k <= n, g >= 0");
  }
  if (g == 0) {
    // Narayana
    return FormulaResult::exact(binomial(n, k) * binomial(n, k - 1) / n);
  }
  if (n < 2 * g + 2 || k < 2) return FormulaResult::exact(0);
  if (g > 4) return FormulaResult::unavailable();
  const ChiArray& chi = cached_chi(g);
  BigInt acc = 0;
  for (int t = 0; t <= chi.last_row(); ++t) {
    for (int s = 0; s <= t; ++s) {
      const BigInt term = stirling_gamma_term(n, k, g, t, s);
      if (term == 0) continue;
      if (!chi.known(t, s)) return FormulaResult::unavailable();
      acc += chi.value(t, s) * term;
    }
  }
  const BigInt denom = stirling_genus_denominator(g);
  if (acc % denom != 0) throw std::logic_error("stirling_genus: non-integral result");
  const BigInt value = acc / denom;
  return g <= 2 ? FormulaResult::exact(value) : FormulaResult::conjectured(value);
}

BigInt stirling_k2(long n, int g) {
  if (n < 2 || g < 0) throw std::invalid_argument("stirling_k2: need n >= 2, g >= 0");
  return binomial(n, 2 * g + 2);
}

FormulaResult stirling_k3_conjecture(long n, int g) {
  if (n < 3 || g < 0) throw std::invalid_argument("stirling_k3_conjecture: need n >= 3, g >= 0");
  const BigInt prefactor = (pow_int(BigInt(4), static_cast<unsigned long>(g) + 1) - 1) / 3;
  const Rational value =
      Rational(prefactor) * Rational(n - g - 1, g + 2) * Rational(binomial(n, 2 * g + 3));
  return FormulaResult::conjectured(rational_to_int(value));
}

FormulaResult assoc_stirling_genus(long n, long k, int g) {
  if (n < 1 || k < 1 || g < 0) {
    throw std::invalid_argument("assoc_stirling_genus: need n >= 1, k >= 1, g >= 0");
  }
  if (g == 0) {
    if (n < 2 * k) return FormulaResult::exact(0);
    return FormulaResult::exact(
        rational_to_int(Rational(binomial(n - k - 1, n - 2 * k) * binomial(n, k), n - k + 1)));
  }
  if (g == 1) {
    return FormulaResult::exact(rational_to_int(
        Rational(binomial(k, 2) * binomial(n, k) * binomial(n - k, k), 6)));
  }
  return FormulaResult::unavailable();  // g >= 2: only via the G.F. expansion
}

BigInt kreweras(long n, const PartitionType& type) {
  if (type.weight() != n) throw std::invalid_argument("kreweras: type is not a type of n");
  BigInt denom = factorial(n + 1 - type.parts());
  for (const auto& [size, count] : type.multiplicities()) denom *= factorial(count);
  return factorial(n) / denom;
}

BigInt two_part(long n, long p, int g) {
  if (p < 1 || p > n - 1 || g < 0) {
    throw std::invalid_argument("two_part: need 1 <= p <= n-1, g >= 0");
  }
  Rational value = Rational(n, g + 1) * Rational(binomial(p - 1, g) * binomial(n - p - 1, g));
  if (n == 2 * p) value /= 2;
  return rational_to_int(value);
}

Polynomial<RationalPolynomial> transfer_trace(long n) {
  if (n < 0) throw std::invalid_argument("transfer_trace: n must be >= 0");
  using ZPoly = Polynomial<RationalPolynomial>;
  const ZPoly t0{RationalPolynomial{Rational(2)}};
  const ZPoly t1{RationalPolynomial{Rational(1)}, RationalPolynomial{Rational(0), Rational(1)}};
  if (n == 0) return t0;
  if (n == 1) return t1;
  // z(1-u)
  const ZPoly z_one_minus_u{RationalPolynomial{}, RationalPolynomial{Rational(1), Rational(-1)}};
  ZPoly prev = t0, cur = t1;
  for (long i = 2; i <= n; ++i) {
    ZPoly next = t1 * cur + z_one_minus_u * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt two_part_transfer(long n, long p, int g) {
  if (p < 1 || p > n - 1 || g < 0) {
    throw std::invalid_argument("two_part_transfer: need 1 <= p <= n-1, g >= 0");
  }
  const long u_deg = p - 1 - g;
  if (u_deg < 0) return 0;
  const Polynomial<RationalPolynomial> tn = transfer_trace(n);
  Rational coeff = tn.coeff(static_cast<int>(p)).coeff(static_cast<int>(u_deg));
  if (n == 2 * p) coeff /= 2;
  return rational_to_int(coeff);
}

LaurentBiSeries two_part_gf(int g, int N) {
  if (g < 0 || N < 0) throw std::invalid_argument("two_part_gf: need g >= 0, N >= 0");
  // (1-xv)^{-(g+2)} (1-x/v)^{-(g+2)}: coefficient of x^m is
  // sum_{a+b=m} binom(a+g+1, g+1) binom(b+g+1, g+1) v^{a-b}.
  LaurentBiSeries product(N);
  for (int m = 0; m <= N; ++m) {
    for (int a = 0; a <= m; ++a) {
      const int b = m - a;
      product.by_x[static_cast<std::size_t>(m)][a - b] +=
          Rational(binomial(a + g + 1, g + 1) * binomial(b + g + 1, g + 1));
    }
  }
  // times x^{2g+2} (2 - x(v + 1/v)) / 2
  LaurentBiSeries result(N);
  for (int m = 0; m <= N; ++m) {
    const int base = m - (2 * g + 2);
    if (base < 0) continue;
    auto& row = result.by_x[static_cast<std::size_t>(m)];
    for (const auto& [w, c] : product.by_x[static_cast<std::size_t>(base)]) {
      row[w] += c;
    }
    if (base >= 1) {
      for (const auto& [w, c] : product.by_x[static_cast<std::size_t>(base - 1)]) {
        row[w + 1] -= c / 2;
        row[w - 1] -= c / 2;
      }
    }
  }
  for (auto& row : result.by_x) {
    for (auto it = row.begin(); it != row.end();) {
      if (it->second == 0) it = row.erase(it);
      else ++it;
    }
  }
  return result;
}

BigInt two_part_gf_count(const LaurentBiSeries& gf, long n, long p) {
  if (p < 1 || p > n - 1) throw std::invalid_argument("two_part_gf_count: need 1 <= p <= n-1");
  // The expansion is symmetric under v <-> 1/v, so an unordered type [p, n-p]
  // with p != n/2 carries half its count at v^{2p-n} and half at v^{n-2p}.
  const int w = static_cast<int>(2 * p - n);
  Rational value = gf.coeff(static_cast<int>(n), w);
  if (w != 0) value += gf.coeff(static_cast<int>(n), -w);
  return rational_to_int(value);
}

FormulaResult three_part(long n, long p, long q, int g) {
  const long r = n - p - q;
  if (p < 1 || q < 1) throw std::invalid_argument("three_part: parts must be >= 1");
  if (r < 1) throw std::invalid_argument("three_part: n - p - q must be >= 1");
  if (g != 0 && g != 1) return FormulaResult::unavailable();
  Rational value;
  if (g == 0) {
    value = Rational(BigInt(n) * (n - 1));
  } else {
    const BigInt bn = n, bp = p, bq = q, br = r;
    const BigInt inner = -5 * (bn - 1) * (bn - 1) + 3 * (bp * bp + bq * bq + br * br - 1) +
                         6 * bp * bq * br + (br + bp) * (br + bq) * (bp + bq);
    value = Rational(bn * inner, 2);
  }
  // symmetry factors for coincident part sizes
  if (p == q && q == r) value /= 6;
  else if (p == q || q == r || p == r) value /= 2;
  return FormulaResult::exact(rational_to_int(value));
}

BigInt p_squared(long p, int g) {
  if (p < 1 || g < 0) throw std::invalid_argument("p_squared: need p >= 1, g >= 0");
  return binomial(p - 1, g) * binomial(p, g + 1);
}

FormulaResult pk_genus1(long p, int k) {
  if (p < 2) throw std::invalid_argument("pk_genus1: p must be >= 2");
  if (k < 2 || k > 7) return FormulaResult::unavailable();
  const BigInt bp = p;
  Rational phi;
  switch (k) {
    case 2: phi = 1; break;
    case 3: phi = Rational(7 * bp - 4); break;
    case 4: phi = Rational(34 * bp * bp - 38 * bp + 10); break;
    case 5:
      phi = Rational(169 * bp * bp * bp - 279 * bp * bp + 146 * bp - 24) * Rational(5, 6);
      break;
    case 6:
      phi = Rational(533 * bp * bp * bp * bp) - Rational(1160 * bp * bp * bp) +
            Rational(1813 * bp * bp, 2) - Rational(599 * bp, 2) + 35;
      break;
    case 7:
      phi = Rational(32621 * bp * bp * bp * bp * bp - 87970 * bp * bp * bp * bp +
                         91335 * bp * bp * bp - 45410 * bp * bp + 10744 * bp - 960,
                     1) *
            Rational(7, 120);
      break;
  }
  const Rational value = Rational(bp * (bp - 1) * (bp - 1), 2) * phi;
  const BigInt v = rational_to_int(value);
  return k <= 3 ? FormulaResult::exact(v) : FormulaResult::conjectured(v);
}

FormulaResult pk_genus2(long p, int k) {
  if (p < 2) throw std::invalid_argument("pk_genus2: p must be >= 2");
  if (k < 3 || k > 5) return FormulaResult::unavailable();
  const BigInt bp = p;
  Rational value;
  switch (k) {
    case 3:
      value = Rational(bp * (bp - 1) * (bp - 1) * (bp - 2) *
                           (26 * bp * bp - 55 * bp + 27),
                       8);
      break;
    case 4:
      value = Rational(bp * (bp - 1) * (bp - 1) *
                           (274 * bp * bp * bp * bp - 1218 * bp * bp * bp + 1908 * bp * bp -
                            1248 * bp + 287),
                       6);
      break;
    case 5:
      value = Rational(bp * (bp - 1) * (bp - 1) *
                           (59500 * bp * bp * bp * bp * bp - 288895 * bp * bp * bp * bp +
                            532986 * bp * bp * bp - 467213 * bp * bp + 194318 * bp - 30576),
                       144);
      break;
  }
  return FormulaResult::conjectured(rational_to_int(value));
}

}  // namespace genuscount
