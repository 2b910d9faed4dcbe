#include "genuscount/bigint.hpp"

#include <mutex>
#include <vector>

namespace genuscount {

namespace {
std::mutex fact_mutex;
std::vector<BigInt> fact_cache{BigInt(1)};  // fact_cache[i] = i!
}  // namespace

BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  std::lock_guard<std::mutex> lock(fact_mutex);
  while (static_cast<long>(fact_cache.size()) <= n) {
    fact_cache.push_back(fact_cache.back() * static_cast<long>(fact_cache.size()));
  }
  return fact_cache[static_cast<std::size_t>(n)];
}

BigInt binomial(long m, long r) {
  if (r < 0 || m < 0 || r > m) return 0;
  if (r > m - r) r = m - r;
  BigInt result = 1;
  for (long i = 0; i < r; ++i) {
    result *= (m - i);
    result /= (i + 1);  // exact at every step
  }
  return result;
}

BigInt double_factorial_odd(long k) {
  BigInt result = 1;
  for (long i = 1; i <= k; ++i) result *= (2 * i - 1);
  return result;
}

BigInt pow_int(const BigInt& base, unsigned long exp) {
  BigInt result = 1, b = base;
  while (exp) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

BigInt rational_to_int(const Rational& r) {
  if (boost::multiprecision::denominator(r) != 1) {
    throw std::logic_error("rational_to_int: value is not an integer");
  }
  return boost::multiprecision::numerator(r);
}

BigInt parse_bigint(const std::string& s) { return BigInt(s); }

}  // namespace genuscount
