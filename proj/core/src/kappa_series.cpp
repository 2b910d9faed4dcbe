#include "genuscount/kappa_series.hpp"

#include <stdexcept>

namespace genuscount {

namespace {

PartitionType merge_types(const PartitionType& a, const PartitionType& b) {
  std::map<int, int> m = a.multiplicities();
  for (const auto& [size, count] : b.multiplicities()) m[size] += count;
  return PartitionType(std::move(m));
}

PartitionType add_block(const PartitionType& a, int ell) {
  std::map<int, int> m = a.multiplicities();
  ++m[ell];
  return PartitionType(std::move(m));
}

}  // namespace

KappaSeries::KappaSeries(int order) {
  if (order < 0) throw std::invalid_argument("KappaSeries: negative order");
  slices_.resize(static_cast<std::size_t>(order) + 1);
}

KappaSeries KappaSeries::one(int order) {
  KappaSeries s(order);
  s.slices_[0][PartitionType{}] = Rational(1);
  return s;
}

KappaSeries KappaSeries::kappa_term(int order, int ell, int deg) {
  KappaSeries s(order);
  if (deg <= order) s.slices_[static_cast<std::size_t>(deg)][add_block({}, ell)] = Rational(1);
  return s;
}

const std::map<PartitionType, Rational>& KappaSeries::slice(int n) const {
  return slices_.at(static_cast<std::size_t>(n));
}

Rational KappaSeries::coeff(int n, const PartitionType& type) const {
  const auto& s = slice(n);
  auto it = s.find(type);
  return it == s.end() ? Rational(0) : it->second;
}

void KappaSeries::add_term(int n, const PartitionType& type, const Rational& value) {
  if (value == 0) return;
  auto& s = slices_[static_cast<std::size_t>(n)];
  auto [it, inserted] = s.emplace(type, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) s.erase(it);
  }
}

KappaSeries KappaSeries::operator+(const KappaSeries& other) const {
  if (order() != other.order()) throw std::invalid_argument("KappaSeries: mixed orders");
  KappaSeries result = *this;
  for (int n = 0; n <= order(); ++n) {
    for (const auto& [type, value] : other.slices_[static_cast<std::size_t>(n)]) {
      result.add_term(n, type, value);
    }
  }
  return result;
}

KappaSeries KappaSeries::operator-(const KappaSeries& other) const {
  return *this + other.scaled(Rational(-1));
}

KappaSeries KappaSeries::operator*(const KappaSeries& other) const {
  if (order() != other.order()) throw std::invalid_argument("KappaSeries: mixed orders");
  KappaSeries result(order());
  for (int a = 0; a <= order(); ++a) {
    if (slices_[static_cast<std::size_t>(a)].empty()) continue;
    for (int b = 0; a + b <= order(); ++b) {
      for (const auto& [ta, va] : slices_[static_cast<std::size_t>(a)]) {
        for (const auto& [tb, vb] : other.slices_[static_cast<std::size_t>(b)]) {
          result.add_term(a + b, merge_types(ta, tb), va * vb);
        }
      }
    }
  }
  return result;
}

KappaSeries KappaSeries::operator/(const KappaSeries& den) const {
  if (order() != den.order()) throw std::invalid_argument("KappaSeries: mixed orders");
  const auto& head = den.slices_[0];
  if (head.size() != 1 || !(head.begin()->first == PartitionType{})) {
    throw std::invalid_argument("KappaSeries: denominator constant term must be scalar");
  }
  const Rational lead = head.begin()->second;
  if (lead == 0) throw std::invalid_argument("KappaSeries: denominator not a unit");
  KappaSeries result(order());
  for (int n = 0; n <= order(); ++n) {
    // result_n = (num_n - sum_{j=1..n} den_j * result_{n-j}) / lead
    std::map<PartitionType, Rational> acc = slices_[static_cast<std::size_t>(n)];
    for (int j = 1; j <= n; ++j) {
      for (const auto& [td, vd] : den.slices_[static_cast<std::size_t>(j)]) {
        for (const auto& [tr, vr] : result.slices_[static_cast<std::size_t>(n - j)]) {
          const PartitionType merged = merge_types(td, tr);
          auto [it, inserted] = acc.emplace(merged, -vd * vr);
          if (!inserted) it->second -= vd * vr;
        }
      }
    }
    for (const auto& [type, value] : acc) {
      if (value != 0) result.slices_[static_cast<std::size_t>(n)][type] = value / lead;
    }
  }
  return result;
}

KappaSeries KappaSeries::scaled(const Rational& factor) const {
  KappaSeries result(order());
  if (factor == 0) return result;
  for (int n = 0; n <= order(); ++n) {
    for (const auto& [type, value] : slices_[static_cast<std::size_t>(n)]) {
      result.slices_[static_cast<std::size_t>(n)][type] = value * factor;
    }
  }
  return result;
}

KappaSeries KappaSeries::shifted(int k) const {
  KappaSeries result(order());
  for (int n = 0; n + k <= order(); ++n) {
    if (n + k < 0) continue;
    result.slices_[static_cast<std::size_t>(n + k)] = slices_[static_cast<std::size_t>(n)];
  }
  return result;
}

KappaSeries KappaSeries::pow(int e) const {
  if (e < 0) throw std::invalid_argument("KappaSeries::pow: negative exponent");
  KappaSeries result = one(order());
  KappaSeries base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

KappaSeries KappaSeries::append_kappa(int ell) const {
  KappaSeries result(order());
  for (int n = 0; n <= order(); ++n) {
    for (const auto& [type, value] : slices_[static_cast<std::size_t>(n)]) {
      result.slices_[static_cast<std::size_t>(n)][add_block(type, ell)] = value;
    }
  }
  return result;
}

RationalSeries KappaSeries::specialize(const std::map<int, Rational>& kappa_values) const {
  RationalSeries result(order());
  for (int n = 0; n <= order(); ++n) {
    Rational acc = 0;
    for (const auto& [type, value] : slices_[static_cast<std::size_t>(n)]) {
      Rational monomial = value;
      for (const auto& [size, count] : type.multiplicities()) {
        auto it = kappa_values.find(size);
        if (it == kappa_values.end() || it->second == 0) {
          monomial = 0;
          break;
        }
        for (int i = 0; i < count; ++i) monomial *= it->second;
      }
      acc += monomial;
    }
    result.set(n, acc);
  }
  return result;
}

KappaSeries solve_Z0(int kappa_cutoff, int N) {
  if (N < 1 || kappa_cutoff < 1) throw std::invalid_argument("solve_Z0: need N >= 1, L >= 1");
  const int L = std::min(kappa_cutoff, N);
  KappaSeries z = KappaSeries::one(N);
  // Each pass fixes one more x-degree; N passes reach the truncation order.
  for (int iter = 0; iter < N; ++iter) {
    const KappaSeries xz = z.shifted(1);
    KappaSeries w = KappaSeries(N);
    KappaSeries power = KappaSeries::one(N);
    for (int ell = 1; ell <= L; ++ell) {
      power = power * xz;
      w = w + power.append_kappa(ell);
    }
    KappaSeries next = KappaSeries::one(N) + w;
    if (next == z) break;
    z = std::move(next);
  }
  return z;
}

KappaSeries solve_Z1(int kappa_cutoff, int N) {
  if (N < 1 || kappa_cutoff < 1) throw std::invalid_argument("solve_Z1: need N >= 1, L >= 1");
  const int L = std::min(kappa_cutoff, N);
  const KappaSeries z0 = solve_Z0(L, N);
  const KappaSeries xt = z0.shifted(1);  // x Z0(x)

  // X2(xt) = sum (l-1) kappa_l xt^l,  Y2(xt) = sum l(l-1)/2 kappa_l xt^l
  KappaSeries x2(N), y2(N);
  KappaSeries power = KappaSeries::one(N);
  for (int ell = 1; ell <= L; ++ell) {
    power = power * xt;
    if (ell < 2) continue;
    const KappaSeries with_kappa = power.append_kappa(ell);
    x2 = x2 + with_kappa.scaled(Rational(ell - 1));
    y2 = y2 + with_kappa.scaled(Rational(static_cast<long>(ell) * (ell - 1), 2));
  }

  // Z1 = X2 Y2 / ((1 - X2)^4 (1 - x W'(xt))).  The last factor absorbs into
  // the (1 - X2) power through 1 - X2(xt) = Z0 (1 - x W'(xt)), which follows
  // from Z0 = 1 + W(xt); the assembled form below avoids the mixed-argument
  // evaluation.
  const KappaSeries one = KappaSeries::one(N);
  return (x2 * y2 * z0) / (one - x2).pow(5);
}

}  // namespace genuscount
