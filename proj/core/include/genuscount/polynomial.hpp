#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "genuscount/bigint.hpp"

namespace genuscount {

// Dense polynomial over an exact coefficient ring (Rational, or nested
// Polynomial for multivariate use).  Trailing zeros are trimmed, so degree()
// is well-defined; the zero polynomial has degree -1.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(T value) { return Polynomial(std::vector<T>{std::move(value)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  T coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return T{};
    return coeffs_[static_cast<std::size_t>(i)];
  }
  const std::vector<T>& coeffs() const { return coeffs_; }

  Polynomial operator+(const Polynomial& other) const {
    std::vector<T> result(std::max(coeffs_.size(), other.coeffs_.size()), T{});
    for (std::size_t i = 0; i < result.size(); ++i) {
      result[i] = coeff(static_cast<int>(i)) + other.coeff(static_cast<int>(i));
    }
    return Polynomial(std::move(result));
  }

  Polynomial operator-(const Polynomial& other) const {
    std::vector<T> result(std::max(coeffs_.size(), other.coeffs_.size()), T{});
    for (std::size_t i = 0; i < result.size(); ++i) {
      result[i] = coeff(static_cast<int>(i)) - other.coeff(static_cast<int>(i));
    }
    return Polynomial(std::move(result));
  }

  Polynomial operator-() const {
    std::vector<T> result = coeffs_;
    for (auto& c : result) c = -c;
    return Polynomial(std::move(result));
  }

  Polynomial operator*(const Polynomial& other) const {
    if (is_zero() || other.is_zero()) return {};
    std::vector<T> result(coeffs_.size() + other.coeffs_.size() - 1, T{});
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
        result[i + j] = result[i + j] + coeffs_[i] * other.coeffs_[j];
      }
    }
    return Polynomial(std::move(result));
  }

  Polynomial scaled(const T& factor) const {
    std::vector<T> result = coeffs_;
    for (auto& c : result) c = c * factor;
    return Polynomial(std::move(result));
  }

  // Derivative with respect to the variable.
  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> result(coeffs_.size() - 1, T{});
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      result[i - 1] = coeffs_[i] * T(static_cast<long>(i));
    }
    return Polynomial(std::move(result));
  }

  template <class Arg>
  Arg eval(const Arg& x) const {
    Arg acc{};
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      acc = acc * x + Arg(coeffs_[i]);
    }
    return acc;
  }

  bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T{}) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using RationalPolynomial = Polynomial<Rational>;

// Human-readable form "21 + 21*u" used by the CLI.
std::string to_string(const RationalPolynomial& p, const std::string& var = "x");

// Exact Lagrange interpolation through (points[i], values[i]).
RationalPolynomial interpolate(const std::vector<Rational>& points,
                               const std::vector<Rational>& values);

}  // namespace genuscount
