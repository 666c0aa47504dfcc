#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <exactcomb/rational.hpp>

namespace exactcomb {

/**
 * Dense univariate polynomial over Rational; coefficient m multiplies x^m.
 *
 * Invariant: the coefficient vector is empty (the zero polynomial) or its
 * last entry is nonzero. The zero polynomial has no degree.
 */
class Polynomial {
public:
  Polynomial() = default;  // zero

  // Takes coefficients in ascending degree; strips trailing zeros.
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  static Polynomial constant(const Rational& c);
  static Polynomial variable();  // x

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  // The span aliases this object, so it cannot be taken from a temporary.
  std::span<const Rational> coefficients() const& { return coeffs_; }
  std::span<const Rational> coefficients() const&& = delete;

  // Zero beyond the degree.
  const Rational& coefficient(std::size_t m) const {
    static const Rational kZero;
    return m < coeffs_.size() ? coeffs_[m] : kZero;
  }

  Polynomial scaled(const Rational& c) const;

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);

  bool operator==(const Polynomial&) const = default;

  // Ascending-degree rendering with exact fractions, e.g. "1 - 2x + 1/2x^2".
  std::string to_string() const;

private:
  std::vector<Rational> coeffs_;
};

}  // namespace exactcomb
