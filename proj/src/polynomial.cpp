#include <exactcomb/polynomial.hpp>

#include <algorithm>

namespace exactcomb {

Polynomial Polynomial::constant(const Rational& c) {
  return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::variable() {
  return Polynomial(std::vector<Rational>{Rational(0), Rational(1)});
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return Polynomial();
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const Rational& a : coeffs_) out.push_back(a * c);
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  std::vector<Rational> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t m = 0; m < out.size(); ++m)
    out[m] = p.coefficient(m) + q.coefficient(m);
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  std::vector<Rational> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t m = 0; m < out.size(); ++m)
    out[m] = p.coefficient(m) - q.coefficient(m);
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return Polynomial();
  std::vector<Rational> out(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
      out[i + j] = out[i + j] + p.coeffs_[i] * q.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  bool leading = true;
  for (std::size_t m = 0; m < coeffs_.size(); ++m) {
    const Rational& c = coeffs_[m];
    if (c.is_zero()) continue;
    const bool neg = c.is_negative();
    if (leading) {
      if (neg) s += "-";
      leading = false;
    } else {
      s += neg ? " - " : " + ";
    }
    const Rational a = c.abs();
    if (m == 0) {
      s += a.to_string();
    } else {
      if (!(a == Rational(1))) s += a.to_string();
      s += "x";
      if (m > 1) s += "^" + std::to_string(m);
    }
  }
  return s;
}

}  // namespace exactcomb
