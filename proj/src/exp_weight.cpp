#include <exactcomb/exp_weight.hpp>

namespace exactcomb {

BigInt exp_moment(unsigned m) { return factorial(m); }

Rational integrate_exp_weight(const Polynomial& p) {
  Rational total;
  BigInt moment = 1;  // m!, built incrementally
  std::size_t m = 0;
  for (const Rational& c : p.coefficients()) {
    if (m > 0) moment *= m;
    if (!c.is_zero()) total = total + c * Rational(moment);
    ++m;
  }
  return total;
}

}  // namespace exactcomb
