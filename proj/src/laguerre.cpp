#include <exactcomb/laguerre.hpp>

#include <utility>
#include <vector>

namespace exactcomb {

Polynomial laguerre(unsigned n) {
  Polynomial prev = Polynomial::constant(Rational(1));  // L_0
  if (n == 0) return prev;
  Polynomial curr(std::vector<Rational>{Rational(1), Rational(-1)});  // L_1
  const Polynomial x = Polynomial::variable();
  for (unsigned m = 1; m < n; ++m) {
    // (m+1) L_{m+1} = (2m+1 - x) L_m - m L_{m-1}
    Polynomial next =
        curr.scaled(Rational(2LL * m + 1)) - x * curr - prev.scaled(Rational(m));
    prev = std::move(curr);
    curr = next.scaled(Rational(1, m + 1));
  }
  return curr;
}

Polynomial laguerre_explicit(unsigned n) {
  std::vector<Rational> coeffs;
  coeffs.reserve(n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    BigInt num = binomial(n, j);
    if (j % 2 == 1) num = -num;
    coeffs.emplace_back(std::move(num), factorial(j));
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace exactcomb
