#include <exactcomb/integer.hpp>

namespace exactcomb {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(unsigned n, unsigned j) {
  if (j > n) return 0;
  if (j > n - j) j = n - j;
  BigInt r = 1;
  for (unsigned i = 1; i <= j; ++i) {
    r *= n - j + i;
    r /= i;  // exact: r is C(n-j+i, i) after each step
  }
  return r;
}

}  // namespace exactcomb
