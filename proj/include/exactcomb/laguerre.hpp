#pragma once

#include <exactcomb/polynomial.hpp>

namespace exactcomb {

// Laguerre polynomials in the orthonormal convention for the weight e^(-x)
// on [0, inf): the integral of L_m(x) L_n(x) e^(-x) over [0, inf) is
// delta_{mn}. In this normalization L_n(0) = 1 and the leading coefficient
// is (-1)^n / n!.

// Built from the three-term recurrence
//   L_0 = 1,  L_1 = 1 - x,  (n+1) L_{n+1} = (2n+1-x) L_n - n L_{n-1}.
Polynomial laguerre(unsigned n);

// Built from the closed form L_n(x) = sum_{j=0..n} C(n,j) (-x)^j / j!.
// Kept as an independent construction so the two routes can be checked
// against each other.
Polynomial laguerre_explicit(unsigned n);

}  // namespace exactcomb
