#pragma once

#include <exactcomb/polynomial.hpp>

namespace exactcomb {

// Moment of the exponential weight: integral over [0, inf) of
// x^m e^(-x) dx = m!.
BigInt exp_moment(unsigned m);

// Integral over [0, inf) of p(x) e^(-x) dx, evaluated exactly as the finite
// moment sum  sum_m coeff_m * m!.  No floating point anywhere.
Rational integrate_exp_weight(const Polynomial& p);

}  // namespace exactcomb
