#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace exactcomb {

// Arbitrary-precision integer. Counts, factorials and moments are
// nonnegative by construction; signed values appear only inside the
// alternating sums.
using BigInt = boost::multiprecision::cpp_int;

// n! with 0! = 1.
BigInt factorial(unsigned n);

// C(n, j), and 0 when j > n so that rectangular index sweeps need no
// range guards.
BigInt binomial(unsigned n, unsigned j);

}  // namespace exactcomb
