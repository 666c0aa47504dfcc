#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <exactcomb/derangements.hpp>
#include <exactcomb/exp_weight.hpp>
#include <exactcomb/laguerre.hpp>
#include <exactcomb/rational.hpp>

namespace exactcomb {

// Laguerre linearization coefficient
//
//   E(n_1,...,n_k) = (-1)^N * integral over [0,inf) of
//                    L_{n_1}(x) ... L_{n_k}(x) e^(-x) dx,   N = sum n_i,
//
// computed by expanding the product polynomial symbolically and taking the
// exact moment sum. k = 2 reproduces orthonormality; general k is accepted
// and is verified against the derangement counts, never assumed equal.
Rational linearization_coefficient(const MultisetSpec& spec);

// True iff the exact integral of L_m L_n e^(-x) over [0, inf) is delta_{mn}.
bool orthonormality_check(unsigned m, unsigned n);

// One check of the identity D(spec) = E(spec). holds is true iff e_value
// is an integer equal to d_ie (and to d_enum when the oracle ran). A failed
// check is a result, not an error; callers decide how to surface it.
struct IdentityReport {
  MultisetSpec spec;
  std::optional<BigInt> d_enum;
  BigInt d_ie;
  Rational e_value;
  bool holds = false;
};

IdentityReport verify_identity(const MultisetSpec& spec, bool use_oracle,
                               unsigned guard = kDefaultEnumerationGuard);

struct SweepResult {
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::vector<IdentityReport> failures;
};

// verify_identity over the full rectangular range 0 <= n_i <= max_per_arg[i].
// With use_oracle the enumeration runs on the specs the guard admits and is
// skipped on the rest.
SweepResult verify_sweep(const std::vector<unsigned>& max_per_arg, bool use_oracle,
                         unsigned guard = kDefaultEnumerationGuard);

}  // namespace exactcomb
