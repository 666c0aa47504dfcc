#pragma once

#include <exactcomb/integer.hpp>
#include <exactcomb/multiset.hpp>

namespace exactcomb {

// Classical derangement count D(n) = n! (1/0! - 1/1! + ... + (-1)^n/n!),
// evaluated in integer arithmetic as sum_j (-1)^j n!/j!. Equals the
// multiset count on n ones, and the nearest integer to n!/e for n >= 1.
BigInt classical_derangements(unsigned n);

// Brute force: walks every distinct arrangement and counts those in which
// no envelope of address i holds a letter addressed to i. This is the
// oracle the closed form is checked against; it refuses to run past the
// guard.
BigInt multiset_derangements_enum(const MultisetSpec& spec,
                                  unsigned guard = kDefaultEnumerationGuard);

// Closed form by inclusion-exclusion over forced correct placements:
// fixing j_i of the n_i letters of address i in place leaves a free
// arrangement of the remaining multiset, so with N = sum n_i, J = sum j_i,
//
//   D(n_1,...,n_k) = sum_{0 <= j_i <= n_i} (-1)^J
//                    [prod_i C(n_i, j_i)] * (N-J)! / prod_i (n_i-j_i)!
//
// Every division is exact. Agrees with the enumeration oracle everywhere
// the oracle runs.
BigInt multiset_derangements_ie(const MultisetSpec& spec);

}  // namespace exactcomb
