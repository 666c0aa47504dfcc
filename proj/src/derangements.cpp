#include <exactcomb/derangements.hpp>

#include <cstddef>
#include <vector>

namespace exactcomb {

BigInt classical_derangements(unsigned n) {
  BigInt term = factorial(n);  // n!/j!, kept integral throughout
  BigInt total = term;         // j = 0
  for (unsigned j = 1; j <= n; ++j) {
    term /= j;
    if (j % 2 == 1)
      total -= term;
    else
      total += term;
  }
  return total;
}

BigInt multiset_derangements_enum(const MultisetSpec& spec, unsigned guard) {
  MultisetPermutationStream stream(spec, guard);
  // address_of[p] is the address whose envelope sits at position p.
  std::vector<unsigned> address_of;
  address_of.reserve(spec.total());
  for (std::size_t i = 0; i < spec.size(); ++i)
    address_of.insert(address_of.end(), spec[i], static_cast<unsigned>(i + 1));

  BigInt count = 0;
  while (const std::vector<unsigned>* arrangement = stream.next()) {
    bool deranged = true;
    for (std::size_t p = 0; p < arrangement->size(); ++p) {
      if ((*arrangement)[p] == address_of[p]) {
        deranged = false;
        break;
      }
    }
    if (deranged) ++count;
  }
  return count;
}

BigInt multiset_derangements_ie(const MultisetSpec& spec) {
  const std::size_t k = spec.size();
  const unsigned n_total = spec.total();

  std::vector<unsigned> j(k, 0);  // odometer over 0 <= j_i <= n_i
  BigInt total = 0;
  for (;;) {
    unsigned placed = 0;
    for (unsigned ji : j) placed += ji;

    BigInt term = factorial(n_total - placed);
    for (std::size_t i = 0; i < k; ++i) term *= binomial(spec[i], j[i]);
    for (std::size_t i = 0; i < k; ++i)
      term /= factorial(spec[i] - j[i]);  // exact: partial multinomial

    if (placed % 2 == 1)
      total -= term;
    else
      total += term;

    std::size_t idx = 0;
    while (idx < k && j[idx] == spec[idx]) {
      j[idx] = 0;
      ++idx;
    }
    if (idx == k) break;
    ++j[idx];
  }
  return total;
}

}  // namespace exactcomb
