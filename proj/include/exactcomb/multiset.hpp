#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace exactcomb {

// Total letters N above which brute-force enumeration refuses to run.
inline constexpr unsigned kDefaultEnumerationGuard = 12;

/**
 * Multiplicity vector (n_1, ..., n_k): n_i letters addressed to address i.
 *
 * Zero entries are allowed and never change a count (an address with no
 * letters constrains nothing); the empty spec is the empty arrangement
 * problem. Letters sharing an address are indistinguishable.
 */
class MultisetSpec {
public:
  MultisetSpec() = default;
  explicit MultisetSpec(std::vector<unsigned> multiplicities)
      : m_(std::move(multiplicities)) {}

  std::size_t size() const { return m_.size(); }  // k
  unsigned operator[](std::size_t i) const { return m_[i]; }
  std::span<const unsigned> multiplicities() const { return m_; }

  unsigned total() const;  // N = sum n_i

  // Multiplicities sorted descending with zeros dropped; counts are
  // invariant under this normalization, so it serves as the cache key.
  std::vector<unsigned> canonical_key() const;

  std::string to_string() const;  // "(2,1,1)"

  bool operator==(const MultisetSpec&) const = default;

private:
  std::vector<unsigned> m_;
};

// Enumeration refused: N letters exceed the configured guard.
class GuardExceeded : public std::runtime_error {
public:
  GuardExceeded(unsigned total, unsigned guard);
  unsigned total() const { return total_; }
  unsigned guard() const { return guard_; }

private:
  unsigned total_;
  unsigned guard_;
};

/**
 * Yields every distinct arrangement of the multiset {1^{n_1}, ..., k^{n_k}}
 * exactly once, N!/prod(n_i!) arrangements in all. Symbols are 1-based
 * addresses; position p of an arrangement is envelope p in address-block
 * order. Single consumer per stream; independent streams do not interact.
 */
class MultisetPermutationStream {
public:
  explicit MultisetPermutationStream(const MultisetSpec& spec,
                                     unsigned guard = kDefaultEnumerationGuard);

  // Next arrangement, or nullptr when exhausted. The pointee is owned by
  // the stream and overwritten by the following call.
  const std::vector<unsigned>* next();

private:
  std::vector<unsigned> current_;
  bool first_ = true;
  bool exhausted_ = false;
};

}  // namespace exactcomb
