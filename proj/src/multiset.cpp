#include <exactcomb/multiset.hpp>

#include <algorithm>
#include <functional>
#include <numeric>

namespace exactcomb {

unsigned MultisetSpec::total() const {
  return std::accumulate(m_.begin(), m_.end(), 0u);
}

std::vector<unsigned> MultisetSpec::canonical_key() const {
  std::vector<unsigned> key;
  key.reserve(m_.size());
  for (unsigned n : m_)
    if (n > 0) key.push_back(n);
  std::sort(key.begin(), key.end(), std::greater<unsigned>());
  return key;
}

std::string MultisetSpec::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(m_[i]);
  }
  return s + ")";
}

GuardExceeded::GuardExceeded(unsigned total, unsigned guard)
    : std::runtime_error("enumeration refused: N = " + std::to_string(total) +
                         " letters exceeds the guard of " + std::to_string(guard) +
                         " (raise the guard or use the ie method)"),
      total_(total),
      guard_(guard) {}

MultisetPermutationStream::MultisetPermutationStream(const MultisetSpec& spec,
                                                     unsigned guard) {
  const unsigned n = spec.total();
  if (n > guard) throw GuardExceeded(n, guard);
  current_.reserve(n);
  for (std::size_t i = 0; i < spec.size(); ++i)
    current_.insert(current_.end(), spec[i], static_cast<unsigned>(i + 1));
  // current_ starts ascending; std::next_permutation then visits each
  // distinct multiset arrangement exactly once, in lexicographic order.
}

const std::vector<unsigned>* MultisetPermutationStream::next() {
  if (exhausted_) return nullptr;
  if (first_) {
    first_ = false;
    return &current_;
  }
  if (!std::next_permutation(current_.begin(), current_.end())) {
    exhausted_ = true;
    return nullptr;
  }
  return &current_;
}

}  // namespace exactcomb
