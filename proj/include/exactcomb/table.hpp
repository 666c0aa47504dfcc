#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <exactcomb/linearization.hpp>

namespace exactcomb {

inline constexpr const char* kCacheFormatVersion = "1";

enum class Method { Ie, Enumeration, Integral, All };
enum class Format { Text, Csv, Json };

std::string method_name(Method m);
std::optional<Method> parse_method(const std::string& name);   // "ie" | "enum" | "integral" | "all"
std::optional<Format> parse_format(const std::string& name);   // "text" | "csv" | "json"

// A rectangular table of counts over 0 <= n_i <= max_per_arg[i].
// k = 1 tabulates the classical problem: cell n is the count for n distinct
// letters, i.e. the multiset spec (1,...,1) with n ones. For k >= 2 the cell
// coordinates are the multiset spec itself.
struct TableRequest {
  std::vector<unsigned> max_per_arg;
  Method method = Method::Ie;
  Format format = Format::Text;
};

// Independently computed values for one spec disagree, or a linearization
// value failed to be a nonnegative integer count.
class IdentityViolation : public std::runtime_error {
public:
  explicit IdentityViolation(const std::string& what) : std::runtime_error(what) {}
};

/**
 * Count cache keyed by canonical spec (multiplicities sorted descending,
 * zeros dropped), so permuted requests share one entry. Each entry records
 * which methods have produced it; conflicting values are refused. The file
 * form is a single JSON document {version, entries:[{spec, value, methods}]}
 * with counts as decimal strings.
 */
class TableCache {
public:
  struct Entry {
    BigInt value;
    std::vector<std::string> methods;
  };

  const Entry* find(const std::vector<unsigned>& canonical_key) const;

  // Inserts or merges; throws IdentityViolation when the key is already
  // present with a different value.
  void store(const std::vector<unsigned>& canonical_key, const BigInt& value,
             const std::vector<std::string>& methods);

  std::size_t size() const { return entries_.size(); }

  std::string to_json() const;
  static TableCache from_json(const std::string& text);  // throws std::runtime_error

  void save(const std::filesystem::path& path) const;
  static TableCache load(const std::filesystem::path& path);

private:
  std::map<std::vector<unsigned>, Entry> entries_;
};

// One computed table cell.
struct CellResult {
  BigInt value;
  // Methods the request resolves to for this cell; a pure function of
  // (spec, method, guard) so rendered output never depends on cache state.
  std::vector<std::string> methods;
  bool guard_fallback = false;  // enumeration wanted but N exceeded the guard
};

// Computes one spec by the requested method(s), serving from the cache when
// the canonical key is present and recording fresh results back into it.
// Methods that run together must agree or IdentityViolation is thrown.
CellResult compute_cell(const MultisetSpec& spec, Method method, unsigned guard,
                        TableCache& cache);

// Renders the full table; bytes are deterministic for a given (request,
// guard) regardless of cache state. Cells whose enumeration was skipped by
// the guard fall back to inclusion-exclusion and carry a '*' note in text
// and csv output; json output carries the per-cell method list instead.
std::string render_table(const TableRequest& request, unsigned guard, TableCache& cache);

}  // namespace exactcomb
