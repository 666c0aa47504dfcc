#include <exactcomb/table.hpp>

#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace exactcomb {

namespace {

using nlohmann::ordered_json;

// Lexicographic odometer over 0 <= cell[i] <= maxv[i], last coordinate fastest.
bool advance(std::vector<unsigned>& cell, const std::vector<unsigned>& maxv) {
  std::size_t idx = cell.size();
  while (idx > 0 && cell[idx - 1] == maxv[idx - 1]) {
    cell[idx - 1] = 0;
    --idx;
  }
  if (idx == 0) return false;
  ++cell[idx - 1];
  return true;
}

// k = 1 cells tabulate the classical problem: n distinct letters, i.e. the
// all-ones multiset spec of length n.
MultisetSpec cell_spec(const std::vector<unsigned>& cell) {
  if (cell.size() == 1) return MultisetSpec(std::vector<unsigned>(cell[0], 1u));
  return MultisetSpec(cell);
}

BigInt run_method(const MultisetSpec& spec, const std::string& name, unsigned guard) {
  if (name == "enum") return multiset_derangements_enum(spec, guard);
  if (name == "ie") return multiset_derangements_ie(spec);
  Rational e = linearization_coefficient(spec);
  if (!e.is_integer() || e.is_negative())
    throw IdentityViolation("linearization coefficient for " + spec.to_string() +
                            " is not a nonnegative integer: " + e.to_string());
  return e.numerator();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string spec_range_string(const std::vector<unsigned>& maxv) {
  std::vector<std::string> parts;
  parts.reserve(maxv.size());
  for (unsigned m : maxv) parts.push_back(std::to_string(m));
  return "(" + join(parts, ",") + ")";
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::Ie: return "ie";
    case Method::Enumeration: return "enum";
    case Method::Integral: return "integral";
    case Method::All: return "all";
  }
  return "ie";
}

std::optional<Method> parse_method(const std::string& name) {
  if (name == "ie") return Method::Ie;
  if (name == "enum") return Method::Enumeration;
  if (name == "integral") return Method::Integral;
  if (name == "all") return Method::All;
  return std::nullopt;
}

std::optional<Format> parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  return std::nullopt;
}

const TableCache::Entry* TableCache::find(const std::vector<unsigned>& canonical_key) const {
  auto it = entries_.find(canonical_key);
  return it == entries_.end() ? nullptr : &it->second;
}

void TableCache::store(const std::vector<unsigned>& canonical_key, const BigInt& value,
                       const std::vector<std::string>& methods) {
  auto it = entries_.find(canonical_key);
  if (it == entries_.end()) {
    entries_.emplace(canonical_key, Entry{value, methods});
    return;
  }
  if (it->second.value != value) {
    MultisetSpec spec(canonical_key);
    throw IdentityViolation("cache conflict for " + spec.to_string() + ": held " +
                            it->second.value.str() + ", offered " + value.str());
  }
  for (const std::string& m : methods) {
    auto& have = it->second.methods;
    bool present = false;
    for (const std::string& h : have)
      if (h == m) {
        present = true;
        break;
      }
    if (!present) have.push_back(m);
  }
}

std::string TableCache::to_json() const {
  ordered_json doc;
  doc["version"] = kCacheFormatVersion;
  doc["entries"] = ordered_json::array();
  for (const auto& [key, entry] : entries_) {
    ordered_json item;
    item["spec"] = key;
    item["value"] = entry.value.str();  // decimal string: counts outgrow doubles fast
    item["methods"] = entry.methods;
    doc["entries"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

TableCache TableCache::from_json(const std::string& text) {
  TableCache cache;
  try {
    ordered_json doc = ordered_json::parse(text);
    if (!doc.is_object() || doc.at("version").get<std::string>() != kCacheFormatVersion)
      throw std::runtime_error("unsupported cache version");
    for (const auto& item : doc.at("entries")) {
      std::vector<unsigned> spec = item.at("spec").get<std::vector<unsigned>>();
      BigInt value(item.at("value").get<std::string>());
      if (value < 0) throw std::runtime_error("negative count in cache");
      std::vector<std::string> methods =
          item.at("methods").get<std::vector<std::string>>();
      cache.store(MultisetSpec(spec).canonical_key(), value, methods);
    }
  } catch (const ordered_json::exception& e) {
    throw std::runtime_error(std::string("malformed cache file: ") + e.what());
  }
  return cache;
}

void TableCache::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write cache file: " + path.string());
  out << to_json();
  if (!out) throw std::runtime_error("failed writing cache file: " + path.string());
}

TableCache TableCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read cache file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

CellResult compute_cell(const MultisetSpec& spec, Method method, unsigned guard,
                        TableCache& cache) {
  CellResult out;
  const bool enum_fits = spec.total() <= guard;
  switch (method) {
    case Method::Ie:
      out.methods = {"ie"};
      break;
    case Method::Enumeration:
      if (enum_fits) {
        out.methods = {"enum"};
      } else {
        out.methods = {"ie"};
        out.guard_fallback = true;
      }
      break;
    case Method::Integral:
      out.methods = {"integral"};
      break;
    case Method::All:
      if (enum_fits) {
        out.methods = {"enum", "ie", "integral"};
      } else {
        out.methods = {"ie", "integral"};
        out.guard_fallback = true;
      }
      break;
  }

  const std::vector<unsigned> key = spec.canonical_key();
  if (const TableCache::Entry* hit = cache.find(key)) {
    out.value = hit->value;
    return out;
  }

  std::optional<BigInt> value;
  std::string first_method;
  for (const std::string& name : out.methods) {
    BigInt v = run_method(spec, name, guard);
    if (value && *value != v)
      throw IdentityViolation("method disagreement for " + spec.to_string() + ": " +
                              first_method + " = " + value->str() + ", " + name +
                              " = " + v.str());
    if (!value) {
      value = std::move(v);
      first_method = name;
    }
  }
  out.value = *value;
  cache.store(key, out.value, out.methods);
  return out;
}

namespace {

struct RenderedCells {
  std::map<std::vector<unsigned>, std::string> text;  // cell -> value (+ marker)
  bool any_fallback = false;
  std::size_t width = 0;
};

RenderedCells compute_all(const TableRequest& request, unsigned guard, TableCache& cache,
                          bool with_markers) {
  RenderedCells out;
  std::vector<unsigned> cell(request.max_per_arg.size(), 0);
  do {
    CellResult r = compute_cell(cell_spec(cell), request.method, guard, cache);
    std::string s = r.value.str();
    if (with_markers && r.guard_fallback) s += "*";
    out.any_fallback = out.any_fallback || r.guard_fallback;
    out.width = std::max(out.width, s.size());
    out.text.emplace(cell, std::move(s));
  } while (advance(cell, request.max_per_arg));
  return out;
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

// Header line naming the fixed trailing coordinates of one 2-D block,
// e.g. "n3 = 0" or "n3,n4 = 0,2".
std::string block_label(const std::vector<unsigned>& tail) {
  std::vector<std::string> names, values;
  for (std::size_t i = 0; i < tail.size(); ++i) {
    names.push_back("n" + std::to_string(i + 3));
    values.push_back(std::to_string(tail[i]));
  }
  return join(names, ",") + " = " + join(values, ",");
}

std::string render_text(const TableRequest& request, unsigned guard, TableCache& cache) {
  RenderedCells cells = compute_all(request, guard, cache, true);
  const std::vector<unsigned>& maxv = request.max_per_arg;
  const std::size_t k = maxv.size();
  std::ostringstream out;
  out << "# D table: k = " << k << ", max = " << spec_range_string(maxv)
      << ", method = " << method_name(request.method) << ", guard = " << guard << "\n";
  if (cells.any_fallback)
    out << "# * = enumeration skipped (N over guard); value from inclusion-exclusion\n";

  if (k == 1) {
    out << "# classical derangements D(n) for n = 0.." << maxv[0] << "\n";
    std::vector<std::string> row;
    for (unsigned n = 0; n <= maxv[0]; ++n) row.push_back(cells.text.at({n}));
    out << join(row, ",") << "\n";
    return out.str();
  }

  out << "# rows: n1 = 0.." << maxv[0] << "; cols: n2 = 0.." << maxv[1] << "\n";
  std::vector<unsigned> tail(k - 2, 0);
  std::vector<unsigned> tail_max(maxv.begin() + 2, maxv.end());
  bool first_block = true;
  do {
    if (k > 2) {
      if (!first_block) out << "\n";
      out << "# " << block_label(tail) << "\n";
    }
    first_block = false;
    for (unsigned r = 0; r <= maxv[0]; ++r) {
      std::vector<std::string> row;
      for (unsigned c = 0; c <= maxv[1]; ++c) {
        std::vector<unsigned> cell{r, c};
        cell.insert(cell.end(), tail.begin(), tail.end());
        row.push_back(pad_left(cells.text.at(cell), cells.width));
      }
      out << join(row, " ") << "\n";
    }
  } while (advance(tail, tail_max));
  return out.str();
}

std::string render_csv(const TableRequest& request, unsigned guard, TableCache& cache) {
  // Cell values are digits with an optional '*', so no quoting is ever needed.
  RenderedCells cells = compute_all(request, guard, cache, true);
  const std::vector<unsigned>& maxv = request.max_per_arg;
  const std::size_t k = maxv.size();
  std::ostringstream out;

  if (k == 1) {
    out << "n,D\n";
    for (unsigned n = 0; n <= maxv[0]; ++n)
      out << n << "," << cells.text.at({n}) << "\n";
    return out.str();
  }

  auto matrix = [&](const std::vector<unsigned>& tail) {
    for (unsigned c = 0; c <= maxv[1]; ++c) out << "," << c;
    out << "\n";
    for (unsigned r = 0; r <= maxv[0]; ++r) {
      out << r;
      for (unsigned c = 0; c <= maxv[1]; ++c) {
        std::vector<unsigned> cell{r, c};
        cell.insert(cell.end(), tail.begin(), tail.end());
        out << "," << cells.text.at(cell);
      }
      out << "\n";
    }
  };

  if (k == 2) {
    matrix({});
    return out.str();
  }

  // One 2-D block per value of the trailing coordinates, each introduced by
  // a header line such as "n3=0".
  std::vector<unsigned> tail(k - 2, 0);
  std::vector<unsigned> tail_max(maxv.begin() + 2, maxv.end());
  do {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < tail.size(); ++i)
      parts.push_back("n" + std::to_string(i + 3) + "=" + std::to_string(tail[i]));
    out << join(parts, ",") << "\n";
    matrix(tail);
  } while (advance(tail, tail_max));
  return out.str();
}

std::string render_json(const TableRequest& request, unsigned guard, TableCache& cache) {
  const std::vector<unsigned>& maxv = request.max_per_arg;
  ordered_json doc;
  doc["version"] = kCacheFormatVersion;
  doc["kind"] = maxv.size() == 1 ? "classical" : "multiset";
  doc["k"] = maxv.size();
  doc["max_per_arg"] = maxv;
  doc["method"] = method_name(request.method);
  doc["guard"] = guard;
  doc["entries"] = ordered_json::array();
  std::vector<unsigned> cell(maxv.size(), 0);
  do {
    // methods here are what the request resolves to for the cell, so the
    // document does not depend on cache state
    CellResult r = compute_cell(cell_spec(cell), request.method, guard, cache);
    ordered_json item;
    item["spec"] = cell;
    item["value"] = r.value.str();
    item["methods"] = r.methods;
    doc["entries"].push_back(std::move(item));
  } while (advance(cell, maxv));
  return doc.dump(2) + "\n";
}

}  // namespace

std::string render_table(const TableRequest& request, unsigned guard, TableCache& cache) {
  if (request.max_per_arg.empty())
    throw std::invalid_argument("table request needs at least one argument");
  switch (request.format) {
    case Format::Text: return render_text(request, guard, cache);
    case Format::Csv: return render_csv(request, guard, cache);
    case Format::Json: return render_json(request, guard, cache);
  }
  return {};
}

}  // namespace exactcomb
