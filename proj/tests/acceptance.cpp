// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything is exact arithmetic; the only tolerances are wall-clock
// budgets on the larger sweeps.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <exactcomb/derangements.hpp>
#include <exactcomb/laguerre.hpp>
#include <exactcomb/linearization.hpp>
#include <exactcomb/table.hpp>

using namespace exactcomb;

namespace {

int failures = 0;

void run_criterion(int id, const std::string& label, double budget_seconds,
                   const std::function<void(std::string&)>& body) {
  std::string reason;
  auto start = std::chrono::steady_clock::now();
  try {
    body(reason);
  } catch (const std::exception& e) {
    if (reason.empty()) reason = e.what();
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (reason.empty() && budget_seconds > 0 && elapsed > budget_seconds) {
    std::ostringstream s;
    s << "took " << elapsed << " s, budget " << budget_seconds << " s";
    reason = s.str();
  }
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2f s", elapsed);
  if (reason.empty()) {
    std::cout << "PASS " << id << ": " << label << " (" << timing << ")\n";
  } else {
    std::cout << "FAIL " << id << ": " << label << " (" << reason << ")\n";
    ++failures;
  }
}

void require(std::string& reason, bool ok, const std::string& message) {
  if (!ok && reason.empty()) reason = message;
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  RunResult result;
  std::string command = std::string(EXACTCOMB_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.output.append(buffer, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main() {
  run_criterion(1, "k=2 table over 0..8 is the 9x9 identity matrix", 1.0,
                [](std::string& reason) {
                  TableCache cache;
                  std::string csv =
                      render_table({{8, 8}, Method::Ie, Format::Csv}, 12, cache);
                  std::ostringstream expected;
                  for (unsigned c = 0; c <= 8; ++c) expected << "," << c;
                  expected << "\n";
                  for (unsigned r = 0; r <= 8; ++r) {
                    expected << r;
                    for (unsigned c = 0; c <= 8; ++c)
                      expected << "," << (r == c ? 1 : 0);
                    expected << "\n";
                  }
                  require(reason, csv == expected.str(),
                          "rendered table differs from the identity matrix");
                });

  run_criterion(
      2, "k=3 sweep 0..6: integral E is an integer equal to D, enumeration agrees",
      60.0, [](std::string& reason) {
        for (unsigned a = 0; a <= 6; ++a)
          for (unsigned b = 0; b <= 6; ++b)
            for (unsigned c = 0; c <= 6; ++c) {
              MultisetSpec s({a, b, c});
              Rational e = linearization_coefficient(s);
              require(reason, e.is_integer(),
                      "E" + s.to_string() + " is not an integer: " + e.to_string());
              require(reason, Rational(multiset_derangements_ie(s)) == e,
                      "E" + s.to_string() + " differs from inclusion-exclusion");
              if (s.total() <= 9)
                require(reason, Rational(multiset_derangements_enum(s)) == e,
                        "E" + s.to_string() + " differs from enumeration");
              if (!reason.empty()) return;
            }
      });

  run_criterion(
      3, "classical formula: alternating sum, all-ones multiset, nearest n!/e", 1.0,
      [](std::string& reason) {
        const Rational half(1, 2);
        for (unsigned n = 0; n <= 18; ++n) {
          BigInt d = classical_derangements(n);
          Rational sum;
          for (unsigned j = 0; j <= n; ++j) {
            Rational term(factorial(n), factorial(j));
            sum = j % 2 == 0 ? sum + term : sum - term;
          }
          require(reason, sum == Rational(d),
                  "alternating sum differs at n = " + std::to_string(n));
          if (n <= 8) {
            MultisetSpec ones(std::vector<unsigned>(n, 1u));
            require(reason, multiset_derangements_ie(ones) == d,
                    "all-ones multiset count differs at n = " + std::to_string(n));
            require(reason, multiset_derangements_enum(ones) == d,
                    "all-ones enumeration differs at n = " + std::to_string(n));
          }
          if (n >= 1) {
            // n!/e lies strictly between the partial sums through j = n+2 and
            // j = n+3; both sit within 1/2 of D(n), so D(n) = [n!/e].
            Rational partial_a, partial_b;
            for (unsigned j = 0; j <= n + 3; ++j) {
              Rational term(factorial(n), factorial(j));
              if (j % 2 == 1) term = -term;
              if (j <= n + 2) partial_a = partial_a + term;
              partial_b = partial_b + term;
            }
            bool pinned = (partial_a - Rational(d)).abs() < half &&
                          (partial_b - Rational(d)).abs() < half;
            require(reason, pinned,
                    "nearest-integer bracket fails at n = " + std::to_string(n));
          }
          if (!reason.empty()) return;
        }
      });

  run_criterion(4, "orthonormality of L_m, L_n for all m, n <= 12", 5.0,
                [](std::string& reason) {
                  for (unsigned m = 0; m <= 12; ++m)
                    for (unsigned n = 0; n <= 12; ++n) {
                      Rational val = integrate_exp_weight(laguerre(m) * laguerre(n));
                      Rational expected(m == n ? 1LL : 0LL);
                      require(reason, val == expected,
                              "inner product (" + std::to_string(m) + "," +
                                  std::to_string(n) + ") = " + val.to_string());
                      if (!reason.empty()) return;
                    }
                });

  run_criterion(
      5, "spot values by three methods: D(1,1,1)=2, D(2,1,1)=2, D(2,2,2)=10", 0,
      [](std::string& reason) {
        struct Case {
          std::vector<unsigned> spec;
          int expected;
        };
        for (const Case& c : {Case{{1, 1, 1}, 2}, Case{{2, 1, 1}, 2}, Case{{2, 2, 2}, 10}}) {
          MultisetSpec s(c.spec);
          require(reason, multiset_derangements_enum(s) == c.expected,
                  "enumeration differs on " + s.to_string());
          require(reason, multiset_derangements_ie(s) == c.expected,
                  "inclusion-exclusion differs on " + s.to_string());
          require(reason,
                  linearization_coefficient(s) == Rational(BigInt(c.expected)),
                  "integral differs on " + s.to_string());
          if (!reason.empty()) return;
        }
      });

  run_criterion(6, "Laguerre recurrence equals explicit sum for n <= 20; n!*L_n integral",
                0, [](std::string& reason) {
                  for (unsigned n = 0; n <= 20; ++n) {
                    Polynomial rec = laguerre(n);
                    require(reason, rec == laguerre_explicit(n),
                            "constructions differ at n = " + std::to_string(n));
                    Polynomial scaled = rec.scaled(Rational(factorial(n)));
                    for (const Rational& coef : scaled.coefficients())
                      require(reason, coef.is_integer(),
                              "n!*L_n has a non-integer coefficient at n = " +
                                  std::to_string(n));
                    if (!reason.empty()) return;
                  }
                });

  run_criterion(7, "k=4 sweep 0..4: integral E equals inclusion-exclusion D", 60.0,
                [](std::string& reason) {
                  for (unsigned a = 0; a <= 4; ++a)
                    for (unsigned b = 0; b <= 4; ++b)
                      for (unsigned c = 0; c <= 4; ++c)
                        for (unsigned d = 0; d <= 4; ++d) {
                          MultisetSpec s({a, b, c, d});
                          require(reason,
                                  Rational(multiset_derangements_ie(s)) ==
                                      linearization_coefficient(s),
                                  "mismatch on " + s.to_string());
                          if (!reason.empty()) return;
                        }
                });

  run_criterion(
      8, "CLI determinism and cache round-trip", 0, [](std::string& reason) {
        namespace fs = std::filesystem;
        const std::string table_args = "table --max 4 4 --method all --format json";
        RunResult first = run_cli(table_args);
        RunResult second = run_cli(table_args);
        require(reason, first.exit_code == 0 && second.exit_code == 0,
                "table run failed");
        require(reason, first.output == second.output,
                "repeated runs produced different bytes");

        fs::path dir = fs::temp_directory_path() / "exactcomb-acceptance";
        fs::create_directories(dir);
        fs::path cache = dir / "cache.json";
        fs::remove(cache);
        const std::string cached_args =
            "table --max 4 4 --format csv --cache " + cache.string();
        RunResult cold = run_cli(cached_args);
        require(reason, cold.exit_code == 0 && fs::exists(cache),
                "cache file was not written");
        std::string cache_bytes = read_file(cache);
        RunResult warm = run_cli(cached_args);
        require(reason, warm.exit_code == 0 && warm.output == cold.output,
                "cached rerun changed the table bytes");
        require(reason, read_file(cache) == cache_bytes,
                "cache file changed on reload");
        if (reason.empty()) {
          TableCache reloaded = TableCache::load(cache);
          TableCache fresh;
          TableRequest request{{4, 4}, Method::Ie, Format::Csv};
          require(reason,
                  render_table(request, 12, reloaded) ==
                      render_table(request, 12, fresh),
                  "reloaded cache renders different bytes");
        }
        fs::remove_all(dir);
      });

  if (failures == 0) {
    std::cout << "all criteria passed\n";
    return 0;
  }
  std::cout << failures << " criteria failed\n";
  return 1;
}
