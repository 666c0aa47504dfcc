#include <exactcomb/linearization.hpp>

namespace exactcomb {

Rational linearization_coefficient(const MultisetSpec& spec) {
  Polynomial product = Polynomial::constant(Rational(1));
  for (std::size_t i = 0; i < spec.size(); ++i) product = product * laguerre(spec[i]);
  Rational integral = integrate_exp_weight(product);
  return spec.total() % 2 == 0 ? integral : -integral;
}

bool orthonormality_check(unsigned m, unsigned n) {
  const Rational value = integrate_exp_weight(laguerre(m) * laguerre(n));
  return value == (m == n ? Rational(1) : Rational(0));
}

IdentityReport verify_identity(const MultisetSpec& spec, bool use_oracle, unsigned guard) {
  IdentityReport report;
  report.spec = spec;
  report.d_ie = multiset_derangements_ie(spec);
  report.e_value = linearization_coefficient(spec);
  if (use_oracle) report.d_enum = multiset_derangements_enum(spec, guard);
  report.holds = report.e_value.is_integer() &&
                 report.e_value == Rational(report.d_ie) &&
                 (!report.d_enum || *report.d_enum == report.d_ie);
  return report;
}

SweepResult verify_sweep(const std::vector<unsigned>& max_per_arg, bool use_oracle,
                         unsigned guard) {
  SweepResult result;
  std::vector<unsigned> cell(max_per_arg.size(), 0);
  for (;;) {
    MultisetSpec spec(cell);
    const bool oracle_here = use_oracle && spec.total() <= guard;
    IdentityReport report = verify_identity(spec, oracle_here, guard);
    ++result.checked;
    if (report.holds)
      ++result.passed;
    else
      result.failures.push_back(std::move(report));

    // lexicographic odometer, last coordinate fastest
    std::size_t idx = cell.size();
    while (idx > 0 && cell[idx - 1] == max_per_arg[idx - 1]) {
      cell[idx - 1] = 0;
      --idx;
    }
    if (idx == 0) break;
    ++cell[idx - 1];
  }
  return result;
}

}  // namespace exactcomb
