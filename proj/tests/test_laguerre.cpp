#include <doctest.h>

#include <vector>

#include <exactcomb/laguerre.hpp>

using exactcomb::BigInt;
using exactcomb::Polynomial;
using exactcomb::Rational;

TEST_CASE("small Laguerre polynomials") {
  CHECK(exactcomb::laguerre(0) == Polynomial(std::vector<Rational>{1}));
  CHECK(exactcomb::laguerre(1) == Polynomial(std::vector<Rational>{1, -1}));
  // one recurrence step by hand: 2 L_2 = (3 - x)(1 - x) - 1
  CHECK(exactcomb::laguerre(2) ==
        Polynomial(std::vector<Rational>{1, -2, Rational(1, 2)}));
  // explicit sum at n = 3: 1 - 3x + (3/2)x^2 - (1/6)x^3
  CHECK(exactcomb::laguerre(3) ==
        Polynomial(std::vector<Rational>{1, -3, Rational(3, 2), Rational(-1, 6)}));
}

TEST_CASE("explicit sum base cases") {
  CHECK(exactcomb::laguerre_explicit(0) == Polynomial(std::vector<Rational>{1}));
  CHECK(exactcomb::laguerre_explicit(2) ==
        Polynomial(std::vector<Rational>{1, -2, Rational(1, 2)}));
}

TEST_CASE("recurrence and explicit sum agree up to 20") {
  for (unsigned n = 0; n <= 20; ++n)
    CHECK(exactcomb::laguerre(n) == exactcomb::laguerre_explicit(n));
}

TEST_CASE("degree, constant term, leading coefficient") {
  for (unsigned n = 0; n <= 20; ++n) {
    Polynomial p = exactcomb::laguerre(n);
    REQUIRE(p.degree() == n);
    CHECK(p.coefficient(0) == Rational(1));
    Rational leading = p.coefficient(n);
    Rational expected = Rational(n % 2 == 0 ? BigInt(1) : BigInt(-1),
                                 exactcomb::factorial(n));
    CHECK(leading == expected);
  }
}

TEST_CASE("n! L_n has integer coefficients") {
  for (unsigned n = 0; n <= 20; ++n) {
    Rational scale(exactcomb::factorial(n));
    Polynomial p = exactcomb::laguerre(n);
    for (const Rational& c : p.coefficients()) CHECK((c * scale).is_integer());
  }
}

TEST_CASE("rendering matches the documented form") {
  CHECK(exactcomb::laguerre(0).to_string() == "1");
  CHECK(exactcomb::laguerre(1).to_string() == "1 - x");
  CHECK(exactcomb::laguerre(2).to_string() == "1 - 2x + 1/2x^2");
}
