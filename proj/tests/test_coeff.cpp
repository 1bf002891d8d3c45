#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "ringlab/integers.hpp"
#include "ringlab/mod.hpp"

using namespace ringlab;

TEST_SUITE("coeff") {

TEST_CASE("integer helpers") {
  CHECK(gcd(Integer(12), Integer(18)) == 6);
  CHECK(gcd(Integer(0), Integer(7)) == 7);
  CHECK(gcd(Integer(-4), Integer(6)) == 2);
  CHECK(lcm(Integer(4), Integer(6)) == 12);
  CHECK(abs(Integer(-9)) == 9);
  CHECK(pow(Integer(3), 4ul) == 81);
  CHECK(pow(Integer(-2), 3ul) == -8);
  CHECK(pow(Integer(5), 0ul) == 1);
}

TEST_CASE("rational canonical form") {
  Rational q = make_rational(4, -6);
  CHECK(q == make_rational(-2, 3));
  CHECK(numerator(q) == -2);
  CHECK(denominator(q) == 3);
  CHECK(make_rational(0, 5) == 0);
  CHECK(denominator(make_rational(0, 5)) == 1);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("primality") {
  for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29})
    CHECK(is_prime(Integer(p)));
  for (long n : {-3, 0, 1, 4, 9, 15, 21, 25, 27})
    CHECK_FALSE(is_prime(Integer(n)));
}

TEST_CASE("factorization") {
  Factorization f = factor(Integer(360));
  CHECK(f.sign == 1);
  CHECK(f.primes == std::vector<Integer>{2, 2, 2, 3, 3, 5});

  Factorization g = factor(Integer(-12));
  CHECK(g.sign == -1);
  CHECK(g.primes == std::vector<Integer>{2, 2, 3});

  CHECK(factor(Integer(1)).primes.empty());
  CHECK(factor(Integer(1)).sign == 1);
  CHECK(factor(Integer(-1)).primes.empty());
  CHECK(factor(Integer(-1)).sign == -1);
  CHECK_THROWS_AS(factor(Integer(0)), std::invalid_argument);

  // Re-multiplication closes the loop for every small value.
  for (long n = -60; n <= 60; ++n) {
    if (n == 0) continue;
    Factorization h = factor(Integer(n));
    Integer prod = h.sign;
    for (const Integer& p : h.primes) {
      CHECK(is_prime(p));
      prod *= p;
    }
    CHECK(prod == n);
    CHECK(std::is_sorted(h.primes.begin(), h.primes.end()));
  }
}

TEST_CASE("nth prime") {
  CHECK(nth_prime(1) == 2);
  CHECK(nth_prime(2) == 3);
  CHECK(nth_prime(3) == 5);
  CHECK(nth_prime(4) == 7);
  CHECK(nth_prime(5) == 11);
  CHECK(nth_prime(6) == 13);
  CHECK(nth_prime(10) == 29);
  CHECK_THROWS_AS(nth_prime(0), std::invalid_argument);
}

TEST_CASE("chinese remainder") {
  CHECK(crt_solve({Integer(3), Integer(5)}, {Integer(9), Integer(125)}) ==
        255);

  // Brute-force oracle on a small instance: the least solution of
  // x = 2 mod 3, x = 3 mod 4 in [0, 12) is 11.
  long expect = -1;
  for (long x = 0; x < 12; ++x)
    if (x % 3 == 2 && x % 4 == 3) {
      expect = x;
      break;
    }
  CHECK(expect == 11);
  CHECK(crt_solve({Integer(2), Integer(3)}, {Integer(3), Integer(4)}) ==
        expect);

  // Residue property over a three-modulus instance.
  std::vector<Integer> mods{5, 7, 8};
  std::vector<Integer> res{4, 6, 3};
  Integer k = crt_solve(res, mods);
  CHECK(k >= 0);
  CHECK(k < 5 * 7 * 8);
  for (std::size_t i = 0; i < mods.size(); ++i)
    CHECK(k % mods[i] == res[i]);

  CHECK_THROWS_AS(crt_solve({Integer(1)}, {Integer(2), Integer(3)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(crt_solve({Integer(1), Integer(1)}, {Integer(4), Integer(6)}),
                  std::invalid_argument);
}

TEST_CASE("units in the coefficient domains") {
  CHECK(unit_in_integers(Integer(1)));
  CHECK(unit_in_integers(Integer(-1)));
  CHECK_FALSE(unit_in_integers(Integer(2)));
  CHECK_FALSE(unit_in_integers(Integer(0)));

  CHECK(unit_in_zmod(Integer(5), Integer(6)));
  CHECK_FALSE(unit_in_zmod(Integer(3), Integer(6)));
  CHECK_FALSE(unit_in_zmod(Integer(0), Integer(5)));
  CHECK(unit_in_zmod(Integer(7), Integer(5)));  // 7 = 2 is a unit mod 5

  CHECK(unit_in_field(make_rational(2, 3)));
  CHECK_FALSE(unit_in_field(Rational(0)));
}

TEST_CASE("localization membership") {
  // Primes allowed in the x^2 + 1 localization: 2 and 1 mod 4.
  for (long p : {2, 5, 13, 17, 29}) CHECK(s_class_prime(Integer(p)));
  for (long p : {3, 7, 11, 19, 23}) CHECK_FALSE(s_class_prime(Integer(p)));

  CHECK(odd_denominator_member(make_rational(2, 3)));
  CHECK(odd_denominator_member(Rational(0)));
  CHECK(odd_denominator_member(Rational(6)));
  CHECK_FALSE(odd_denominator_member(make_rational(1, 3)));  // odd numerator
  CHECK_FALSE(odd_denominator_member(make_rational(1, 2)));  // even denominator

  CHECK(localized_at_member(make_rational(1, 2), Integer(5)));
  CHECK(localized_at_member(make_rational(5, 3), Integer(5)));
  CHECK_FALSE(localized_at_member(make_rational(1, 5), Integer(5)));
  CHECK_FALSE(localized_at_member(make_rational(3, 10), Integer(5)));

  CHECK(localized_s_member(make_rational(1, 2)));
  CHECK(localized_s_member(make_rational(1, 65)));  // 65 = 5 * 13
  CHECK_FALSE(localized_s_member(make_rational(1, 3)));
  CHECK_FALSE(localized_s_member(make_rational(3, 7)));

  CHECK(unit_in_localized_at(make_rational(2, 3), Integer(5)));
  CHECK_FALSE(unit_in_localized_at(Rational(5), Integer(5)));
  CHECK(unit_in_localized_s(make_rational(5, 13)));
  CHECK_FALSE(unit_in_localized_s(make_rational(3, 5)));
  CHECK_FALSE(unit_in_localized_s(Rational(0)));
}

TEST_CASE("fixed-modulus integers") {
  Mod a(5, 7), b(4, 7);
  CHECK((a + b).value() == 2);
  CHECK((a * b).value() == 6);
  CHECK((a - b).value() == 1);
  CHECK((-a).value() == 2);
  CHECK(a.pow(3).value() == 6);  // 125 = 6 mod 7
  CHECK(Mod::zero(7).value() == 0);
  CHECK(Mod::one(7).value() == 1);
  CHECK(Mod(12, 7) == Mod(5, 7));
  CHECK(Mod(-1, 7).value() == 6);
  CHECK(a.modulus() == 7);
}

}  // TEST_SUITE
