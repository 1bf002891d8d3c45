#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ringlab/integers.hpp"
#include "ringlab/mod.hpp"
#include "ringlab/polynomial.hpp"
#include "ringlab/polynomial_io.hpp"
#include "ringlab/rng.hpp"

using namespace ringlab;

namespace {

Polynomial<Integer> zp(std::vector<long> cs) {
  std::vector<Integer> v(cs.begin(), cs.end());
  return Polynomial<Integer>(std::move(v));
}

Polynomial<Mod> mp(std::vector<long> cs, long n) {
  std::vector<Mod> v;
  v.reserve(cs.size());
  for (long c : cs) v.emplace_back(c, n);
  return Polynomial<Mod>(std::move(v));
}

Polynomial<Rational> qp(std::vector<Rational> cs) {
  return Polynomial<Rational>(std::move(cs));
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("shape and evaluation") {
  Polynomial<Integer> p = zp({2, -3, 1});  // x^2 - 3x + 2
  CHECK(p.degree() == 2);
  CHECK(p(Integer(5)) == 12);
  CHECK(p(Integer(1)) == 0);
  CHECK(p.lead() == 1);
  CHECK(p.coeff(1) == -3);
  CHECK(p.coeff(7) == 0);

  CHECK(Polynomial<Integer>::zero(Integer(0)).is_zero());
  CHECK(Polynomial<Integer>::zero(Integer(0)).degree() == -1);
  CHECK(Polynomial<Integer>::one(Integer(0))(Integer(9)) == 1);
  CHECK(Polynomial<Integer>::x(Integer(0))(Integer(9)) == 9);
  CHECK(zp({0, 0, 0}).is_zero());  // trailing zeros normalize away

  Polynomial<Mod> q = mp({1, 1}, 2);
  CHECK(q(Mod(1, 2)) == Mod(0, 2));
}

TEST_CASE("arithmetic and composition") {
  Polynomial<Integer> x = Polynomial<Integer>::x(Integer(0));
  Polynomial<Integer> p = x * x;  // x^2
  CHECK(p.compose(x + Polynomial<Integer>::one(Integer(0))) ==
        zp({1, 2, 1}));  // (x+1)^2
  CHECK((zp({1, 1}) * zp({-1, 1})) == zp({-1, 0, 1}));
  CHECK(zp({1, 2}).pow(2) == zp({1, 4, 4}));
}

TEST_CASE("division") {
  // (2x^2 - 3x + 1) / (1 - x) = 1 - 2x exactly.
  CHECK(exact_divide(zp({1, -3, 2}), zp({1, -1})) == zp({1, -2}));
  auto [quot, rem] = divide(zp({1, 0, 1}), zp({1, 1}));  // x^2+1 by x+1
  CHECK(quot == zp({-1, 1}));
  CHECK(rem == zp({2}));
  CHECK_THROWS_AS(exact_divide(zp({1, 0, 1}), zp({1, 1})),
                  std::invalid_argument);
}

TEST_CASE("quasi-inverse companion polynomial") {
  // p(x) = x^2 gives P = -x; p = 3x - 2x^2 gives P = 2x.
  CHECK(quasi_inverse_witness(zp({0, 0, 1})) == zp({0, -1}));
  CHECK(quasi_inverse_witness(zp({0, 3, -2})) == zp({0, 2}));
  CHECK_THROWS_AS(quasi_inverse_witness(zp({1, 0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(quasi_inverse_witness(zp({0, 2})), std::invalid_argument);

  // Defining identity x + P - x*P = p, checked coefficientwise on a
  // seeded sample of valid inputs (p(0) = 0, p(1) = 1).
  Rng rng(99);
  Polynomial<Integer> X = Polynomial<Integer>::x(Integer(0));
  for (int t = 0; t < 50; ++t) {
    int d = static_cast<int>(rng.range(1, 6));
    std::vector<Integer> cs(static_cast<std::size_t>(d) + 1, Integer(0));
    Integer sum = 0;
    for (int i = 1; i < d; ++i) {
      cs[static_cast<std::size_t>(i)] = rng.range(-5, 5);
      sum += cs[static_cast<std::size_t>(i)];
    }
    cs[static_cast<std::size_t>(d)] = 1 - sum;  // forces p(1) = 1
    if (cs[static_cast<std::size_t>(d)] == 0) continue;
    Polynomial<Integer> p(cs);
    Polynomial<Integer> P = quasi_inverse_witness(p);
    CHECK(X + P - X * P == p);
  }
}

TEST_CASE("reflect") {
  CHECK(reflect(zp({0, -3, 1})) == zp({1, -3}));
  CHECK(reflect(zp({0, 0, 0, 1})) == zp({1}));
  CHECK(reflect(zp({0, 2, 5})) == zp({5, 2}));
  CHECK(reflect(reflect(zp({3, 2, 5}))) == zp({3, 2, 5}));
}

TEST_CASE("hat transform pinned values") {
  CHECK(hat_transform(zp({0, 0, 1})) == zp({0, 0, 1}));
  CHECK(hat_transform(zp({0, -3, 1})) == zp({0, 3, -2}));
  CHECK(hat_transform(zp({0, 3, -2})) == zp({0, -3, 1}));
  CHECK(hat_transform(mp({0, 2, 3}, 4)) == mp({0, 2, 1}, 4));
  CHECK_THROWS_AS(hat_transform(Polynomial<Integer>::zero(Integer(0))),
                  std::invalid_argument);
}

TEST_CASE("hat transform exchange and involution") {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    Polynomial<Integer> p = Polynomial<Integer>::zero(Integer(0));
    do {
      int d = static_cast<int>(rng.range(1, 8));
      std::vector<Integer> cs(static_cast<std::size_t>(d) + 1, Integer(0));
      for (int i = 1; i <= d; ++i)
        cs[static_cast<std::size_t>(i)] = rng.range(-9, 9);
      if (cs[static_cast<std::size_t>(d)] == 0)
        cs[static_cast<std::size_t>(d)] = 1;
      p = Polynomial<Integer>(std::move(cs));
    } while (p(Integer(1)) == 0);
    Polynomial<Integer> h = hat_transform(p);
    CHECK(h(Integer(1)) == p.lead());
    CHECK(h.lead() == p(Integer(1)));
    CHECK(hat_transform(h) == p);
  }
}

TEST_CASE("two-minus transform") {
  CHECK(two_minus_transform(zp({0, 1})) == zp({0, 2, -1}));
  CHECK(two_minus_transform(zp({0, 0, 1})) == zp({0, 4, -4, 1}));
}

TEST_CASE("scale to pi normal form") {
  // Normalizes p(0) to 0 and p(1) to 1 without losing the root.
  CHECK(scale_to_pi(mp({-2, 1}, 3)) == mp({0, 2, 2}, 3));
  CHECK(scale_to_pi(mp({0, 0, 1}, 2)) == mp({0, 0, 0, 1}, 2));
  CHECK(scale_to_pi(qp({Rational(-5), Rational(1)})) ==
        qp({Rational(0), make_rational(5, 4), make_rational(-1, 4)}));
  Polynomial<Rational> s = scale_to_pi(qp({Rational(-5), Rational(1)}));
  CHECK(s(Rational(0)) == 0);
  CHECK(s(Rational(1)) == 1);
  CHECK(s(Rational(5)) == 0);
}

TEST_CASE("content") {
  CHECK(content(zp({0, 4, 6})) == 2);
  CHECK(content(zp({0, -9, 0, -3})) == 3);
  CHECK(content(zp({0, 1})) == 1);
}

TEST_CASE("circle power polynomial") {
  // 1 - (1 - x)^n, the n-fold circle power of x.
  CHECK(circle_power_polynomial(2u, Integer(1)) == zp({0, 2, -1}));
  CHECK(circle_power_polynomial(3u, Integer(1)) == zp({0, 3, -3, 1}));
  CHECK(circle_power_polynomial(1u, Integer(1)) == zp({0, 1}));
  CHECK(circle_power_polynomial(2u, Mod(1, 4)) == mp({0, 2, 3}, 4));
}

TEST_CASE("text round-trip") {
  CHECK(render_polynomial(zp({0, 3, -2})) == "3*x - 2*x^2");
  CHECK(render_polynomial(zp({1, -1})) == "1 - x");
  CHECK(render_polynomial(Polynomial<Integer>::zero(Integer(0))) == "0");
  CHECK(render_polynomial(mp({0, 2, 3}, 4)) == "2*x + 3*x^2");
  CHECK(render_polynomial(qp({Rational(0), make_rational(1, 2)})) == "1/2*x");

  CHECK(to_integer_poly(parse_polynomial("3*x - 2*x^2")) == zp({0, 3, -2}));
  CHECK(to_integer_poly(parse_polynomial("3x-2x^2")) == zp({0, 3, -2}));
  CHECK(to_integer_poly(parse_polynomial("0")) ==
        Polynomial<Integer>::zero(Integer(0)));
  CHECK(parse_polynomial("1/2*x") ==
        qp({Rational(0), make_rational(1, 2)}));
  CHECK_THROWS_AS(parse_polynomial("3**x"), std::invalid_argument);
  CHECK_THROWS_AS(to_integer_poly(parse_polynomial("1/2*x")),
                  std::invalid_argument);

  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    int d = static_cast<int>(rng.range(0, 5));
    std::vector<Integer> cs(static_cast<std::size_t>(d) + 1, Integer(0));
    for (int i = 0; i <= d; ++i)
      cs[static_cast<std::size_t>(i)] = rng.range(-7, 7);
    Polynomial<Integer> p(std::move(cs));
    CHECK(to_integer_poly(parse_polynomial(render_polynomial(p))) == p);
  }
}

}  // TEST_SUITE
