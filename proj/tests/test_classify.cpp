#include <stdexcept>

#include "doctest.h"
#include "ringlab/classify.hpp"
#include "ringlab/element.hpp"
#include "ringlab/ring.hpp"

using namespace ringlab;

TEST_SUITE("classify") {

TEST_CASE("witness validation is total") {
  RingPtr r = zmod(6);
  Element two = from_integer(r, 2);

  Witness w = pi_witness(Polynomial<Mod>({Mod(0, 6), Mod(2, 6), Mod(5, 6)}));
  CHECK(validate(w, two));                        // 2*2 + 5*4 = 24 = 0
  CHECK_FALSE(validate(w, from_integer(r, 3)));   // 6 + 45 = 51 = 3

  // A witness that fails its own side conditions validates nowhere.
  Witness bad = pi_witness(Polynomial<Integer>({Integer(0), Integer(2)}));
  CHECK_FALSE(validate(bad, two));  // p(1) = 2 != 1

  // Shape mismatch degrades to false, never throws.
  Witness wrong_carrier =
      pi_witness(Polynomial<Rational>({Rational(0), Rational(2),
                                       Rational(-1)}));
  CHECK_FALSE(validate(wrong_carrier, two));

  Witness nw = nil_witness(3);
  CHECK(validate(nw, from_integer(zmod(8), 2)));   // 8 | 2^3, not 2^2
  CHECK_FALSE(validate(nw, from_integer(zmod(8), 4)));  // index is 2
  CHECK_FALSE(validate(nil_witness(0), two));
}

TEST_CASE("circle-order witness on finite carriers") {
  auto w = pi_witness_finite(from_integer(zmod(4), 2));
  REQUIRE(w.has_value());
  CHECK(w->kind == WitnessKind::Pi);
  CHECK(w->poly_text() == "2*x + 3*x^2");
  CHECK(validate(*w, from_integer(zmod(4), 2)));

  auto wm = pi_witness_finite(
      parse_element("[[0,1],[0,0]]", matrix_ring(2, zmod(2))));
  REQUIRE(wm.has_value());
  CHECK(wm->poly_text() == "x^2");
  CHECK(validate(*wm, parse_element("[[0,1],[0,0]]", matrix_ring(2, zmod(2)))));

  // Absent exactly off the quasi-regular set.
  CHECK_FALSE(pi_witness_finite(from_integer(zmod(6), 3)).has_value());
  CHECK_FALSE(pi_witness_finite(from_integer(zmod(6), 1)).has_value());

  FiniteRing fr(zmod(36));
  for (std::uint32_t i = 0; i < fr.size(); ++i) {
    auto wi = pi_witness_finite(fr.element(i));
    CHECK(wi.has_value() == fr.quasi_regular(i));
    if (wi) CHECK(validate(*wi, fr.element(i)));
  }
}

TEST_CASE("rational pi membership") {
  CHECK(pi_rational_member(make_rational(3, 2)));
  CHECK(pi_rational_member(Rational(0)));
  CHECK(pi_rational_member(Rational(2)));
  CHECK(pi_rational_member(make_rational(1, 2)));
  CHECK_FALSE(pi_rational_member(make_rational(-1, 2)));  // |-1 - 2| = 3
  CHECK_FALSE(pi_rational_member(make_rational(5, 3)));
  CHECK_FALSE(pi_rational_member(Rational(1)));
  CHECK_FALSE(pi_rational_member(Rational(-1)));  // |-1 - 1| = 2

  Witness w32 = *pi_rational_witness(make_rational(3, 2));
  CHECK(w32.poly_text() == "3*x - 2*x^2");
  CHECK(validate(w32, from_rational(rationals(), make_rational(3, 2))));

  Witness w0 = *pi_rational_witness(Rational(0));
  CHECK(w0.poly_text() == "x^2");

  CHECK_FALSE(pi_rational_witness(make_rational(5, 3)).has_value());

  // Exhaustive against the closed form |a - b| = 1 on a small window.
  for (long a = -30; a <= 30; ++a)
    for (long b = 1; b <= 30; ++b) {
      if (gcd(Integer(std::abs(a)), Integer(b)) != 1) continue;
      Rational q = make_rational(a, b);
      CHECK(pi_rational_member(q) == (std::abs(a - b) == 1));
      auto w = pi_rational_witness(q);
      CHECK(w.has_value() == pi_rational_member(q));
      if (w) CHECK(validate(*w, from_rational(rationals(), q)));
    }
}

TEST_CASE("hat witness swaps pi and integral") {
  Witness pw = *pi_rational_witness(make_rational(3, 2));
  Witness hw = hat_witness(pw);
  CHECK(hw.kind == WitnessKind::Integral);
  CHECK(hw.poly_text() == "-3*x + x^2");
  // The quasi-inverse of 3/2 is (3/2)/(1/2) = 3, and the hat of its
  // pi-witness integrally annihilates it.
  CHECK(validate(hw, from_rational(rationals(), Rational(3))));
  CHECK(hat_witness(hw).kind == WitnessKind::Pi);
  CHECK_THROWS_AS(hat_witness(nil_witness(2)), std::invalid_argument);
}

TEST_CASE("integral witnesses on finite carriers") {
  Witness w = integral_witness_finite(from_integer(zmod(8), 2));
  CHECK(w.kind == WitnessKind::Integral);
  CHECK(w.poly_text() == "-2*x + x^2");
  CHECK(validate(w, from_integer(zmod(8), 2)));

  Element d20 = parse_element("[[2,0],[0,0]]", matrix_ring(2, zmod(3)));
  Witness wm = integral_witness_finite(d20);
  CHECK(validate(wm, d20));

  // Every element of every small carrier gets a valid one.
  for (const char* d : {"Z/24", "dZ/nZ(2,16)", "M2(Z/4)", "Z/4 + M2(F2)"}) {
    RingPtr r = parse_ring(d);
    for (const Element& e : enumerate_ring(r)) {
      Witness we = integral_witness_finite(e);
      CHECK(validate(we, e));
    }
  }
}

TEST_CASE("single-element classification") {
  ClassificationReport r2 = classify_element(from_integer(zmod(6), 2));
  CHECK(r2.in_nilpotent == Tri::no);
  CHECK(r2.in_quasi_regular == Tri::yes);
  CHECK(r2.in_pi == Tri::yes);
  CHECK(r2.in_integral == Tri::yes);
  REQUIRE(r2.quasi_inverse_value.has_value());
  CHECK(element_text(*r2.quasi_inverse_value) == "2");
  REQUIRE(r2.pi_w.has_value());
  CHECK(validate(*r2.pi_w, from_integer(zmod(6), 2)));

  ClassificationReport r3 = classify_element(from_integer(zmod(6), 3));
  CHECK(r3.in_nilpotent == Tri::no);
  CHECK(r3.in_quasi_regular == Tri::no);
  CHECK(r3.in_pi == Tri::no);
  CHECK(r3.in_integral == Tri::yes);
  CHECK_FALSE(r3.pi_w.has_value());

  ClassificationReport rh =
      classify_element(from_rational(rationals(), make_rational(1, 2)));
  CHECK(rh.in_nilpotent == Tri::no);
  CHECK(rh.in_quasi_regular == Tri::yes);
  CHECK(rh.in_pi == Tri::yes);
  CHECK(rh.in_integral == Tri::no);  // 1/2 is not an algebraic integer
  CHECK(rh.pi_w->poly_text() == "-x + 2*x^2");
  CHECK(element_text(*rh.quasi_inverse_value) == "-1");

  ClassificationReport rz =
      classify_element(from_integer(zmod(8), 0));
  CHECK(rz.in_nilpotent == Tri::yes);
  CHECK(rz.nil_w->exponent == 1);
}

TEST_CASE("full classification of small carriers") {
  FiniteRing z4(zmod(4));
  ClassifiedSets c4 = classify_sets(z4);
  CHECK(c4.nilpotent == std::vector<std::uint32_t>{0, 2});
  CHECK(c4.quasi_regular == std::vector<std::uint32_t>{0, 2});
  CHECK(c4.pi == std::vector<std::uint32_t>{0, 2});
  CHECK(c4.integral.size() == 4);

  FiniteRing z6(zmod(6));
  ClassifiedSets c6 = classify_sets(z6);
  CHECK(c6.nilpotent == std::vector<std::uint32_t>{0});
  CHECK(c6.quasi_regular == std::vector<std::uint32_t>{0, 2});
  CHECK(c6.pi == std::vector<std::uint32_t>{0, 2});

  FiniteRing m2(matrix_ring(2, zmod(2)));
  ClassifiedSets cm = classify_sets(m2);
  CHECK(cm.nilpotent.size() == 4);
  CHECK(cm.quasi_regular.size() == 6);
  CHECK(cm.pi.size() == 6);
  CHECK(cm.integral.size() == 16);

  // Parallel witness arrays stay aligned and valid.
  for (std::size_t i = 0; i < cm.pi.size(); ++i)
    CHECK(validate(cm.pi_witnesses[i], m2.element(cm.pi[i])));
  for (std::size_t i = 0; i < cm.quasi_regular.size(); ++i) {
    std::uint32_t a = cm.quasi_regular[i];
    std::uint32_t b = cm.quasi_inverses[i];
    CHECK(m2.circ(a, b) == m2.zero_index());
    CHECK(m2.circ(b, a) == m2.zero_index());
  }
}

TEST_CASE("classification containments as properties") {
  // N inside pi = Q on every carrier of a small sweep, all witnesses
  // validated by classify_sets itself (it throws on any violation).
  for (const char* d : {"Z/16", "Z/30", "dZ/nZ(3,9)", "M2(Z/3)",
                        "Unital(dZ/nZ(2,8))"}) {
    FiniteRing fr(parse_ring(d));
    ClassifiedSets cs = classify_sets(fr);
    CHECK(cs.pi == cs.quasi_regular);
    for (std::uint32_t n : cs.nilpotent) {
      bool in_pi = false;
      for (std::uint32_t p : cs.pi) in_pi = in_pi || p == n;
      CHECK(in_pi);
    }
    CHECK(cs.integral.size() == fr.size());
  }
}

TEST_CASE("circle order witness from a known order") {
  Witness w = circle_order_pi_witness(zmod(4), 2);
  CHECK(w.poly_text() == "2*x + 3*x^2");
  CHECK(validate(w, from_integer(zmod(4), 2)));
}

}  // TEST_SUITE
