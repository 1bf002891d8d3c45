#include <algorithm>

#include "doctest.h"
#include "ringlab/classify.hpp"
#include "ringlab/element.hpp"
#include "ringlab/radical.hpp"
#include "ringlab/ring.hpp"

using namespace ringlab;

namespace {

bool subset(const std::vector<std::uint32_t>& a,
            const std::vector<std::uint32_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST_SUITE("radical") {

TEST_CASE("principal ideals") {
  FiniteRing z6(zmod(6));
  IdealSet i2 = ideal_generated(z6, {z6.index(from_integer(zmod(6), 2))},
                                Sidedness::TwoSided);
  CHECK(i2.elements == std::vector<std::uint32_t>{0, 2, 4});
  CHECK(i2.additive);
  CHECK(i2.left_absorbing);
  CHECK(i2.right_absorbing);

  RingPtr m2 = matrix_ring(2, zmod(2));
  FiniteRing fm(m2);
  std::uint32_t e12 = fm.index(parse_element("[[0,1],[0,0]]", m2));

  // The left ideal of E12 consists of the 4 matrices with zero first
  // column; the two-sided ideal is everything (the ring is simple).
  IdealSet left = ideal_generated(fm, {e12}, Sidedness::Left);
  CHECK(left.elements.size() == 4);
  for (std::uint32_t i : left.elements) {
    Element e = fm.element(i);
    CHECK(is_zero(matrix_entry(e, 0, 0)));
    CHECK(is_zero(matrix_entry(e, 1, 0)));
  }
  IdealSet both = ideal_generated(fm, {e12}, Sidedness::TwoSided);
  CHECK(both.elements.size() == 16);

  IdealSet zero_ideal = ideal_generated(fm, {}, Sidedness::TwoSided);
  CHECK(zero_ideal.elements == std::vector<std::uint32_t>{fm.zero_index()});
}

TEST_CASE("ideal containment with early escape") {
  FiniteRing z8(zmod(8));
  std::vector<char> evens(z8.size(), 0);
  for (std::uint32_t i = 0; i < z8.size(); ++i)
    if (z8.element(i).mod_value().value() % 2 == 0) evens[i] = 1;
  CHECK(ideal_within(z8, {z8.index(from_integer(zmod(8), 2))},
                     Sidedness::TwoSided, evens));
  CHECK_FALSE(ideal_within(z8, {z8.index(from_integer(zmod(8), 1))},
                           Sidedness::TwoSided, evens));
}

TEST_CASE("jacobson radical pinned values") {
  FiniteRing z8(zmod(8));
  IdealSet j8 = jacobson_radical(z8);
  CHECK(j8.elements == std::vector<std::uint32_t>{0, 2, 4, 6});

  FiniteRing z6(zmod(6));
  CHECK(jacobson_radical(z6).elements == std::vector<std::uint32_t>{0});

  FiniteRing z12(zmod(12));
  std::vector<std::string> j12;
  for (std::uint32_t i : jacobson_radical(z12).elements)
    j12.push_back(element_text(z12.element(i)));
  CHECK(j12 == std::vector<std::string>{"0", "6"});

  FiniteRing m2(matrix_ring(2, zmod(2)));
  CHECK(jacobson_radical(m2).elements ==
        std::vector<std::uint32_t>{m2.zero_index()});

  // A nil ring is its own radical.
  FiniteRing dz(subring_dzn(2, 8));
  CHECK(jacobson_radical(dz).elements.size() == dz.size());
}

TEST_CASE("radical chain and finite coincidence") {
  for (const char* d : {"Z/8", "Z/12", "Z/30", "dZ/nZ(2,16)", "M2(Z/2)",
                        "M2(Z/4)", "Z/4 + M2(F2)", "Unital(dZ/nZ(3,9))"}) {
    FiniteRing fr(parse_ring(d));
    RadicalReport rr = radical_report(fr);
    // On finite carriers J = Nil*; the lower radical sits inside both.
    CHECK(rr.jacobson.elements == rr.upper.elements);
    CHECK(subset(rr.lower.elements, rr.upper.elements));
    // Radical elements are quasi-regular; lower-radical ones nilpotent.
    for (std::uint32_t i : rr.jacobson.elements) CHECK(fr.quasi_regular(i));
    for (std::uint32_t i : rr.lower.elements) CHECK(fr.nilpotent(i));
    CHECK(rr.nilpotents == fr.nilpotents());
  }
}

TEST_CASE("commutative carriers collapse the chain to N") {
  for (const char* d : {"Z/8", "Z/12", "Z/36", "dZ/nZ(2,16)", "dZ/nZ(3,9)"}) {
    FiniteRing fr(parse_ring(d));
    RadicalReport rr = radical_report(fr);
    CHECK(rr.lower.elements == fr.nilpotents());
    CHECK(rr.upper.elements == fr.nilpotents());
  }
}

TEST_CASE("prime matrix rings have zero lower radical but nilpotents") {
  FiniteRing m2(matrix_ring(2, zmod(2)));
  RadicalReport rr = radical_report(m2);
  CHECK(rr.lower.elements == std::vector<std::uint32_t>{m2.zero_index()});
  CHECK(rr.upper.elements == std::vector<std::uint32_t>{m2.zero_index()});
  CHECK(rr.nilpotents.size() == 4);
}

TEST_CASE("jacobson maximality") {
  // No strictly larger quasi-regular ideal exists: adjoining any
  // outside element breaks quasi-regularity of the generated ideal.
  for (const char* d : {"Z/8", "Z/12", "M2(Z/2)", "M2(Z/4)"}) {
    FiniteRing fr(parse_ring(d));
    IdealSet j = jacobson_radical(fr);
    std::vector<char> qr_mask(fr.size(), 0);
    for (std::uint32_t i = 0; i < fr.size(); ++i)
      qr_mask[i] = fr.quasi_regular(i) ? 1 : 0;
    std::vector<char> in_j(fr.size(), 0);
    for (std::uint32_t i : j.elements) in_j[i] = 1;
    for (std::uint32_t a = 0; a < fr.size(); ++a) {
      if (in_j[a]) continue;
      std::vector<std::uint32_t> gens = j.elements;
      gens.push_back(a);
      CHECK_FALSE(ideal_within(fr, gens, Sidedness::TwoSided, qr_mask));
    }
  }
}

TEST_CASE("kothe certificates") {
  FiniteRing z8(zmod(8));
  Certificate k8 = kothe_check(z8);
  CHECK(k8.pass);
  CHECK(k8.instances.size() == 8);  // 4 nil left ideals + 4 nil right ideals

  Certificate km = kothe_check(FiniteRing(matrix_ring(2, zmod(2))));
  CHECK(km.pass);
  for (const CertificateInstance& inst : km.instances) CHECK(inst.pass);
}

}  // TEST_SUITE
