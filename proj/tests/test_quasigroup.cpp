#include <set>
#include <stdexcept>

#include "doctest.h"
#include "ringlab/element.hpp"
#include "ringlab/quasigroup.hpp"
#include "ringlab/ring.hpp"

using namespace ringlab;

namespace {

bool valid_set(const FiniteRing& fr, std::vector<std::uint32_t> els) {
  SubgroupSet s;
  s.elements = std::move(els);
  return subgroup_valid(fr, s);
}

}  // namespace

TEST_SUITE("quasigroup") {

TEST_CASE("subgroup generation") {
  FiniteRing z8(zmod(8));
  SubgroupSet triv = subgroup_generate(z8, {}, false);
  CHECK(triv.elements == std::vector<std::uint32_t>{z8.zero_index()});
  CHECK(subgroup_valid(z8, triv));

  std::uint32_t two = z8.index(from_integer(zmod(8), 2));
  SubgroupSet g2 = subgroup_generate(z8, {two}, false);
  CHECK(g2.elements == std::vector<std::uint32_t>{0, 2});
  CHECK(subgroup_valid(z8, g2));

  FiniteRing m2(matrix_ring(2, zmod(2)));
  SubgroupSet all = subgroup_generate(m2, m2.nilpotents(), false);
  CHECK(all.elements == m2.quasi_regulars());
  CHECK(all.elements.size() == 6);

  // Non-quasi-regular generators are rejected.
  std::uint32_t three = z8.index(from_integer(zmod(8), 3));
  CHECK_THROWS_AS(subgroup_generate(z8, {three}, false),
                  std::invalid_argument);
}

TEST_CASE("normal closure") {
  RingPtr m2r = matrix_ring(2, zmod(2));
  FiniteRing m2(m2r);
  std::uint32_t e12 = m2.index(parse_element("[[0,1],[0,0]]", m2r));
  SubgroupSet plain = subgroup_generate(m2, {e12}, false);
  CHECK(plain.elements.size() == 2);
  SubgroupSet norm = subgroup_generate(m2, {e12}, true);
  CHECK(norm.elements.size() == 6);
  CHECK(norm.normal_closure);
  // Closure under conjugation by every quasi-regular element.
  std::set<std::uint32_t> in(norm.elements.begin(), norm.elements.end());
  for (std::uint32_t q : m2.quasi_regulars())
    for (std::uint32_t s : norm.elements) {
      std::uint32_t conj = m2.circ(m2.circ(q, s), *m2.quasi_inverse(q));
      CHECK(in.count(conj) == 1);
    }
}

TEST_CASE("subgroup validity") {
  FiniteRing z8(zmod(8));
  CHECK(valid_set(z8, {0}));
  CHECK(valid_set(z8, {0, 2}));
  CHECK(valid_set(z8, {0, 2, 4, 6}));
  CHECK_FALSE(valid_set(z8, {0, 2, 4}));  // 2 o 4 = 6 escapes
  CHECK_FALSE(valid_set(z8, {2}));        // missing identity
  CHECK_FALSE(valid_set(z8, {0, 3}));     // 3 not quasi-regular
}

TEST_CASE("subgroup catalogues") {
  FiniteRing z4(zmod(4));
  CHECK(all_subgroups(z4).size() == 2);

  // Q(Z/8) = {0, 2, 4, 6} is a Klein four group: five subgroups.
  FiniteRing z8(zmod(8));
  std::vector<SubgroupSet> subs = all_subgroups(z8);
  CHECK(subs.size() == 5);
  CHECK(subs.front().elements.size() == 1);
  CHECK(subs.back().elements.size() == 4);

  FiniteRing m2(matrix_ring(2, zmod(2)));
  std::vector<SubgroupSet> msubs = all_subgroups(m2);
  CHECK(msubs.size() == 6);  // S3: trivial, three C2, one C3, whole
  std::vector<std::size_t> sizes;
  for (const auto& s : msubs) sizes.push_back(s.elements.size());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 2, 2, 3, 6});
  for (const auto& s : msubs) CHECK(subgroup_valid(m2, s));
}

TEST_CASE("conjugation is a ring automorphism") {
  for (const char* d : {"Z/16", "M2(Z/2)", "M2(Z/3)"}) {
    FiniteRing fr(parse_ring(d));
    for (std::uint32_t r : fr.quasi_regulars()) {
      Certificate c = conjugation_check(fr, r);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("circle identity check on single pairs") {
  FiniteRing z16(zmod(16));
  Certificate c = circ_identity_check(z16.element(2), z16.element(4));
  CHECK(c.pass);
  CHECK(c.instances.size() == 3);

  RingPtr m3 = matrix_ring(2, zmod(3));
  Element a = parse_element("[[0,1],[0,0]]", m3);
  Element b = parse_element("[[0,0],[1,0]]", m3);
  CHECK(circ_identity_check(a, b).pass);

  RingPtr q = rationals();
  CHECK(circ_identity_check(from_rational(q, make_rational(3, 2)),
                            from_rational(q, make_rational(-7, 5)))
            .pass);
  // Both arguments must be quasi-regular.
  CHECK_THROWS_AS(circ_identity_check(from_rational(q, Rational(1)),
                                      from_rational(q, Rational(2))),
                  std::invalid_argument);
}

TEST_CASE("ring closure equivalence over subgroup catalogues") {
  for (const char* d : {"Z/8", "Z/16", "M2(Z/2)", "Z/4 + M2(F2)"}) {
    FiniteRing fr(parse_ring(d));
    if (fr.quasi_regulars().size() > 24) continue;
    for (const SubgroupSet& s : all_subgroups(fr))
      CHECK(subgroup_ring_closure_check(fr, s).pass);
  }
}

TEST_CASE("division subring equivalence in prime characteristic") {
  FiniteRing m2(matrix_ring(2, zmod(2)));
  std::vector<SubgroupSet> subs = all_subgroups(m2);
  unsigned both_true = 0, both_false = 0;
  for (const SubgroupSet& s : subs) {
    CHECK(division_closure_check(m2, s).pass);
    auto [addc, division] = division_closure_pair(m2, s);
    CHECK(addc == division);
    (addc ? both_true : both_false)++;
  }
  CHECK(both_true == 2);   // trivial -> F_2, the C3 -> F_4
  CHECK(both_false == 4);  // three C2's and the whole group

  FiniteRing m3(matrix_ring(2, zmod(3)));
  // |Q(M2(F3))| = 48 > 24, so test a hand-picked subgroup instead: the
  // cyclic subgroup generated by a nilpotent element.
  std::uint32_t e12 =
      m3.index(parse_element("[[0,1],[0,0]]", matrix_ring(2, zmod(3))));
  SubgroupSet s = subgroup_generate(m3, {e12}, false);
  CHECK(s.elements.size() == 3);
  auto [addc, division] = division_closure_pair(m3, s);
  CHECK(addc == division);
  // {0, E12, 2E12} with the scalars adjoined misses E12 + 1, so the
  // union is neither addition-closed nor a division subring.
  CHECK_FALSE(addc);
}

TEST_CASE("signed generator values") {
  SignedGenerator g4{Integer(4), -1};
  CHECK(g4.value() == make_rational(5, 4));
  SignedGenerator g2{Integer(2), 1};
  CHECK(g2.value() == make_rational(3, 2));
  SignedGenerator gm2{Integer(-2), -1};
  CHECK(gm2.value() == make_rational(1, 2));
  CHECK(signed_generators_text({g4, g2}) == "(5/4)^(-1) o (3/2)");
}

TEST_CASE("rational product certificates") {
  std::vector<SignedGenerator> g5 = rational_product_certificate(Rational(5));
  REQUIRE(g5.size() == 1);
  CHECK(g5[0].n == 4);
  CHECK(g5[0].exponent == -1);
  CHECK(circ_product_value(g5) == 5);

  std::vector<SignedGenerator> g13 =
      rational_product_certificate(make_rational(1, 3));
  REQUIRE(g13.size() == 2);
  CHECK(g13[0].n == 2);
  CHECK(g13[0].exponent == -1);
  CHECK(g13[1].n == 3);
  CHECK(g13[1].exponent == 1);
  CHECK(circ_product_value(g13) == make_rational(1, 3));

  CHECK(rational_product_certificate(Rational(0)).empty());
  CHECK(circ_product_value({}) == 0);
  CHECK_THROWS_AS(rational_product_certificate(Rational(1)),
                  std::invalid_argument);

  for (long num = -40; num <= 40; ++num)
    for (long den = 1; den <= 12; ++den) {
      Rational q = make_rational(num, den);
      if (q == 1) continue;
      std::vector<SignedGenerator> gs = rational_product_certificate(q);
      CHECK(gs.size() <= 2);
      CHECK(circ_product_value(gs) == q);
      for (const SignedGenerator& g : gs) CHECK(g.n != 0);
    }
}

}  // TEST_SUITE
