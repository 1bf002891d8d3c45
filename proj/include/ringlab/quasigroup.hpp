#pragma once

// The group (Q(R), o) of quasi-regular elements under the circle
// operation: subgroup generation and the structural equivalences tying
// circle-subgroups to subrings and division subrings.

#include <cstdint>
#include <utility>
#include <vector>

#include "ringlab/certificate.hpp"
#include "ringlab/element.hpp"
#include "ringlab/integers.hpp"

namespace ringlab {

struct SubgroupSet {
  std::vector<std::uint32_t> elements;    // ascending, subset of Q(R)
  std::vector<std::uint32_t> generators;  // the requested generators
  bool normal_closure = false;            // closed under conjugation too
};

/// Closure of gens under circle products, quasi-inversion, and (when
/// normal) conjugation x -> q o x o q^(-1) by every q in Q(R). Throws
/// std::invalid_argument when a generator is not quasi-regular.
SubgroupSet subgroup_generate(const FiniteRing& fr,
                              std::vector<std::uint32_t> gens, bool normal);

/// 0 in S, closed under circle products and quasi-inversion.
bool subgroup_valid(const FiniteRing& fr, const SubgroupSet& s);

/// Every subgroup of (Q(R), o), by incremental generator extension.
/// Requires |Q(R)| <= 24.
std::vector<SubgroupSet> all_subgroups(const FiniteRing& fr);

/// Exhaustively verifies that x -> r o x o r^(-1) is an additive,
/// multiplicative bijection of R; on unital carriers also compares it
/// with x -> 1 - (1-r)(1-x)(1-r)^(-1).
Certificate conjugation_check(const FiniteRing& fr, std::uint32_t r);

/// The three circle identities for quasi-regular x, y:
///   xy    = x o (x^(-1) + y^(-1)) o y
///   x + y = x o (x^(-1) y^(-1)) o y
///   -x    = (2 x^(-1)) o x
Certificate circ_identity_check(const Element& x, const Element& y);

/// For a verified subgroup S of Q(R): the predicates "closed under +",
/// "closed under *", and "is a subring" evaluated independently, with
/// their equivalence asserted.
Certificate subgroup_ring_closure_check(const FiniteRing& fr,
                                        const SubgroupSet& s);

/// For unital R of prime characteristic p and subgroup S: the
/// predicates "S together with the prime subring is closed under +" and
/// "S together with the prime subring is a division subring", with
/// their equivalence asserted.
Certificate division_closure_check(const FiniteRing& fr, const SubgroupSet& s);

/// The two predicates behind division_closure_check, as (addition-closed,
/// division-subring). Same preconditions.
std::pair<bool, bool> division_closure_pair(const FiniteRing& fr,
                                            const SubgroupSet& s);

/// One factor (1 + 1/n)^(exponent) of a circle product; exponent is
/// +1 or -1 (quasi-inverse).
struct SignedGenerator {
  Integer n;
  int exponent = 1;
  Rational value() const;  // 1 + 1/n
};

std::string signed_generators_text(const std::vector<SignedGenerator>& gens);

/// The circle product of the generators (quasi-inverting those with
/// exponent -1).
Rational circ_product_value(const std::vector<SignedGenerator>& gens);

/// Writes q != 1 as a circle product of elements 1 + 1/n and their
/// quasi-inverses; at most two factors. Throws std::invalid_argument
/// for q = 1.
std::vector<SignedGenerator> rational_product_certificate(const Rational& q);

}  // namespace ringlab
