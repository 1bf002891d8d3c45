#pragma once

// Radicals of finite carriers: the largest quasi-regular ideal J, the
// largest nil ideal Nil*, the lower nilradical Nil_* (strongly
// nilpotent elements), and principal-ideal machinery supporting them.

#include <cstdint>
#include <vector>

#include "ringlab/certificate.hpp"
#include "ringlab/element.hpp"

namespace ringlab {

enum class Sidedness { Left, Right, TwoSided };

struct IdealSet {
  std::vector<std::uint32_t> elements;  // ascending element indices
  bool additive = true;
  bool left_absorbing = true;
  bool right_absorbing = true;
};

/// Least set containing gens that is closed under +, -, integer
/// multiples, and the chosen one- or two-sided multiplications.
IdealSet ideal_generated(const FiniteRing& fr,
                         const std::vector<std::uint32_t>& gens,
                         Sidedness side);

/// True iff the generated ideal stays inside `good` (indexed by element;
/// escapes early on the first violation).
bool ideal_within(const FiniteRing& fr, const std::vector<std::uint32_t>& gens,
                  Sidedness side, const std::vector<char>& good);

/// J(R) = {a : the principal two-sided ideal of a is quasi-regular}.
/// The set of such a is the largest quasi-regular ideal: a sum of
/// quasi-regular ideals is quasi-regular, so these elements form an
/// ideal and every quasi-regular ideal sits inside it. Ideal-ness and
/// maximality are re-checked exhaustively; violations throw
/// std::logic_error.
IdealSet jacobson_radical(const FiniteRing& fr);

/// Nil*(R) = {a : the principal two-sided ideal of a is nil}; the same
/// largest-ideal argument with "nil" in place of "quasi-regular".
IdealSet upper_nilradical(const FiniteRing& fr);

/// Nil_*(R) via strongly nilpotent elements: the greatest fixed point of
/// Z <- {a in Z \ {0} : a x a in Z for some x}, starting from all
/// nonzero elements; Nil_* is the complement of the surviving set,
/// together with 0.
IdealSet lower_nilradical(const FiniteRing& fr);

/// All three radicals with the containment chain Nil_* in Nil* in J
/// checked, plus the commutative cross-check Nil_* = Nil* = N.
struct RadicalReport {
  IdealSet jacobson;
  IdealSet upper;
  IdealSet lower;
  std::vector<std::uint32_t> nilpotents;
};

RadicalReport radical_report(const FiniteRing& fr);

/// For every a whose principal left (resp. right) ideal is nil, checks
/// that a lies in Nil*; one certificate instance per nil principal
/// one-sided ideal found.
Certificate kothe_check(const FiniteRing& fr);

}  // namespace ringlab
