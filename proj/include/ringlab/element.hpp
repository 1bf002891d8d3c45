#pragma once

// Elements of the concrete carriers and the quasi-multiplication
// calculus on them. Everything here is exact; operations never assume
// the carrier has an identity unless they ask for one.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ringlab/mod.hpp"
#include "ringlab/polynomial.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

class Element {
 public:
  // Mod: Zmod and SubringDZn values.
  // Rational: the four rational carriers.
  // vector<Element>: Matrix (row-major, k*k entries), DirectSum (one per
  // part), Unitalization ([0] = adjoined integer as a Zmod element,
  // [1] = inner element), PolynomialOver (dense coefficients, low to
  // high, trailing zeros trimmed, empty = zero).
  using Payload = std::variant<Mod, Rational, std::vector<Element>>;

  Element(RingPtr ring, Payload payload);

  const RingPtr& ring() const { return ring_; }
  const Payload& payload() const { return payload_; }
  const Mod& mod_value() const;
  const Rational& rational_value() const;
  const std::vector<Element>& children() const;

 private:
  RingPtr ring_;
  Payload payload_;
};

bool operator==(const Element& a, const Element& b);
inline bool operator!=(const Element& a, const Element& b) { return !(a == b); }

// --- construction ---------------------------------------------------------

Element zero(const RingPtr& ring);
/// The identity, when the carrier has one.
std::optional<Element> one(const RingPtr& ring);
/// From an integer value: Zmod / SubringDZn (value mod n, membership
/// checked) and the rational carriers.
Element from_integer(const RingPtr& ring, const Integer& value);
Element from_rational(const RingPtr& ring, const Rational& value);
Element make_matrix(const RingPtr& ring, std::vector<Element> entries);
Element make_tuple(const RingPtr& ring, std::vector<Element> parts);
Element make_unital_pair(const RingPtr& ring, const Integer& z,
                         Element inner);
/// Into a PolynomialOver carrier from base-ring coefficients.
Element make_polynomial_element(const RingPtr& ring,
                                std::vector<Element> coeffs);
/// r embedded into Unitalization(R) as (0, r).
Element embed_unital(const RingPtr& unital_ring, const Element& r);

// --- ring operations ------------------------------------------------------

bool is_zero(const Element& a);
Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element neg(const Element& a);
Element mul(const Element& a, const Element& b);
Element int_mul(const Integer& k, const Element& a);

/// a + b - ab.
Element circ(const Element& a, const Element& b);

/// Exact in every supported carrier: absence means no quasi-inverse
/// exists. Finite carriers walk the circle-power cycle; rational
/// carriers use q/(q-1) plus a membership check; matrices over an
/// infinite base use the nilpotent geometric series or the adjugate of
/// 1 - A.
std::optional<Element> quasi_inverse(const Element& a);

/// n-fold circle power (n may be negative for quasi-regular a).
Element circ_power(const Element& a, const Integer& n);

/// Least n >= 1 with the n-th circle power equal to 0.
std::optional<unsigned> circ_order(const Element& a);

/// Least n >= 1 with a^n = 0.
std::optional<unsigned> nilpotency_index(const Element& a);

// --- matrices -------------------------------------------------------------

Element matrix_entry(const Element& m, int i, int j);
Element trace(const Element& m);
/// Cofactor-expansion determinant (commutative base).
Element det(const Element& m);
/// det(x*I - A) for matrices over Z/n, as a polynomial mod n.
Polynomial<Mod> charpoly(const Element& m);

// --- polynomial evaluation (nonunital Horner) ----------------------------

/// All three require p(0) = 0; coefficients act through the additive
/// structure. Mod coefficients require the carrier's additive exponent
/// to divide the modulus; rational coefficients require a rational
/// carrier.
Element eval_nonunital(const Polynomial<Integer>& p, const Element& a);
Element eval_nonunital(const Polynomial<Mod>& p, const Element& a);
Element eval_nonunital(const Polynomial<Rational>& p, const Element& a);

// --- enumeration and text -------------------------------------------------

/// Deterministic lexicographic order; throws on infinite carriers and on
/// carriers larger than 2^20.
std::vector<Element> enumerate_ring(const RingPtr& ring);

/// Flattened integer key; defined for the finite carriers (Mod-based
/// payloads). Lexicographic key order equals enumeration order.
std::vector<std::int64_t> element_key(const Element& a);

std::string element_text(const Element& a);

/// Literals: integers; "a/b"; "[[a,b],[c,d]]" row-major matrices;
/// "(x|y)" direct-sum tuples and unitalization pairs; polynomial text
/// for polynomial carriers (and matrix entries over them).
Element parse_element(const std::string& text, const RingPtr& ring);

// --- finite-ring operation tables ----------------------------------------

/// Dense index-based tables for exhaustive sweeps. Built once per ring;
/// capped at 1024 elements.
class FiniteRing {
 public:
  explicit FiniteRing(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  std::uint32_t size() const { return n_; }
  const Element& element(std::uint32_t i) const { return elems_[i]; }
  std::uint32_t index(const Element& a) const;

  std::uint32_t add(std::uint32_t i, std::uint32_t j) const {
    return add_[i * n_ + j];
  }
  std::uint32_t mul(std::uint32_t i, std::uint32_t j) const {
    return mul_[i * n_ + j];
  }
  std::uint32_t neg(std::uint32_t i) const { return neg_[i]; }
  std::uint32_t sub(std::uint32_t i, std::uint32_t j) const {
    return add(i, neg(j));
  }
  std::uint32_t circ(std::uint32_t i, std::uint32_t j) const {
    return sub(add(i, j), mul(i, j));
  }

  std::uint32_t zero_index() const { return zero_; }
  std::optional<std::uint32_t> one_index() const { return one_; }

  /// Quasi-inverse by circle-cycle walk, cached.
  std::optional<std::uint32_t> quasi_inverse(std::uint32_t i) const;
  /// Circle order (least n with the n-th circle power 0), cached.
  std::optional<std::uint32_t> circ_order(std::uint32_t i) const;
  bool quasi_regular(std::uint32_t i) const {
    return quasi_inverse(i).has_value();
  }
  bool nilpotent(std::uint32_t i) const;
  std::optional<std::uint32_t> nil_index(std::uint32_t i) const;

  /// All indices of quasi-regular elements, in enumeration order.
  const std::vector<std::uint32_t>& quasi_regulars() const;
  /// All indices of nilpotent elements, in enumeration order.
  const std::vector<std::uint32_t>& nilpotents() const;

 private:
  void ensure_cycles(std::uint32_t i) const;

  RingPtr ring_;
  std::uint32_t n_ = 0;
  std::vector<Element> elems_;
  std::map<std::vector<std::int64_t>, std::uint32_t> index_;
  std::vector<std::uint32_t> add_, mul_, neg_;
  std::uint32_t zero_ = 0;
  std::optional<std::uint32_t> one_;
  // lazily filled caches
  mutable std::vector<std::int8_t> cycle_done_;
  mutable std::vector<std::optional<std::uint32_t>> qinv_, order_, nilidx_;
  mutable std::optional<std::vector<std::uint32_t>> qlist_, nlist_;
};

}  // namespace ringlab
