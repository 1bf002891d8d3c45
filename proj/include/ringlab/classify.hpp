#pragma once

// Membership decisions for the four element classes of a carrier R:
//   N  nilpotents            a^m = 0
//   Q  quasi-regulars        a o a' = a' o a = 0 for some a'
//   pi pi-algebraic          p(a) = 0 with p(0) = 0 and p(1) = 1
//   I  integral              p(a) = 0 with p monic and p(0) = 0
// together with checkable witnesses. Decisions are exact wherever the
// carrier allows; otherwise they degrade to "unknown", never to a wrong
// answer.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ringlab/element.hpp"
#include "ringlab/polynomial.hpp"

namespace ringlab {

enum class Tri { no, yes, unknown };
std::string tri_text(Tri t);

enum class WitnessKind { Pi, Integral, Nil };

/// One checkable claim about one element. For Pi and Integral the claim
/// is carried by a polynomial (integer, mod-n, or rational
/// coefficients); for Nil it is the nilpotency index.
struct Witness {
  using Poly = std::variant<std::monostate, Polynomial<Integer>,
                            Polynomial<Mod>, Polynomial<Rational>>;
  WitnessKind kind = WitnessKind::Nil;
  Poly poly;
  unsigned exponent = 0;

  std::string text() const;
  /// The polynomial as text (empty for Nil witnesses).
  std::string poly_text() const;
};

Witness pi_witness(Polynomial<Integer> p);
Witness pi_witness(Polynomial<Mod> p);
Witness pi_witness(Polynomial<Rational> p);
Witness integral_witness(Polynomial<Integer> p);
Witness integral_witness(Polynomial<Mod> p);
Witness integral_witness(Polynomial<Rational> p);
Witness nil_witness(unsigned exponent);

/// Checks the witness against the element by shape and evaluation:
///  - Pi: p(0) = 0, p(1) = 1, p(a) = 0;
///  - Integral: p monic, p(0) = 0, deg p >= 1, p(a) = 0;
///  - Nil: a^e = 0 and (e = 1 or a^(e-1) != 0).
/// Total: any incompatibility yields false rather than an exception.
bool validate(const Witness& w, const Element& a);

/// The hat transform sum_i c_i x^i (x-1)^(d-i) applied to the carried
/// polynomial, swapping Pi and Integral: a Pi witness for a becomes an
/// Integral witness for the quasi-inverse of a, and conversely.
Witness hat_witness(const Witness& w);

// --- constructions --------------------------------------------------------

/// 1 - (1-x)^n where n is the circle order of a; mod-n coefficients on
/// unital carriers of finite additive exponent, integer coefficients
/// otherwise. Absent exactly when a is not quasi-regular.
std::optional<Witness> pi_witness_finite(const Element& a);

/// The same polynomial from an already-known circle order.
Witness circle_order_pi_witness(const RingPtr& ring, unsigned order);

/// Exact decision for rational q: q = a/b in lowest terms lies in pi(Q)
/// iff |a - b| = 1, with witness (1 - n(x-1))x for n = b*sign(a-b).
bool pi_rational_member(const Rational& q);
std::optional<Witness> pi_rational_witness(const Rational& q);

/// A monic witness with zero constant term for an element of a finite
/// carrier: x^2 - kx on Z/n and dZ/nZ, the characteristic polynomial
/// (shifted by x when needed) on matrices over Z/n, products of
/// component witnesses on direct sums, and a power-repeat x^j - x^i
/// elsewhere. Throws std::invalid_argument off the supported carriers.
Witness integral_witness_finite(const Element& a);

// --- classification -------------------------------------------------------

struct ClassificationReport {
  Element element;
  Tri in_nilpotent = Tri::no;
  Tri in_quasi_regular = Tri::no;
  Tri in_pi = Tri::no;
  Tri in_integral = Tri::no;
  std::optional<Witness> nil_w;
  std::optional<Element> quasi_inverse_value;
  std::optional<Witness> pi_w;
  std::optional<Witness> integral_w;

  explicit ClassificationReport(Element e) : element(std::move(e)) {}
};

/// Classifies one element of any supported carrier.
ClassificationReport classify_element(const Element& a);

/// Full sweep over a finite carrier. Every witness is validated and the
/// containments N inside pi = Q inside I = R are checked; violations
/// throw std::logic_error (they would mean an implementation bug).
struct ClassifiedSets {
  std::vector<std::uint32_t> nilpotent;
  std::vector<Witness> nil_witnesses;          // parallel to nilpotent
  std::vector<std::uint32_t> quasi_regular;
  std::vector<std::uint32_t> quasi_inverses;   // parallel to quasi_regular
  std::vector<std::uint32_t> pi;
  std::vector<Witness> pi_witnesses;           // parallel to pi
  std::vector<std::uint32_t> integral;         // always every element
  std::vector<Witness> integral_witnesses;     // parallel to integral
};

ClassifiedSets classify_sets(const FiniteRing& fr);

}  // namespace ringlab
