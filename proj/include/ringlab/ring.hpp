#pragma once

// Carrier descriptors. A Ring names one of the concrete algebras the
// laboratory works in; elements reference their ring through a shared
// pointer. Descriptors are immutable and structurally comparable, and
// round-trip through the text grammar (see parse_ring).

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ringlab/integers.hpp"

namespace ringlab {

enum class RingKind {
  Zmod,            // Z/n
  SubringDZn,      // dZ/nZ, the multiples of d inside Z/n (d | n)
  Matrix,          // k x k matrices over a base ring
  DirectSum,       // componentwise product of parts
  Rationals,       // Q
  OddDenominator,  // { 2m/(2n-1) : m, n in Z }
  LocalizedAt,     // Z localized at a prime p (denominators coprime to p)
  LocalizedS,      // S^{-1}Z, S generated by 2 and the primes = 1 mod 4
  Unitalization,   // pairs (z, r) adjoining a formal identity to a finite ring
  PolynomialOver,  // univariate polynomials over a base ring
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
 public:
  RingKind kind() const { return kind_; }

  /// Zmod / SubringDZn: the ambient modulus n.
  std::int64_t modulus() const;
  /// SubringDZn: the generator d.
  std::int64_t generator() const;
  /// Matrix: the dimension k.
  int dimension() const;
  /// Matrix / PolynomialOver base, or Unitalization inner ring.
  const RingPtr& base() const;
  /// DirectSum components.
  const std::vector<RingPtr>& parts() const;
  /// LocalizedAt: the prime.
  const Integer& prime() const;
  /// PolynomialOver: the indeterminate's name.
  const std::string& variable() const;
  /// Unitalization: the modulus of the adjoined integer coordinate
  /// (the additive exponent of the inner ring).
  std::int64_t unit_modulus() const;
  /// Unitalization: the Z/c carrier of the adjoined integer coordinate.
  const RingPtr& unit_part() const;

  bool finite() const;
  /// Element count; throws std::invalid_argument for infinite carriers.
  Integer size() const;
  /// Least m >= 1 with m*x = 0 for all x, or 0 when unbounded.
  std::int64_t additive_exponent() const;
  bool unital() const;
  bool commutative() const;

  /// Descriptor text, e.g. "dZ/nZ(2,8)" or "Z/4 + M2(Z/2)".
  std::string text() const;

  friend bool operator==(const Ring& a, const Ring& b);
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

  // Factories (declared below as free functions) use this constructor.
  struct Raw {
    RingKind kind;
    std::int64_t n = 0;
    std::int64_t d = 0;
    int k = 0;
    Integer p;
    std::vector<RingPtr> sub;
    std::string var;
  };
  explicit Ring(Raw raw) : kind_(raw.kind), raw_(std::move(raw)) {}

 private:
  RingKind kind_;
  Raw raw_;
};

RingPtr zmod(std::int64_t n);
RingPtr subring_dzn(std::int64_t d, std::int64_t n);
RingPtr matrix_ring(int k, RingPtr base);
RingPtr direct_sum(std::vector<RingPtr> parts);
RingPtr rationals();
RingPtr odd_denominator_ring();
RingPtr localized_at(const Integer& p);
RingPtr localized_s_ring();
/// Adjoins an identity to a finite ring as pairs (z, r) with z taken
/// modulo the inner ring's additive exponent.
RingPtr unitalize(RingPtr inner);
RingPtr polynomial_ring(RingPtr base, std::string var = "t");

/// Grammar: "Z/8", "dZ/nZ(2,8)", "M2(Z/2)", "M2(F3)", "F3[t]",
/// "M2(F2[t])", "Z/4 + M2(F2)" (direct sum), "Q", "OddDen", "Zloc(5)",
/// "ZlocS", "Unital(dZ/nZ(2,8))". Throws std::invalid_argument.
RingPtr parse_ring(const std::string& text);

}  // namespace ringlab
