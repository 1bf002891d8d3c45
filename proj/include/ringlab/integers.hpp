#pragma once

// Exact coefficient domains: arbitrary-precision integers and reduced
// rationals (GMP-backed), plus the elementary number theory the rest of
// the library leans on (trial-division factoring, CRT, unit tests in
// Z, Z/n, fields and localizations of Z).
//
// Rationals are kept reduced at all times with positive denominator;
// make_rational is the one entry point that canonicalizes.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringlab {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Integer abs(const Integer& a) {
  Integer r;
  mpz_abs(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline Integer pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Reduced rational with positive denominator. Throws on zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

inline Integer numerator(const Rational& q) { return q.get_num(); }
inline Integer denominator(const Rational& q) { return q.get_den(); }

bool is_prime(const Integer& n);

/// Sign and prime multiset of a nonzero integer, primes ascending with
/// multiplicity. factor(1) = {+, []}. Throws on n = 0.
struct Factorization {
  int sign = 1;
  std::vector<Integer> primes;
};
Factorization factor(const Integer& n);

/// The i-th prime, 1-based: nth_prime(1) = 2.
Integer nth_prime(unsigned i);

/// Smallest k in [0, prod moduli) with k = residues[i] mod moduli[i].
/// Moduli must be pairwise coprime and >= 1; lists of equal length.
Integer crt_solve(const std::vector<Integer>& residues,
                  const std::vector<Integer>& moduli);

// Unit tests per coefficient domain.
bool unit_in_integers(const Integer& x);
bool unit_in_zmod(const Integer& x, const Integer& n);
bool unit_in_field(const Rational& x);

// Localization membership and units. A rational belongs to a localization
// when every prime of its (reduced) denominator satisfies the predicate;
// it is a unit there when the numerator's primes do too.
bool s_class_prime(const Integer& p);  // p = 2 or p = 1 mod 4
bool odd_denominator_member(const Rational& q);   // even numerator, odd denominator
bool localized_at_member(const Rational& q, const Integer& p);
bool localized_s_member(const Rational& q);
bool unit_in_localized_at(const Rational& q, const Integer& p);
bool unit_in_localized_s(const Rational& q);

}  // namespace ringlab
