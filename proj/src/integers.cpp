#include "ringlab/integers.hpp"

#include <algorithm>

namespace ringlab {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  // Trial division; inputs are small by contract (the library never
  // factors beyond 2^63 magnitude).
  for (Integer d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Factorization factor(const Integer& n) {
  if (n == 0) throw std::invalid_argument("factor: zero has no factorization");
  Factorization f;
  Integer m = n;
  if (m < 0) {
    f.sign = -1;
    m = -m;
  }
  for (Integer d = 2; d * d <= m; ++d) {
    while (m % d == 0) {
      f.primes.push_back(d);
      m /= d;
    }
  }
  if (m > 1) f.primes.push_back(m);
  return f;
}

Integer nth_prime(unsigned i) {
  if (i == 0) throw std::invalid_argument("nth_prime: index is 1-based");
  Integer p = 1;
  for (unsigned found = 0; found < i;) {
    ++p;
    if (is_prime(p)) ++found;
  }
  return p;
}

Integer crt_solve(const std::vector<Integer>& residues,
                  const std::vector<Integer>& moduli) {
  if (residues.size() != moduli.size())
    throw std::invalid_argument("crt_solve: length mismatch");
  Integer k = 0;
  Integer m = 1;  // combined modulus so far
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    const Integer& ni = moduli[i];
    if (ni < 1) throw std::invalid_argument("crt_solve: modulus < 1");
    if (gcd(m, ni) != 1)
      throw std::invalid_argument("crt_solve: moduli not pairwise coprime");
    // Solve k + m*t = residues[i] (mod ni).
    Integer rhs = ((residues[i] - k) % ni + ni) % ni;
    Integer minv;
    if (ni > 1) {
      if (mpz_invert(minv.get_mpz_t(), Integer(m % ni).get_mpz_t(),
                     ni.get_mpz_t()) == 0)
        throw std::invalid_argument("crt_solve: moduli not pairwise coprime");
      Integer t = (rhs * minv) % ni;
      k += m * t;
    }
    m *= ni;
  }
  return ((k % m) + m) % m;
}

bool unit_in_integers(const Integer& x) { return x == 1 || x == -1; }

bool unit_in_zmod(const Integer& x, const Integer& n) {
  if (n < 2) throw std::invalid_argument("unit_in_zmod: modulus < 2");
  return gcd(x, n) == 1;
}

bool unit_in_field(const Rational& x) { return x != 0; }

bool s_class_prime(const Integer& p) { return p == 2 || p % 4 == 1; }

static bool all_prime_factors(const Integer& n, bool (*pred)(const Integer&)) {
  for (const Integer& p : factor(n).primes) {
    if (!pred(p)) return false;
  }
  return true;
}

bool odd_denominator_member(const Rational& q) {
  return denominator(q) % 2 == 1 && numerator(q) % 2 == 0;
}

bool localized_at_member(const Rational& q, const Integer& p) {
  return denominator(q) % p != 0;
}

bool localized_s_member(const Rational& q) {
  return all_prime_factors(denominator(q), &s_class_prime);
}

bool unit_in_localized_at(const Rational& q, const Integer& p) {
  if (!localized_at_member(q, p))
    throw std::invalid_argument("unit_in_localized_at: not a member");
  return q != 0 && numerator(q) % p != 0;
}

bool unit_in_localized_s(const Rational& q) {
  if (!localized_s_member(q))
    throw std::invalid_argument("unit_in_localized_s: not a member");
  return q != 0 && all_prime_factors(numerator(q), &s_class_prime);
}

}  // namespace ringlab
