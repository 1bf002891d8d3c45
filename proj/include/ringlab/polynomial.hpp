#pragma once

// Dense univariate polynomials over an exchangeable coefficient type.
// Coefficient behaviour is supplied by free functions (coeff_is_zero,
// coeff_zero_like, ...) so the same template serves Integer, Rational,
// Mod, and nested Polynomial<C> coefficients.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ringlab/integers.hpp"
#include "ringlab/mod.hpp"

namespace ringlab {

// --- coefficient trait surface -------------------------------------------

inline bool coeff_is_zero(const Integer& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const Mod& c) { return c.value() == 0; }

inline Integer coeff_zero_like(const Integer&) { return Integer(0); }
inline Rational coeff_zero_like(const Rational&) { return Rational(0); }
inline Mod coeff_zero_like(const Mod& c) { return Mod::zero(c.modulus()); }

inline Integer coeff_one_like(const Integer&) { return Integer(1); }
inline Rational coeff_one_like(const Rational&) { return Rational(1); }
inline Mod coeff_one_like(const Mod& c) { return Mod::one(c.modulus()); }

inline std::optional<Integer> coeff_try_inverse(const Integer& c) {
  if (c == 1 || c == -1) return c;
  return std::nullopt;
}
inline std::optional<Rational> coeff_try_inverse(const Rational& c) {
  if (sgn(c) == 0) return std::nullopt;
  return Rational(1) / c;
}
inline std::optional<Mod> coeff_try_inverse(const Mod& c) { return c.inverse(); }

// --- polynomial -----------------------------------------------------------

template <typename C>
class Polynomial {
 public:
  /// Coefficients low to high; trailing zeros are trimmed. At least one
  /// coefficient is required so the zero polynomial still remembers its
  /// coefficient shape (e.g. the modulus of a Mod).
  explicit Polynomial(std::vector<C> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty())
      throw std::invalid_argument("Polynomial: empty coefficient vector");
    trim();
  }

  static Polynomial zero(const C& shape) {
    return Polynomial({coeff_zero_like(shape)});
  }
  static Polynomial one(const C& shape) {
    return Polynomial({coeff_one_like(shape)});
  }
  static Polynomial x(const C& shape) {
    return Polynomial({coeff_zero_like(shape), coeff_one_like(shape)});
  }
  static Polynomial constant(const C& c) { return Polynomial({c}); }

  /// -1 for the zero polynomial.
  int degree() const {
    if (c_.size() == 1 && coeff_is_zero(c_[0])) return -1;
    return static_cast<int>(c_.size()) - 1;
  }

  bool is_zero() const { return degree() < 0; }

  C coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return coeff_zero_like(c_[0]);
    return c_[static_cast<std::size_t>(i)];
  }
  const std::vector<C>& coeffs() const { return c_; }

  C shape() const { return coeff_zero_like(c_[0]); }
  C lead() const { return c_.back(); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<C> r;
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    r.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      r.push_back(a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i)));
    return Polynomial(std::move(r));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<C> r;
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    r.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      r.push_back(a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i)));
    return Polynomial(std::move(r));
  }

  Polynomial operator-() const {
    std::vector<C> r;
    r.reserve(c_.size());
    for (const C& c : c_) r.push_back(-c);
    return Polynomial(std::move(r));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return zero(a.shape());
    std::vector<C> r(a.c_.size() + b.c_.size() - 1, a.shape());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator*(const C& s, const Polynomial& p) {
    std::vector<C> r;
    r.reserve(p.c_.size());
    for (const C& c : p.c_) r.push_back(s * c);
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return false;
    for (int i = 0; i <= a.degree(); ++i)
      if (!(a.coeff(i) == b.coeff(i))) return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  Polynomial pow(unsigned e) const {
    Polynomial r = one(shape());
    Polynomial b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  /// Evaluation in the coefficient ring.
  C operator()(const C& a) const {
    C r = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) r = r * a + c_[i];
    return r;
  }

  /// Substitution p(q).
  Polynomial compose(const Polynomial& q) const {
    Polynomial r = constant(c_.back());
    for (std::size_t i = c_.size() - 1; i-- > 0;)
      r = r * q + constant(c_[i]);
    return r;
  }

 private:
  void trim() {
    while (c_.size() > 1 && coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
};

// Nested-polynomial coefficients, e.g. (F[x])[y].
template <typename C>
bool coeff_is_zero(const Polynomial<C>& p) {
  return p.is_zero();
}
template <typename C>
Polynomial<C> coeff_zero_like(const Polynomial<C>& p) {
  return Polynomial<C>::zero(p.shape());
}
template <typename C>
Polynomial<C> coeff_one_like(const Polynomial<C>& p) {
  return Polynomial<C>::one(p.shape());
}
template <typename C>
std::optional<Polynomial<C>> coeff_try_inverse(const Polynomial<C>& p) {
  if (p.degree() != 0) return std::nullopt;
  auto inv = coeff_try_inverse(p.coeff(0));
  if (!inv) return std::nullopt;
  return Polynomial<C>::constant(*inv);
}

// --- division -------------------------------------------------------------

/// Quotient and remainder; requires an invertible leading coefficient in
/// the divisor.
template <typename C>
std::pair<Polynomial<C>, Polynomial<C>> divide(const Polynomial<C>& a,
                                               const Polynomial<C>& d) {
  if (d.is_zero()) throw std::invalid_argument("divide: zero divisor");
  auto lead_inv = coeff_try_inverse(d.lead());
  if (!lead_inv)
    throw std::invalid_argument("divide: leading coefficient not invertible");
  Polynomial<C> q = Polynomial<C>::zero(a.shape());
  Polynomial<C> r = a;
  while (r.degree() >= d.degree()) {
    int k = r.degree() - d.degree();
    C factor = r.lead() * *lead_inv;
    std::vector<C> mono(static_cast<std::size_t>(k) + 1, a.shape());
    mono.back() = factor;
    Polynomial<C> t(std::move(mono));
    q = q + t;
    r = r - t * d;
  }
  return {q, r};
}

template <typename C>
Polynomial<C> exact_divide(const Polynomial<C>& a, const Polynomial<C>& d) {
  auto [q, r] = divide(a, d);
  if (!r.is_zero())
    throw std::invalid_argument("exact_divide: nonzero remainder");
  return q;
}

// --- transforms -----------------------------------------------------------

/// For p with p(0) = 0 and p(1) = 1, the companion polynomial
/// P = 1 - (1 - p)/(1 - x), which satisfies x + P - x*P = p.
template <typename C>
Polynomial<C> quasi_inverse_witness(const Polynomial<C>& p) {
  const C zero = p.shape();
  const C one = coeff_one_like(zero);
  if (!coeff_is_zero(p(zero)))
    throw std::invalid_argument("quasi_inverse_witness: p(0) != 0");
  if (!coeff_is_zero(static_cast<C>(p(one) - one)))
    throw std::invalid_argument("quasi_inverse_witness: p(1) != 1");
  Polynomial<C> pone = Polynomial<C>::one(zero);
  Polynomial<C> ominus_x = pone - Polynomial<C>::x(zero);
  return pone - exact_divide(pone - p, ominus_x);
}

/// Coefficient reversal with the original degree: x^deg(p) * p(1/x).
template <typename C>
Polynomial<C> reflect(const Polynomial<C>& p) {
  if (p.is_zero()) return p;
  std::vector<C> r(p.coeffs().rbegin(), p.coeffs().rend());
  return Polynomial<C>(std::move(r));
}

/// The cleared-denominator substitution sum_i c_i x^i (x-1)^(deg-i).
/// Exchanges the roles of 0 and 1: the value at 1 becomes the leading
/// coefficient and, when p(1) != 0, the value at 1 of the result is the
/// old leading coefficient.
template <typename C>
Polynomial<C> hat_transform(const Polynomial<C>& p) {
  if (p.is_zero())
    throw std::invalid_argument("hat_transform: zero polynomial");
  int d = p.degree();
  const C zero = p.shape();
  Polynomial<C> xm1 =
      Polynomial<C>::x(zero) - Polynomial<C>::one(zero);
  Polynomial<C> acc = Polynomial<C>::zero(zero);
  // Walk i = d down to 0, maintaining (x-1)^(d-i) incrementally.
  Polynomial<C> shift = Polynomial<C>::one(zero);
  for (int i = d; i >= 0; --i) {
    std::vector<C> mono(static_cast<std::size_t>(i) + 1, zero);
    mono.back() = p.coeff(i);
    acc = acc + Polynomial<C>(std::move(mono)) * shift;
    shift = shift * xm1;
  }
  return acc;
}

/// q(x) = p(2 - x) * x.
template <typename C>
Polynomial<C> two_minus_transform(const Polynomial<C>& p) {
  const C zero = p.shape();
  const C one = coeff_one_like(zero);
  Polynomial<C> two = Polynomial<C>::constant(one + one);
  Polynomial<C> arg = two - Polynomial<C>::x(zero);
  return p.compose(arg) * Polynomial<C>::x(zero);
}

/// r(1)^{-1} * r(x) * x; throws when r(1) is not invertible.
template <typename C>
Polynomial<C> scale_to_pi(const Polynomial<C>& r) {
  const C one = coeff_one_like(r.shape());
  auto inv = coeff_try_inverse(r(one));
  if (!inv)
    throw std::invalid_argument("scale_to_pi: value at 1 not invertible");
  return *inv * (r * Polynomial<C>::x(r.shape()));
}

/// gcd of the integer coefficients (0 for the zero polynomial).
inline Integer content(const Polynomial<Integer>& p) {
  Integer g = 0;
  for (const Integer& c : p.coeffs()) g = gcd(g, c);
  return g;
}

/// 1 - (1-x)^n over the coefficient shape of `one`; vanishes at 0, takes
/// the value 1 at 1 (n >= 1).
template <typename C>
Polynomial<C> circle_power_polynomial(unsigned n, const C& one) {
  const C zero = coeff_zero_like(one);
  Polynomial<C> base =
      Polynomial<C>::one(zero) - Polynomial<C>::x(zero);
  return Polynomial<C>::one(zero) - base.pow(n);
}

// --- coefficient conversions ---------------------------------------------

template <typename C2, typename C, typename F>
Polynomial<C2> map_coefficients(const Polynomial<C>& p, F f) {
  std::vector<C2> r;
  r.reserve(p.coeffs().size());
  for (const C& c : p.coeffs()) r.push_back(f(c));
  return Polynomial<C2>(std::move(r));
}

inline Polynomial<Rational> to_rational_poly(const Polynomial<Integer>& p) {
  return map_coefficients<Rational>(p, [](const Integer& c) { return Rational(c); });
}

/// Integer coefficients of a rational polynomial; throws when any
/// denominator exceeds 1.
inline Polynomial<Integer> to_integer_poly(const Polynomial<Rational>& p) {
  return map_coefficients<Integer>(p, [](const Rational& c) {
    if (denominator(c) != 1)
      throw std::invalid_argument("to_integer_poly: non-integer coefficient");
    return numerator(c);
  });
}

inline Polynomial<Mod> to_mod_poly(const Polynomial<Integer>& p,
                                   std::int64_t modulus) {
  return map_coefficients<Mod>(p, [modulus](const Integer& c) {
    Integer r = c % modulus;
    return Mod(r.get_si(), modulus);
  });
}

}  // namespace ringlab
