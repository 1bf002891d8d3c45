#pragma once

// Text form of polynomials: "c0 + c1*x + c2*x^2" with integer or a/b
// coefficients. Rendering skips zero terms and folds signs; parsing is
// whitespace-insensitive and accepts both "2*x" and "2x".

#include <string>

#include "ringlab/polynomial.hpp"

namespace ringlab {

namespace detail {
inline bool coeff_negative(const Integer& c) { return sgn(c) < 0; }
inline bool coeff_negative(const Rational& c) { return sgn(c) < 0; }
inline bool coeff_negative(const Mod&) { return false; }
inline std::string coeff_abs_text(const Integer& c) { return abs(c).get_str(); }
inline std::string coeff_abs_text(const Rational& c) {
  Rational a = abs(c);
  return a.get_str();
}
inline std::string coeff_abs_text(const Mod& c) {
  return std::to_string(c.value());
}
inline bool coeff_abs_is_one(const Integer& c) { return abs(c) == 1; }
inline bool coeff_abs_is_one(const Rational& c) { return abs(c) == 1; }
inline bool coeff_abs_is_one(const Mod& c) { return c.value() == 1; }
}  // namespace detail

template <typename C>
std::string render_polynomial(const Polynomial<C>& p,
                              const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= p.degree(); ++i) {
    C c = p.coeff(i);
    if (coeff_is_zero(c)) continue;
    bool neg = detail::coeff_negative(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mag = detail::coeff_abs_text(c);
    if (i == 0) {
      out += mag;
    } else {
      if (!detail::coeff_abs_is_one(c)) out += mag + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

/// Parses into rational coefficients, the common carrier; convert with
/// to_integer_poly / to_mod_poly as needed. Throws std::invalid_argument
/// on malformed input.
Polynomial<Rational> parse_polynomial(const std::string& text,
                                      const std::string& var = "x");

}  // namespace ringlab
