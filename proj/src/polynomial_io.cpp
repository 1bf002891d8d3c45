#include "ringlab/polynomial_io.hpp"

#include <cctype>
#include <stdexcept>

namespace ringlab {

namespace {

void fail(const std::string& text) {
  throw std::invalid_argument("parse_polynomial: malformed input: " + text);
}

// One term of the stripped input: [coeff][*][var[^exp]].
struct Term {
  Rational coeff;
  unsigned exponent = 0;
};

Term parse_term(const std::string& s, const std::string& var,
                const std::string& whole) {
  if (s.empty()) fail(whole);
  std::size_t i = 0;
  std::string num;
  while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) ||
                          s[i] == '/'))
    num += s[i++];
  Term t;
  bool have_coeff = !num.empty();
  if (have_coeff) {
    try {
      t.coeff = Rational(num);
    } catch (const std::invalid_argument&) {
      fail(whole);
    }
    if (t.coeff.get_den() == 0) fail(whole);
    t.coeff.canonicalize();
  } else {
    t.coeff = 1;
  }
  if (i < s.size() && s[i] == '*') {
    if (!have_coeff) fail(whole);
    ++i;
  }
  if (i == s.size()) {
    if (!have_coeff) fail(whole);
    return t;  // constant term
  }
  if (s.compare(i, var.size(), var) != 0) fail(whole);
  i += var.size();
  t.exponent = 1;
  if (i < s.size()) {
    if (s[i] != '^') fail(whole);
    ++i;
    if (i == s.size()) fail(whole);
    unsigned e = 0;
    while (i < s.size()) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail(whole);
      e = e * 10 + static_cast<unsigned>(s[i] - '0');
      if (e > 4096) fail(whole);
      ++i;
    }
    t.exponent = e;
  }
  return t;
}

}  // namespace

Polynomial<Rational> parse_polynomial(const std::string& text,
                                      const std::string& var) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail(text);

  std::vector<Rational> coeffs(1, Rational(0));
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    } else if (i != 0) {
      fail(text);
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    Term t = parse_term(s.substr(i, j - i), var, text);
    if (t.exponent >= coeffs.size()) coeffs.resize(t.exponent + 1, Rational(0));
    if (sign < 0)
      coeffs[t.exponent] -= t.coeff;
    else
      coeffs[t.exponent] += t.coeff;
    i = j;
  }
  return Polynomial<Rational>(std::move(coeffs));
}

}  // namespace ringlab
