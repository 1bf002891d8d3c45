#include "ringlab/ring.hpp"

#include <cctype>
#include <stdexcept>

namespace ringlab {

namespace {

[[noreturn]] void wrong_kind(const char* what) {
  throw std::invalid_argument(std::string("Ring: ") + what +
                              " queried on the wrong ring kind");
}

}  // namespace

std::int64_t Ring::modulus() const {
  if (kind_ != RingKind::Zmod && kind_ != RingKind::SubringDZn)
    wrong_kind("modulus");
  return raw_.n;
}

std::int64_t Ring::generator() const {
  if (kind_ != RingKind::SubringDZn) wrong_kind("generator");
  return raw_.d;
}

int Ring::dimension() const {
  if (kind_ != RingKind::Matrix) wrong_kind("dimension");
  return raw_.k;
}

const RingPtr& Ring::base() const {
  if (kind_ != RingKind::Matrix && kind_ != RingKind::Unitalization &&
      kind_ != RingKind::PolynomialOver)
    wrong_kind("base");
  return raw_.sub[0];
}

const std::vector<RingPtr>& Ring::parts() const {
  if (kind_ != RingKind::DirectSum) wrong_kind("parts");
  return raw_.sub;
}

const Integer& Ring::prime() const {
  if (kind_ != RingKind::LocalizedAt) wrong_kind("prime");
  return raw_.p;
}

const std::string& Ring::variable() const {
  if (kind_ != RingKind::PolynomialOver) wrong_kind("variable");
  return raw_.var;
}

std::int64_t Ring::unit_modulus() const {
  if (kind_ != RingKind::Unitalization) wrong_kind("unit_modulus");
  return raw_.sub[0]->additive_exponent();
}

const RingPtr& Ring::unit_part() const {
  if (kind_ != RingKind::Unitalization) wrong_kind("unit_part");
  return raw_.sub[1];
}

bool Ring::finite() const {
  switch (kind_) {
    case RingKind::Zmod:
    case RingKind::SubringDZn:
      return true;
    case RingKind::Matrix:
      return base()->finite();
    case RingKind::DirectSum:
      for (const auto& r : raw_.sub)
        if (!r->finite()) return false;
      return true;
    case RingKind::Unitalization:
      return true;  // enforced at construction
    case RingKind::Rationals:
    case RingKind::OddDenominator:
    case RingKind::LocalizedAt:
    case RingKind::LocalizedS:
    case RingKind::PolynomialOver:
      return false;
  }
  return false;
}

Integer Ring::size() const {
  if (!finite())
    throw std::invalid_argument("Ring::size: infinite carrier " + text());
  switch (kind_) {
    case RingKind::Zmod:
      return Integer(raw_.n);
    case RingKind::SubringDZn:
      return Integer(raw_.n / raw_.d);
    case RingKind::Matrix:
      return pow(base()->size(), static_cast<unsigned>(raw_.k) *
                                     static_cast<unsigned>(raw_.k));
    case RingKind::DirectSum: {
      Integer s = 1;
      for (const auto& r : raw_.sub) s *= r->size();
      return s;
    }
    case RingKind::Unitalization:
      return Integer(unit_modulus()) * base()->size();
    default:
      break;
  }
  throw std::logic_error("Ring::size: unhandled kind");
}

std::int64_t Ring::additive_exponent() const {
  switch (kind_) {
    case RingKind::Zmod:
      return raw_.n;
    case RingKind::SubringDZn:
      return raw_.n / raw_.d;
    case RingKind::Matrix:
    case RingKind::PolynomialOver:
      return base()->additive_exponent();
    case RingKind::DirectSum: {
      std::int64_t e = 1;
      for (const auto& r : raw_.sub) {
        std::int64_t f = r->additive_exponent();
        if (f == 0) return 0;
        e = lcm(Integer(e), Integer(f)).get_si();
      }
      return e;
    }
    case RingKind::Unitalization:
      return unit_modulus();
    case RingKind::Rationals:
    case RingKind::OddDenominator:
    case RingKind::LocalizedAt:
    case RingKind::LocalizedS:
      return 0;
  }
  return 0;
}

bool Ring::unital() const {
  switch (kind_) {
    case RingKind::Zmod:
    case RingKind::Rationals:
    case RingKind::LocalizedAt:
    case RingKind::LocalizedS:
    case RingKind::Unitalization:
      return true;
    // dZ/nZ has an identity exactly when d and n/d are coprime (then the
    // CRT solution e = 0 mod d, e = 1 mod n/d acts as 1).
    case RingKind::SubringDZn:
      return gcd(Integer(raw_.d), Integer(raw_.n / raw_.d)) == 1;
    case RingKind::Matrix:
    case RingKind::PolynomialOver:
      return base()->unital();
    case RingKind::DirectSum:
      for (const auto& r : raw_.sub)
        if (!r->unital()) return false;
      return true;
    case RingKind::OddDenominator:
      return false;
  }
  return false;
}

bool Ring::commutative() const {
  switch (kind_) {
    case RingKind::Matrix:
      return false;
    case RingKind::DirectSum:
      for (const auto& r : raw_.sub)
        if (!r->commutative()) return false;
      return true;
    case RingKind::Unitalization:
    case RingKind::PolynomialOver:
      return base()->commutative();
    default:
      return true;
  }
}

std::string Ring::text() const {
  switch (kind_) {
    case RingKind::Zmod:
      return "Z/" + std::to_string(raw_.n);
    case RingKind::SubringDZn:
      return "dZ/nZ(" + std::to_string(raw_.d) + "," + std::to_string(raw_.n) +
             ")";
    case RingKind::Matrix:
      return "M" + std::to_string(raw_.k) + "(" + base()->text() + ")";
    case RingKind::DirectSum: {
      std::string s;
      for (const auto& r : raw_.sub) {
        if (!s.empty()) s += " + ";
        s += r->text();
      }
      return s;
    }
    case RingKind::Rationals:
      return "Q";
    case RingKind::OddDenominator:
      return "OddDen";
    case RingKind::LocalizedAt:
      return "Zloc(" + raw_.p.get_str() + ")";
    case RingKind::LocalizedS:
      return "ZlocS";
    case RingKind::Unitalization:
      return "Unital(" + base()->text() + ")";
    case RingKind::PolynomialOver:
      return base()->text() + "[" + raw_.var + "]";
  }
  return "?";
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.kind_ != b.kind_) return false;
  const Ring::Raw& x = a.raw_;
  const Ring::Raw& y = b.raw_;
  if (x.n != y.n || x.d != y.d || x.k != y.k || x.p != y.p || x.var != y.var)
    return false;
  if (x.sub.size() != y.sub.size()) return false;
  for (std::size_t i = 0; i < x.sub.size(); ++i)
    if (!(*x.sub[i] == *y.sub[i])) return false;
  return true;
}

// --- factories ------------------------------------------------------------

RingPtr zmod(std::int64_t n) {
  if (n < 2 || n >= (std::int64_t{1} << 31))
    throw std::invalid_argument("zmod: modulus out of range");
  Ring::Raw raw;
  raw.kind = RingKind::Zmod;
  raw.n = n;
  return std::make_shared<Ring>(std::move(raw));
}

RingPtr subring_dzn(std::int64_t d, std::int64_t n) {
  if (n < 2 || n >= (std::int64_t{1} << 31))
    throw std::invalid_argument("subring_dzn: modulus out of range");
  if (d < 1 || d > n || n % d != 0)
    throw std::invalid_argument("subring_dzn: d must divide n");
  Ring::Raw raw;
  raw.kind = RingKind::SubringDZn;
  raw.n = n;
  raw.d = d;
  return std::make_shared<Ring>(std::move(raw));
}

RingPtr matrix_ring(int k, RingPtr base) {
  if (k < 2 || k > 4)
    throw std::invalid_argument("matrix_ring: dimension must be 2..4");
  if (!base->commutative())
    throw std::invalid_argument("matrix_ring: base must be commutative");
  if (base->kind() != RingKind::Zmod &&
      base->kind() != RingKind::PolynomialOver)
    throw std::invalid_argument("matrix_ring: unsupported base ring");
  // Polynomial entries are only supported over a prime field, where the
  // base is a domain (nilpotence tests rely on that).
  if (base->kind() == RingKind::PolynomialOver &&
      !is_prime(Integer(base->base()->modulus())))
    throw std::invalid_argument(
        "matrix_ring: polynomial entries need a prime field base");
  Ring::Raw raw;
  raw.kind = RingKind::Matrix;
  raw.k = k;
  raw.sub.push_back(std::move(base));
  return std::make_shared<Ring>(std::move(raw));
}

RingPtr direct_sum(std::vector<RingPtr> parts) {
  if (parts.size() < 2)
    throw std::invalid_argument("direct_sum: need at least two parts");
  Ring::Raw raw;
  raw.kind = RingKind::DirectSum;
  raw.sub = std::move(parts);
  return std::make_shared<Ring>(std::move(raw));
}

RingPtr rationals() {
  Ring::Raw raw;
  raw.kind = RingKind::Rationals;
  return std::make_shared<Ring>(std::move(raw));
}

RingPtr odd_denominator_ring() {
  Ring::Raw raw;
  raw.kind = RingKind::OddDenominator;
  return std::make_shared<Ring>(std::move(raw));
}

RingPtr localized_at(const Integer& p) {
  if (!is_prime(p)) throw std::invalid_argument("localized_at: p must be prime");
  Ring::Raw raw;
  raw.kind = RingKind::LocalizedAt;
  raw.p = p;
  return std::make_shared<Ring>(std::move(raw));
}

RingPtr localized_s_ring() {
  Ring::Raw raw;
  raw.kind = RingKind::LocalizedS;
  return std::make_shared<Ring>(std::move(raw));
}

RingPtr unitalize(RingPtr inner) {
  if (!inner->finite())
    throw std::invalid_argument(
        "unitalize: only finite carriers are supported");
  if (inner->additive_exponent() < 2 ||
      inner->additive_exponent() >= (std::int64_t{1} << 31))
    throw std::invalid_argument("unitalize: additive exponent out of range");
  Ring::Raw raw;
  raw.kind = RingKind::Unitalization;
  std::int64_t c = inner->additive_exponent();
  raw.sub.push_back(std::move(inner));
  raw.sub.push_back(zmod(c));  // carrier of the adjoined integer part
  return std::make_shared<Ring>(std::move(raw));
}

RingPtr polynomial_ring(RingPtr base, std::string var) {
  if (base->kind() != RingKind::Zmod)
    throw std::invalid_argument("polynomial_ring: base must be Z/n");
  if (var.empty()) throw std::invalid_argument("polynomial_ring: empty name");
  for (char c : var)
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw std::invalid_argument("polynomial_ring: bad variable name");
  Ring::Raw raw;
  raw.kind = RingKind::PolynomialOver;
  raw.var = std::move(var);
  raw.sub.push_back(std::move(base));
  return std::make_shared<Ring>(std::move(raw));
}

// --- parsing --------------------------------------------------------------

namespace {

[[noreturn]] void bad_descriptor(const std::string& text) {
  throw std::invalid_argument("parse_ring: bad descriptor: " + text);
}

// Splits on `sep` at parenthesis/bracket depth zero.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::int64_t parse_int(const std::string& s, const std::string& whole) {
  if (s.empty()) bad_descriptor(whole);
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    bad_descriptor(whole);
  }
  if (pos != s.size()) bad_descriptor(whole);
  return v;
}

RingPtr parse_atom(const std::string& s, const std::string& whole);

RingPtr parse_sum(const std::string& s, const std::string& whole) {
  std::vector<std::string> pieces = split_top(s, '+');
  if (pieces.size() == 1) return parse_atom(pieces[0], whole);
  std::vector<RingPtr> parts;
  parts.reserve(pieces.size());
  for (const std::string& piece : pieces)
    parts.push_back(parse_atom(piece, whole));
  return direct_sum(std::move(parts));
}

RingPtr parse_atom(const std::string& s, const std::string& whole) {
  if (s.empty()) bad_descriptor(whole);

  // Optional polynomial-ring suffix "[var]".
  if (s.back() == ']') {
    std::size_t open = s.rfind('[');
    if (open == std::string::npos || open == 0) bad_descriptor(whole);
    std::string var = s.substr(open + 1, s.size() - open - 2);
    RingPtr base = parse_atom(s.substr(0, open), whole);
    return polynomial_ring(std::move(base), var);
  }

  if (s == "Q") return rationals();
  if (s == "OddDen") return odd_denominator_ring();
  if (s == "ZlocS") return localized_s_ring();

  if (s.rfind("Z/", 0) == 0) return zmod(parse_int(s.substr(2), whole));

  if (s.rfind("Zloc(", 0) == 0 && s.back() == ')')
    return localized_at(Integer(parse_int(s.substr(5, s.size() - 6), whole)));

  if (s.rfind("dZ/nZ(", 0) == 0 && s.back() == ')') {
    std::vector<std::string> args = split_top(s.substr(6, s.size() - 7), ',');
    if (args.size() != 2) bad_descriptor(whole);
    return subring_dzn(parse_int(args[0], whole), parse_int(args[1], whole));
  }

  if (s.rfind("Unital(", 0) == 0 && s.back() == ')')
    return unitalize(parse_sum(s.substr(7, s.size() - 8), whole));

  if (s[0] == 'M' && s.size() > 3 &&
      std::isdigit(static_cast<unsigned char>(s[1])) && s[2] == '(' &&
      s.back() == ')')
    return matrix_ring(s[1] - '0', parse_sum(s.substr(3, s.size() - 4), whole));

  // Prime-field shorthand "Fp".
  if (s[0] == 'F' && s.size() > 1) {
    std::int64_t p = parse_int(s.substr(1), whole);
    if (!is_prime(Integer(p))) bad_descriptor(whole);
    return zmod(p);
  }

  bad_descriptor(whole);
}

}  // namespace

RingPtr parse_ring(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) bad_descriptor(text);
  return parse_sum(s, text);
}

}  // namespace ringlab
