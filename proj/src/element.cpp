#include "ringlab/element.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "ringlab/polynomial_io.hpp"

namespace ringlab {

namespace {

constexpr std::int64_t kEnumerationCap = std::int64_t{1} << 20;

[[noreturn]] void bad_element(const std::string& why) {
  throw std::invalid_argument("Element: " + why);
}

bool rational_member(const Rational& q, const Ring& ring) {
  switch (ring.kind()) {
    case RingKind::Rationals:
      return true;
    case RingKind::OddDenominator:
      return odd_denominator_member(q);
    case RingKind::LocalizedAt:
      return localized_at_member(q, ring.prime());
    case RingKind::LocalizedS:
      return localized_s_member(q);
    default:
      return false;
  }
}

bool is_rational_kind(RingKind k) {
  return k == RingKind::Rationals || k == RingKind::OddDenominator ||
         k == RingKind::LocalizedAt || k == RingKind::LocalizedS;
}

void trim_poly_children(std::vector<Element>& cs);

}  // namespace

// --- Element basics -------------------------------------------------------

Element::Element(RingPtr ring, Payload payload)
    : ring_(std::move(ring)), payload_(std::move(payload)) {
  if (!ring_) bad_element("null ring");
  switch (ring_->kind()) {
    case RingKind::Zmod:
    case RingKind::SubringDZn: {
      if (!std::holds_alternative<Mod>(payload_)) bad_element("expected Mod");
      const Mod& m = std::get<Mod>(payload_);
      if (m.modulus() != ring_->modulus()) bad_element("modulus mismatch");
      if (ring_->kind() == RingKind::SubringDZn &&
          m.value() % ring_->generator() != 0)
        bad_element("value outside dZ/nZ");
      break;
    }
    case RingKind::Rationals:
    case RingKind::OddDenominator:
    case RingKind::LocalizedAt:
    case RingKind::LocalizedS: {
      if (!std::holds_alternative<Rational>(payload_))
        bad_element("expected rational payload");
      Rational& q = std::get<Rational>(payload_);
      q.canonicalize();
      if (!rational_member(q, *ring_))
        bad_element("value outside carrier " + ring_->text());
      break;
    }
    case RingKind::Matrix: {
      const auto& cs = std::get<std::vector<Element>>(payload_);
      std::size_t k = static_cast<std::size_t>(ring_->dimension());
      if (cs.size() != k * k) bad_element("matrix entry count");
      for (const Element& c : cs)
        if (!(*c.ring() == *ring_->base())) bad_element("matrix entry ring");
      break;
    }
    case RingKind::DirectSum: {
      const auto& cs = std::get<std::vector<Element>>(payload_);
      const auto& parts = ring_->parts();
      if (cs.size() != parts.size()) bad_element("tuple arity");
      for (std::size_t i = 0; i < cs.size(); ++i)
        if (!(*cs[i].ring() == *parts[i])) bad_element("tuple component ring");
      break;
    }
    case RingKind::Unitalization: {
      const auto& cs = std::get<std::vector<Element>>(payload_);
      if (cs.size() != 2) bad_element("unitalization pair arity");
      if (!std::holds_alternative<Mod>(cs[0].payload()) ||
          std::get<Mod>(cs[0].payload()).modulus() != ring_->unit_modulus())
        bad_element("unitalization integer part");
      if (!(*cs[1].ring() == *ring_->base()))
        bad_element("unitalization inner ring");
      break;
    }
    case RingKind::PolynomialOver: {
      auto& cs = std::get<std::vector<Element>>(payload_);
      for (const Element& c : cs)
        if (!(*c.ring() == *ring_->base()))
          bad_element("polynomial coefficient ring");
      trim_poly_children(cs);
      break;
    }
  }
}

const Mod& Element::mod_value() const {
  if (!std::holds_alternative<Mod>(payload_)) bad_element("not a Mod payload");
  return std::get<Mod>(payload_);
}

const Rational& Element::rational_value() const {
  if (!std::holds_alternative<Rational>(payload_))
    bad_element("not a rational payload");
  return std::get<Rational>(payload_);
}

const std::vector<Element>& Element::children() const {
  if (!std::holds_alternative<std::vector<Element>>(payload_))
    bad_element("payload has no children");
  return std::get<std::vector<Element>>(payload_);
}

namespace {

void require_same_ring(const Element& a, const Element& b) {
  if (!(*a.ring() == *b.ring()))
    throw std::invalid_argument("Element: carrier mismatch (" +
                                a.ring()->text() + " vs " + b.ring()->text() +
                                ")");
}

}  // namespace

bool is_zero(const Element& a) {
  switch (a.ring()->kind()) {
    case RingKind::Zmod:
    case RingKind::SubringDZn:
      return a.mod_value().value() == 0;
    case RingKind::Rationals:
    case RingKind::OddDenominator:
    case RingKind::LocalizedAt:
    case RingKind::LocalizedS:
      return sgn(a.rational_value()) == 0;
    default: {
      for (const Element& c : a.children())
        if (!is_zero(c)) return false;
      return true;
    }
  }
}

bool operator==(const Element& a, const Element& b) {
  require_same_ring(a, b);
  if (a.payload().index() != b.payload().index()) return false;
  if (std::holds_alternative<Mod>(a.payload()))
    return a.mod_value() == b.mod_value();
  if (std::holds_alternative<Rational>(a.payload()))
    return a.rational_value() == b.rational_value();
  const auto& x = a.children();
  const auto& y = b.children();
  if (x.size() != y.size()) return false;  // trimmed polynomial coefficients
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x[i] == y[i])) return false;
  return true;
}

// --- construction ---------------------------------------------------------

Element zero(const RingPtr& ring) {
  switch (ring->kind()) {
    case RingKind::Zmod:
    case RingKind::SubringDZn:
      return Element(ring, Mod::zero(ring->modulus()));
    case RingKind::Rationals:
    case RingKind::OddDenominator:
    case RingKind::LocalizedAt:
    case RingKind::LocalizedS:
      return Element(ring, Rational(0));
    case RingKind::Matrix: {
      std::size_t k = static_cast<std::size_t>(ring->dimension());
      std::vector<Element> cs(k * k, zero(ring->base()));
      return Element(ring, std::move(cs));
    }
    case RingKind::DirectSum: {
      std::vector<Element> cs;
      for (const auto& p : ring->parts()) cs.push_back(zero(p));
      return Element(ring, std::move(cs));
    }
    case RingKind::Unitalization: {
      std::vector<Element> cs;
      cs.push_back(Element(ring->unit_part(), Mod::zero(ring->unit_modulus())));
      cs.push_back(zero(ring->base()));
      return Element(ring, std::move(cs));
    }
    case RingKind::PolynomialOver:
      return Element(ring, std::vector<Element>{});
  }
  throw std::logic_error("zero: unhandled kind");
}

std::optional<Element> one(const RingPtr& ring) {
  if (!ring->unital()) return std::nullopt;
  switch (ring->kind()) {
    case RingKind::Zmod:
      return Element(ring, Mod::one(ring->modulus()));
    case RingKind::SubringDZn: {
      // The identity solves e = 0 mod d, e = 1 mod n/d (coprime by the
      // unitality test).
      Integer e = crt_solve({Integer(0), Integer(1)},
                            {Integer(ring->generator()),
                             Integer(ring->modulus() / ring->generator())});
      return Element(ring, Mod(e.get_si(), ring->modulus()));
    }
    case RingKind::Rationals:
    case RingKind::LocalizedAt:
    case RingKind::LocalizedS:
      return Element(ring, Rational(1));
    case RingKind::Matrix: {
      int k = ring->dimension();
      Element z = zero(ring->base());
      Element o = *one(ring->base());
      std::vector<Element> cs;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) cs.push_back(i == j ? o : z);
      return Element(ring, std::move(cs));
    }
    case RingKind::DirectSum: {
      std::vector<Element> cs;
      for (const auto& p : ring->parts()) cs.push_back(*one(p));
      return Element(ring, std::move(cs));
    }
    case RingKind::Unitalization: {
      std::vector<Element> cs;
      cs.push_back(Element(ring->unit_part(), Mod::one(ring->unit_modulus())));
      cs.push_back(zero(ring->base()));
      return Element(ring, std::move(cs));
    }
    case RingKind::PolynomialOver:
      return Element(ring, std::vector<Element>{*one(ring->base())});
    default:
      break;
  }
  return std::nullopt;
}

Element from_integer(const RingPtr& ring, const Integer& value) {
  switch (ring->kind()) {
    case RingKind::Zmod:
    case RingKind::SubringDZn: {
      Integer r = value % ring->modulus();
      return Element(ring, Mod(r.get_si(), ring->modulus()));
    }
    case RingKind::Rationals:
    case RingKind::OddDenominator:
    case RingKind::LocalizedAt:
    case RingKind::LocalizedS:
      return Element(ring, Rational(value));
    default:
      bad_element("from_integer: unsupported carrier " + ring->text());
  }
}

Element from_rational(const RingPtr& ring, const Rational& value) {
  if (!is_rational_kind(ring->kind()))
    bad_element("from_rational: not a rational carrier");
  return Element(ring, value);
}

Element make_matrix(const RingPtr& ring, std::vector<Element> entries) {
  if (ring->kind() != RingKind::Matrix) bad_element("make_matrix: not M_k");
  return Element(ring, std::move(entries));
}

Element make_tuple(const RingPtr& ring, std::vector<Element> parts) {
  if (ring->kind() != RingKind::DirectSum)
    bad_element("make_tuple: not a direct sum");
  return Element(ring, std::move(parts));
}

Element make_unital_pair(const RingPtr& ring, const Integer& z,
                         Element inner) {
  if (ring->kind() != RingKind::Unitalization)
    bad_element("make_unital_pair: not a unitalization");
  Integer r = z % ring->unit_modulus();
  std::vector<Element> cs;
  cs.push_back(
      Element(ring->unit_part(), Mod(r.get_si(), ring->unit_modulus())));
  cs.push_back(std::move(inner));
  return Element(ring, std::move(cs));
}

Element make_polynomial_element(const RingPtr& ring,
                                std::vector<Element> coeffs) {
  if (ring->kind() != RingKind::PolynomialOver)
    bad_element("make_polynomial_element: not a polynomial ring");
  return Element(ring, std::move(coeffs));
}

Element embed_unital(const RingPtr& unital_ring, const Element& r) {
  if (unital_ring->kind() != RingKind::Unitalization)
    bad_element("embed_unital: not a unitalization");
  if (!(*r.ring() == *unital_ring->base()))
    bad_element("embed_unital: inner ring mismatch");
  return make_unital_pair(unital_ring, 0, r);
}

// --- arithmetic -----------------------------------------------------------

namespace {

void trim_poly_children(std::vector<Element>& cs) {
  while (!cs.empty() && is_zero(cs.back())) cs.pop_back();
}

std::vector<Element> zip(const std::vector<Element>& x,
                         const std::vector<Element>& y,
                         Element (*op)(const Element&, const Element&)) {
  std::vector<Element> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(op(x[i], y[i]));
  return out;
}

std::vector<Element> poly_add_children(const RingPtr& base,
                                       const std::vector<Element>& x,
                                       const std::vector<Element>& y,
                                       bool negate_y) {
  std::vector<Element> out;
  std::size_t n = std::max(x.size(), y.size());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Element xi = i < x.size() ? x[i] : zero(base);
    Element yi = i < y.size() ? y[i] : zero(base);
    out.push_back(negate_y ? sub(xi, yi) : add(xi, yi));
  }
  return out;
}

}  // namespace

Element add(const Element& a, const Element& b) {
  require_same_ring(a, b);
  const RingPtr& ring = a.ring();
  switch (ring->kind()) {
    case RingKind::Zmod:
    case RingKind::SubringDZn:
      return Element(ring, a.mod_value() + b.mod_value());
    case RingKind::Rationals:
    case RingKind::OddDenominator:
    case RingKind::LocalizedAt:
    case RingKind::LocalizedS:
      return Element(ring, Rational(a.rational_value() + b.rational_value()));
    case RingKind::PolynomialOver:
      return Element(ring, poly_add_children(ring->base(), a.children(),
                                             b.children(), false));
    default:
      return Element(ring, zip(a.children(), b.children(), &add));
  }
}

Element sub(const Element& a, const Element& b) {
  require_same_ring(a, b);
  const RingPtr& ring = a.ring();
  switch (ring->kind()) {
    case RingKind::Zmod:
    case RingKind::SubringDZn:
      return Element(ring, a.mod_value() - b.mod_value());
    case RingKind::Rationals:
    case RingKind::OddDenominator:
    case RingKind::LocalizedAt:
    case RingKind::LocalizedS:
      return Element(ring, Rational(a.rational_value() - b.rational_value()));
    case RingKind::PolynomialOver:
      return Element(ring, poly_add_children(ring->base(), a.children(),
                                             b.children(), true));
    default:
      return Element(ring, zip(a.children(), b.children(), &sub));
  }
}

Element neg(const Element& a) {
  const RingPtr& ring = a.ring();
  switch (ring->kind()) {
    case RingKind::Zmod:
    case RingKind::SubringDZn:
      return Element(ring, -a.mod_value());
    case RingKind::Rationals:
    case RingKind::OddDenominator:
    case RingKind::LocalizedAt:
    case RingKind::LocalizedS:
      return Element(ring, Rational(-a.rational_value()));
    default: {
      std::vector<Element> cs;
      cs.reserve(a.children().size());
      for (const Element& c : a.children()) cs.push_back(neg(c));
      return Element(ring, std::move(cs));
    }
  }
}

Element mul(const Element& a, const Element& b) {
  require_same_ring(a, b);
  const RingPtr& ring = a.ring();
  switch (ring->kind()) {
    case RingKind::Zmod:
    case RingKind::SubringDZn:
      return Element(ring, a.mod_value() * b.mod_value());
    case RingKind::Rationals:
    case RingKind::OddDenominator:
    case RingKind::LocalizedAt:
    case RingKind::LocalizedS:
      return Element(ring, Rational(a.rational_value() * b.rational_value()));
    case RingKind::Matrix: {
      int k = ring->dimension();
      const auto& x = a.children();
      const auto& y = b.children();
      std::vector<Element> cs;
      cs.reserve(static_cast<std::size_t>(k) * k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          Element s = zero(ring->base());
          for (int l = 0; l < k; ++l)
            s = add(s, mul(x[static_cast<std::size_t>(i * k + l)],
                           y[static_cast<std::size_t>(l * k + j)]));
          cs.push_back(std::move(s));
        }
      return Element(ring, std::move(cs));
    }
    case RingKind::DirectSum:
      return Element(ring, zip(a.children(), b.children(), &mul));
    case RingKind::Unitalization: {
      // (z, r)(z', r') = (zz', zr' + z'r + rr')
      const Mod& z = std::get<Mod>(a.children()[0].payload());
      const Mod& zp = std::get<Mod>(b.children()[0].payload());
      const Element& r = a.children()[1];
      const Element& rp = b.children()[1];
      Element inner = add(add(int_mul(Integer(z.value()), rp),
                              int_mul(Integer(zp.value()), r)),
                          mul(r, rp));
      std::vector<Element> cs;
      cs.push_back(Element(ring->unit_part(), z * zp));
      cs.push_back(std::move(inner));
      return Element(ring, std::move(cs));
    }
    case RingKind::PolynomialOver: {
      const auto& x = a.children();
      const auto& y = b.children();
      if (x.empty() || y.empty()) return zero(ring);
      std::vector<Element> cs(x.size() + y.size() - 1, zero(ring->base()));
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
          cs[i + j] = add(cs[i + j], mul(x[i], y[j]));
      return Element(ring, std::move(cs));
    }
  }
  throw std::logic_error("mul: unhandled kind");
}

Element int_mul(const Integer& k, const Element& a) {
  const RingPtr& ring = a.ring();
  switch (ring->kind()) {
    case RingKind::Zmod:
    case RingKind::SubringDZn: {
      Integer r = k % ring->modulus();
      return Element(ring,
                     Mod(r.get_si(), ring->modulus()) * a.mod_value());
    }
    case RingKind::Rationals:
    case RingKind::OddDenominator:
    case RingKind::LocalizedAt:
    case RingKind::LocalizedS:
      return Element(ring, Rational(Rational(k) * a.rational_value()));
    default: {
      std::vector<Element> cs;
      cs.reserve(a.children().size());
      for (const Element& c : a.children()) cs.push_back(int_mul(k, c));
      return Element(ring, std::move(cs));
    }
  }
}

Element circ(const Element& a, const Element& b) {
  return sub(add(a, b), mul(a, b));
}

// --- quasi-inverse and circle powers -------------------------------------

namespace {

// Solutions of w*x = rhs (mod m), as x = x0 + t*step; nullopt when none.
struct CongruenceSolution {
  std::int64_t x0;
  std::int64_t step;
  std::int64_t count;
};

std::optional<CongruenceSolution> solve_congruence(std::int64_t w,
                                                   std::int64_t rhs,
                                                   std::int64_t m) {
  Integer g = gcd(Integer(w), Integer(m));
  std::int64_t gi = g.get_si();
  if (gi == 0) gi = m;  // w = 0 mod m
  if (rhs % gi != 0) return std::nullopt;
  std::int64_t m2 = m / gi;
  if (m2 == 1) return CongruenceSolution{0, 1, m};
  Mod winv = *Mod(w / gi, m2).inverse();
  Mod x0 = Mod(rhs / gi, m2) * winv;
  return CongruenceSolution{x0.value(), m2, gi};
}

std::optional<Element> quasi_inverse_mod(const Element& a) {
  const RingPtr& ring = a.ring();
  std::int64_t n = ring->modulus();
  std::int64_t v = a.mod_value().value();
  std::int64_t d =
      ring->kind() == RingKind::SubringDZn ? ring->generator() : 1;
  // Solve a'(1 - v) = -v (mod n) with a' = 0 (mod d).
  auto sol = solve_congruence((1 - v) % n, ((-v) % n + n) % n, n);
  if (!sol) return std::nullopt;
  // Among x0 + t*step (t = 0..count-1) find a multiple of d:
  // t*step = -x0 (mod d).
  auto tsol = solve_congruence(sol->step % d, ((-sol->x0) % d + d) % d, d);
  if (!tsol) return std::nullopt;
  if (tsol->x0 >= sol->count) return std::nullopt;
  Element res(ring, Mod(sol->x0 + tsol->x0 * sol->step, n));
  if (!is_zero(circ(a, res)) || !is_zero(circ(res, a)))
    throw std::logic_error("quasi_inverse_mod: verification failed");
  return res;
}

std::optional<Element> quasi_inverse_rational(const Element& a) {
  const Rational& q = a.rational_value();
  if (q == 1) return std::nullopt;
  Rational qi = q / (q - 1);
  qi.canonicalize();
  if (!rational_member(qi, *a.ring())) return std::nullopt;
  return Element(a.ring(), qi);
}

Element det_by_cofactor(const std::vector<Element>& entries, int k,
                        const std::vector<int>& rows,
                        const std::vector<int>& cols, const RingPtr& base) {
  if (rows.size() == 1)
    return entries[static_cast<std::size_t>(rows[0] * k + cols[0])];
  Element acc = zero(base);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Element& pivot =
        entries[static_cast<std::size_t>(rows[0] * k + cols[j])];
    if (is_zero(pivot)) continue;
    std::vector<int> r2(rows.begin() + 1, rows.end());
    std::vector<int> c2;
    for (std::size_t l = 0; l < cols.size(); ++l)
      if (l != j) c2.push_back(cols[l]);
    Element term = mul(pivot, det_by_cofactor(entries, k, r2, c2, base));
    acc = (j % 2 == 0) ? add(acc, term) : sub(acc, term);
  }
  return acc;
}

// Multiplicative inverse in a unital carrier, via the quasi-inverse of
// 1 - u: u^{-1} = 1 - (1-u)^{(-1)}.
std::optional<Element> try_mul_inverse(const Element& u) {
  if (std::holds_alternative<Mod>(u.payload()) &&
      u.ring()->kind() == RingKind::Zmod) {
    auto inv = u.mod_value().inverse();
    if (!inv) return std::nullopt;
    return Element(u.ring(), *inv);
  }
  auto o = one(u.ring());
  if (!o) return std::nullopt;
  auto qi = quasi_inverse(sub(*o, u));
  if (!qi) return std::nullopt;
  return sub(*o, *qi);
}

std::optional<Element> quasi_inverse_matrix(const Element& a) {
  const RingPtr& ring = a.ring();
  int k = ring->dimension();
  Element io = *one(ring);
  Element m = sub(io, a);  // invert 1 - A via the adjugate
  std::vector<int> all;
  for (int i = 0; i < k; ++i) all.push_back(i);
  Element d = det_by_cofactor(m.children(), k, all, all, ring->base());
  auto dinv = try_mul_inverse(d);
  if (!dinv) return std::nullopt;
  // adj(m)[i][j] = (-1)^(i+j) * minor deleting row j, column i.
  std::vector<Element> adj;
  adj.reserve(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::vector<int> r2, c2;
      for (int l = 0; l < k; ++l) {
        if (l != j) r2.push_back(l);
        if (l != i) c2.push_back(l);
      }
      Element mn = r2.empty() ? *one(ring->base())
                              : det_by_cofactor(m.children(), k, r2, c2,
                                                ring->base());
      if ((i + j) % 2 != 0) mn = neg(mn);
      adj.push_back(mul(*dinv, mn));
    }
  Element res = sub(io, Element(ring, std::move(adj)));
  if (!is_zero(circ(a, res)) || !is_zero(circ(res, a)))
    throw std::logic_error("quasi_inverse_matrix: verification failed");
  return res;
}

// Quasi-inverse of a nilpotent element: -(a + a^2 + ... + a^(idx-1)).
Element nilpotent_quasi_inverse(const Element& a, unsigned idx) {
  Element acc = zero(a.ring());
  Element p = a;
  for (unsigned j = 1; j + 1 <= idx; ++j) {
    acc = add(acc, p);
    p = mul(p, a);
  }
  return neg(acc);
}

std::optional<Element> quasi_inverse_polynomial(const Element& a) {
  // Split f = c + (f - c) with c the constant coefficient; then
  // f = c o g with g = (1-c)^{-1}(f - c), and f is quasi-regular exactly
  // when 1-c is invertible and g is nilpotent.
  const RingPtr& ring = a.ring();
  const RingPtr& base = ring->base();
  Element c = a.children().empty() ? zero(base) : a.children()[0];
  Mod u = Mod::one(base->modulus()) - c.mod_value();
  auto uinv = u.inverse();
  if (!uinv) return std::nullopt;
  std::vector<Element> gcs;
  for (std::size_t i = 1; i < a.children().size(); ++i)
    gcs.push_back(Element(base, *uinv * a.children()[i].mod_value()));
  gcs.insert(gcs.begin(), zero(base));
  Element g = make_polynomial_element(ring, std::move(gcs));
  auto gidx = nilpotency_index(g);
  if (!gidx) return std::nullopt;
  Element ginv = nilpotent_quasi_inverse(g, *gidx);
  // c^(-1) = c * (c-1)^{-1} in the base.
  Mod cinv = c.mod_value() * -*uinv;
  Element cinv_poly =
      make_polynomial_element(ring, {Element(base, cinv)});
  Element res = circ(ginv, cinv_poly);
  if (!is_zero(circ(a, res)) || !is_zero(circ(res, a)))
    throw std::logic_error("quasi_inverse_polynomial: verification failed");
  return res;
}

// Walks a, a o a, ... in a finite carrier; returns (order, inverse).
std::optional<std::pair<unsigned, Element>> circ_cycle_walk(const Element& a) {
  const RingPtr& ring = a.ring();
  if (!ring->finite())
    throw std::invalid_argument("circle-cycle walk requires a finite carrier");
  Integer size = ring->size();
  if (size > kEnumerationCap)
    throw std::invalid_argument("carrier too large for cycle walk: " +
                                ring->text());
  if (is_zero(a)) return std::make_pair(1u, a);
  unsigned long bound = size.get_ui() + 1;
  Element p = a;
  for (unsigned long k = 2; k <= bound; ++k) {
    Element next = circ(p, a);
    if (is_zero(next)) return std::make_pair(static_cast<unsigned>(k), p);
    p = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

std::optional<Element> quasi_inverse(const Element& a) {
  switch (a.ring()->kind()) {
    case RingKind::Zmod:
    case RingKind::SubringDZn:
      return quasi_inverse_mod(a);
    case RingKind::Rationals:
    case RingKind::OddDenominator:
    case RingKind::LocalizedAt:
    case RingKind::LocalizedS:
      return quasi_inverse_rational(a);
    case RingKind::Matrix:
      return quasi_inverse_matrix(a);
    case RingKind::DirectSum: {
      std::vector<Element> cs;
      for (const Element& c : a.children()) {
        auto ci = quasi_inverse(c);
        if (!ci) return std::nullopt;
        cs.push_back(std::move(*ci));
      }
      return Element(a.ring(), std::move(cs));
    }
    case RingKind::Unitalization: {
      auto walk = circ_cycle_walk(a);
      if (!walk) return std::nullopt;
      return walk->second;
    }
    case RingKind::PolynomialOver:
      return quasi_inverse_polynomial(a);
  }
  throw std::logic_error("quasi_inverse: unhandled kind");
}

Element circ_power(const Element& a, const Integer& n) {
  if (sgn(n) == 0) return zero(a.ring());
  Element base = a;
  Integer e = n;
  if (sgn(n) < 0) {
    auto inv = quasi_inverse(a);
    if (!inv)
      throw std::invalid_argument(
          "circ_power: negative power of a non-quasi-regular element");
    base = *inv;
    e = -n;
  }
  Element acc = zero(a.ring());
  bool started = false;
  // Square-and-multiply over the circle monoid.
  for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1;
       bit >= 0; --bit) {
    if (started) acc = circ(acc, acc);
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
      acc = started ? circ(acc, base) : base;
      started = true;
    }
  }
  return acc;
}

std::optional<unsigned> circ_order(const Element& a) {
  if (is_rational_kind(a.ring()->kind())) {
    // (1-q)^n = 1 in Q* forces 1-q = +-1.
    const Rational& q = a.rational_value();
    if (sgn(q) == 0) return 1;
    if (q == 2) return 2;
    return std::nullopt;
  }
  auto walk = circ_cycle_walk(a);
  if (!walk) return std::nullopt;
  return walk->first;
}

// --- nilpotency -----------------------------------------------------------

namespace {

std::optional<unsigned> nil_index_mod(const Mod& m) {
  if (m.value() == 0) return 1;
  Mod p = m;
  // Any nilpotent residue dies within 31 squarings' worth of factors
  // (moduli are below 2^31).
  for (unsigned j = 2; j <= 32; ++j) {
    p = p * m;
    if (p.value() == 0) return j;
  }
  return std::nullopt;
}

std::optional<unsigned> power_until_zero(const Element& a, unsigned cap) {
  if (is_zero(a)) return 1;
  Element p = a;
  for (unsigned j = 2; j <= cap; ++j) {
    p = mul(p, a);
    if (is_zero(p)) return j;
  }
  return std::nullopt;
}

}  // namespace

std::optional<unsigned> nilpotency_index(const Element& a) {
  const RingPtr& ring = a.ring();
  switch (ring->kind()) {
    case RingKind::Zmod:
    case RingKind::SubringDZn:
      return nil_index_mod(a.mod_value());
    case RingKind::Rationals:
    case RingKind::OddDenominator:
    case RingKind::LocalizedAt:
    case RingKind::LocalizedS:
      if (sgn(a.rational_value()) == 0) return 1;
      return std::nullopt;
    case RingKind::Matrix: {
      int k = ring->dimension();
      if (ring->base()->kind() == RingKind::Zmod) {
        // Nilpotent iff all non-leading characteristic coefficients are
        // nilpotent (Cayley-Hamilton pushes A^k into the ideal they
        // generate; conversely reduce modulo each prime).
        Polynomial<Mod> cp = charpoly(a);
        for (int i = 0; i < cp.degree(); ++i)
          if (!nil_index_mod(cp.coeff(i))) return std::nullopt;
        auto idx = power_until_zero(a, 4096);
        if (!idx) throw std::logic_error("nilpotency_index: bound exceeded");
        return idx;
      }
      // Domain entries: nilpotent iff A^k = 0.
      return power_until_zero(a, static_cast<unsigned>(k));
    }
    case RingKind::DirectSum: {
      unsigned best = 1;
      for (const Element& c : a.children()) {
        auto ci = nilpotency_index(c);
        if (!ci) return std::nullopt;
        best = std::max(best, *ci);
      }
      return best;
    }
    case RingKind::Unitalization: {
      const Mod& z = std::get<Mod>(a.children()[0].payload());
      auto zi = nil_index_mod(z);
      if (!zi) return std::nullopt;
      // After z's power dies the powers live in the embedded ideal, so
      // nilpotency reduces to the inner component.
      Element p = a;
      for (unsigned j = 2; j <= *zi; ++j) p = mul(p, a);
      auto ii = nilpotency_index(p.children()[1]);
      if (!ii) return std::nullopt;
      return power_until_zero(a, *zi * (1 + *ii) + 2);
    }
    case RingKind::PolynomialOver: {
      unsigned worst = 1;
      for (const Element& c : a.children()) {
        auto ci = nil_index_mod(c.mod_value());
        if (!ci) return std::nullopt;
        worst = std::max(worst, *ci);
      }
      unsigned deg = static_cast<unsigned>(a.children().size());
      return power_until_zero(a, (deg + 1) * worst + 2);
    }
  }
  throw std::logic_error("nilpotency_index: unhandled kind");
}

// --- matrix helpers -------------------------------------------------------

Element matrix_entry(const Element& m, int i, int j) {
  int k = m.ring()->dimension();
  if (i < 0 || j < 0 || i >= k || j >= k)
    throw std::invalid_argument("matrix_entry: index out of range");
  return m.children()[static_cast<std::size_t>(i * k + j)];
}

Element trace(const Element& m) {
  int k = m.ring()->dimension();
  Element t = zero(m.ring()->base());
  for (int i = 0; i < k; ++i) t = add(t, matrix_entry(m, i, i));
  return t;
}

Element det(const Element& m) {
  int k = m.ring()->dimension();
  std::vector<int> all;
  for (int i = 0; i < k; ++i) all.push_back(i);
  return det_by_cofactor(m.children(), k, all, all, m.ring()->base());
}

Polynomial<Mod> charpoly(const Element& m) {
  const RingPtr& ring = m.ring();
  if (ring->kind() != RingKind::Matrix ||
      ring->base()->kind() != RingKind::Zmod)
    throw std::invalid_argument("charpoly: need a matrix over Z/n");
  std::int64_t n = ring->base()->modulus();
  int k = ring->dimension();
  using P = Polynomial<Mod>;
  // det(x*I - A) by cofactor expansion in polynomial entries.
  std::vector<P> entries;
  entries.reserve(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Mod aij = matrix_entry(m, i, j).mod_value();
      if (i == j)
        entries.push_back(P({-aij, Mod::one(n)}));
      else
        entries.push_back(P::constant(-aij));
    }
  // Recursive expansion along the first remaining row.
  struct Rec {
    int k;
    const std::vector<P>& e;
    P run(const std::vector<int>& rows, const std::vector<int>& cols) const {
      if (rows.size() == 1)
        return e[static_cast<std::size_t>(rows[0] * k + cols[0])];
      P acc = P::zero(e[0].shape());
      for (std::size_t j = 0; j < cols.size(); ++j) {
        std::vector<int> r2(rows.begin() + 1, rows.end());
        std::vector<int> c2;
        for (std::size_t l = 0; l < cols.size(); ++l)
          if (l != j) c2.push_back(cols[l]);
        P term = e[static_cast<std::size_t>(rows[0] * k + cols[j])] *
                 run(r2, c2);
        acc = (j % 2 == 0) ? acc + term : acc - term;
      }
      return acc;
    }
  };
  std::vector<int> all;
  for (int i = 0; i < k; ++i) all.push_back(i);
  return Rec{k, entries}.run(all, all);
}

// --- polynomial evaluation ------------------------------------------------

namespace {

template <typename C, typename Scale>
Element eval_horner(const Polynomial<C>& p, const Element& a, Scale scale) {
  if (!coeff_is_zero(p.coeff(0)))
    throw std::invalid_argument("eval_nonunital: nonzero constant term");
  if (p.degree() < 1) return zero(a.ring());
  Element t = scale(p.coeff(p.degree()), a);
  for (int i = p.degree() - 1; i >= 1; --i)
    t = add(mul(t, a), scale(p.coeff(i), a));
  return t;
}

}  // namespace

Element eval_nonunital(const Polynomial<Integer>& p, const Element& a) {
  return eval_horner(p, a, [](const Integer& c, const Element& x) {
    return int_mul(c, x);
  });
}

Element eval_nonunital(const Polynomial<Mod>& p, const Element& a) {
  std::int64_t e = a.ring()->additive_exponent();
  if (e == 0 || p.shape().modulus() % e != 0)
    throw std::invalid_argument(
        "eval_nonunital: coefficient modulus incompatible with carrier");
  return eval_horner(p, a, [](const Mod& c, const Element& x) {
    return int_mul(Integer(c.value()), x);
  });
}

Element eval_nonunital(const Polynomial<Rational>& p, const Element& a) {
  if (!is_rational_kind(a.ring()->kind()))
    throw std::invalid_argument(
        "eval_nonunital: rational coefficients need a rational carrier");
  if (!coeff_is_zero(p.coeff(0)))
    throw std::invalid_argument("eval_nonunital: nonzero constant term");
  const Rational& q = a.rational_value();
  Rational t(0);
  for (int i = p.degree(); i >= 1; --i) t = (t + p.coeff(i)) * q;
  // Horner over plain rationals; only the final value must lie in the
  // carrier (it always does when it is zero).
  return Element(a.ring(), t);
}

// --- enumeration ----------------------------------------------------------

namespace {

void enumerate_into(const RingPtr& ring, std::vector<Element>& out);

// Cartesian product over per-slot alphabets, first slot slowest.
void odometer(const RingPtr& ring,
              const std::vector<std::vector<Element>>& slots,
              std::vector<Element>& out) {
  std::vector<std::size_t> idx(slots.size(), 0);
  for (;;) {
    std::vector<Element> tuple;
    tuple.reserve(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i)
      tuple.push_back(slots[i][idx[i]]);
    out.push_back(Element(ring, std::move(tuple)));
    std::size_t pos = slots.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < slots[pos].size()) break;
      idx[pos] = 0;
      if (pos == 0) return;
    }
  }
}

void enumerate_into(const RingPtr& ring, std::vector<Element>& out) {
  switch (ring->kind()) {
    case RingKind::Zmod:
    case RingKind::SubringDZn: {
      std::int64_t d =
          ring->kind() == RingKind::SubringDZn ? ring->generator() : 1;
      for (std::int64_t v = 0; v < ring->modulus(); v += d)
        out.push_back(Element(ring, Mod(v, ring->modulus())));
      return;
    }
    case RingKind::Matrix: {
      std::vector<Element> base;
      enumerate_into(ring->base(), base);
      std::size_t k = static_cast<std::size_t>(ring->dimension());
      std::vector<std::vector<Element>> slots(k * k, base);
      odometer(ring, slots, out);
      return;
    }
    case RingKind::DirectSum: {
      std::vector<std::vector<Element>> slots;
      for (const auto& p : ring->parts()) {
        slots.emplace_back();
        enumerate_into(p, slots.back());
      }
      odometer(ring, slots, out);
      return;
    }
    case RingKind::Unitalization: {
      std::vector<Element> zs;
      const RingPtr& zr = ring->unit_part();
      for (std::int64_t v = 0; v < ring->unit_modulus(); ++v)
        zs.push_back(Element(zr, Mod(v, ring->unit_modulus())));
      std::vector<Element> inner;
      enumerate_into(ring->base(), inner);
      std::vector<std::vector<Element>> slots{zs, inner};
      odometer(ring, slots, out);
      return;
    }
    default:
      throw std::invalid_argument("enumerate: infinite carrier " +
                                  ring->text());
  }
}

}  // namespace

std::vector<Element> enumerate_ring(const RingPtr& ring) {
  if (!ring->finite())
    throw std::invalid_argument("enumerate: infinite carrier " + ring->text());
  if (ring->size() > kEnumerationCap)
    throw std::invalid_argument("enumerate: carrier too large " + ring->text());
  std::vector<Element> out;
  out.reserve(ring->size().get_ui());
  enumerate_into(ring, out);
  return out;
}

std::vector<std::int64_t> element_key(const Element& a) {
  std::vector<std::int64_t> key;
  struct Rec {
    static void walk(const Element& e, std::vector<std::int64_t>& key) {
      if (std::holds_alternative<Mod>(e.payload())) {
        key.push_back(std::get<Mod>(e.payload()).value());
        return;
      }
      if (std::holds_alternative<Rational>(e.payload()))
        throw std::invalid_argument("element_key: rational payloads unsupported");
      for (const Element& c : e.children()) walk(c, key);
    }
  };
  Rec::walk(a, key);
  return key;
}

// --- text -----------------------------------------------------------------

std::string element_text(const Element& a) {
  const RingPtr& ring = a.ring();
  switch (ring->kind()) {
    case RingKind::Zmod:
    case RingKind::SubringDZn:
      return std::to_string(a.mod_value().value());
    case RingKind::Rationals:
    case RingKind::OddDenominator:
    case RingKind::LocalizedAt:
    case RingKind::LocalizedS:
      return a.rational_value().get_str();
    case RingKind::Matrix: {
      int k = ring->dimension();
      std::string s = "[";
      for (int i = 0; i < k; ++i) {
        if (i) s += ",";
        s += "[";
        for (int j = 0; j < k; ++j) {
          if (j) s += ",";
          s += element_text(matrix_entry(a, i, j));
        }
        s += "]";
      }
      return s + "]";
    }
    case RingKind::DirectSum:
    case RingKind::Unitalization: {
      std::string s = "(";
      bool first = true;
      for (const Element& c : a.children()) {
        if (!first) s += "|";
        first = false;
        s += element_text(c);
      }
      return s + ")";
    }
    case RingKind::PolynomialOver: {
      std::vector<Mod> coeffs;
      for (const Element& c : a.children()) coeffs.push_back(c.mod_value());
      if (coeffs.empty()) return "0";
      return render_polynomial(Polynomial<Mod>(std::move(coeffs)),
                               ring->variable());
    }
  }
  return "?";
}

namespace {

std::vector<std::string> split_depth0(const std::string& s, char sep) {
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

[[noreturn]] void bad_literal(const std::string& text, const RingPtr& ring) {
  throw std::invalid_argument("parse_element: bad literal \"" + text +
                              "\" for " + ring->text());
}

}  // namespace

Element parse_element(const std::string& text, const RingPtr& ring) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) bad_literal(text, ring);
  switch (ring->kind()) {
    case RingKind::Zmod:
    case RingKind::SubringDZn: {
      try {
        return from_integer(ring, Integer(s));
      } catch (const std::invalid_argument&) {
        bad_literal(text, ring);
      }
    }
    case RingKind::Rationals:
    case RingKind::OddDenominator:
    case RingKind::LocalizedAt:
    case RingKind::LocalizedS: {
      try {
        Rational q(s);
        if (q.get_den() == 0) bad_literal(text, ring);
        q.canonicalize();
        return from_rational(ring, q);
      } catch (const std::invalid_argument&) {
        bad_literal(text, ring);
      }
    }
    case RingKind::Matrix: {
      if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        bad_literal(text, ring);
      std::vector<std::string> rows =
          split_depth0(s.substr(1, s.size() - 2), ',');
      int k = ring->dimension();
      if (rows.size() != static_cast<std::size_t>(k)) bad_literal(text, ring);
      std::vector<Element> entries;
      for (const std::string& row : rows) {
        if (row.size() < 2 || row.front() != '[' || row.back() != ']')
          bad_literal(text, ring);
        std::vector<std::string> cells =
            split_depth0(row.substr(1, row.size() - 2), ',');
        if (cells.size() != static_cast<std::size_t>(k))
          bad_literal(text, ring);
        for (const std::string& cell : cells)
          entries.push_back(parse_element(cell, ring->base()));
      }
      return make_matrix(ring, std::move(entries));
    }
    case RingKind::DirectSum: {
      if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        bad_literal(text, ring);
      std::vector<std::string> parts =
          split_depth0(s.substr(1, s.size() - 2), '|');
      if (parts.size() != ring->parts().size()) bad_literal(text, ring);
      std::vector<Element> cs;
      for (std::size_t i = 0; i < parts.size(); ++i)
        cs.push_back(parse_element(parts[i], ring->parts()[i]));
      return make_tuple(ring, std::move(cs));
    }
    case RingKind::Unitalization: {
      if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        bad_literal(text, ring);
      std::vector<std::string> parts =
          split_depth0(s.substr(1, s.size() - 2), '|');
      if (parts.size() != 2) bad_literal(text, ring);
      Integer z;
      try {
        z = Integer(parts[0]);
      } catch (const std::invalid_argument&) {
        bad_literal(text, ring);
      }
      return make_unital_pair(ring, z,
                              parse_element(parts[1], ring->base()));
    }
    case RingKind::PolynomialOver: {
      Polynomial<Rational> p = parse_polynomial(s, ring->variable());
      std::vector<Element> cs;
      for (int i = 0; i <= p.degree(); ++i) {
        Rational c = p.coeff(i);
        if (c.get_den() != 1) bad_literal(text, ring);
        cs.push_back(from_integer(ring->base(), numerator(c)));
      }
      return make_polynomial_element(ring, std::move(cs));
    }
  }
  bad_literal(text, ring);
}

// --- FiniteRing -----------------------------------------------------------

FiniteRing::FiniteRing(RingPtr ring) : ring_(std::move(ring)) {
  elems_ = enumerate_ring(ring_);
  if (elems_.size() > 1024)
    throw std::invalid_argument("FiniteRing: carrier above the 1024 cap: " +
                                ring_->text());
  n_ = static_cast<std::uint32_t>(elems_.size());
  for (std::uint32_t i = 0; i < n_; ++i) index_[element_key(elems_[i])] = i;
  zero_ = index(zero(ring_));
  if (auto o = one(ring_)) one_ = index(*o);
  neg_.resize(n_);
  add_.resize(static_cast<std::size_t>(n_) * n_);
  mul_.resize(static_cast<std::size_t>(n_) * n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    neg_[i] = index(ringlab::neg(elems_[i]));
    for (std::uint32_t j = 0; j < n_; ++j) {
      add_[static_cast<std::size_t>(i) * n_ + j] =
          index(ringlab::add(elems_[i], elems_[j]));
      mul_[static_cast<std::size_t>(i) * n_ + j] =
          index(ringlab::mul(elems_[i], elems_[j]));
    }
  }
  cycle_done_.assign(n_, 0);
  qinv_.assign(n_, std::nullopt);
  order_.assign(n_, std::nullopt);
  nilidx_.assign(n_, std::nullopt);
}

std::uint32_t FiniteRing::index(const Element& a) const {
  auto it = index_.find(element_key(a));
  if (it == index_.end())
    throw std::invalid_argument("FiniteRing::index: element not in carrier");
  return it->second;
}

void FiniteRing::ensure_cycles(std::uint32_t i) const {
  if (cycle_done_[i]) return;
  cycle_done_[i] = 1;
  if (i == zero_) {
    qinv_[i] = zero_;
    order_[i] = 1;
    return;
  }
  std::uint32_t p = i;
  for (std::uint32_t k = 2; k <= n_ + 1; ++k) {
    std::uint32_t next = circ(p, i);
    if (next == zero_) {
      qinv_[i] = p;
      order_[i] = k;
      return;
    }
    p = next;
  }
}

std::optional<std::uint32_t> FiniteRing::quasi_inverse(std::uint32_t i) const {
  ensure_cycles(i);
  return qinv_[i];
}

std::optional<std::uint32_t> FiniteRing::circ_order(std::uint32_t i) const {
  ensure_cycles(i);
  return order_[i];
}

std::optional<std::uint32_t> FiniteRing::nil_index(std::uint32_t i) const {
  if (nilidx_[i]) return nilidx_[i];
  if (i == zero_) {
    nilidx_[i] = 1;
    return nilidx_[i];
  }
  std::uint32_t p = i;
  for (std::uint32_t k = 2; k <= n_ + 1; ++k) {
    p = mul(p, i);
    if (p == zero_) {
      nilidx_[i] = k;
      return nilidx_[i];
    }
  }
  return std::nullopt;
}

bool FiniteRing::nilpotent(std::uint32_t i) const {
  return nil_index(i).has_value();
}

const std::vector<std::uint32_t>& FiniteRing::quasi_regulars() const {
  if (!qlist_) {
    qlist_.emplace();
    for (std::uint32_t i = 0; i < n_; ++i)
      if (quasi_inverse(i)) qlist_->push_back(i);
  }
  return *qlist_;
}

const std::vector<std::uint32_t>& FiniteRing::nilpotents() const {
  if (!nlist_) {
    nlist_.emplace();
    for (std::uint32_t i = 0; i < n_; ++i)
      if (nilpotent(i)) nlist_->push_back(i);
  }
  return *nlist_;
}

}  // namespace ringlab
