#include "ringlab/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "ringlab/polynomial_io.hpp"

namespace ringlab {

std::string tri_text(Tri t) {
  switch (t) {
    case Tri::no:
      return "no";
    case Tri::yes:
      return "yes";
    case Tri::unknown:
      return "unknown";
  }
  return "?";
}

// --- witnesses ------------------------------------------------------------

Witness pi_witness(Polynomial<Integer> p) {
  return Witness{WitnessKind::Pi, std::move(p), 0};
}
Witness pi_witness(Polynomial<Mod> p) {
  return Witness{WitnessKind::Pi, std::move(p), 0};
}
Witness pi_witness(Polynomial<Rational> p) {
  return Witness{WitnessKind::Pi, std::move(p), 0};
}
Witness integral_witness(Polynomial<Integer> p) {
  return Witness{WitnessKind::Integral, std::move(p), 0};
}
Witness integral_witness(Polynomial<Mod> p) {
  return Witness{WitnessKind::Integral, std::move(p), 0};
}
Witness integral_witness(Polynomial<Rational> p) {
  return Witness{WitnessKind::Integral, std::move(p), 0};
}
Witness nil_witness(unsigned exponent) {
  return Witness{WitnessKind::Nil, std::monostate{}, exponent};
}

std::string Witness::poly_text() const {
  return std::visit(
      [](const auto& p) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>,
                                     std::monostate>)
          return "";
        else
          return render_polynomial(p);
      },
      poly);
}

std::string Witness::text() const {
  switch (kind) {
    case WitnessKind::Pi:
      return "pi witness p(x) = " + poly_text();
    case WitnessKind::Integral:
      return "integral witness p(x) = " + poly_text();
    case WitnessKind::Nil:
      return "nilpotency index " + std::to_string(exponent);
  }
  return "?";
}

namespace {

template <typename C>
bool shape_ok(const Polynomial<C>& p, WitnessKind kind) {
  if (p.is_zero() || p.degree() < 1) return false;
  if (!coeff_is_zero(p.coeff(0))) return false;
  const C one = coeff_one_like(p.shape());
  if (kind == WitnessKind::Pi)
    return coeff_is_zero(static_cast<C>(p(one) - one));
  return coeff_is_zero(static_cast<C>(p.lead() - one));  // monic
}

}  // namespace

bool validate(const Witness& w, const Element& a) {
  try {
    if (w.kind == WitnessKind::Nil) {
      if (w.exponent < 1 || w.exponent > 4096) return false;
      if (w.exponent == 1) return is_zero(a);
      Element p = a;
      for (unsigned j = 2; j < w.exponent; ++j) p = mul(p, a);
      if (is_zero(p)) return false;  // index must be minimal
      return is_zero(mul(p, a));
    }
    return std::visit(
        [&](const auto& p) -> bool {
          if constexpr (std::is_same_v<std::decay_t<decltype(p)>,
                                       std::monostate>) {
            return false;
          } else {
            if (!shape_ok(p, w.kind)) return false;
            return is_zero(eval_nonunital(p, a));
          }
        },
        w.poly);
  } catch (const std::invalid_argument&) {
    return false;
  }
}

Witness hat_witness(const Witness& w) {
  if (w.kind == WitnessKind::Nil)
    throw std::invalid_argument("hat_witness: no polynomial to transform");
  Witness out;
  out.kind = w.kind == WitnessKind::Pi ? WitnessKind::Integral
                                       : WitnessKind::Pi;
  out.poly = std::visit(
      [](const auto& p) -> Witness::Poly {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>,
                                     std::monostate>)
          throw std::invalid_argument("hat_witness: empty witness");
        else
          return hat_transform(p);
      },
      w.poly);
  return out;
}

// --- constructions --------------------------------------------------------

Witness circle_order_pi_witness(const RingPtr& ring, unsigned order) {
  std::int64_t e = ring->additive_exponent();
  if (ring->unital() && e >= 2)
    return pi_witness(circle_power_polynomial(order, Mod::one(e)));
  return pi_witness(circle_power_polynomial(order, Integer(1)));
}

std::optional<Witness> pi_witness_finite(const Element& a) {
  auto ord = circ_order(a);
  if (!ord) return std::nullopt;
  return circle_order_pi_witness(a.ring(), *ord);
}

bool pi_rational_member(const Rational& q) {
  Integer a = numerator(q);
  Integer b = denominator(q);
  return abs(a - b) == 1;
}

std::optional<Witness> pi_rational_witness(const Rational& q) {
  if (!pi_rational_member(q)) return std::nullopt;
  Integer a = numerator(q);
  Integer b = denominator(q);
  Integer n = a > b ? b : -b;  // b * sign(a - b)
  // (1 - n(x-1)) x = (1+n)x - n x^2
  return pi_witness(Polynomial<Integer>({Integer(0), 1 + n, -n}));
}

namespace {

Polynomial<Integer> lift_to_integer(const Witness::Poly& poly) {
  return std::visit(
      [](const auto& p) -> Polynomial<Integer> {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, std::monostate>)
          throw std::invalid_argument("lift_to_integer: empty witness");
        else if constexpr (std::is_same_v<T, Polynomial<Integer>>)
          return p;
        else if constexpr (std::is_same_v<T, Polynomial<Mod>>)
          return map_coefficients<Integer>(
              p, [](const Mod& c) { return Integer(c.value()); });
        else
          return to_integer_poly(p);
      },
      poly);
}

Witness power_repeat_witness(const Element& a) {
  const RingPtr& ring = a.ring();
  if (!ring->finite() || ring->size() > (std::int64_t{1} << 20))
    throw std::invalid_argument(
        "integral_witness_finite: carrier too large for power search");
  std::vector<Element> powers{a};  // powers[i] = a^(i+1)
  for (;;) {
    Element next = mul(powers.back(), a);
    for (std::size_t i = 0; i < powers.size(); ++i) {
      if (powers[i] == next || is_zero(next)) {
        // x^j - x^i annihilates a (i = 0 when the power reached zero).
        std::size_t lo = is_zero(next) ? 0 : i + 1;
        std::size_t hi = powers.size() + 1;
        std::vector<Integer> cs(hi + 1, Integer(0));
        if (lo > 0) cs[lo] = -1;
        cs[hi] = 1;
        return integral_witness(Polynomial<Integer>(std::move(cs)));
      }
    }
    powers.push_back(std::move(next));
  }
}

}  // namespace

Witness integral_witness_finite(const Element& a) {
  const RingPtr& ring = a.ring();
  switch (ring->kind()) {
    case RingKind::Zmod:
    case RingKind::SubringDZn: {
      Integer k(a.mod_value().value());
      return integral_witness(
          Polynomial<Integer>({Integer(0), -k, Integer(1)}));
    }
    case RingKind::Matrix: {
      if (ring->base()->kind() != RingKind::Zmod) break;
      // Cayley-Hamilton holds over any commutative base.
      Polynomial<Mod> cp = charpoly(a);
      if (!coeff_is_zero(cp.coeff(0)))
        cp = cp * Polynomial<Mod>::x(cp.shape());
      return integral_witness(std::move(cp));
    }
    case RingKind::DirectSum: {
      Polynomial<Integer> prod = Polynomial<Integer>::one(Integer(0));
      for (const Element& c : a.children())
        prod = prod * lift_to_integer(integral_witness_finite(c).poly);
      return integral_witness(std::move(prod));
    }
    case RingKind::Rationals:
    case RingKind::OddDenominator:
    case RingKind::LocalizedAt:
    case RingKind::LocalizedS: {
      const Rational& q = a.rational_value();
      if (denominator(q) != 1) break;  // monic roots in Q are integers
      Integer k = numerator(q);
      return integral_witness(
          Polynomial<Integer>({Integer(0), -k, Integer(1)}));
    }
    case RingKind::Unitalization:
      return power_repeat_witness(a);
    default:
      break;
  }
  throw std::invalid_argument("integral_witness_finite: unsupported carrier " +
                              ring->text());
}

// --- classification -------------------------------------------------------

namespace {

bool is_rational_carrier(RingKind k) {
  return k == RingKind::Rationals || k == RingKind::OddDenominator ||
         k == RingKind::LocalizedAt || k == RingKind::LocalizedS;
}

Witness power_pi_witness(unsigned m) {
  // x^m: value 1 at 1, constant term 0; annihilates any a with a^m = 0.
  std::vector<Integer> cs(m + 1, Integer(0));
  cs[m] = 1;
  return pi_witness(Polynomial<Integer>(std::move(cs)));
}

Tri fold_tri(Tri a, Tri b) {
  if (a == Tri::no || b == Tri::no) return Tri::no;
  if (a == Tri::unknown || b == Tri::unknown) return Tri::unknown;
  return Tri::yes;
}

constexpr int kWitnessDegreeCap = 4096;

// Product of per-component witnesses, lifted to integer coefficients;
// nullopt when the degree would be unreasonable.
std::optional<Witness> product_witness(WitnessKind kind,
                                       const std::vector<Witness>& parts) {
  long degree = 0;
  std::vector<Polynomial<Integer>> lifted;
  for (const Witness& w : parts) {
    lifted.push_back(lift_to_integer(w.poly));
    degree += lifted.back().degree();
    if (degree > kWitnessDegreeCap) return std::nullopt;
  }
  Polynomial<Integer> prod = Polynomial<Integer>::one(Integer(0));
  for (const auto& p : lifted) prod = prod * p;
  return Witness{kind, std::move(prod), 0};
}

// For f = c + g in (Z/n)[t] with constant part c and nilpotent g: any
// witness p for c gives p(f) = p(c) + g*s = g*s nilpotent, so a power of
// p annihilates f while keeping the witness shape.
std::optional<Witness> polynomial_mixed_witness(const Witness& base_w,
                                                const Element& f) {
  Polynomial<Integer> p = lift_to_integer(base_w.poly);
  Element v = eval_nonunital(p, f);
  auto e = nilpotency_index(v);
  if (!e) return std::nullopt;
  if (static_cast<long>(*e) * p.degree() > kWitnessDegreeCap)
    return std::nullopt;
  return Witness{base_w.kind, p.pow(*e), 0};
}

}  // namespace

ClassificationReport classify_element(const Element& a) {
  ClassificationReport rep(a);
  const RingPtr& ring = a.ring();

  try {
    auto ni = nilpotency_index(a);
    if (ni) {
      rep.in_nilpotent = Tri::yes;
      rep.nil_w = nil_witness(*ni);
    } else {
      rep.in_nilpotent = Tri::no;
    }
  } catch (const std::invalid_argument&) {
    rep.in_nilpotent = Tri::unknown;
  }

  try {
    auto qi = quasi_inverse(a);
    if (qi) {
      rep.in_quasi_regular = Tri::yes;
      rep.quasi_inverse_value = std::move(*qi);
    } else {
      rep.in_quasi_regular = Tri::no;
    }
  } catch (const std::invalid_argument&) {
    rep.in_quasi_regular = Tri::unknown;
  }

  if (is_rational_carrier(ring->kind())) {
    const Rational& q = a.rational_value();
    if (auto w = pi_rational_witness(q)) {
      rep.in_pi = Tri::yes;
      rep.pi_w = std::move(*w);
    } else {
      rep.in_pi = Tri::no;
    }
    if (denominator(q) == 1) {
      rep.in_integral = Tri::yes;
      rep.integral_w = integral_witness_finite(a);
    } else {
      rep.in_integral = Tri::no;
    }
    return rep;
  }

  if (ring->kind() == RingKind::DirectSum) {
    rep.in_pi = Tri::yes;
    rep.in_integral = Tri::yes;
    std::vector<Witness> pi_parts, int_parts;
    for (const Element& c : a.children()) {
      ClassificationReport sub = classify_element(c);
      rep.in_pi = fold_tri(rep.in_pi, sub.in_pi);
      rep.in_integral = fold_tri(rep.in_integral, sub.in_integral);
      if (sub.pi_w) pi_parts.push_back(std::move(*sub.pi_w));
      if (sub.integral_w) int_parts.push_back(std::move(*sub.integral_w));
    }
    if (rep.in_pi == Tri::yes && pi_parts.size() == a.children().size())
      rep.pi_w = product_witness(WitnessKind::Pi, pi_parts);
    if (rep.in_integral == Tri::yes &&
        int_parts.size() == a.children().size())
      rep.integral_w = product_witness(WitnessKind::Integral, int_parts);
    return rep;
  }

  if (ring->kind() == RingKind::PolynomialOver) {
    const RingPtr& base = ring->base();
    Element c = a.children().empty() ? zero(base) : a.children()[0];
    bool higher_nil = true;
    for (std::size_t i = 1; i < a.children().size(); ++i)
      if (!nilpotency_index(a.children()[i])) higher_nil = false;
    if (!higher_nil) {
      // Some coefficient survives modulo the nilradical, so f maps to a
      // nonconstant polynomial over a domain quotient; no monic (or
      // value-one) relation can kill it.
      rep.in_pi = Tri::no;
      rep.in_integral = Tri::no;
      return rep;
    }
    ClassificationReport base_rep = classify_element(c);
    if (base_rep.in_pi == Tri::yes && base_rep.pi_w) {
      if (auto w = polynomial_mixed_witness(*base_rep.pi_w, a)) {
        rep.in_pi = Tri::yes;
        rep.pi_w = std::move(*w);
      } else {
        rep.in_pi = Tri::unknown;
      }
    } else {
      rep.in_pi = base_rep.in_pi;
    }
    if (base_rep.in_integral == Tri::yes && base_rep.integral_w) {
      if (auto w = polynomial_mixed_witness(*base_rep.integral_w, a)) {
        rep.in_integral = Tri::yes;
        rep.integral_w = std::move(*w);
      } else {
        rep.in_integral = Tri::unknown;
      }
    } else {
      rep.in_integral = base_rep.in_integral;
    }
    return rep;
  }

  // Finite carriers: pi coincides with Q; every element is integral.
  if (ring->finite()) {
    try {
      if (auto w = pi_witness_finite(a)) {
        rep.in_pi = Tri::yes;
        rep.pi_w = std::move(*w);
      } else {
        rep.in_pi = Tri::no;  // pi is contained in Q
      }
    } catch (const std::invalid_argument&) {
      rep.in_pi = rep.in_quasi_regular;  // finite: pi = Q
    }
    try {
      rep.integral_w = integral_witness_finite(a);
      rep.in_integral = Tri::yes;
    } catch (const std::invalid_argument&) {
      rep.in_integral = Tri::yes;  // still integral; witness too large
    }
    return rep;
  }

  // Infinite, non-rational, non-polynomial (matrices over F_p[t]).
  if (rep.in_nilpotent == Tri::yes) {
    rep.in_pi = Tri::yes;
    rep.pi_w = power_pi_witness(rep.nil_w->exponent);
    rep.in_integral = Tri::yes;
    Polynomial<Integer> p = lift_to_integer(rep.pi_w->poly);
    rep.integral_w = integral_witness(std::move(p));
  } else if (rep.in_quasi_regular == Tri::no) {
    rep.in_pi = Tri::no;  // pi is contained in Q
    rep.in_integral = Tri::unknown;
  } else {
    rep.in_pi = Tri::unknown;
    rep.in_integral = Tri::unknown;
  }
  return rep;
}

ClassifiedSets classify_sets(const FiniteRing& fr) {
  ClassifiedSets out;
  const RingPtr& ring = fr.ring();
  for (std::uint32_t i = 0; i < fr.size(); ++i) {
    const Element& a = fr.element(i);
    if (auto ni = fr.nil_index(i)) {
      Witness w = nil_witness(*ni);
      if (!validate(w, a))
        throw std::logic_error("classify_sets: bad nil witness");
      out.nilpotent.push_back(i);
      out.nil_witnesses.push_back(std::move(w));
    }
    if (auto qi = fr.quasi_inverse(i)) {
      out.quasi_regular.push_back(i);
      out.quasi_inverses.push_back(*qi);
    }
    if (auto ord = fr.circ_order(i)) {
      Witness w = circle_order_pi_witness(ring, *ord);
      if (!validate(w, a))
        throw std::logic_error("classify_sets: bad pi witness");
      out.pi.push_back(i);
      out.pi_witnesses.push_back(std::move(w));
    }
    Witness iw = integral_witness_finite(a);
    if (!validate(iw, a))
      throw std::logic_error("classify_sets: bad integral witness");
    out.integral.push_back(i);
    out.integral_witnesses.push_back(std::move(iw));
  }
  if (out.pi != out.quasi_regular)
    throw std::logic_error("classify_sets: pi differs from Q");
  if (!std::includes(out.pi.begin(), out.pi.end(), out.nilpotent.begin(),
                     out.nilpotent.end()))
    throw std::logic_error("classify_sets: N not contained in pi");
  if (out.integral.size() != fr.size())
    throw std::logic_error("classify_sets: integral sweep incomplete");
  return out;
}

}  // namespace ringlab
