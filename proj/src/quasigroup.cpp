#include "ringlab/quasigroup.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ringlab {

namespace {

std::string idx_text(const FiniteRing& fr, std::uint32_t i) {
  return element_text(fr.element(i));
}

std::string set_text(const FiniteRing& fr,
                     const std::vector<std::uint32_t>& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) os << ", ";
    os << idx_text(fr, s[k]);
  }
  os << "}";
  return os.str();
}

std::uint32_t qinv_or_throw(const FiniteRing& fr, std::uint32_t i,
                            const char* who) {
  auto v = fr.quasi_inverse(i);
  if (!v)
    throw std::invalid_argument(std::string(who) + ": element " +
                                idx_text(fr, i) + " is not quasi-regular");
  return *v;
}

}  // namespace

SubgroupSet subgroup_generate(const FiniteRing& fr,
                              std::vector<std::uint32_t> gens, bool normal) {
  for (std::uint32_t g : gens) qinv_or_throw(fr, g, "subgroup_generate");

  std::vector<char> present(fr.size(), 0);
  std::vector<std::uint32_t> members;
  std::deque<std::uint32_t> work;
  auto push = [&](std::uint32_t i) {
    if (!present[i]) {
      present[i] = 1;
      work.push_back(i);
    }
  };
  push(fr.zero_index());
  for (std::uint32_t g : gens) push(g);

  const std::vector<std::uint32_t>* conjugators = nullptr;
  if (normal) conjugators = &fr.quasi_regulars();

  while (!work.empty()) {
    std::uint32_t x = work.front();
    work.pop_front();
    members.push_back(x);
    push(*fr.quasi_inverse(x));
    // Pair x with every element already present in both orders; elements
    // arriving later pair with x when they are popped.
    for (std::size_t k = 0; k < members.size(); ++k) {
      push(fr.circ(x, members[k]));
      push(fr.circ(members[k], x));
    }
    if (conjugators) {
      for (std::uint32_t q : *conjugators)
        push(fr.circ(fr.circ(q, x), *fr.quasi_inverse(q)));
    }
  }

  std::sort(members.begin(), members.end());
  SubgroupSet out;
  out.elements = std::move(members);
  out.generators = std::move(gens);
  out.normal_closure = normal;
  return out;
}

bool subgroup_valid(const FiniteRing& fr, const SubgroupSet& s) {
  std::vector<char> present(fr.size(), 0);
  for (std::uint32_t i : s.elements) {
    if (i >= fr.size()) return false;
    present[i] = 1;
  }
  if (!present[fr.zero_index()]) return false;
  for (std::uint32_t i : s.elements) {
    auto v = fr.quasi_inverse(i);
    if (!v || !present[*v]) return false;
    for (std::uint32_t j : s.elements)
      if (!present[fr.circ(i, j)]) return false;
  }
  return true;
}

std::vector<SubgroupSet> all_subgroups(const FiniteRing& fr) {
  const auto& q = fr.quasi_regulars();
  if (q.size() > 24)
    throw std::invalid_argument(
        "all_subgroups: quasi-regular group larger than 24 elements");

  std::set<std::vector<std::uint32_t>> seen;
  std::vector<SubgroupSet> out;
  std::deque<SubgroupSet> work;

  auto offer = [&](SubgroupSet s) {
    if (seen.insert(s.elements).second) {
      out.push_back(s);
      work.push_back(std::move(s));
    }
  };

  offer(subgroup_generate(fr, {}, false));
  while (!work.empty()) {
    SubgroupSet s = std::move(work.front());
    work.pop_front();
    for (std::uint32_t g : q) {
      if (std::binary_search(s.elements.begin(), s.elements.end(), g))
        continue;
      std::vector<std::uint32_t> gens = s.generators;
      gens.push_back(g);
      offer(subgroup_generate(fr, std::move(gens), false));
    }
  }

  std::sort(out.begin(), out.end(),
            [](const SubgroupSet& a, const SubgroupSet& b) {
              if (a.elements.size() != b.elements.size())
                return a.elements.size() < b.elements.size();
              return a.elements < b.elements;
            });
  return out;
}

Certificate conjugation_check(const FiniteRing& fr, std::uint32_t r) {
  std::uint32_t rinv = qinv_or_throw(fr, r, "conjugation_check");

  Certificate cert;
  cert.suite = "conjugation_check";
  cert.anchor_section = "quasigroup";
  cert.anchor_claim =
      "Conjugation by a quasi-regular element under the circle operation "
      "is a ring automorphism.";

  const std::uint32_t n = fr.size();
  std::vector<std::uint32_t> image(n);
  for (std::uint32_t x = 0; x < n; ++x)
    image[x] = fr.circ(fr.circ(r, x), rinv);

  std::string who = "r = " + idx_text(fr, r) + " in " + fr.ring()->text();

  bool additive = true;
  std::string add_note = "additive on all pairs";
  for (std::uint32_t x = 0; x < n && additive; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      if (image[fr.add(x, y)] != fr.add(image[x], image[y])) {
        additive = false;
        add_note = "violated at x = " + idx_text(fr, x) +
                   ", y = " + idx_text(fr, y);
        break;
      }
  cert.add(who, "the map x -> r o x o r^(-1) preserves addition", add_note,
           additive);

  bool multiplicative = true;
  std::string mul_note = "multiplicative on all pairs";
  for (std::uint32_t x = 0; x < n && multiplicative; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      if (image[fr.mul(x, y)] != fr.mul(image[x], image[y])) {
        multiplicative = false;
        mul_note = "violated at x = " + idx_text(fr, x) +
                   ", y = " + idx_text(fr, y);
        break;
      }
  cert.add(who, "the map x -> r o x o r^(-1) preserves multiplication",
           mul_note, multiplicative);

  std::vector<char> hit(n, 0);
  bool bijective = true;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (hit[image[x]]) bijective = false;
    hit[image[x]] = 1;
  }
  cert.add(who, "the map x -> r o x o r^(-1) is a bijection of the carrier",
           bijective ? "image has full size" : "image collapses", bijective);

  if (auto one = fr.one_index()) {
    std::uint32_t u = fr.sub(*one, r);
    std::optional<std::uint32_t> uinv;
    for (std::uint32_t j = 0; j < n; ++j)
      if (fr.mul(u, j) == *one && fr.mul(j, u) == *one) {
        uinv = j;
        break;
      }
    if (uinv) {
      bool match = true;
      std::string note = "maps agree on every element";
      for (std::uint32_t x = 0; x < n; ++x) {
        std::uint32_t rhs =
            fr.sub(*one, fr.mul(fr.mul(u, fr.sub(*one, x)), *uinv));
        if (image[x] != rhs) {
          match = false;
          note = "maps differ at x = " + idx_text(fr, x);
          break;
        }
      }
      cert.add(who,
               "circle conjugation agrees with x -> 1 - (1-r)(1-x)(1-r)^(-1)",
               note, match);
    }
  }

  return cert;
}

Certificate circ_identity_check(const Element& x, const Element& y) {
  auto xi = quasi_inverse(x);
  auto yi = quasi_inverse(y);
  if (!xi || !yi)
    throw std::invalid_argument(
        "circ_identity_check: both arguments must be quasi-regular");

  Certificate cert;
  cert.suite = "circ_identity_check";
  cert.anchor_section = "quasigroup";
  cert.anchor_claim =
      "Products, sums, and negatives are recovered from circle products of "
      "quasi-inverses.";

  std::string in = "x = " + element_text(x) + ", y = " + element_text(y) +
                   " in " + x.ring()->text();

  Element lhs1 = mul(x, y);
  Element rhs1 = circ(circ(x, add(*xi, *yi)), y);
  cert.add(in, "x y = x o (x^(-1) + y^(-1)) o y",
           "both sides equal " + element_text(lhs1), lhs1 == rhs1);

  Element lhs2 = add(x, y);
  Element rhs2 = circ(circ(x, mul(*xi, *yi)), y);
  cert.add(in, "x + y = x o (x^(-1) y^(-1)) o y",
           "both sides equal " + element_text(lhs2), lhs2 == rhs2);

  Element lhs3 = neg(x);
  Element rhs3 = circ(int_mul(2, *xi), x);
  cert.add(in, "-x = (2 x^(-1)) o x", "both sides equal " + element_text(lhs3),
           lhs3 == rhs3);

  return cert;
}

namespace {

struct ClosurePredicate {
  bool holds = true;
  std::string note;
};

ClosurePredicate closed_under(
    const FiniteRing& fr, const std::vector<std::uint32_t>& set,
    const std::vector<char>& present,
    std::uint32_t (FiniteRing::*op)(std::uint32_t, std::uint32_t) const,
    const char* opname) {
  ClosurePredicate p;
  p.note = std::string("closed under ") + opname;
  for (std::uint32_t a : set)
    for (std::uint32_t b : set)
      if (!present[(fr.*op)(a, b)]) {
        p.holds = false;
        p.note = std::string("escapes under ") + opname + " at a = " +
                 idx_text(fr, a) + ", b = " + idx_text(fr, b);
        return p;
      }
  return p;
}

}  // namespace

Certificate subgroup_ring_closure_check(const FiniteRing& fr,
                                        const SubgroupSet& s) {
  if (!subgroup_valid(fr, s))
    throw std::invalid_argument(
        "subgroup_ring_closure_check: not a circle subgroup");

  Certificate cert;
  cert.suite = "subgroup_ring_closure_check";
  cert.anchor_section = "quasigroup";
  cert.anchor_claim =
      "For a circle subgroup, closure under addition, closure under "
      "multiplication, and being a subring are equivalent.";

  std::vector<char> present(fr.size(), 0);
  for (std::uint32_t i : s.elements) present[i] = 1;
  std::string in = "S = " + set_text(fr, s.elements) + " in " +
                   fr.ring()->text();

  ClosurePredicate addp =
      closed_under(fr, s.elements, present, &FiniteRing::add, "+");
  cert.add(in, "decide: is S closed under addition", addp.note, true);

  ClosurePredicate mulp =
      closed_under(fr, s.elements, present, &FiniteRing::mul, "*");
  cert.add(in, "decide: is S closed under multiplication", mulp.note, true);

  bool neg_closed = true;
  for (std::uint32_t a : s.elements)
    if (!present[fr.neg(a)]) neg_closed = false;
  bool subring = addp.holds && mulp.holds && neg_closed;
  cert.add(in, "decide: is S a subring",
           subring ? "contains 0, closed under +, -, *"
                   : "fails a subring closure",
           true);

  bool equivalent = (addp.holds == mulp.holds) && (mulp.holds == subring);
  cert.add(in,
           "the three closure predicates agree (all true or all false)",
           std::string("+: ") + (addp.holds ? "yes" : "no") + ", *: " +
               (mulp.holds ? "yes" : "no") + ", subring: " +
               (subring ? "yes" : "no"),
           equivalent);

  return cert;
}

namespace {

struct DivisionAnalysis {
  std::vector<std::uint32_t> t;  // S with the prime subring adjoined
  bool add_closed = false;
  bool division = false;
  std::string add_note, div_note;
};

DivisionAnalysis analyze_division(const FiniteRing& fr, const SubgroupSet& s,
                                  const char* who) {
  auto one = fr.one_index();
  if (!one)
    throw std::invalid_argument(std::string(who) + ": ring must be unital");
  Integer ch = fr.ring()->additive_exponent();
  if (!is_prime(ch))
    throw std::invalid_argument(std::string(who) +
                                ": characteristic must be prime");
  if (!subgroup_valid(fr, s))
    throw std::invalid_argument(std::string(who) + ": not a circle subgroup");

  DivisionAnalysis out;
  // T = S together with the prime subring {0, 1, 2*1, ...}.
  std::vector<char> present(fr.size(), 0);
  for (std::uint32_t i : s.elements) present[i] = 1;
  std::uint32_t acc = fr.zero_index();
  for (Integer k = 0; k < ch; ++k) {
    present[acc] = 1;
    acc = fr.add(acc, *one);
  }
  for (std::uint32_t i = 0; i < fr.size(); ++i)
    if (present[i]) out.t.push_back(i);

  ClosurePredicate addp = closed_under(fr, out.t, present, &FiniteRing::add, "+");
  out.add_closed = addp.holds;
  out.add_note = addp.note;

  // Division subring: subring in which every nonzero element has a
  // two-sided multiplicative inverse inside T.
  ClosurePredicate mulp = closed_under(fr, out.t, present, &FiniteRing::mul, "*");
  bool neg_closed = true;
  for (std::uint32_t a : out.t)
    if (!present[fr.neg(a)]) neg_closed = false;
  out.division = addp.holds && mulp.holds && neg_closed;
  out.div_note = "not a subring";
  if (out.division) {
    out.div_note = "subring with every nonzero element invertible";
    for (std::uint32_t a : out.t) {
      if (a == fr.zero_index()) continue;
      bool invertible = false;
      for (std::uint32_t b : out.t)
        if (fr.mul(a, b) == *one && fr.mul(b, a) == *one) {
          invertible = true;
          break;
        }
      if (!invertible) {
        out.division = false;
        out.div_note = "no inverse in T for " + idx_text(fr, a);
        break;
      }
    }
  }
  return out;
}

}  // namespace

Certificate division_closure_check(const FiniteRing& fr,
                                   const SubgroupSet& s) {
  DivisionAnalysis da = analyze_division(fr, s, "division_closure_check");

  Certificate cert;
  cert.suite = "division_closure_check";
  cert.anchor_section = "quasigroup";
  cert.anchor_claim =
      "In prime characteristic, a circle subgroup together with the prime "
      "subring is closed under addition exactly when it is a division "
      "subring.";

  std::string in = "S = " + set_text(fr, s.elements) + ", T = S with the " +
                   "prime subring, in " + fr.ring()->text();

  cert.add(in, "decide: is T closed under addition", da.add_note, true);
  cert.add(in, "decide: is T a division subring", da.div_note, true);
  cert.add(in, "the two predicates agree (both true or both false)",
           std::string("+: ") + (da.add_closed ? "yes" : "no") +
               ", division: " + (da.division ? "yes" : "no"),
           da.add_closed == da.division);

  return cert;
}

std::pair<bool, bool> division_closure_pair(const FiniteRing& fr,
                                            const SubgroupSet& s) {
  DivisionAnalysis da = analyze_division(fr, s, "division_closure_pair");
  return {da.add_closed, da.division};
}

Rational SignedGenerator::value() const {
  return Rational(1) + Rational(1) / Rational(n);
}

std::string signed_generators_text(const std::vector<SignedGenerator>& gens) {
  if (gens.empty()) return "(empty product)";
  std::ostringstream os;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k) os << " o ";
    os << "(" << gens[k].value() << ")";
    if (gens[k].exponent < 0) os << "^(-1)";
  }
  return os.str();
}

Rational circ_product_value(const std::vector<SignedGenerator>& gens) {
  Rational acc = 0;
  for (const SignedGenerator& g : gens) {
    Rational v = g.value();
    if (g.exponent < 0) v = v / (v - 1);  // quasi-inverse of v != 1
    acc = acc + v - acc * v;
  }
  return acc;
}

std::vector<SignedGenerator> rational_product_certificate(const Rational& q) {
  if (q == 1)
    throw std::invalid_argument(
        "rational_product_certificate: 1 is not quasi-regular");
  if (q == 0) return {};

  // Through v = 1 - q the task becomes factoring v as a product of
  // values -1/n and their reciprocals -n; the factor 1 + 1/n has
  // 1 - (1 + 1/n) = -1/n, and its quasi-inverse has 1 - (...) = -n.
  Rational v = 1 - q;
  Integer a = numerator(v);
  Integer b = denominator(v);  // b >= 1, a != 0

  std::vector<SignedGenerator> out;
  if (b == 1) {
    out.push_back({-a, -1});  // (-1/(-a))^(-1) = a
  } else if (a == 1) {
    out.push_back({-b, 1});  // -1/(-b) = 1/b
  } else if (a == -1) {
    out.push_back({b, 1});  // -1/b
  } else {
    out.push_back({a, -1});  // (-1/a)^(-1) = -a
    out.push_back({b, 1});   // -1/b; the product is a/b
  }
  return out;
}

}  // namespace ringlab
