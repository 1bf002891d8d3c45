#include "ringlab/radical.hpp"

#include <algorithm>
#include <stdexcept>

namespace ringlab {

namespace {

// Worklist closure. Each popped element is negated, summed against
// everything present at its pop (later arrivals pair up when they pop
// themselves, which completes additive closure), and absorbed against
// every ring element on the requested sides. Integer multiples arise
// from repeated sums, so nonunital carriers are covered.
//
// When `good` is given the closure aborts as soon as an element outside
// it appears; the return value then reports containment, and `out` is
// left partial.
bool close_ideal(const FiniteRing& fr, const std::vector<std::uint32_t>& gens,
                 Sidedness side, const std::vector<char>* good,
                 std::vector<std::uint32_t>& members) {
  const std::uint32_t n = fr.size();
  std::vector<char> present(n, 0);
  std::vector<std::uint32_t> work;
  members.clear();
  bool ok = true;
  auto push = [&](std::uint32_t x) {
    if (present[x]) return true;
    if (good && !(*good)[x]) {
      ok = false;
      return false;
    }
    present[x] = 1;
    members.push_back(x);
    work.push_back(x);
    return true;
  };
  if (!push(fr.zero_index())) return false;
  for (std::uint32_t g : gens)
    if (!push(g)) return false;
  while (!work.empty()) {
    std::uint32_t x = work.back();
    work.pop_back();
    if (!push(fr.neg(x))) return false;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (!push(fr.add(x, members[i]))) return false;
    for (std::uint32_t r = 0; r < n; ++r) {
      if (side != Sidedness::Right && !push(fr.mul(r, x))) return false;
      if (side != Sidedness::Left && !push(fr.mul(x, r))) return false;
    }
  }
  return ok;
}

IdealSet make_ideal(std::vector<std::uint32_t> members, Sidedness side) {
  std::sort(members.begin(), members.end());
  IdealSet s;
  s.elements = std::move(members);
  s.left_absorbing = side != Sidedness::Right;
  s.right_absorbing = side != Sidedness::Left;
  return s;
}

std::vector<char> mask_of(const FiniteRing& fr,
                          const std::vector<std::uint32_t>& members) {
  std::vector<char> m(fr.size(), 0);
  for (std::uint32_t i : members) m[i] = 1;
  return m;
}

// The {a : principal ideal of a within good} construction shared by J
// and Nil*, with the exhaustive ideal-ness check.
IdealSet largest_good_ideal(const FiniteRing& fr, const std::vector<char>& good,
                            const char* name) {
  std::vector<std::uint32_t> members;
  for (std::uint32_t a = 0; a < fr.size(); ++a)
    if (ideal_within(fr, {a}, Sidedness::TwoSided, good)) members.push_back(a);
  // Re-closing the whole set must not add anything: the set of such a
  // is itself an ideal.
  std::vector<std::uint32_t> closed;
  close_ideal(fr, members, Sidedness::TwoSided, nullptr, closed);
  if (closed.size() != members.size())
    throw std::logic_error(std::string(name) + ": computed set is not an ideal");
  return make_ideal(std::move(members), Sidedness::TwoSided);
}

}  // namespace

IdealSet ideal_generated(const FiniteRing& fr,
                         const std::vector<std::uint32_t>& gens,
                         Sidedness side) {
  std::vector<std::uint32_t> members;
  close_ideal(fr, gens, side, nullptr, members);
  return make_ideal(std::move(members), side);
}

bool ideal_within(const FiniteRing& fr, const std::vector<std::uint32_t>& gens,
                  Sidedness side, const std::vector<char>& good) {
  std::vector<std::uint32_t> scratch;
  return close_ideal(fr, gens, side, &good, scratch);
}

IdealSet jacobson_radical(const FiniteRing& fr) {
  std::vector<char> qmask(fr.size(), 0);
  for (std::uint32_t i : fr.quasi_regulars()) qmask[i] = 1;
  IdealSet j = largest_good_ideal(fr, qmask, "jacobson_radical");
  // Maximality: extending by any outside element breaks quasi-regularity
  // of the closure.
  std::vector<char> inj = mask_of(fr, j.elements);
  for (std::uint32_t b = 0; b < fr.size(); ++b) {
    if (inj[b]) continue;
    std::vector<std::uint32_t> gens = j.elements;
    gens.push_back(b);
    if (ideal_within(fr, gens, Sidedness::TwoSided, qmask))
      throw std::logic_error("jacobson_radical: maximality violated");
  }
  return j;
}

IdealSet upper_nilradical(const FiniteRing& fr) {
  std::vector<char> nmask(fr.size(), 0);
  for (std::uint32_t i : fr.nilpotents()) nmask[i] = 1;
  return largest_good_ideal(fr, nmask, "upper_nilradical");
}

IdealSet lower_nilradical(const FiniteRing& fr) {
  const std::uint32_t n = fr.size();
  // Survivors: nonzero a whose multiplicative "a x a" steps can stay
  // nonzero forever. Removing elements until stable computes the
  // greatest such set.
  std::vector<char> z(n, 1);
  z[fr.zero_index()] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t a = 0; a < n; ++a) {
      if (!z[a]) continue;
      bool sustained = false;
      for (std::uint32_t x = 0; x < n && !sustained; ++x)
        if (z[fr.mul(fr.mul(a, x), a)]) sustained = true;
      if (!sustained) {
        z[a] = 0;
        changed = true;
      }
    }
  }
  std::vector<std::uint32_t> members;
  for (std::uint32_t a = 0; a < n; ++a)
    if (!z[a]) members.push_back(a);
  return make_ideal(std::move(members), Sidedness::TwoSided);
}

RadicalReport radical_report(const FiniteRing& fr) {
  RadicalReport rep;
  rep.jacobson = jacobson_radical(fr);
  rep.upper = upper_nilradical(fr);
  rep.lower = lower_nilradical(fr);
  rep.nilpotents = fr.nilpotents();
  auto contains = [](const std::vector<std::uint32_t>& big,
                     const std::vector<std::uint32_t>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  if (!contains(rep.upper.elements, rep.lower.elements) ||
      !contains(rep.jacobson.elements, rep.upper.elements))
    throw std::logic_error("radical_report: containment chain violated");
  if (fr.ring()->commutative()) {
    if (rep.lower.elements != rep.nilpotents ||
        rep.upper.elements != rep.nilpotents)
      throw std::logic_error(
          "radical_report: commutative radicals differ from N");
  }
  return rep;
}

Certificate kothe_check(const FiniteRing& fr) {
  Certificate cert;
  cert.suite = "kothe";
  cert.anchor_section = "radicals";
  cert.anchor_claim =
      "every nil principal one-sided ideal lies inside the largest nil "
      "two-sided ideal";
  std::vector<char> nmask(fr.size(), 0);
  for (std::uint32_t i : fr.nilpotents()) nmask[i] = 1;
  IdealSet upper = upper_nilradical(fr);
  std::vector<char> umask = mask_of(fr, upper.elements);
  const std::string rname = fr.ring()->text();
  for (int s = 0; s < 2; ++s) {
    Sidedness side = s == 0 ? Sidedness::Left : Sidedness::Right;
    const char* sname = s == 0 ? "left" : "right";
    for (std::uint32_t a = 0; a < fr.size(); ++a) {
      if (!ideal_within(fr, {a}, side, nmask)) continue;
      bool ok = umask[a];
      cert.add(rname + ", a = " + element_text(fr.element(a)) + ", " + sname,
               std::string("the principal ") + sname +
                   " ideal of a is nil, so a lies in Nil*",
               ok ? "contained in Nil*" : "a escapes Nil*", ok);
    }
  }
  return cert;
}

}  // namespace ringlab
