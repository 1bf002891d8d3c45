// Acceptance gate: eight criteria, one line each, exit 0 only if all
// pass. Scale parameters and time budgets are pinned here on purpose —
// they are part of the contract, not tunables.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "ringlab/certificate.hpp"
#include "ringlab/suites.hpp"

using namespace ringlab;

namespace {

constexpr std::int64_t kFiniteCoreBudgetMs = 10000;
constexpr std::int64_t kRationalPiBudgetMs = 5000;
constexpr std::uint64_t kSeed = 1729;

struct Outcome {
  bool pass = false;
  std::int64_t ms = 0;
  std::string note;
};

template <typename Fn>
Outcome timed(Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  o.pass = fn(o.note);
  o.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
             .count();
  return o;
}

std::string summarize_failures(const Certificate& c) {
  for (const CertificateInstance& inst : c.instances)
    if (!inst.pass) return " [" + inst.input + "] " + inst.result;
  return "";
}

bool suite_ok(const Certificate& c, std::string& note) {
  note = std::to_string(c.instances.size()) + " instances";
  if (!c.pass) note += ";" + summarize_failures(c);
  return c.pass;
}

}  // namespace

int main() {
  int failed = 0;
  int index = 0;
  auto report = [&](const char* title, const Outcome& o) {
    ++index;
    std::printf("%s  %d. %s (%lld ms) -- %s\n", o.pass ? "PASS" : "FAIL",
                index, title, static_cast<long long>(o.ms), o.note.c_str());
    if (!o.pass) ++failed;
  };

  report("finite-core identities (pi = Q, J = Nil*, pi-ideals nil, "
         "nil one-sided ideals) across the standard family",
         timed([](std::string& note) {
           Certificate c = suite_finite_core(SuiteOptions{kSeed, 64, 1000});
           bool ok = suite_ok(c, note);
           note += ", budget " + std::to_string(kFiniteCoreBudgetMs) + " ms";
           if (c.elapsed_ms > kFiniteCoreBudgetMs) {
             note += "; over budget";
             return false;
           }
           return ok;
         }));

  report("rational pi decision exact to |a|,|b| <= 100 and matching the "
         "exhaustive low-degree search to |a|,|b| <= 12",
         timed([](std::string& note) {
           Certificate c = suite_rational_pi(SuiteOptions{kSeed, 64, 1000});
           bool ok = suite_ok(c, note);
           note += ", budget " + std::to_string(kRationalPiBudgetMs) + " ms";
           if (c.elapsed_ms > kRationalPiBudgetMs) {
             note += "; over budget";
             return false;
           }
           return ok;
         }));

  report("hat-transform exchange and involution on 1000 seeded polynomials",
         timed([](std::string& note) {
           return suite_ok(suite_hat_identities(SuiteOptions{kSeed, 64, 1000}),
                           note);
         }));

  report("witness-derived quasi-inverses equal cycle search on every "
         "quasi-regular element of the family",
         timed([](std::string& note) {
           return suite_ok(
               suite_witness_agreement(SuiteOptions{kSeed, 64, 1000}), note);
         }));

  report("circle identities on all quasi-regular pairs of rings up to 64 "
         "elements, 10000 rational pairs, and conjugation automorphisms",
         timed([](std::string& note) {
           return suite_ok(
               suite_circ_identities(SuiteOptions{kSeed, 64, 10000}), note);
         }));

  report("addition/multiplication/subring equivalence over every subgroup "
         "with |Q| <= 24, plus the division form in prime characteristic",
         timed([](std::string& note) {
           return suite_ok(
               suite_subgroup_equivalences(SuiteOptions{kSeed, 64, 1000}),
               note);
         }));

  report("nilpotents generate the determinant kernel (6 of 6 for M2(F2), "
         "24 for M2(F3)) and 1000 rational product certificates re-multiply",
         timed([](std::string& note) {
           return suite_ok(suite_generation(SuiteOptions{kSeed, 64, 1000}),
                           note);
         }));

  report("counterexample reproductions: odd denominators (1000), "
         "localization to 200, p-local radicals {3,5,7}, unbounded nil "
         "index, nonconstant trace, unit-value refuters",
         timed([](std::string& note) {
           bool all = true;
           std::string parts;
           auto fold = [&](const char* label, const Certificate& c) {
             if (!parts.empty()) parts += ", ";
             parts += label;
             parts += c.pass ? " ok" : " FAILED" + summarize_failures(c);
             all = all && c.pass;
           };
           fold("odd-den",
                suite_odd_denominator(SuiteOptions{kSeed, 64, 1000}));
           fold("localization",
                suite_localization(SuiteOptions{kSeed, 200, 1000}));
           fold("zp-radical", suite_zp_radical(SuiteOptions{kSeed, 64, 1000}));
           fold("unbounded",
                suite_unbounded_index(SuiteOptions{kSeed, 6, 1000}));
           fold("notcl", suite_notcl(SuiteOptions{kSeed, 64, 1000}));
           fold("exceptional",
                suite_exceptional(SuiteOptions{kSeed, 64, 100}));
           note = parts;
           return all;
         }));

  if (failed == 0)
    std::printf("acceptance: all 8 criteria passed\n");
  else
    std::printf("acceptance: %d of 8 criteria FAILED\n", failed);
  return failed == 0 ? 0 : 1;
}
