#pragma once

// Named verification suites. Each one checks a family of concrete
// instances of the circle-operation calculus and returns a Certificate;
// re-running with the same options reproduces the same certificate
// bytes (timing aside).

#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/certificate.hpp"
#include "ringlab/mod.hpp"
#include "ringlab/polynomial.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

struct SuiteOptions {
  std::uint64_t seed = 1729;
  std::uint32_t max_n = 64;    // bound for the Z/n part of the core family
  std::uint32_t sample = 1000; // random-instance count where sampling applies
};

/// The core family of finite carriers: Z/n for 2 <= n <= max_n, the
/// subrings dZ/nZ for (2,4), (2,8), (3,9), (2,16), the matrix rings
/// M2(Z/2), M2(Z/3), M2(Z/4), the direct sum Z/4 (+) M2(Z/2), and the
/// unitalizations of the nonunital entries.
std::vector<RingPtr> finite_core_family(std::uint32_t max_n);

Certificate suite_finite_core(const SuiteOptions& opts);
Certificate suite_rational_pi(const SuiteOptions& opts);
Certificate suite_hat_identities(const SuiteOptions& opts);
Certificate suite_witness_agreement(const SuiteOptions& opts);
Certificate suite_circ_identities(const SuiteOptions& opts);
Certificate suite_subgroup_equivalences(const SuiteOptions& opts);
Certificate suite_generation(const SuiteOptions& opts);
Certificate suite_odd_denominator(const SuiteOptions& opts);
Certificate suite_localization(const SuiteOptions& opts);
Certificate suite_zp_radical(const SuiteOptions& opts);
Certificate suite_unbounded_index(const SuiteOptions& opts);
Certificate suite_notcl(const SuiteOptions& opts);
Certificate suite_exceptional(const SuiteOptions& opts);

/// All registered suite names, in canonical order.
std::vector<std::string> suite_names();

/// Runs one suite by name; throws std::invalid_argument for an unknown
/// name.
Certificate run_suite(const std::string& name, const SuiteOptions& opts);

// --- standalone helpers used by the exceptional suite ---------------------

/// First k in the scan 0, 1, -1, 2, -2, ... with p(k) not in {1, -1};
/// such k exists within 2*deg(p)+1 candidates because p(x) = 1 and
/// p(x) = -1 each have at most deg(p) integer roots. probes (when
/// non-null) receives the number of evaluations made. Throws
/// std::invalid_argument for constant p.
Integer exceptional_refute_int(const Polynomial<Integer>& p,
                               unsigned* probes = nullptr);

/// For P nonconstant in y with coefficients in F_p[x]: sets d to the
/// largest coefficient degree and returns x^(d+1). Substituting it for
/// y gives degree deg(lead(P)) + deg_y(P) * (d+1) >= 1, so P sends
/// x^(d+1) to a nonunit; the degree identity is checked and a
/// violation throws std::logic_error. degree_out (when non-null)
/// receives that degree.
Polynomial<Mod> exceptional_witness_polyring(
    const Polynomial<Polynomial<Mod>>& P, long* degree_out = nullptr);

}  // namespace ringlab
