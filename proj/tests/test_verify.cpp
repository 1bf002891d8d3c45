#include <stdexcept>

#include "doctest.h"
#include "json.hpp"
#include "ringlab/certificate.hpp"
#include "ringlab/suites.hpp"

using namespace ringlab;

TEST_SUITE("verify") {

TEST_CASE("suite registry") {
  std::vector<std::string> names = suite_names();
  CHECK(names.size() == 13);
  CHECK(names.front() == "finite_core");
  CHECK(names.back() == "exceptional");
  CHECK_THROWS_AS(run_suite("nope", SuiteOptions{}), std::invalid_argument);
}

TEST_CASE("finite core family census") {
  // Z/2..Z/8 (7) + four dZ/nZ + three matrix rings + one direct sum
  // + four unitalizations.
  std::vector<RingPtr> fam = finite_core_family(8);
  CHECK(fam.size() == 19);
  CHECK(fam.front()->text() == "Z/2");
  std::size_t with64 = finite_core_family(64).size();
  CHECK(with64 == 63 + 12);
}

TEST_CASE("certificate serialization") {
  Certificate c;
  c.suite = "demo";
  c.anchor_section = "serialization";
  c.anchor_claim = "demo claim";
  c.seed = 42;
  c.add("in1", "claim1", "ok", true);
  c.add("in2", "claim2", "broken", false, std::string("w2"));
  CHECK_FALSE(c.pass);

  std::string js = certificate_json_text(c);
  nlohmann::json parsed = nlohmann::json::parse(js);
  CHECK(parsed["suite"] == "demo");
  CHECK(parsed["anchor"]["section"] == "serialization");
  CHECK(parsed["anchor"]["quote"] == "demo claim");
  CHECK(parsed["seed"] == 42);
  CHECK(parsed["pass"] == false);
  REQUIRE(parsed["instances"].size() == 2);
  CHECK(parsed["instances"][0]["result"] == "ok");
  // Failing instances carry the FAIL prefix and their witness payload.
  std::string r1 = parsed["instances"][1]["result"];
  CHECK(r1.rfind("FAIL: ", 0) == 0);
  CHECK(parsed["instances"][1]["witness"] == "w2");
  CHECK(parsed.contains("elapsed_ms"));

  // The canonical form drops elapsed_ms and nothing else.
  Certificate c2 = c;
  c2.elapsed_ms = c.elapsed_ms + 12345;
  CHECK(canonical_bytes(c) == canonical_bytes(c2));
  nlohmann::json canon = nlohmann::json::parse(canonical_bytes(c));
  CHECK_FALSE(canon.contains("elapsed_ms"));
  CHECK(canon["instances"].size() == 2);

  std::string csv = certificate_csv(c);
  CHECK(csv.find("demo") != std::string::npos);
  std::string txt = certificate_text(c);
  CHECK(txt.find("FAIL") != std::string::npos);
}

TEST_CASE("suites are deterministic for a fixed seed") {
  SuiteOptions a{1729, 16, 60};
  SuiteOptions b{1729, 16, 60};
  CHECK(canonical_bytes(suite_hat_identities(a)) ==
        canonical_bytes(suite_hat_identities(b)));
  CHECK(canonical_bytes(suite_circ_identities(a)) ==
        canonical_bytes(suite_circ_identities(b)));
  CHECK(canonical_bytes(suite_exceptional(a)) ==
        canonical_bytes(suite_exceptional(b)));

  SuiteOptions other{5, 16, 60};
  CHECK(canonical_bytes(suite_hat_identities(a)) !=
        canonical_bytes(suite_hat_identities(other)));
}

TEST_CASE("every suite passes at reduced scale") {
  SuiteOptions small{1729, 16, 60};
  for (const std::string& name : suite_names()) {
    Certificate c = run_suite(name, small);
    CHECK(c.pass);
    CHECK(c.suite == name);
    CHECK_FALSE(c.instances.empty());
    for (const CertificateInstance& inst : c.instances) CHECK(inst.pass);
  }
}

TEST_CASE("integer refuter") {
  unsigned probes = 0;
  Integer k = exceptional_refute_int(
      Polynomial<Integer>({Integer(1), Integer(1), Integer(1)}), &probes);
  CHECK(k == 1);
  CHECK(probes == 2);

  k = exceptional_refute_int(Polynomial<Integer>({Integer(0), Integer(1)}),
                             &probes);
  CHECK(k == 0);
  CHECK(probes == 1);

  k = exceptional_refute_int(Polynomial<Integer>({Integer(1), Integer(2)}),
                             &probes);
  CHECK(k == 1);
  CHECK(probes == 2);

  // x^2 - x - 1 takes unit values at 0, 1, -1, 2 and escapes at -2.
  Polynomial<Integer> fib({Integer(-1), Integer(-1), Integer(1)});
  k = exceptional_refute_int(fib, &probes);
  CHECK(k == -2);
  CHECK(probes == 5);
  CHECK(probes <= 2 * 2 + 1);

  CHECK_THROWS_AS(exceptional_refute_int(Polynomial<Integer>({Integer(7)})),
                  std::invalid_argument);
}

TEST_CASE("polynomial-ring witness") {
  auto pm = [](std::vector<long> cs) {
    std::vector<Mod> v;
    for (long c : cs) v.emplace_back(c, 2);
    return Polynomial<Mod>(std::move(v));
  };
  // P(y) = x*y + 1 over F_2[x]: substitute x^2, reaching degree 3.
  Polynomial<Polynomial<Mod>> P({pm({1}), pm({0, 1})});
  long deg = 0;
  Polynomial<Mod> px = exceptional_witness_polyring(P, &deg);
  CHECK(px == pm({0, 0, 1}));
  CHECK(deg == 3);

  Polynomial<Polynomial<Mod>> Py({pm({0}), pm({1})});
  CHECK(exceptional_witness_polyring(Py, &deg) == pm({0, 1}));
  CHECK(deg == 1);

  Polynomial<Polynomial<Mod>> Pc({pm({1})});
  CHECK_THROWS_AS(exceptional_witness_polyring(Pc, nullptr),
                  std::invalid_argument);
}

TEST_CASE("acceptance-facing suites pass with pinned options") {
  CHECK(suite_finite_core(SuiteOptions{1729, 16, 100}).pass);
  CHECK(suite_rational_pi(SuiteOptions{1729, 64, 100}).pass);
  CHECK(suite_subgroup_equivalences(SuiteOptions{1729, 16, 100}).pass);
  CHECK(suite_odd_denominator(SuiteOptions{1729, 64, 200}).pass);
  CHECK(suite_localization(SuiteOptions{1729, 60, 100}).pass);
  CHECK(suite_zp_radical(SuiteOptions{1729, 64, 100}).pass);
  CHECK(suite_unbounded_index(SuiteOptions{1729, 3, 100}).pass);
  CHECK(suite_notcl(SuiteOptions{1729, 64, 100}).pass);
}

}  // TEST_SUITE
