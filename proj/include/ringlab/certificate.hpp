#pragma once

// Machine-checkable run records. Every verification suite produces one
// Certificate; each instance inside it is a single checked statement
// with enough data to re-check it independently.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ringlab {

struct CertificateInstance {
  std::string input;   // the object checked (ring, element, parameters)
  std::string claim;   // the statement, in words
  std::string result;  // computed outcome; failures carry the counterexample
  std::optional<std::string> witness;  // checkable payload, when one exists
  bool pass = true;
};

struct Certificate {
  std::string suite;
  std::string anchor_section;  // which part of the calculus is exercised
  std::string anchor_claim;    // one-sentence statement of the property
  std::uint64_t seed = 0;
  std::vector<CertificateInstance> instances;
  bool pass = true;
  std::int64_t elapsed_ms = 0;

  void add(CertificateInstance inst);
  void add(std::string input, std::string claim, std::string result, bool ok,
           std::optional<std::string> witness = std::nullopt);
};

/// JSON layout: {suite, anchor: {section, quote}, seed, instances:
/// [{input, claim, result, witness?}], pass, elapsed_ms}. A failing
/// instance carries a "FAIL: " prefix on its result string.
std::string certificate_json_text(const Certificate& c, int indent = 2);

/// The JSON bytes with elapsed_ms left out; two runs of the same suite
/// with the same seed produce identical canonical bytes.
std::string canonical_bytes(const Certificate& c);

std::string certificate_csv(const Certificate& c);
std::string certificate_text(const Certificate& c);

}  // namespace ringlab
