#include "ringlab/certificate.hpp"

#include <sstream>

#include "json.hpp"

namespace ringlab {

void Certificate::add(CertificateInstance inst) {
  pass = pass && inst.pass;
  instances.push_back(std::move(inst));
}

void Certificate::add(std::string input, std::string claim, std::string result,
                      bool ok, std::optional<std::string> witness) {
  CertificateInstance inst;
  inst.input = std::move(input);
  inst.claim = std::move(claim);
  inst.result = ok ? std::move(result) : "FAIL: " + result;
  inst.witness = std::move(witness);
  inst.pass = ok;
  add(std::move(inst));
}

namespace {

nlohmann::ordered_json to_json(const Certificate& c, bool with_elapsed) {
  nlohmann::ordered_json j;
  j["suite"] = c.suite;
  j["anchor"] = {{"section", c.anchor_section}, {"quote", c.anchor_claim}};
  j["seed"] = c.seed;
  j["instances"] = nlohmann::ordered_json::array();
  for (const CertificateInstance& inst : c.instances) {
    nlohmann::ordered_json ji;
    ji["input"] = inst.input;
    ji["claim"] = inst.claim;
    ji["result"] = inst.result;
    if (inst.witness) ji["witness"] = *inst.witness;
    j["instances"].push_back(std::move(ji));
  }
  j["pass"] = c.pass;
  if (with_elapsed) j["elapsed_ms"] = c.elapsed_ms;
  return j;
}

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string certificate_json_text(const Certificate& c, int indent) {
  return to_json(c, true).dump(indent) + "\n";
}

std::string canonical_bytes(const Certificate& c) {
  return to_json(c, false).dump();
}

std::string certificate_csv(const Certificate& c) {
  std::ostringstream out;
  out << "suite,section,seed,index,input,claim,result,witness,pass\n";
  for (std::size_t i = 0; i < c.instances.size(); ++i) {
    const CertificateInstance& inst = c.instances[i];
    out << csv_field(c.suite) << ',' << csv_field(c.anchor_section) << ','
        << c.seed << ',' << i << ',' << csv_field(inst.input) << ','
        << csv_field(inst.claim) << ',' << csv_field(inst.result) << ','
        << csv_field(inst.witness.value_or("")) << ','
        << (inst.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string certificate_text(const Certificate& c) {
  std::ostringstream out;
  out << "suite " << c.suite << " [" << c.anchor_section << "] seed=" << c.seed
      << " -> " << (c.pass ? "PASS" : "FAIL") << " (" << c.instances.size()
      << " instances, " << c.elapsed_ms << " ms)\n";
  out << "  claim: " << c.anchor_claim << "\n";
  for (std::size_t i = 0; i < c.instances.size(); ++i) {
    const CertificateInstance& inst = c.instances[i];
    out << "  [" << i << "] " << (inst.pass ? "pass" : "FAIL") << " | "
        << inst.input << " | " << inst.claim << " | " << inst.result;
    if (inst.witness) out << " | " << *inst.witness;
    out << "\n";
  }
  return out.str();
}

}  // namespace ringlab
