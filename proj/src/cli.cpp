#include "ringlab/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "ringlab/certificate.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/element.hpp"
#include "ringlab/quasigroup.hpp"
#include "ringlab/radical.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/suites.hpp"

namespace ringlab {

namespace {

using Json = nlohmann::ordered_json;

/// Writes the payload to `path` via a sibling temp file and rename, so a
/// reader never observes a half-written file; empty path means `fallback`.
bool emit(const std::string& payload, const std::string& path,
          std::ostream& fallback, std::ostream& err) {
  std::string body = payload;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (path.empty()) {
    fallback << body;
    return true;
  }
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) {
      err << "error: cannot open " << tmp << " for writing\n";
      return false;
    }
    f << body;
    f.flush();
    if (!f) {
      err << "error: write to " << tmp << " failed\n";
      return false;
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    err << "error: cannot rename " << tmp << " to " << path << "\n";
    std::remove(tmp.c_str());
    return false;
  }
  return true;
}

Json tri_json(Tri t) {
  switch (t) {
    case Tri::yes:
      return Json(true);
    case Tri::no:
      return Json(false);
    default:
      return Json("unknown");
  }
}

const char* witness_kind_text(WitnessKind k) {
  switch (k) {
    case WitnessKind::Pi:
      return "pi";
    case WitnessKind::Integral:
      return "integral";
    default:
      return "nil";
  }
}

Json witness_json(const Witness& w, const Element& a) {
  Json j;
  j["kind"] = witness_kind_text(w.kind);
  if (w.kind == WitnessKind::Nil)
    j["exponent"] = w.exponent;
  else
    j["polynomial"] = w.poly_text();
  j["text"] = w.text();
  j["valid"] = validate(w, a);
  return j;
}

std::string csv_cell(const std::string& s) {
  bool needs = s.find_first_of(",\"\n") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string kv_csv(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::ostringstream os;
  os << "key,value\n";
  for (const auto& [k, v] : rows) os << csv_cell(k) << "," << csv_cell(v) << "\n";
  return os.str();
}

std::string kv_text(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::ostringstream os;
  for (const auto& [k, v] : rows) os << k << ": " << v << "\n";
  return os.str();
}

std::string set_text(const FiniteRing& fr, const std::vector<std::uint32_t>& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ", ";
    os << element_text(fr.element(s[i]));
  }
  os << "}";
  return os.str();
}

Json set_json(const FiniteRing& fr, const std::vector<std::uint32_t>& s,
              std::size_t list_cap) {
  Json j;
  j["size"] = s.size();
  if (s.size() <= list_cap) {
    Json arr = Json::array();
    for (auto i : s) arr.push_back(element_text(fr.element(i)));
    j["elements"] = arr;
  }
  return j;
}

struct IoOptions {
  std::string format = "json";
  std::string out_file;
};

void attach_io(CLI::App* cmd, IoOptions& io) {
  cmd->add_option("--format", io.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--out", io.out_file,
                  "Write output to FILE (atomically) instead of stdout");
}

// --- classify -------------------------------------------------------------

int do_classify(const std::string& ring_text, const std::string& element_text_in,
                const IoOptions& io, std::ostream& out, std::ostream& err) {
  RingPtr ring = parse_ring(ring_text);
  Element a = parse_element(element_text_in, ring);
  ClassificationReport rep = classify_element(a);

  bool witnesses_ok = true;
  auto check = [&](const std::optional<Witness>& w) {
    if (w && !validate(*w, a)) witnesses_ok = false;
  };
  check(rep.nil_w);
  check(rep.pi_w);
  check(rep.integral_w);
  if (rep.quasi_inverse_value &&
      !(is_zero(circ(a, *rep.quasi_inverse_value)) &&
        is_zero(circ(*rep.quasi_inverse_value, a))))
    witnesses_ok = false;

  std::string payload;
  if (io.format == "json") {
    Json j;
    j["command"] = "classify";
    j["ring"] = ring->text();
    j["element"] = element_text(a);
    j["in_N"] = tri_json(rep.in_nilpotent);
    j["in_Q"] = tri_json(rep.in_quasi_regular);
    j["in_pi"] = tri_json(rep.in_pi);
    j["in_integral"] = tri_json(rep.in_integral);
    Json w = Json::object();
    if (rep.nil_w) w["nil"] = witness_json(*rep.nil_w, a);
    if (rep.quasi_inverse_value)
      w["quasi_inverse"] = element_text(*rep.quasi_inverse_value);
    if (rep.pi_w) w["pi"] = witness_json(*rep.pi_w, a);
    if (rep.integral_w) w["integral"] = witness_json(*rep.integral_w, a);
    j["witnesses"] = w;
    payload = j.dump(2);
  } else {
    std::vector<std::pair<std::string, std::string>> rows;
    rows.emplace_back("ring", ring->text());
    rows.emplace_back("element", element_text(a));
    rows.emplace_back("in_N", tri_text(rep.in_nilpotent));
    rows.emplace_back("in_Q", tri_text(rep.in_quasi_regular));
    rows.emplace_back("in_pi", tri_text(rep.in_pi));
    rows.emplace_back("in_integral", tri_text(rep.in_integral));
    if (rep.nil_w) rows.emplace_back("nil_witness", rep.nil_w->text());
    if (rep.quasi_inverse_value)
      rows.emplace_back("quasi_inverse",
                        element_text(*rep.quasi_inverse_value));
    if (rep.pi_w) rows.emplace_back("pi_witness", rep.pi_w->poly_text());
    if (rep.integral_w)
      rows.emplace_back("integral_witness", rep.integral_w->poly_text());
    payload = io.format == "csv" ? kv_csv(rows) : kv_text(rows);
  }
  if (!emit(payload, io.out_file, out, err)) return 2;
  if (!witnesses_ok) {
    err << "error: a computed witness failed validation for element "
        << element_text(a) << " of " << ring->text() << "\n";
    return 1;
  }
  return 0;
}

// --- radicals -------------------------------------------------------------

int do_radicals(const std::string& ring_text, const IoOptions& io,
                std::ostream& out, std::ostream& err) {
  RingPtr ring = parse_ring(ring_text);
  FiniteRing fr(ring);
  RadicalReport rr = radical_report(fr);

  std::string payload;
  if (io.format == "json") {
    Json j;
    j["command"] = "radicals";
    j["ring"] = ring->text();
    j["jacobson"] = set_json(fr, rr.jacobson.elements, 64);
    j["upper_nilradical"] = set_json(fr, rr.upper.elements, 64);
    j["lower_nilradical"] = set_json(fr, rr.lower.elements, 64);
    j["nilpotent_count"] = rr.nilpotents.size();
    payload = j.dump(2);
  } else {
    std::vector<std::pair<std::string, std::string>> rows;
    rows.emplace_back("ring", ring->text());
    auto row = [&](const char* name, const IdealSet& s) {
      rows.emplace_back(name, s.elements.size() <= 64
                                  ? set_text(fr, s.elements)
                                  : std::to_string(s.elements.size()) +
                                        " elements");
    };
    row("jacobson", rr.jacobson);
    row("upper_nilradical", rr.upper);
    row("lower_nilradical", rr.lower);
    rows.emplace_back("nilpotent_count", std::to_string(rr.nilpotents.size()));
    payload = io.format == "csv" ? kv_csv(rows) : kv_text(rows);
  }
  if (!emit(payload, io.out_file, out, err)) return 2;
  return 0;
}

// --- quasigroup -----------------------------------------------------------

int do_quasigroup(const std::string& ring_text, const IoOptions& io,
                  std::ostream& out, std::ostream& err) {
  RingPtr ring = parse_ring(ring_text);
  FiniteRing fr(ring);
  const auto& qrs = fr.quasi_regulars();

  bool abelian = true;
  for (std::uint32_t x : qrs) {
    for (std::uint32_t y : qrs)
      if (fr.circ(x, y) != fr.circ(y, x)) {
        abelian = false;
        break;
      }
    if (!abelian) break;
  }

  std::vector<std::size_t> sub_sizes;
  std::size_t subrings = 0;
  bool have_subgroups = qrs.size() <= 24;
  if (have_subgroups) {
    for (const SubgroupSet& s : all_subgroups(fr)) {
      sub_sizes.push_back(s.elements.size());
      std::vector<char> present(fr.size(), 0);
      for (auto i : s.elements) present[i] = 1;
      bool addc = true;
      for (auto a : s.elements)
        for (auto b : s.elements)
          if (!present[fr.add(a, b)]) addc = false;
      if (addc) ++subrings;
    }
  }

  std::string payload;
  if (io.format == "json") {
    Json j;
    j["command"] = "quasigroup";
    j["ring"] = ring->text();
    j["order"] = qrs.size();
    if (qrs.size() <= 64) {
      Json els = Json::array();
      Json ords = Json::array();
      for (std::uint32_t i : qrs) {
        els.push_back(element_text(fr.element(i)));
        ords.push_back(*fr.circ_order(i));
      }
      j["elements"] = els;
      j["element_orders"] = ords;
    }
    j["abelian"] = abelian;
    if (have_subgroups) {
      j["subgroups"] = sub_sizes.size();
      j["subgroup_sizes"] = sub_sizes;
      j["subring_subgroups"] = subrings;
    }
    payload = j.dump(2);
  } else {
    std::vector<std::pair<std::string, std::string>> rows;
    rows.emplace_back("ring", ring->text());
    rows.emplace_back("order", std::to_string(qrs.size()));
    if (qrs.size() <= 64) rows.emplace_back("elements", set_text(fr, qrs));
    rows.emplace_back("abelian", abelian ? "yes" : "no");
    if (have_subgroups) {
      rows.emplace_back("subgroups", std::to_string(sub_sizes.size()));
      rows.emplace_back("subring_subgroups", std::to_string(subrings));
    }
    payload = io.format == "csv" ? kv_csv(rows) : kv_text(rows);
  }
  if (!emit(payload, io.out_file, out, err)) return 2;
  return 0;
}

// --- witness --------------------------------------------------------------

int do_witness(const std::string& ring_text, const std::string& element_text_in,
               const IoOptions& io, std::ostream& out, std::ostream& err) {
  RingPtr ring = parse_ring(ring_text);
  Element a = parse_element(element_text_in, ring);
  ClassificationReport rep = classify_element(a);

  bool all_valid = true;
  auto guard = [&](const std::optional<Witness>& w) {
    if (w && !validate(*w, a)) all_valid = false;
  };
  guard(rep.pi_w);
  guard(rep.integral_w);
  guard(rep.nil_w);

  std::string payload;
  if (io.format == "json") {
    Json j;
    j["command"] = "witness";
    j["ring"] = ring->text();
    j["element"] = element_text(a);
    j["pi"] = rep.pi_w ? witness_json(*rep.pi_w, a) : Json(nullptr);
    j["integral"] =
        rep.integral_w ? witness_json(*rep.integral_w, a) : Json(nullptr);
    j["nil"] = rep.nil_w ? witness_json(*rep.nil_w, a) : Json(nullptr);
    j["quasi_inverse"] = rep.quasi_inverse_value
                             ? Json(element_text(*rep.quasi_inverse_value))
                             : Json(nullptr);
    payload = j.dump(2);
  } else {
    std::vector<std::pair<std::string, std::string>> rows;
    rows.emplace_back("ring", ring->text());
    rows.emplace_back("element", element_text(a));
    rows.emplace_back("pi", rep.pi_w ? rep.pi_w->poly_text() : "absent");
    rows.emplace_back("integral",
                      rep.integral_w ? rep.integral_w->poly_text() : "absent");
    rows.emplace_back("nil", rep.nil_w ? rep.nil_w->text() : "absent");
    rows.emplace_back("quasi_inverse",
                      rep.quasi_inverse_value
                          ? element_text(*rep.quasi_inverse_value)
                          : "absent");
    payload = io.format == "csv" ? kv_csv(rows) : kv_text(rows);
  }
  if (!emit(payload, io.out_file, out, err)) return 2;
  if (!all_valid) {
    err << "error: a computed witness failed validation for element "
        << element_text(a) << " of " << ring->text() << "\n";
    return 1;
  }
  return 0;
}

// --- verify ---------------------------------------------------------------

int do_verify(const std::string& suite, const SuiteOptions& opts,
              const IoOptions& io, std::ostream& out, std::ostream& err) {
  std::vector<std::string> names;
  if (suite == "all")
    names = suite_names();
  else
    names.push_back(suite);

  std::vector<Certificate> certs;
  certs.reserve(names.size());
  for (const std::string& n : names) certs.push_back(run_suite(n, opts));

  std::string payload;
  if (io.format == "json") {
    if (certs.size() == 1) {
      payload = certificate_json_text(certs[0]);
    } else {
      std::ostringstream os;
      os << "[\n";
      for (std::size_t i = 0; i < certs.size(); ++i) {
        os << certificate_json_text(certs[i]);
        if (i + 1 < certs.size()) os << ",";
        os << "\n";
      }
      os << "]";
      payload = os.str();
    }
  } else if (io.format == "csv") {
    std::ostringstream os;
    for (const Certificate& c : certs) os << certificate_csv(c);
    payload = os.str();
  } else {
    std::ostringstream os;
    for (const Certificate& c : certs) os << certificate_text(c) << "\n";
    payload = os.str();
  }
  if (!emit(payload, io.out_file, out, err)) return 2;

  bool all_pass = true;
  for (const Certificate& c : certs)
    if (!c.pass) {
      all_pass = false;
      err << "suite " << c.suite << " failed:\n";
      for (const CertificateInstance& inst : c.instances)
        if (!inst.pass)
          err << "  [" << inst.input << "] " << inst.claim << " -> "
              << inst.result << "\n";
    }
  return all_pass ? 0 : 1;
}

int do_list_suites(const IoOptions& io, std::ostream& out, std::ostream& err) {
  std::vector<std::string> names = suite_names();
  std::string payload;
  if (io.format == "json") {
    Json j;
    j["command"] = "list-suites";
    j["suites"] = names;
    payload = j.dump(2);
  } else if (io.format == "csv") {
    std::ostringstream os;
    os << "suite\n";
    for (const std::string& n : names) os << n << "\n";
    payload = os.str();
  } else {
    std::ostringstream os;
    for (const std::string& n : names) os << n << "\n";
    payload = os.str();
  }
  if (!emit(payload, io.out_file, out, err)) return 2;
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "ringlab: quasi-multiplication calculus on concrete rings.\n"
      "Ring descriptors: Z/8, dZ/nZ(2,8), M2(Z/2), M2(F3), Z/4 + M2(F2),\n"
      "Q, OddDen, Zloc(5), ZlocS, Unital(dZ/nZ(2,8))."};
  app.require_subcommand(1);

  std::string ring_text, element_literal, suite = "all";
  SuiteOptions sopts;
  IoOptions io_classify, io_radicals, io_quasigroup, io_witness, io_verify,
      io_list;

  CLI::App* classify =
      app.add_subcommand("classify", "Class memberships of one element");
  classify->add_option("--ring", ring_text, "Ring descriptor")->required();
  classify->add_option("--element", element_literal, "Element literal")
      ->required();
  attach_io(classify, io_classify);

  CLI::App* radicals =
      app.add_subcommand("radicals", "Radicals of a finite ring");
  radicals->add_option("--ring", ring_text, "Ring descriptor")->required();
  attach_io(radicals, io_radicals);

  CLI::App* quasigroup = app.add_subcommand(
      "quasigroup", "Structure of the quasi-regular group of a finite ring");
  quasigroup->add_option("--ring", ring_text, "Ring descriptor")->required();
  attach_io(quasigroup, io_quasigroup);

  CLI::App* witness =
      app.add_subcommand("witness", "Checkable witnesses for one element");
  witness->add_option("--ring", ring_text, "Ring descriptor")->required();
  witness->add_option("--element", element_literal, "Element literal")
      ->required();
  attach_io(witness, io_witness);

  CLI::App* verify =
      app.add_subcommand("verify", "Run a verification suite (or all)");
  verify->add_option("--suite", suite, "Suite name, or 'all'")
      ->capture_default_str();
  verify->add_option("--seed", sopts.seed, "Random seed")
      ->capture_default_str();
  verify->add_option("--max-n", sopts.max_n, "Size bound (per-suite meaning)")
      ->capture_default_str();
  verify->add_option("--sample", sopts.sample, "Randomized sample count")
      ->capture_default_str();
  attach_io(verify, io_verify);

  CLI::App* list =
      app.add_subcommand("list-suites", "List the verification suites");
  attach_io(list, io_list);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify->parsed())
      return do_classify(ring_text, element_literal, io_classify, out, err);
    if (radicals->parsed())
      return do_radicals(ring_text, io_radicals, out, err);
    if (quasigroup->parsed())
      return do_quasigroup(ring_text, io_quasigroup, out, err);
    if (witness->parsed())
      return do_witness(ring_text, element_literal, io_witness, out, err);
    if (verify->parsed()) return do_verify(suite, sopts, io_verify, out, err);
    if (list->parsed()) return do_list_suites(io_list, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace ringlab
