#include "stringy/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "stringy/config_io.hpp"
#include "stringy/engine.hpp"
#include "stringy/format.hpp"

namespace stringy::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

enum class Format { text, json, latex };

struct Options {
  std::string command;
  std::string input;
  Format format = Format::text;
  std::optional<Exponent> horizon;
  bool strict = false;
  bool timings = true;
  unsigned jobs = 1;
  // compute
  bool local = false;
  // check
  bool duality = false;
  bool polynomial = false;
  bool nonneg = false;
  bool symmetry = false;
  bool hodge = false;
  bool generalized = false;
  // decompose
  std::string pairs;
};

struct Outcome {
  int exit_code = kPass;
  json report = json::object();
  std::string text;
};

std::string sha256_hex(const std::string &bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < length; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return os.str();
}

std::string render(const StringyRational &x, Format f) { return f == Format::latex ? to_latex(x) : to_text(x); }
std::string render(const BivariatePolynomial &p, Format f) { return f == Format::latex ? to_latex(p) : to_text(p); }
std::string render(const TruncatedBiseries &s, Format f) { return f == Format::latex ? to_latex(s) : to_text(s); }

std::string coefficient_name(Exponent i, Exponent j) {
  return "b_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

json findings_to_json(const ValidationReport &report) {
  json out = json::array();
  for (const auto &f : report.findings)
    out.push_back({{"severity", to_string(f.severity)}, {"code", f.code}, {"message", f.message}, {"location", f.location}});
  return out;
}

void findings_to_text(const ValidationReport &report, std::ostream &os) {
  for (const auto &f : report.findings) {
    os << to_string(f.severity) << " [" << f.code << "]";
    if (!f.location.empty()) os << " " << f.location;
    os << ": " << f.message << "\n";
  }
}

json witness_to_json(const Witness &w) {
  return {{"i", w.i}, {"j", w.j}, {"lhs", integer_to_json(w.lhs)}, {"rhs", integer_to_json(w.rhs)}};
}

json diamond_to_json(const HodgeDiamond &h) {
  json rows = json::array();
  for (Exponent p = 0; p <= h.dimension(); ++p) {
    json row = json::array();
    for (Exponent q = 0; q <= h.dimension(); ++q) row.push_back(integer_to_json(h.at(p, q)));
    rows.push_back(row);
  }
  return rows;
}

std::string diamond_to_text(const HodgeDiamond &h) {
  std::ostringstream os;
  for (Exponent p = 0; p <= h.dimension(); ++p) {
    os << "  ";
    for (Exponent q = 0; q <= h.dimension(); ++q) os << (q ? " " : "") << "h^{" << p << "," << q << "}=" << h.at(p, q);
    os << "\n";
  }
  return os.str();
}

std::vector<std::pair<Exponent, Exponent>> parse_pairs(const std::string &text) {
  std::vector<std::pair<Exponent, Exponent>> pairs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::stringstream is(item);
    long long i = -1;
    long long j = -1;
    char comma = 0;
    if (!(is >> i >> comma >> j) || comma != ',' || i < 0 || j < 0 || !(is >> std::ws).eof())
      throw ConfigError("--pairs: malformed pair '" + item + "' (expected \"i,j;...\")");
    pairs.emplace_back(static_cast<Exponent>(i), static_cast<Exponent>(j));
  }
  if (pairs.empty()) throw ConfigError("--pairs: no pairs given");
  return pairs;
}

// ---------------------------------------------------------------------------
// Subcommands. Each fills report/text and returns the exit code.
// ---------------------------------------------------------------------------

int cmd_validate(const ResolutionConfig &cfg, const Options &opt, Outcome &o, std::ostream &os) {
  const auto mode = opt.strict ? ValidationMode::strict : ValidationMode::lenient;
  const ValidationReport report = validate(cfg, mode);
  o.report["mode"] = opt.strict ? "strict" : "lenient";
  o.report["accepted"] = report.ok();
  o.report["findings"] = findings_to_json(report);
  os << "validation (" << (opt.strict ? "strict" : "lenient") << "): " << (report.ok() ? "ACCEPTED" : "REJECTED")
     << "\n";
  findings_to_text(report, os);
  if (opt.strict)
    os << "note: strict checks are necessary conditions only; passing does not prove the data comes from a log "
          "resolution\n";
  return report.ok() ? kPass : kInputError;
}

int cmd_compute(const ResolutionConfig &cfg, const Options &opt, Outcome &o, std::ostream &os) {
  const auto mode = opt.strict ? ValidationMode::strict : ValidationMode::lenient;
  const StringyResult result = compute(cfg, opt.horizon, mode);
  const StringyRational &e = result.value();

  o.report["dimension"] = result.d;
  o.report["e_st"] = rational_to_json(e);
  o.report["e_st_text"] = to_text(e);
  o.report["polynomial_form"] = e.has_trivial_denominator();
  o.report["series"] = series_to_json(result.series);
  o.report["agree"] = result.agree;

  const char *lhs = opt.format == Format::latex ? "E_{st} = " : "E_st = ";
  os << "dimension: " << result.d << "\n";
  os << lhs << render(e, opt.format) << (e.has_trivial_denominator() ? " (polynomial)" : "") << "\n";
  os << "series (horizon " << result.series.horizon() << "): " << render(result.series, opt.format) << "\n";
  os << "formulas agree: " << (result.agree ? "yes" : "NO (internal inconsistency)") << "\n";

  if (opt.local) {
    const LocalContribution local = local_contribution(cfg);
    o.report["local_contribution"] = {{"value", rational_to_json(local.value)},
                                      {"text", to_text(local.value)},
                                      {"warnings", findings_to_json(local.notes)}};
    os << "local contribution: " << render(local.value, opt.format) << "\n";
    findings_to_text(local.notes, os);
  }
  return result.agree ? kPass : kInternal;
}

int cmd_check(const ResolutionConfig &cfg, const Options &opt, Outcome &o, std::ostream &os) {
  const auto mode = opt.strict ? ValidationMode::strict : ValidationMode::lenient;
  Options sel = opt;
  if (!(sel.duality || sel.polynomial || sel.nonneg || sel.symmetry || sel.hodge || sel.generalized))
    sel.duality = sel.polynomial = sel.nonneg = sel.symmetry = true;

  const Exponent d = cfg.dimension;
  Exponent horizon = opt.horizon.value_or(2 * d);
  if (sel.nonneg || sel.generalized) horizon = std::max(horizon, d);
  const StringyResult result = compute(cfg, horizon, mode);
  const StringyRational &e = result.value();

  bool all_pass = result.agree;
  json checks = json::object();
  if (!result.agree) os << "formulas agree: NO (internal inconsistency)\n";

  if (sel.duality) {
    const CheckVerdict v = check_duality(e, d);
    json entry{{"pass", v.pass}};
    os << "duality: " << (v.pass ? "PASS" : "FAIL");
    if (v.witness) {
      entry["witness"] = witness_to_json(*v.witness);
      os << " (witness (" << v.witness->i << "," << v.witness->j << "): numerator coefficient " << v.witness->lhs
         << " vs reflected " << v.witness->rhs << ")";
    }
    os << "\n";
    checks["duality"] = entry;
    all_pass = all_pass && v.pass;
  }
  if (sel.symmetry) {
    const CheckVerdict v = check_symmetry(e);
    json entry{{"pass", v.pass}};
    os << "symmetry: " << (v.pass ? "PASS" : "FAIL");
    if (v.witness) {
      entry["witness"] = witness_to_json(*v.witness);
      os << " (witness (" << v.witness->i << "," << v.witness->j << "): " << v.witness->lhs << " vs "
         << v.witness->rhs << ")";
    }
    os << "\n";
    checks["symmetry"] = entry;
    all_pass = all_pass && v.pass;
  }

  std::optional<PolynomialCheck> poly;
  if (sel.polynomial || sel.hodge) poly = is_polynomial(e, d);
  if (sel.polynomial) {
    json entry{{"pass", poly->is_polynomial()}};
    if (poly->is_polynomial()) {
      entry["polynomial"] = polynomial_to_json(*poly->polynomial);
      os << "polynomial: POLYNOMIAL " << render(*poly->polynomial, opt.format) << "\n";
    } else {
      const auto &w = *poly->witness;
      const bool exceeds = w.kind == PolynomialWitness::Kind::exceeds_dimension;
      entry["witness"] = {{"i", w.i},
                          {"j", w.j},
                          {"value", integer_to_json(w.value)},
                          {"kind", exceeds ? "exceeds_dimension" : "division_residual"}};
      os << "polynomial: NOT POLYNOMIAL (witness " << coefficient_name(w.i, w.j) << " = " << w.value << ": "
         << (exceeds ? "exponent exceeds dimension " + std::to_string(d) : std::string("nonzero division residual"))
         << ")\n";
    }
    checks["polynomial"] = entry;
    all_pass = all_pass && poly->is_polynomial();
  }
  if (sel.hodge) {
    json entry;
    if (!poly->is_polynomial()) {
      entry = {{"pass", nullptr}, {"reason", "E_st is not a polynomial"}};
      os << "hodge: N/A (E_st is not a polynomial)\n";
    } else {
      const DiamondResult r = stringy_hodge_numbers(*poly->polynomial, d);
      if (const auto *h = std::get_if<HodgeDiamond>(&r)) {
        entry = {{"pass", true}, {"diamond", diamond_to_json(*h)}};
        os << "hodge: PASS\n" << diamond_to_text(*h);
      } else {
        const auto &v = std::get<DiamondViolation>(r);
        entry = {{"pass", false}, {"p", v.p}, {"q", v.q}, {"value", integer_to_json(v.value)}, {"message", v.message}};
        os << "hodge: FAIL (" << v.message << ")\n";
        all_pass = false;
      }
    }
    checks["hodge"] = entry;
  }
  if (sel.nonneg) {
    const NonnegativityReport r = check_nonnegativity(result.series, d);
    json violations = json::array();
    json notes = json::array();
    for (const auto &s : r.violations) violations.push_back({{"i", s.i}, {"j", s.j}, {"b", integer_to_json(s.b)}});
    for (const auto &s : r.beyond_range) notes.push_back({{"i", s.i}, {"j", s.j}, {"b", integer_to_json(s.b)}});
    checks["nonneg"] = {{"pass", r.pass()}, {"violations", violations}, {"beyond_range", notes}};
    os << "nonneg: " << (r.pass() ? "PASS" : "FAIL") << " (i+j <= " << d << ")\n";
    for (const auto &s : r.violations)
      os << "violation: " << coefficient_name(s.i, s.j) << " = " << s.b << " has the wrong sign\n";
    for (const auto &s : r.beyond_range)
      os << "note: " << coefficient_name(s.i, s.j) << " = " << s.b << " beyond range\n";
    all_pass = all_pass && r.pass();
  }
  if (sel.generalized) {
    const HodgeDiamond h = generalized_hodge_numbers(result.series, d);
    checks["generalized"] = {{"diamond", diamond_to_json(h)}};
    os << "generalized stringy Hodge numbers (tentative):\n" << diamond_to_text(h);
  }

  o.report["dimension"] = d;
  o.report["e_st"] = rational_to_json(e);
  o.report["checks"] = checks;
  if (!result.agree) return kInternal;
  return all_pass ? kPass : kRejected;
}

int cmd_decompose(const ResolutionConfig &cfg, const Options &opt, Outcome &o, std::ostream &os) {
  require_valid(cfg, ValidationMode::strict);
  const auto pairs = parse_pairs(opt.pairs);
  const Exponent d = cfg.dimension;

  std::vector<std::pair<Exponent, Exponent>> accepted;
  json rejected = json::array();
  for (const auto &p : pairs) {
    if (p.first + p.second > d) {
      rejected.push_back({{"i", p.first}, {"j", p.second}, {"reason", "i + j > d"}});
    } else {
      accepted.push_back(p);
    }
  }
  const auto rows = decompose_coefficients(cfg, accepted);

  int code = rejected.empty() ? kPass : kRejected;
  json rows_json = json::array();
  os << "(i,j)\tb_{i,j}\tc_{i,j}\talt\tR\tS\timplied_dim\tstatus\n";
  for (const auto &r : rows) {
    std::string status = "ok";
    if (!r.consistent()) {
      status = "INCONSISTENT";
      code = combine_exit_codes(code, kInternal);
    } else if (!r.implied_nonnegative()) {
      status = "negative implied dimension (inconsistent input)";
      code = combine_exit_codes(code, kRejected);
    }
    rows_json.push_back({{"i", r.i},
                         {"j", r.j},
                         {"direct", integer_to_json(r.direct)},
                         {"c_term", integer_to_json(r.c_term)},
                         {"alternating_sum", integer_to_json(r.alternating_sum)},
                         {"r_term", integer_to_json(r.r_term)},
                         {"s_term", integer_to_json(r.s_term)},
                         {"implied_hodge_dim", integer_to_json(r.implied_hodge_dim)},
                         {"consistent", r.consistent()}});
    os << "(" << r.i << "," << r.j << ")\t" << r.direct << "\t" << r.c_term << "\t" << r.alternating_sum << "\t"
       << r.r_term << "\t" << r.s_term << "\t" << r.implied_hodge_dim << "\t" << status << "\n";
  }
  for (const auto &r : rejected)
    os << "(" << r["i"].get<Exponent>() << "," << r["j"].get<Exponent>() << ")\trejected: i + j > d = " << d << "\n";
  os << "note: implied dimensions are conditional on the resolution being an isomorphism over the smooth locus\n";

  o.report["dimension"] = d;
  o.report["rows"] = rows_json;
  o.report["rejected"] = rejected;
  return code;
}

Outcome process_file(const fs::path &path, const Options &opt) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  std::ostringstream os;
  o.report["command"] = opt.command;

  std::string bytes;
  {
    std::ifstream in(path, std::ios::binary);
    if (in) bytes.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  o.report["input"] = {{"path", path.generic_string()}, {"sha256", sha256_hex(bytes)}};
  os << "# " << path.generic_string() << "  sha256=" << o.report["input"]["sha256"].get<std::string>() << "\n";

  try {
    const ResolutionConfig cfg = load_config(path);
    if (opt.command == "validate") {
      o.exit_code = cmd_validate(cfg, opt, o, os);
    } else if (opt.command == "compute") {
      o.exit_code = cmd_compute(cfg, opt, o, os);
    } else if (opt.command == "check") {
      o.exit_code = cmd_check(cfg, opt, o, os);
    } else {
      o.exit_code = cmd_decompose(cfg, opt, o, os);
    }
  } catch (const ValidationError &e) {
    o.exit_code = kInputError;
    o.report["error"] = "validation failed";
    o.report["findings"] = findings_to_json(e.report());
    os << "error: configuration failed validation\n";
    findings_to_text(e.report(), os);
  } catch (const ConfigError &e) {
    o.exit_code = kInputError;
    o.report["error"] = e.what();
    os << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument &e) {
    o.exit_code = kInputError;
    o.report["error"] = e.what();
    os << "error: " << e.what() << "\n";
  } catch (const std::exception &e) {
    o.exit_code = kInternal;
    o.report["error"] = e.what();
    os << "internal error: " << e.what() << "\n";
  }

  o.report["exit_code"] = o.exit_code;
  if (opt.timings) {
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    o.report["timings_us"] = {{"total", static_cast<std::int64_t>(us.count())}};
    os << "time: " << us.count() << " us\n";
  }
  o.text = os.str();
  return o;
}

std::vector<fs::path> collect_inputs(const std::string &input) {
  const fs::path p(input);
  if (!fs::is_directory(p)) return {p};
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(p))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  return files;
}

void add_shared(CLI::App *sub, Options &opt, std::map<std::string, Format> &formats) {
  sub->add_option("input", opt.input, "Config file, or a directory of *.json configs (batch mode)")->required();
  sub->add_option("--format", opt.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  sub->add_option("--horizon", opt.horizon, "Series horizon in total degree (default 2d)");
  sub->add_flag("--strict", opt.strict, "Validate in strict mode");
  sub->add_flag("!--no-timings", opt.timings, "Omit timings from the report");
  sub->add_option("-j,--jobs", opt.jobs, "Files processed concurrently in batch mode")->check(CLI::Range(1U, 256U));
}

}  // namespace

int combine_exit_codes(int a, int b) noexcept {
  auto rank = [](int c) {
    switch (c) {
      case kInternal: return 3;
      case kInputError: return 2;
      case kRejected: return 1;
      default: return 0;
    }
  };
  return rank(a) >= rank(b) ? a : b;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  Options opt;
  std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"latex", Format::latex}};

  CLI::App app{"Exact stringy E-functions from log-resolution data", "stringy"};
  app.require_subcommand(1);

  auto *compute_cmd = app.add_subcommand("compute", "Compute E_st and its power series");
  add_shared(compute_cmd, opt, formats);
  compute_cmd->add_flag("--local", opt.local, "Also report the singular locus' local contribution");

  auto *check_cmd = app.add_subcommand("check", "Run verdict checks (all of duality/symmetry/polynomial/nonneg by default)");
  add_shared(check_cmd, opt, formats);
  check_cmd->add_flag("--duality", opt.duality, "Functional equation E(u,v) = (uv)^d E(1/u,1/v)");
  check_cmd->add_flag("--symmetry", opt.symmetry, "u <-> v symmetry");
  check_cmd->add_flag("--polynomial", opt.polynomial, "Polynomiality with degree <= d in u and v");
  check_cmd->add_flag("--nonneg", opt.nonneg, "Sign pattern (-1)^{i+j} b_{i,j} >= 0 for i+j <= d");
  check_cmd->add_flag("--hodge", opt.hodge, "Stringy Hodge numbers (polynomial E_st only)");
  check_cmd->add_flag("--generalized", opt.generalized, "Tentative generalized stringy Hodge numbers");

  auto *decompose_cmd = app.add_subcommand("decompose", "Decompose series coefficients b_{i,j} (strict configs)");
  add_shared(decompose_cmd, opt, formats);
  decompose_cmd->add_option("--pairs", opt.pairs, "Pairs as \"i,j;k,l\"")->required();

  auto *validate_cmd = app.add_subcommand("validate", "Validate a config");
  add_shared(validate_cmd, opt, formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }
  opt.command = app.get_subcommands().front()->get_name();

  const auto inputs = collect_inputs(opt.input);
  if (inputs.empty()) {
    err << "error: no *.json configs found in " << opt.input << "\n";
    return kInputError;
  }

  // Each file's pipeline is sequential and writes into its own buffer; buffers
  // are emitted in input order.
  std::vector<Outcome> outcomes(inputs.size());
  for (std::size_t begin = 0; begin < inputs.size(); begin += opt.jobs) {
    const std::size_t end = std::min(inputs.size(), begin + opt.jobs);
    std::vector<std::future<Outcome>> running;
    for (std::size_t k = begin; k < end; ++k)
      running.push_back(std::async(std::launch::async, process_file, inputs[k], std::cref(opt)));
    for (std::size_t k = begin; k < end; ++k) outcomes[k] = running[k - begin].get();
  }

  int code = kPass;
  for (const auto &o : outcomes) code = combine_exit_codes(code, o.exit_code);

  if (opt.format == Format::json) {
    if (outcomes.size() == 1 && !fs::is_directory(opt.input)) {
      out << outcomes.front().report.dump(2) << "\n";
    } else {
      json batch{{"reports", json::array()}, {"exit_code", code}};
      for (const auto &o : outcomes) batch["reports"].push_back(o.report);
      out << batch.dump(2) << "\n";
    }
  } else {
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
      if (k) out << "\n";
      out << outcomes[k].text;
    }
  }
  return code;
}

}  // namespace stringy::cli
