#include "aic_cli/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "aic/code.hpp"
#include "aic/error.hpp"
#include "aic/oracle.hpp"
#include "aic/paut.hpp"
#include "aic/serialize.hpp"
#include "aic/structures.hpp"

namespace aic::cli {

namespace {

using nlohmann::json;

struct Options {
  std::optional<unsigned> p;
  std::optional<unsigned> m;
  unsigned r = 1;
  std::optional<std::string> defining_set;
  std::optional<std::string> modulus;
  std::optional<std::string> code_file;
  std::optional<std::string> field_file;
  bool verify = false;
  std::uint64_t budget = kDefaultSearchBudget;
  bool human = false;
  bool json_output = false;
  std::optional<std::string> out;
  bool timing = false;

  std::optional<unsigned> a;
  std::optional<std::string> chi;
  std::optional<std::string> f;
  std::optional<std::string> automatic;
  std::optional<std::string> c;
  unsigned u = 1;
  std::string f_kind = "f1";
};

/// Thrown when a verification cross-check disagrees.
struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  json warnings = json::array();
  int exit_code = kOk;

  void warn(const std::string& tag, const std::string& message) {
    warnings.push_back({{"tag", tag}, {"message", message}});
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<unsigned> parse_digits(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(static_cast<unsigned>(v));
    } catch (const std::logic_error&) {
      throw Error(Errc::InvalidArgument, "malformed digit list '" + text + "'");
    }
  }
  return out;
}

/// "r0;r1;..." with comma-separated digits per row.
AdditiveMap parse_matrix(unsigned p, const std::string& text) {
  std::vector<std::vector<unsigned>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) rows.push_back(parse_digits(row));
  return AdditiveMap::from_rows(p, rows);
}

json big_to_json(const BigInt& x) {
  if (x <= BigInt(std::numeric_limits<std::uint64_t>::max())) return static_cast<std::uint64_t>(x);
  return x.str();
}

Field field_from(const Options& o, Report& report) {
  if (o.field_file) {
    report.inputs["field_file"] = *o.field_file;
    return parse_field_description(read_file(*o.field_file));
  }
  if (!o.p || !o.m) throw Error(Errc::InvalidArgument, "--p and --m are required");
  report.inputs["p"] = *o.p;
  report.inputs["m"] = *o.m;
  std::optional<std::vector<unsigned>> modulus;
  if (o.modulus) {
    modulus = parse_digits(*o.modulus);
    report.inputs["modulus"] = *modulus;
  }
  return make_field(*o.p, *o.m, modulus);
}

AffineInvariantCode code_from(const Options& o, Report& report) {
  if (o.code_file) {
    report.inputs["code_file"] = *o.code_file;
    try {
      return code_from_json(json::parse(read_file(*o.code_file)));
    } catch (const json::parse_error& e) {
      throw Error(Errc::InvalidArgument, std::string("code file: ") + e.what());
    }
  }
  Field field = field_from(o, report);
  if (!o.defining_set) throw Error(Errc::InvalidArgument, "--D is required");
  report.inputs["r"] = o.r;
  const DefiningSet d = DefiningSet::parse(*o.defining_set);
  report.inputs["D"] = d.values();
  return AffineInvariantCode(std::move(field), o.r, d);
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

void code_info(const Options& o, Report& report) {
  const auto code = code_from(o, report);
  auto& res = report.results;
  res["code"] = to_json(code);
  res["length"] = code.length();
  res["trivial"] = code.is_trivial();
  res["dimension"] = code.dimension();
  BigInt order;
  if (code.is_trivial()) {
    res["a"] = nullptr;
    res["b"] = nullptr;
    order = 1;
    for (std::size_t k = 2; k <= code.length(); ++k) order *= k;
    report.warn("TrivialCode", "PAut is the full symmetric group; a and b are not defined");
  } else {
    res["a"] = code.params().a;
    res["b"] = code.params().b;
    order = paut_order(code);
  }
  res["paut_order"] = big_to_json(order);

  if (!o.verify) return;
  json checks = json::object();
  auto check = [&](const std::string& name, bool ok) {
    checks[name] = ok;
    if (!ok) report.exit_code = kVerifyMismatch;
  };
  const std::size_t expected_dim = code.length() - code.defining_set().size();
  check("dimension_formula", code.dimension() == expected_dim);
  check("defining_set_roundtrip",
        compute_defining_set(code.basis(), code.field(), code.r()) == code.defining_set());
  if (code.length() <= 9) {
    check("paut_order_vs_scan", BigInt(brute_paut_scan(code).size()) == order);
  }
  if (!code.is_trivial() && code.length() <= 16) {
    check("paut_order_vs_enumeration", BigInt(enumerate_paut(code).size()) == order);
  }
  if (code.length() > 16) report.warn("VerifySkipped", "oracle checks run only up to 16 points");
  res["verification"] = checks;
}

void code_list(const Options& o, Report& report) {
  if (!o.p || !o.m) throw Error(Errc::InvalidArgument, "--p and --m are required");
  report.inputs = {{"p", *o.p}, {"m", *o.m}, {"r", o.r}};
  const auto sets = enumerate_affine_invariant(*o.p, *o.m, o.r);
  json list = json::array();
  std::size_t nontrivial = 0;
  for (const auto& s : sets) {
    list.push_back({{"D", s.set.values()}, {"trivial", s.trivial}});
    nontrivial += !s.trivial;
  }
  report.results = {{"count", sets.size()}, {"nontrivial", nontrivial}, {"sets", list}};
  if (*o.p == 2 && *o.m == 2) {
    auto count_nontrivial = [](unsigned r) {
      const auto sets = enumerate_affine_invariant(2, 2, r);
      return std::count_if(sets.begin(), sets.end(), [](const EnumeratedSet& e) { return !e.trivial; });
    };
    const std::string parity = count_nontrivial(2) > 0 ? "even" : "odd";
    report.warn("ParityNote", "length 4: the nontrivial codes {0,1} and {0,2} occur exactly for " + parity +
                                  " r, as 2^r mod 3 decides whether the classes mod 3 are singletons; the "
                                  "published length-4 example assigns them to odd r");
    report.results["nontrivial_parity"] = parity;
  }
}

json estr_json(const EstrResult& e) {
  return {{"case", std::string(1, e.which)},
          {"u", e.u},
          {"descriptor", to_json(e.descriptor)},
          {"rendered", e.descriptor.render()},
          {"order", e.descriptor.order()},
          {"fingerprint", to_json(e.concrete)},
          {"fingerprint_match", e.matches()}};
}

void structures_chi_f(const Options& o, Report& report) {
  const Field field = field_from(o, report);
  if (!o.a) throw Error(Errc::InvalidArgument, "--a is required");
  const unsigned a = *o.a;
  report.inputs["a"] = a;

  std::optional<AdditiveMap> chi;
  if (o.automatic) {
    if (*o.automatic != "trace") throw Error(Errc::InvalidArgument, "--auto accepts only 'trace'");
    const Elem c = o.c ? field->parse(*o.c) : 1;
    report.inputs["auto"] = "trace";
    report.inputs["c"] = field->format(c);
    chi = trace_form(*field, a, c);
  } else if (o.chi) {
    chi = parse_matrix(field->p(), *o.chi);
    report.inputs["chi"] = *o.chi;
  } else {
    throw Error(Errc::InvalidArgument, "give --chi or --auto trace");
  }

  std::optional<ChiF> cf;
  if (o.f) {
    report.inputs["f"] = *o.f;
    cf = make_chi_f(field, *chi, parse_matrix(field->p(), *o.f), a);
  } else {
    if (o.f_kind != "f1" && o.f_kind != "f2") throw Error(Errc::InvalidArgument, "--f-kind accepts f1 or f2");
    report.inputs["f_kind"] = o.f_kind;
    report.inputs["u"] = o.u;
    cf = o.f_kind == "f1" ? construct_f1(field, a, *chi, o.u) : construct_f2(field, a, *chi, o.u);
  }

  auto& res = report.results;
  res["chi_f"] = to_json(*cf);
  const AlphaMap alpha = chi_f_alpha(*cf);
  res["iyb"] = check_iyb(alpha);
  res["twosided"] = is_twosided_alpha(alpha, a);
  const auto cls = classify_chi_f(*cf);
  res["classification"] = {
      {"abelian", cls.abelian}, {"exponent", cls.exponent}, {"center", to_json(cls.center, *field)}};
  const auto dec = decompose_chi_f(*cf);
  res["decomposition"] = {{"Z", to_json(dec.z, *field)},   {"V", to_json(dec.v, *field)},
                          {"W", to_json(dec.w, *field)},   {"Wp", to_json(dec.wp, *field)},
                          {"U", to_json(dec.u, *field)},   {"g", to_json(dec.g)},
                          {"target", to_json(dec.target)}, {"verified", dec.verified}};
  if (!dec.verified) report.exit_code = kVerifyMismatch;
  if (is_scalar_linear(*field, cf->chi, a)) {
    const auto e = estr_descriptor(*cf);
    res["structure"] = estr_json(e);
    if (!e.matches()) report.exit_code = kVerifyMismatch;
  } else {
    res["structure"] = nullptr;
    report.warn("ChiNotLinear", "chi is additive but not F_p^a-linear; no closed-form structure");
  }
}

void structures_witness(const Options& o, Report& report) {
  const auto code = code_from(o, report);
  const auto w = nonabelian_exists(code);
  auto& res = report.results;
  res["a"] = code.params().a;
  res["m"] = code.m();
  res["exists"] = w.exists;
  if (w.exists) {
    res["chi_f"] = to_json(*w.witness);
    res["structure"] = estr_json(*w.structure);
    if (!w.structure->matches()) report.exit_code = kVerifyMismatch;
  }
}

json search_json(const SearchResult& s, const std::vector<bool>* twosided) {
  json groups = json::array();
  for (std::size_t k = 0; k < s.groups.size(); ++k) {
    json g{{"fingerprint", to_json(s.fingerprints[k])}};
    if (twosided) g["twosided"] = bool((*twosided)[k]);
    groups.push_back(g);
  }
  return {{"count", s.groups.size()}, {"complete", s.complete}, {"nodes", s.nodes}, {"groups", groups}};
}

void budget_warning(const SearchResult& s, Report& report) {
  if (s.complete) return;
  report.warn("BudgetExceeded", "search stopped after " + std::to_string(s.nodes) + " nodes; results are partial");
  if (report.exit_code == kOk) report.exit_code = kBudgetExceeded;
}

void oracle_verify(const Options& o, Report& report) {
  const auto code = code_from(o, report);
  report.inputs["budget"] = o.budget;
  auto& res = report.results;
  json checks = json::object();
  auto check = [&](const std::string& name, bool ok) {
    checks[name] = ok;
    if (!ok) report.exit_code = kVerifyMismatch;
  };
  const std::size_t n = code.length();
  std::optional<std::vector<Permutation>> scan;
  std::optional<std::vector<Permutation>> theory;
  if (n <= 9) {
    scan = brute_paut_scan(code);
    res["scan_order"] = scan->size();
  }
  if (code.is_trivial()) {
    res["paut_order"] = big_to_json(BigInt(factorial(n)));
    if (scan) check("scan_is_symmetric_group", scan->size() == factorial(n));
  } else {
    res["a"] = code.params().a;
    res["b"] = code.params().b;
    res["paut_order"] = big_to_json(paut_order(code));
    if (n > 16) throw Error(Errc::TooLarge, "oracle verification is limited to 16 points");
    theory = enumerate_paut(code);
    res["enumerated_order"] = theory->size();
    check("enumeration_matches_formula", BigInt(theory->size()) == paut_order(code));
    if (scan) check("scan_equals_enumeration", *scan == *theory);
    check("enumeration_preserves_code", std::all_of(theory->begin(), theory->end(), [&](const Permutation& s) {
            return is_code_invariant(s, code);
          }));
  }
  if (n <= 16 && (!code.is_trivial() || n <= 9)) {
    const auto s = code.is_trivial() ? regular_subgroup_search(*scan, code.p(), o.budget)
                                     : regular_subgroup_search(*theory, code.p(), o.budget);
    res["regular_subgroups"] = search_json(s, nullptr);
    if (!code.is_trivial()) {
      bool roundtrip = true;
      for (const auto& g : s.groups) {
        const AlphaMap alpha = reconstruct_alpha(code.field(), g, code.params().a, code.params().b);
        roundtrip = roundtrip && check_iyb(alpha) && build_regular_group(alpha) == g;
      }
      check("alpha_roundtrip", roundtrip);
    }
    budget_warning(s, report);
  }
  res["checks"] = checks;
}

void oracle_groups(const Options& o, Report& report) {
  const auto code = code_from(o, report);
  report.inputs["budget"] = o.budget;
  const auto rep = left_and_twosided_groups(code, o.budget);
  auto& res = report.results;
  res["search"] = search_json(rep.search, &rep.twosided);
  json left = json::array();
  for (const auto& fp : rep.left_types()) left.push_back(to_json(fp));
  json twosided = json::array();
  for (const auto& fp : rep.twosided_types()) twosided.push_back(to_json(fp));
  res["left"] = left;
  res["twosided"] = twosided;
  if (!code.is_trivial()) res["paut_order"] = big_to_json(paut_order(code));
  budget_warning(rep.search, report);
}

void render_human(const json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_structured() && !value.empty()) {
        out << pad << key << ":\n";
        render_human(value, out, indent + 1);
      } else {
        out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const json& v) { return v.is_primitive(); });
    if (flat) {
      out << pad << j.dump() << "\n";
      return;
    }
    for (std::size_t k = 0; k < j.size(); ++k) {
      out << pad << "- [" << k << "]\n";
      render_human(j[k], out, indent + 1);
    }
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

int exit_for(Errc code) {
  switch (code) {
    case Errc::BudgetExceeded:
      return kBudgetExceeded;
    case Errc::InternalInconsistency:
      return kVerifyMismatch;
    default:
      return kInputError;
  }
}

void add_code_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--p", o.p, "Characteristic");
  cmd->add_option("--m", o.m, "Extension degree of K");
  cmd->add_option("--r", o.r, "Alphabet exponent, F = F_{p^r}")->capture_default_str();
  cmd->add_option("--D", o.defining_set, "Defining set, e.g. 0,1,2,4");
  cmd->add_option("--modulus", o.modulus, "Ascending modulus coefficients, e.g. 1,1,0,0,1");
  cmd->add_option("--code-file", o.code_file, "JSON code descriptor");
  cmd->add_option("--field-file", o.field_file, "Field description file");
}

void add_output_options(CLI::App* cmd, Options& o) {
  cmd->add_flag("--json", o.json_output, "JSON output (default)");
  cmd->add_flag("--human", o.human, "Readable text output");
  cmd->add_option("--out", o.out, "Write the report to a file");
  cmd->add_flag("--timing", o.timing, "Include wall-clock timing");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Affine-invariant codes and their group code structures", "aic"};
  app.require_subcommand(1);

  auto* code = app.add_subcommand("code", "Inspect affine-invariant codes")->require_subcommand(1);
  auto* info = code->add_subcommand("info", "Parameters a, b, dimension and |PAut| of one code");
  add_code_options(info, o);
  info->add_flag("--verify", o.verify, "Cross-check against the brute-force oracle");
  add_output_options(info, o);
  auto* list = code->add_subcommand("list", "Enumerate every defining set for p, m, r");
  add_code_options(list, o);
  add_output_options(list, o);

  auto* structures = app.add_subcommand("structures", "Group code structures")->require_subcommand(1);
  auto* chi_f = structures->add_subcommand("chi-f", "Validate and classify a chi, f pair");
  add_code_options(chi_f, o);
  chi_f->add_option("--a", o.a, "Subfield degree a");
  chi_f->add_option("--chi", o.chi, "Matrix of chi as rows 'r0;r1;...'");
  chi_f->add_option("--f", o.f, "Matrix of f as rows 'r0;r1;...'");
  chi_f->add_option("--auto", o.automatic, "Preset for chi: 'trace'");
  chi_f->add_option("--c", o.c, "Trace multiplier c for --auto trace (element digits)");
  chi_f->add_option("--u", o.u, "Rank parameter for the built-in f")->capture_default_str();
  chi_f->add_option("--f-kind", o.f_kind, "Built-in f when --f is absent: f1 or f2")->capture_default_str();
  add_output_options(chi_f, o);
  auto* witness = structures->add_subcommand("witness", "Nonabelian witness when 2a < m");
  add_code_options(witness, o);
  add_output_options(witness, o);

  auto* oracle = app.add_subcommand("oracle", "Brute-force cross-checks")->require_subcommand(1);
  auto* verify = oracle->add_subcommand("verify", "Compare PAut scans, enumeration and theory");
  add_code_options(verify, o);
  verify->add_option("--budget", o.budget, "Search node budget")->capture_default_str();
  add_output_options(verify, o);
  auto* groups = oracle->add_subcommand("groups", "Left and two-sided regular subgroups");
  add_code_options(groups, o);
  groups->add_option("--budget", o.budget, "Search node budget")->capture_default_str();
  add_output_options(groups, o);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kInputError;
  }
  if (o.human && o.json_output) {
    err << "usage error: --json and --human are mutually exclusive\n";
    return kInputError;
  }

  Report report;
  const auto start = std::chrono::steady_clock::now();
  json error = nullptr;
  try {
    if (info->parsed()) {
      report.command = "code info";
      code_info(o, report);
    } else if (list->parsed()) {
      report.command = "code list";
      code_list(o, report);
    } else if (chi_f->parsed()) {
      report.command = "structures chi-f";
      structures_chi_f(o, report);
    } else if (witness->parsed()) {
      report.command = "structures witness";
      structures_witness(o, report);
    } else if (verify->parsed()) {
      report.command = "oracle verify";
      oracle_verify(o, report);
    } else if (groups->parsed()) {
      report.command = "oracle groups";
      oracle_groups(o, report);
    }
  } catch (const Error& e) {
    error = {{"tag", std::string(e.tag())}, {"message", e.what()}};
    report.exit_code = exit_for(e.code());
    err << "error: " << e.what() << "\n";
  }

  json doc{{"schema_version", 1},
           {"command", report.command},
           {"inputs", report.inputs},
           {"results", report.results},
           {"warnings", report.warnings}};
  if (!error.is_null()) doc["error"] = error;
  if (o.timing) {
    doc["timing"] = {{"seconds",
                      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  }

  std::ofstream file;
  if (o.out) {
    file.open(*o.out);
    if (!file) {
      err << "error: cannot write '" << *o.out << "'\n";
      return kInputError;
    }
  }
  std::ostream& sink = o.out ? static_cast<std::ostream&>(file) : out;
  if (o.human) {
    sink << report.command << "\n";
    render_human(doc, sink, 0);
  } else {
    sink << doc.dump(2) << "\n";
  }
  return report.exit_code;
}

}  // namespace aic::cli
