#include <CLI11.hpp>
#include <functional>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>

#include "disk_cache.hpp"
#include "sschur/error.hpp"
#include "sschur/operators.hpp"
#include "sschur/pieri.hpp"
#include "sschur/schur_table.hpp"
#include "sschur/superpartition.hpp"
#include "sschur/text_format.hpp"
#include "sschur/verify.hpp"

using namespace sschur;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kIdentityFailure = 1, kUsage = 2 };

struct RunConfig {
  int max_total = 6;
  int max_fermionic = 3;
  std::string format;  // empty: each command's default
  bool check = false;
  bool diagrams = false;
};

bool as_json(const RunConfig& c) { return c.format == "json"; }

void print_check(const RunConfig& config, json& out, bool ok) {
  if (as_json(config))
    out["check"] = ok ? "PASS" : "FAIL";
  else
    std::cout << "check: " << (ok ? "PASS" : "FAIL") << "\n";
}

int cmd_schur(const RunConfig& config, const std::string& type_text, const std::string& sp_text) {
  const SchurType t = parse_schur_type(type_text);
  const SuperPartition sp = parse_superpartition(sp_text);
  SchurTable& table = default_schur_table();
  const auto cache = cli::DiskCache::from_environment();
  cache.ensure(table, t, {sp.total_degree(), sp.fermionic_degree()});
  const SuperPolynomial& f = table.get(t, sp);
  json out;
  if (as_json(config))
    out = {{"type", to_string(t)}, {"superpartition", sp}, {"polynomial", to_json(f)}};
  else
    std::cout << to_string(f) << "\n";
  bool ok = true;
  if (config.check) {
    cache.ensure(table, dual_type(t), {sp.total_degree(), sp.fermionic_degree()});
    ok = table.expand(f, t) == Expansion{{sp, Rational(1)}};
    print_check(config, out, ok);
  }
  if (as_json(config)) std::cout << out.dump(2) << "\n";
  return ok ? kOk : kIdentityFailure;
}

int cmd_apply(const RunConfig& config, bool bounded, const std::string& ops, const std::string& on,
              const std::string& type_text) {
  SchurTable& table = default_schur_table();
  const auto cache = cli::DiskCache::from_environment();
  SuperPolynomial input = SuperPolynomial::one();
  SchurType family = SchurType::I;
  if (!on.empty()) {
    const auto colon = on.find(':');
    if (colon == std::string::npos) throw ParseError(0, "--on expects TYPE:superpartition");
    family = parse_schur_type(on.substr(0, colon));
    const SuperPartition sp = parse_superpartition(on.substr(colon + 1));
    cache.ensure(table, family, {sp.total_degree(), sp.fermionic_degree()});
    input = table.get(family, sp);
  }
  if (!type_text.empty()) family = parse_schur_type(type_text);
  const LinearOperator op = parse_operator_string(ops);
  const SuperPolynomial result = op(input);

  const int max_total = bounded ? config.max_total : table.limits().max_total;
  const int max_fermionic = bounded ? config.max_fermionic : table.limits().max_fermionic;
  for (const Bidegree d : result.bidegrees()) {
    if (d.total > max_total || d.fermionic > max_fermionic)
      throw BidegreeOverflow("result has bidegree (" + std::to_string(d.total) + "," + std::to_string(d.fermionic) +
                             ") beyond the bound (" + std::to_string(max_total) + "," +
                             std::to_string(max_fermionic) + ")");
    cache.ensure(table, dual_type(family), d);
  }
  const Expansion e = table.expand(result, family);
  json out;
  if (as_json(config))
    out = {{"type", to_string(family)}, {"operators", ops}, {"expansion", to_json(e)}};
  else
    std::cout << to_string(e) << "\n";
  bool ok = true;
  if (config.check) {
    ok = table.reconstruct(e, family) == result;
    print_check(config, out, ok);
  }
  if (as_json(config)) std::cout << out.dump(2) << "\n";
  return ok ? kOk : kIdentityFailure;
}

int cmd_pieri(const RunConfig& config, const std::string& rule_text, int r, const std::string& sp_text) {
  const PieriRule rule = parse_pieri_rule(rule_text);
  const SuperPartition sp = parse_superpartition(sp_text);
  const auto terms = pieri_terms(rule, r, sp);
  const Expansion e = to_expansion(pieri(rule, r, sp));
  json out;
  if (as_json(config)) {
    out = {{"rule", to_string(rule)}, {"r", r}, {"superpartition", sp}, {"expansion", to_json(e)}};
    if (config.diagrams) {
      json list = json::array();
      for (const auto& d : terms)
        list.push_back({{"superpartition", d.result}, {"sign", d.sign}, {"diagram", render_diagram(d)}});
      out["diagrams"] = list;
    }
  } else {
    std::cout << to_string(e) << "\n";
    if (config.diagrams)
      for (const auto& d : terms)
        std::cout << "\n" << to_display_string(d.result) << " " << (d.sign > 0 ? "+1" : "-1") << "\n"
                  << render_diagram(d);
  }
  bool ok = true;
  if (config.check) {
    ok = e == oracle_product(rule_generator(rule, r), sp, rule_family(rule), default_schur_table());
    print_check(config, out, ok);
  }
  if (as_json(config)) std::cout << out.dump(2) << "\n";
  return ok ? kOk : kIdentityFailure;
}

int cmd_verify(const RunConfig& config, const std::string& suite) {
  const VerifyBounds bounds{config.max_total, config.max_fermionic};
  const auto reports = run_suite(suite, bounds, default_schur_table());
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (config.format != "text") {
    std::cout << json{{"status", ok ? "PASS" : "FAIL"},
                      {"bounds", {{"max_total", bounds.max_total}, {"max_fermionic", bounds.max_fermionic}}},
                      {"suites", reports}}
                     .dump(2)
              << "\n";
  } else {
    for (const auto& r : reports) std::cout << to_text(r);
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
  }
  for (const auto& r : reports)
    if (const CheckResult* bad = r.first_failure()) {
      std::cerr << r.suite << ": " << bad->name << " fails at " << bad->counterexample << "\n";
      break;
    }
  return ok ? kOk : kIdentityFailure;
}

int cmd_conjugate(const RunConfig& config, const std::string& sp_text) {
  const SuperPartition conj = conjugate(parse_superpartition(sp_text));
  if (as_json(config))
    std::cout << json{{"conjugate", conj}}.dump(2) << "\n";
  else
    std::cout << to_display_string(conj) << "\n";
  return kOk;
}

int cmd_weight(const RunConfig& config, const std::string& sp_text) {
  const SuperPartition sp = parse_superpartition(sp_text);
  const PartitionWeight w = z_weight(sp);
  if (as_json(config))
    std::cout << json{{"superpartition", sp}, {"weight", to_string(w.value)}, {"sign_exponent", w.sign_exponent}}.dump(2)
              << "\n";
  else
    std::cout << to_string(w.value) << "\n";
  return kOk;
}

int cmd_enumerate(const RunConfig& config, int n, int m) {
  const auto all = enumerate_superpartitions(n, m);
  if (as_json(config)) {
    std::cout << json(all).dump(2) << "\n";
  } else {
    for (const auto& sp : all) std::cout << to_display_string(sp) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact super-Schur function engine"};
  app.require_subcommand(1);
  RunConfig config;
  app.add_option("--max", config.max_total, "Maximum total degree")->check(CLI::NonNegativeNumber);
  app.add_option("--fermionic-max", config.max_fermionic, "Maximum fermionic degree")->check(CLI::NonNegativeNumber);
  app.add_option("--format", config.format, "Output format (verify defaults to json, others to text)")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--check", config.check, "Rerun the algebraic oracle");
  app.add_flag("--diagrams", config.diagrams, "Draw Pieri diagrams");
  app.fallthrough();

  std::function<int()> run;
  std::string type_text, sp_text, ops, on, rule_text, suite;
  int r = 0, n = 0, m = 0;

  auto* schur = app.add_subcommand("schur", "Power-sum expansion of a super-Schur function");
  schur->add_option("type", type_text, "I, Istar, II or IIstar")->required();
  schur->add_option("superpartition", sp_text, "e.g. \"3,0;2\"")->required();
  schur->callback([&] { run = [&] { return cmd_schur(config, type_text, sp_text); }; });

  auto* apply = app.add_subcommand("apply", "Apply an operator string and expand the result");
  apply->add_option("operators", ops, "e.g. \"B4^1 B3^0\" (rightmost applied first)")->required();
  apply->add_option("--on", on, "TYPE:superpartition to act on (default: 1)");
  apply->add_option("--type", type_text, "Family of the output expansion");
  apply->callback([&] {
    const bool bounded = app.count("--max") + app.count("--fermionic-max") > 0;
    run = [&, bounded] { return cmd_apply(config, bounded, ops, on, type_text); };
  });

  auto* pieri_cmd = app.add_subcommand("pieri", "Combinatorial Pieri rule");
  pieri_cmd->add_option("rule", rule_text, "eI, thetaI, hIstar or eIstar")->required();
  pieri_cmd->add_option("r", r, "Generator index")->required()->check(CLI::NonNegativeNumber);
  pieri_cmd->add_option("superpartition", sp_text)->required();
  pieri_cmd->callback([&] { run = [&] { return cmd_pieri(config, rule_text, r, sp_text); }; });

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suites));
  verify->callback([&] { run = [&] { return cmd_verify(config, suite); }; });

  auto* conj = app.add_subcommand("conjugate", "Conjugate superpartition");
  conj->add_option("superpartition", sp_text)->required();
  conj->callback([&] { run = [&] { return cmd_conjugate(config, sp_text); }; });

  auto* weight = app.add_subcommand("weight", "Scalar-product weight of the power-sum element");
  weight->add_option("superpartition", sp_text)->required();
  weight->callback([&] { run = [&] { return cmd_weight(config, sp_text); }; });

  auto* enumerate = app.add_subcommand("enumerate", "List superpartitions of a bidegree");
  enumerate->add_option("n", n, "Total degree")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("m", m, "Fermionic degree")->required()->check(CLI::NonNegativeNumber);
  enumerate->callback([&] { run = [&] { return cmd_enumerate(config, n, m); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return run();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
