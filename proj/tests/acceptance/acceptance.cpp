// Acceptance runner: one PASS/FAIL line per criterion, with its time budget.
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only
// Exit status is 0 iff every selected criterion passed within budget.

#include <CLI11.hpp>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "sschur/error.hpp"
#include "sschur/operators.hpp"
#include "sschur/schur_table.hpp"
#include "sschur/verify.hpp"

using namespace sschur;

namespace {

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<std::vector<SuiteReport>(SchurTable&)> run;
};

LinearOperator family_mode(SchurType t, int n, int eps) {
  switch (t) {
    case SchurType::I: return bernstein_B(n, eps);
    case SchurType::Istar: return bernstein_C(n, eps);
    case SchurType::II: return bernstein_Bbar(n, eps);
    case SchurType::IIstar: return bernstein_Cbar(n, eps);
  }
  throw sschur::Error("unknown family");
}

// Classical sector: mode strings applied to 1 against the determinant oracle.
SuiteReport classical_sector(int max_degree) {
  SuiteReport report{"classical"};
  const auto start = std::chrono::steady_clock::now();
  for (SchurType t : {SchurType::I, SchurType::Istar, SchurType::II, SchurType::IIstar}) {
    CheckResult check{to_string(t) + " mode strings equal det(h_{l_i - i + j})", true};
    for (int n = 0; n <= max_degree && check.passed; ++n)
      for (const auto& lambda : enumerate_partitions(n)) {
        const SuperPartition sp({}, lambda);
        SuperPolynomial built = SuperPolynomial::one();
        const auto modes = mode_string(sp);
        for (auto it = modes.rbegin(); it != modes.rend(); ++it) built = family_mode(t, it->first, it->second)(built);
        ++check.count;
        if (built != oracle::jacobi_trudi(lambda)) {
          check.passed = false;
          check.counterexample = to_display_string(sp);
          break;
        }
      }
    report.checks.push_back(check);
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<Criterion> criteria() {
  return {
      {1, "worked examples", 6.0, [](SchurTable& t) { return std::vector{verify_examples(t)}; }},
      {2, "one-row/one-column forms, r <= 6", 10.0,
       [](SchurTable& t) { return std::vector{verify_row_column_forms(6, t)}; }},
      {3, "orthogonality, |L| <= 6, m <= 3", 60.0,
       [](SchurTable& t) { return std::vector{verify_orthogonality({6, 3}, t)}; }},
      {4, "creation, |L| <= 5, m <= 3", 120.0,
       [](SchurTable& t) { return std::vector{verify_creation({5, 3}, t)}; }},
      {5, "Pieri rules vs products, |L| <= 5, m <= 2, r <= 4", 120.0,
       [](SchurTable& t) { return std::vector{verify_pieri({5, 2}, t, 4)}; }},
      {6, "classical sector vs determinant oracle, degree <= 8", 30.0,
       [](SchurTable&) { return std::vector{classical_sector(8)}; }},
      {7, "dualities, |L| <= 5", 60.0, [](SchurTable& t) { return std::vector{verify_dualities({5, 5}, t)}; }},
      {8, "derivative identities and exchange relations, <= (5,2), indices <= 6", 60.0,
       [](SchurTable&) { return std::vector{verify_exchange_relations({5, 2}, 6)}; }},
      {9, "negative-mode strings, |L| <= 5, m <= 2", 60.0,
       [](SchurTable& t) { return std::vector{verify_negative_modes({5, 2}, t)}; }},
      {10, "recurrence through the rules, r <= 3, |L| <= 4", 30.0,
       [](SchurTable&) { return std::vector{verify_recurrence({4, 4}, 3)}; }},
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  bool verbose = false;
  app.add_option("--criterion", only, "Run one criterion (1-10)")->check(CLI::Range(1, 10));
  app.add_flag("-v,--verbose", verbose, "Print every check");
  CLI11_PARSE(app, argc, argv);

  bool all_passed = true;
  for (const auto& c : criteria()) {
    if (only && c.id != only) continue;
    SchurTable table;
    const auto start = std::chrono::steady_clock::now();
    const auto reports = c.run(table);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool identities = true;
    for (const auto& r : reports) identities = identities && r.passed();
    const bool in_budget = seconds < c.budget_seconds;
    const bool passed = identities && in_budget;
    all_passed = all_passed && passed;
    std::cout << (passed ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << std::fixed
              << std::setprecision(2) << seconds << " s, budget " << c.budget_seconds << " s)";
    if (!in_budget) std::cout << " over budget";
    std::cout << "\n";
    for (const auto& r : reports)
      for (const auto& check : r.checks)
        if (verbose || !check.passed || check.informational)
          std::cout << "    " << (check.informational ? (check.passed ? "info" : "INFO") : (check.passed ? "pass" : "FAIL"))
                    << " " << check.name << " (" << check.count << " checks)"
                    << (check.passed ? "" : ": first counterexample " + check.counterexample) << "\n";
  }
  return all_passed ? 0 : 1;
}
