#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "sschur/operators.hpp"
#include "sschur/schur_table.hpp"

namespace sschur {

struct VerifyBounds {
  int max_total = 6;
  int max_fermionic = 3;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  // Reported for reference only; does not affect the suite verdict.
  bool informational = false;
  std::size_t count = 0;
  double seconds = 0;
  std::string counterexample;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0;
  bool passed() const;
  const CheckResult* first_failure() const;
};

// Suites: examples, table1 (one-row / one-column forms), orthogonality,
// creation, pieri, dualities, appendixA (derivatives and exchange relations),
// negative-modes, recurrence. "all" runs every suite.
const std::vector<std::string>& suite_names();
std::vector<SuiteReport> run_suite(const std::string& name, const VerifyBounds& bounds, SchurTable& table);

// Worked examples: classical B3 B1, s_(0;3), B3^1 s_(0;3), C2^1 s_(1),
// C3^0 s*_(1;3) and a conjugation.
SuiteReport verify_examples(SchurTable& table);
// The sixteen one-row / one-column closed forms for 0 <= r <= max_r.
SuiteReport verify_row_column_forms(int max_r, SchurTable& table);
SuiteReport verify_orthogonality(const VerifyBounds& bounds, SchurTable& table);
// Operator strings rebuilt from text reproduce each family, and modes with
// n >= circled_1 (up to circled_1 + extra_modes) prepend exactly one row.
SuiteReport verify_creation(const VerifyBounds& bounds, SchurTable& table, int extra_modes = 1);
SuiteReport verify_pieri(const VerifyBounds& bounds, SchurTable& table, int max_r = 4);
SuiteReport verify_dualities(const VerifyBounds& bounds, SchurTable& table);
// Derivative identities, the eight e/h exchange relations under both the
// formal and the scalar-product adjoint, and the bridge between them.
SuiteReport verify_exchange_relations(const VerifyBounds& bounds, int max_index);
SuiteReport verify_negative_modes(const VerifyBounds& bounds, SchurTable& table);
SuiteReport verify_recurrence(const VerifyBounds& bounds, int max_r = 3);

// Applies the conjugate's mode string with K (on s*) or L (on s) and
// reports whether (-1)^|L| times the result is 1.
bool strips_to_one(SchurType family, const SuperPartition& sp, OddModeSign sign, SchurTable& table);

struct SignCandidateScore {
  OddModeSign sign;
  int k_passed = 0;
  int l_passed = 0;
  int total = 0;
};
// Scores every odd-sign candidate against the row-stripping strings.
std::vector<SignCandidateScore> calibrate_negative_mode_signs(const VerifyBounds& bounds, SchurTable& table);
std::string to_string(OddModeSign sign);

void to_json(nlohmann::json& j, const CheckResult& c);
void to_json(nlohmann::json& j, const SuiteReport& r);
std::string to_text(const SuiteReport& r);

}  // namespace sschur
