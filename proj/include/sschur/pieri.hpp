#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sschur/schur_table.hpp"
#include "sschur/superpartition.hpp"

namespace sschur {

struct Cell {
  int row = 0;  // 1-based
  int col = 0;  // 1-based
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// One term of a rule, with the decorations used to draw it.
struct DecoratedDiagram {
  SuperPartition base;
  SuperPartition result;
  std::set<Cell> removed_cells;
  std::set<Cell> added_cells;
  std::vector<int> circle_rows;        // rows of result that end in a circle
  std::vector<int> moved_circle_rows;  // subset whose circle left its original row
  int sign = 1;
};

using SignedExpansion = std::map<SuperPartition, int>;

enum class PieriRule {
  ElementaryOnS,        // e_r s
  ThetaOnS,             // theta_r s
  HomogeneousOnSStar,   // h_r s*
  ElementaryOnSStar,    // e_r s*
};

PieriRule parse_pieri_rule(const std::string& name);  // eI, thetaI, hIstar, eIstar
std::string to_string(PieriRule rule);
// Family the rule expands in (I or Istar) and the generator it multiplies by.
SchurType rule_family(PieriRule rule);
SuperPolynomial rule_generator(PieriRule rule, int r);

std::vector<DecoratedDiagram> pieri_terms(PieriRule rule, int r, const SuperPartition& sp);
SignedExpansion pieri(PieriRule rule, int r, const SuperPartition& sp);

SignedExpansion pieri_e_I(int r, const SuperPartition& sp);
SignedExpansion pieri_theta_I(int r, const SuperPartition& sp);
SignedExpansion pieri_h_Istar(int r, const SuperPartition& sp);
SignedExpansion pieri_e_Istar(int r, const SuperPartition& sp);

// e_r^perp on s (family I) or s* (family Istar), read off the transposed
// e-rule of the dual family.
SignedExpansion inverse_pieri_e(int r, const SuperPartition& sp, SchurType family);

// Applies a rule linearly to a combination of Schur functions.
SignedExpansion apply_rule(PieriRule rule, int r, const SignedExpansion& e);

// Remove / add the circle at the end of the first row.
std::optional<SuperPartition> strip_first_circle(const SuperPartition& sp);
std::optional<SuperPartition> add_first_circle(const SuperPartition& sp);

// generator * schur(type, sp), re-expanded in the same family.
Expansion oracle_product(const SuperPolynomial& generator, const SuperPartition& sp, SchurType type,
                         SchurTable& table);

Expansion to_expansion(const SignedExpansion& e);

// Boxes "[ ]", added "[+]", removed "[x]", circles "( )", displaced circles "(!)".
std::string render_diagram(const DecoratedDiagram& d);

}  // namespace sschur
