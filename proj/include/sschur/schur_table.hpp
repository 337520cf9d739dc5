#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <string_view>

#include "sschur/linear_operator.hpp"
#include "sschur/superalgebra.hpp"
#include "sschur/superpartition.hpp"
#include "sschur/text_format.hpp"

namespace sschur {

// I: s, Istar: s*, II: sbar, IIstar: sbar*. I pairs with Istar, II with IIstar.
enum class SchurType { I, Istar, II, IIstar };

SchurType dual_type(SchurType t);
std::string to_string(SchurType t);
SchurType parse_schur_type(std::string_view text);

// The creation mode of a family: B, C, Bbar or Cbar.
LinearOperator schur_mode(SchurType t, int n, int eps);

// The mode indices (n_i, eps_i) of a superpartition, first row first. A
// trailing fermionic zero part contributes a final (0, 1).
std::vector<std::pair<int, int>> mode_string(const SuperPartition& sp);
// The superpartition left after deleting the first row of both diagrams.
SuperPartition without_first_row(const SuperPartition& sp);

struct TableLimits {
  int max_total = 24;
  int max_fermionic = 12;
};

// Grow-only cache of Schur functions, filled by applying one creation mode to
// the cached function of the superpartition without its first row.
class SchurTable {
 public:
  using Block = std::map<SuperPartition, SuperPolynomial>;

  explicit SchurTable(TableLimits limits = {}, Execution exec = Execution::Parallel);

  const SuperPolynomial& get(SchurType t, const SuperPartition& sp);
  // Fills one bidegree block, computing its members concurrently.
  void populate_block(SchurType t, Bidegree d);
  // All blocks with total <= max_total and fermionic <= max_fermionic.
  void populate(SchurType t, int max_total, int max_fermionic);

  bool has_block(SchurType t, Bidegree d) const;
  Block block(SchurType t, Bidegree d);
  // Seeds a block (e.g. from an on-disk cache); entries must be homogeneous.
  void insert_block(SchurType t, Bidegree d, const Block& entries);

  // Coefficients of f in family t, by pairing against the dual family.
  Expansion expand(const SuperPolynomial& f, SchurType t);
  // Sum of c * schur(t, sp).
  SuperPolynomial reconstruct(const Expansion& e, SchurType t);

  const TableLimits& limits() const { return limits_; }

 private:
  const SuperPolynomial* find(SchurType t, const SuperPartition& sp) const;
  SuperPolynomial compute(SchurType t, const SuperPartition& sp);
  void check_limits(Bidegree d) const;

  TableLimits limits_;
  Execution exec_;
  mutable std::shared_mutex mutex_;
  std::map<SchurType, Block> values_;
  std::map<std::pair<SchurType, Bidegree>, bool> complete_;
};

// Process-wide table used by the convenience functions below.
SchurTable& default_schur_table();
const SuperPolynomial& schur(SchurType t, const SuperPartition& sp);
Expansion expand_in_schur(const SuperPolynomial& f, SchurType t);

}  // namespace sschur
