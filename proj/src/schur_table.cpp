#include "sschur/schur_table.hpp"

#include <mutex>

#include "sschur/error.hpp"
#include "sschur/operators.hpp"

namespace sschur {

SchurType dual_type(SchurType t) {
  switch (t) {
    case SchurType::I:
      return SchurType::Istar;
    case SchurType::Istar:
      return SchurType::I;
    case SchurType::II:
      return SchurType::IIstar;
    case SchurType::IIstar:
      return SchurType::II;
  }
  return t;
}

std::string to_string(SchurType t) {
  switch (t) {
    case SchurType::I:
      return "I";
    case SchurType::Istar:
      return "Istar";
    case SchurType::II:
      return "II";
    case SchurType::IIstar:
      return "IIstar";
  }
  return "?";
}

SchurType parse_schur_type(std::string_view text) {
  if (text == "I") return SchurType::I;
  if (text == "Istar" || text == "I*") return SchurType::Istar;
  if (text == "II") return SchurType::II;
  if (text == "IIstar" || text == "II*") return SchurType::IIstar;
  throw ParseError(0, "unknown Schur type '" + std::string(text) + "' (expected I, Istar, II, IIstar)");
}

LinearOperator schur_mode(SchurType t, int n, int eps) {
  switch (t) {
    case SchurType::I:
      return bernstein_B(n, eps);
    case SchurType::Istar:
      return bernstein_C(n, eps);
    case SchurType::II:
      return bernstein_Bbar(n, eps);
    case SchurType::IIstar:
      return bernstein_Cbar(n, eps);
  }
  throw Error("unknown Schur type");
}

std::vector<std::pair<int, int>> mode_string(const SuperPartition& sp) {
  const Partition star = sp.star(), circled = sp.circled();
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < circled.size(); ++i) {
    const int n = i < star.size() ? star[i] : 0;
    out.emplace_back(n, circled[i] - n);
  }
  return out;
}

SuperPartition without_first_row(const SuperPartition& sp) {
  Partition star = sp.star(), circled = sp.circled();
  if (!star.empty()) star.erase(star.begin());
  if (!circled.empty()) circled.erase(circled.begin());
  return SuperPartition::from_diagrams(star, circled);
}

SchurTable::SchurTable(TableLimits limits, Execution exec) : limits_(limits), exec_(exec) {}

void SchurTable::check_limits(Bidegree d) const {
  if (d.total > limits_.max_total || d.fermionic > limits_.max_fermionic)
    throw IncompleteBasis("bidegree (" + std::to_string(d.total) + "," + std::to_string(d.fermionic) +
                          ") lies outside the table limits");
}

const SuperPolynomial* SchurTable::find(SchurType t, const SuperPartition& sp) const {
  std::shared_lock lock(mutex_);
  auto fam = values_.find(t);
  if (fam == values_.end()) return nullptr;
  auto it = fam->second.find(sp);
  return it == fam->second.end() ? nullptr : &it->second;
}

SuperPolynomial SchurTable::compute(SchurType t, const SuperPartition& sp) {
  if (sp.empty()) return SuperPolynomial::one();
  const auto modes = mode_string(sp);
  const SuperPolynomial& tail = get(t, without_first_row(sp));
  return schur_mode(t, modes.front().first, modes.front().second)(tail);
}

const SuperPolynomial& SchurTable::get(SchurType t, const SuperPartition& sp) {
  if (const SuperPolynomial* hit = find(t, sp)) return *hit;
  check_limits({sp.total_degree(), sp.fermionic_degree()});
  SuperPolynomial value = compute(t, sp);
  std::unique_lock lock(mutex_);
  return values_[t].emplace(sp, std::move(value)).first->second;
}

void SchurTable::populate_block(SchurType t, Bidegree d) {
  if (has_block(t, d)) return;
  check_limits(d);
  const auto members = enumerate_superpartitions(d.total, d.fermionic);
  // Prerequisites first, so the concurrent pass only reads finished entries.
  for (const auto& sp : members)
    if (!sp.empty()) get(t, without_first_row(sp));
  std::vector<SuperPolynomial> values(members.size());
  std::vector<char> present(members.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) present[i] = find(t, members[i]) != nullptr;
  for_each_index(members.size(), exec_, [&](std::size_t i) {
    if (!present[i]) values[i] = compute(t, members[i]);
  });
  std::unique_lock lock(mutex_);
  auto& fam = values_[t];
  for (std::size_t i = 0; i < members.size(); ++i)
    if (!present[i]) fam.emplace(members[i], std::move(values[i]));
  complete_[{t, d}] = true;
}

void SchurTable::populate(SchurType t, int max_total, int max_fermionic) {
  for (int n = 0; n <= max_total; ++n)
    for (int m = 0; m <= max_fermionic; ++m) populate_block(t, {n, m});
}

bool SchurTable::has_block(SchurType t, Bidegree d) const {
  std::shared_lock lock(mutex_);
  return complete_.count({t, d}) != 0;
}

SchurTable::Block SchurTable::block(SchurType t, Bidegree d) {
  populate_block(t, d);
  Block out;
  for (const auto& sp : enumerate_superpartitions(d.total, d.fermionic)) out.emplace(sp, get(t, sp));
  return out;
}

void SchurTable::insert_block(SchurType t, Bidegree d, const Block& entries) {
  for (const auto& [sp, f] : entries) {
    if (sp.total_degree() != d.total || sp.fermionic_degree() != d.fermionic)
      throw Error("cached entry " + to_string(sp) + " does not belong to its block");
    for (const auto& [m, c] : f.terms())
      if (m.bidegree() != d) throw Error("cached polynomial for " + to_string(sp) + " is not homogeneous");
  }
  const auto members = enumerate_superpartitions(d.total, d.fermionic);
  std::unique_lock lock(mutex_);
  auto& fam = values_[t];
  for (const auto& [sp, f] : entries) fam.emplace(sp, f);
  bool all = true;
  for (const auto& sp : members) all = all && fam.count(sp);
  if (all) complete_[{t, d}] = true;
}

Expansion SchurTable::expand(const SuperPolynomial& f, SchurType t) {
  const SchurType dual = dual_type(t);
  Expansion out;
  for (const Bidegree d : f.bidegrees()) {
    populate_block(dual, d);
    const SuperPolynomial part = f.homogeneous_component(d);
    const auto members = enumerate_superpartitions(d.total, d.fermionic);
    std::vector<Rational> coeffs(members.size());
    for_each_index(members.size(), exec_, [&](std::size_t i) {
      coeffs[i] = scalar_product(part, get(dual, members[i]));
    });
    for (std::size_t i = 0; i < members.size(); ++i)
      if (coeffs[i] != 0) out.emplace(members[i], coeffs[i]);
  }
  return out;
}

SuperPolynomial SchurTable::reconstruct(const Expansion& e, SchurType t) {
  SuperPolynomial out;
  for (const auto& [sp, c] : e) out += c * get(t, sp);
  return out;
}

SchurTable& default_schur_table() {
  static SchurTable table;
  return table;
}

const SuperPolynomial& schur(SchurType t, const SuperPartition& sp) { return default_schur_table().get(t, sp); }

Expansion expand_in_schur(const SuperPolynomial& f, SchurType t) { return default_schur_table().expand(f, t); }

}  // namespace sschur
