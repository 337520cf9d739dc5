#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sschur/rational.hpp"

namespace sschur {

using Partition = std::vector<int>;

// A pair (a; s): a strictly decreasing list of non-negative fermionic parts
// (possibly ending in 0) and an ordinary partition of bosonic parts.
class SuperPartition {
 public:
  SuperPartition() = default;
  // Validates eagerly; throws ValidationError.
  SuperPartition(std::vector<int> antisymmetric, std::vector<int> symmetric);

  const std::vector<int>& antisymmetric() const { return a_; }
  const std::vector<int>& symmetric() const { return s_; }
  int fermionic_degree() const { return static_cast<int>(a_.size()); }
  int total_degree() const;
  bool empty() const { return a_.empty() && s_.empty(); }

  // All parts sorted non-increasingly, zeros dropped.
  Partition star() const;
  // Fermionic parts raised by one, merged with the bosonic parts.
  Partition circled() const;

  // Number of rows of the circled diagram; every row carries a mode index.
  int row_count() const { return static_cast<int>(circled().size()); }

  // circled_i - star_i for 1 <= i <= row_count().
  int epsilon(int i) const;

  // Rebuild from a (star, circled) pair; throws ValidationError when the
  // pair is not a superpartition diagram.
  static SuperPartition from_diagrams(const Partition& star, const Partition& circled);

  // 1-based rows of the circled diagram that end in a circle.
  std::vector<int> circle_rows() const;

  friend bool operator==(const SuperPartition&, const SuperPartition&) = default;
  // Canonical order: total degree, fermionic degree, then circled and star
  // compared lexicographically with larger diagrams first.
  friend std::strong_ordering operator<=>(const SuperPartition& x, const SuperPartition& y);

 private:
  std::vector<int> a_;
  std::vector<int> s_;
};

Partition transpose(const Partition& p);
SuperPartition conjugate(const SuperPartition& sp);

struct PartitionWeight {
  Rational value;          // signed: includes (-1)^sign_exponent
  int sign_exponent = 0;  // binomial(m, 2) mod 2
};

PartitionWeight z_weight(const SuperPartition& sp);

// |Aut(lambda)| = prod n_i! over multiplicities.
Rational automorphism_count(const Partition& p);

// All superpartitions with the given total and fermionic degree, in canonical order.
std::vector<SuperPartition> enumerate_superpartitions(int total_degree, int fermionic_degree);
// Ordinary partitions of n, largest first in lexicographic order.
std::vector<Partition> enumerate_partitions(int n);

// "a1,a2;s1,s2" (either side may be empty). Parentheses around the whole are accepted.
SuperPartition parse_superpartition(std::string_view text);
std::string to_string(const SuperPartition& sp);
// Parenthesized form, e.g. "(3,0;3)".
std::string to_display_string(const SuperPartition& sp);

void to_json(nlohmann::json& j, const SuperPartition& sp);
void from_json(const nlohmann::json& j, SuperPartition& sp);

}  // namespace sschur
