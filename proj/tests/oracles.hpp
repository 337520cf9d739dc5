#pragma once

// Reference computations written independently of the library algorithms.

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "sschur/bases.hpp"
#include "sschur/superalgebra.hpp"
#include "sschur/superpartition.hpp"

namespace oracle {

using sschur::Partition;
using sschur::Rational;
using sschur::SuperPartition;
using sschur::SuperPolynomial;

inline void partitions_into(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_into(n - p, p, cur, out);
    cur.pop_back();
  }
}

// Every (strictly decreasing a, partition s) with |a| + |s| = n and len(a) = m,
// from subsets of {0..n} by bitmask.
inline std::set<std::pair<std::vector<int>, std::vector<int>>> superpartitions(int n, int m) {
  std::set<std::pair<std::vector<int>, std::vector<int>>> out;
  for (unsigned mask = 0; mask < (1u << (n + 1)); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    std::vector<int> a;
    for (int v = n; v >= 0; --v)
      if (mask & (1u << v)) a.push_back(v);
    const int rest = n - std::accumulate(a.begin(), a.end(), 0);
    if (rest < 0) continue;
    std::vector<Partition> parts;
    Partition cur;
    partitions_into(rest, rest, cur, parts);
    for (auto& s : parts) out.emplace(a, s);
  }
  return out;
}

using Cells = std::set<std::pair<int, int>>;

inline Cells cells_of(const Partition& p) {
  Cells c;
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    for (int j = 0; j < p[i]; ++j) c.emplace(i, j);
  return c;
}

inline Partition rows_of(const Cells& c) {
  Partition p;
  for (const auto& [i, j] : c) {
    if (static_cast<int>(p.size()) <= i) p.resize(i + 1, 0);
    p[i] = std::max(p[i], j + 1);
  }
  return p;
}

// Diagram of a superpartition from its parts: bosonic rows plus fermionic
// rows, each fermionic row followed by a circle cell.
inline std::pair<Cells, Cells> boxes_and_circles(const SuperPartition& sp) {
  std::vector<std::pair<int, bool>> rows;
  for (int v : sp.antisymmetric()) rows.emplace_back(v, true);
  for (int v : sp.symmetric()) rows.emplace_back(v, false);
  std::stable_sort(rows.begin(), rows.end(), [](auto x, auto y) {
    return x.first != y.first ? x.first > y.first : x.second > y.second;
  });
  Cells boxes, circles;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    for (int j = 0; j < rows[i].first; ++j) boxes.emplace(i, j);
    if (rows[i].second) circles.emplace(i, rows[i].first);
  }
  return {boxes, circles};
}

// Transposes the cell sets and reads the parts back.
inline SuperPartition conjugate_by_cells(const SuperPartition& sp) {
  auto [boxes, circles] = boxes_and_circles(sp);
  Cells tb, tc;
  for (auto [i, j] : boxes) tb.emplace(j, i);
  for (auto [i, j] : circles) tc.emplace(j, i);
  const Partition rows = rows_of(tb);
  std::vector<int> a, s;
  const int height = std::max(static_cast<int>(rows.size()), tc.empty() ? 0 : tc.rbegin()->first + 1);
  for (int i = 0; i < height; ++i) {
    const int len = i < static_cast<int>(rows.size()) ? rows[i] : 0;
    bool circled = false;
    for (auto [ci, cj] : tc) circled = circled || ci == i;
    if (circled)
      a.push_back(len);
    else if (len > 0)
      s.push_back(len);
  }
  std::sort(a.rbegin(), a.rend());
  return SuperPartition(a, s);
}

// Sign of the permutation sorting distinct values, by counting adjacent swaps.
inline int sort_sign(std::vector<int> v) {
  int swaps = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j + 1 < v.size() - i; ++j)
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        ++swaps;
      }
  return swaps % 2 ? -1 : 1;
}

// n h_n = sum_k k x_k h_{n-k}, where x_k is the k-th power sum over k.
inline SuperPolynomial h_newton(int n) {
  std::vector<SuperPolynomial> h{SuperPolynomial::one()};
  for (int d = 1; d <= n; ++d) {
    SuperPolynomial acc;
    for (int k = 1; k <= d; ++k) acc += Rational(k) * (SuperPolynomial::x(k) * h[d - k]);
    h.push_back(Rational(1, d) * acc);
  }
  return n < 0 ? SuperPolynomial() : h[n];
}

// det(h_{l_i - i + j}) by expansion over permutations.
inline SuperPolynomial jacobi_trudi(const Partition& lambda) {
  const int n = static_cast<int>(lambda.size());
  const int top = n ? lambda[0] + n : 0;
  std::vector<SuperPolynomial> h;
  for (int d = 0; d <= top; ++d) h.push_back(h_newton(d));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  SuperPolynomial det;
  do {
    bool vanishes = false;
    for (int i = 0; i < n; ++i) vanishes = vanishes || lambda[i] - i + perm[i] < 0;
    if (vanishes) continue;
    SuperPolynomial term = SuperPolynomial::one();
    for (int i = 0; i < n; ++i) term = term * h[lambda[i] - i + perm[i]];
    det += Rational(sort_sign(perm)) * term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace oracle
