#include "sschur/pieri.hpp"

#include <algorithm>
#include <functional>

#include "sschur/bases.hpp"
#include "sschur/error.hpp"

namespace sschur {
namespace {

int part(const Partition& p, int row) { return row >= 1 && row <= static_cast<int>(p.size()) ? p[row - 1] : 0; }

Partition trimmed(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

std::vector<Partition> vertical_strips(const Partition& mu, int r) {
  std::vector<Partition> out;
  const int rows = static_cast<int>(mu.size()) + r;
  Partition nu(rows, 0);
  std::function<void(int, int)> go = [&](int i, int left) {
    if (i == rows) {
      if (left == 0) out.push_back(trimmed(nu));
      return;
    }
    for (int add = 0; add <= std::min(1, left); ++add) {
      nu[i] = part(mu, i + 1) + add;
      if (i > 0 && nu[i] > nu[i - 1]) continue;
      go(i + 1, left - add);
    }
  };
  go(0, r);
  return out;
}

std::vector<Partition> horizontal_strips(const Partition& mu, int r) {
  std::vector<Partition> out;
  const int rows = static_cast<int>(mu.size()) + 1;
  Partition nu(rows, 0);
  std::function<void(int, int)> go = [&](int i, int left) {
    if (i == rows) {
      if (left == 0) out.push_back(trimmed(nu));
      return;
    }
    const int lo = part(mu, i + 1);
    const int hi = i == 0 ? lo + left : std::min(lo + left, part(mu, i));
    for (int v = lo; v <= hi; ++v) {
      nu[i] = v;
      go(i + 1, left - (v - lo));
    }
  };
  go(0, r);
  return out;
}

// Rows of nu that can end in a circle.
std::vector<int> corner_rows(const Partition& nu) {
  std::vector<int> rows;
  for (int j = 1; j <= static_cast<int>(nu.size()) + 1; ++j)
    if (j == 1 || part(nu, j - 1) > part(nu, j)) rows.push_back(j);
  return rows;
}

void for_each_subset(const std::vector<int>& items, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> chosen;
  std::function<void(std::size_t)> go = [&](std::size_t start) {
    if (static_cast<int>(chosen.size()) == k) {
      fn(chosen);
      return;
    }
    for (std::size_t i = start; i < items.size(); ++i) {
      chosen.push_back(items[i]);
      go(i + 1);
      chosen.pop_back();
    }
  };
  go(0);
}

std::optional<SuperPartition> with_circles(const Partition& nu, const std::vector<int>& rows) {
  Partition circled = nu;
  int last = 0;
  for (int r : rows) last = std::max(last, r);
  circled.resize(std::max<std::size_t>(circled.size(), last), 0);
  for (int r : rows) circled[r - 1] += 1;
  try {
    return SuperPartition::from_diagrams(nu, circled);
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

std::set<Cell> strip_cells(const Partition& mu, const Partition& nu) {
  std::set<Cell> cells;
  for (int i = 1; i <= static_cast<int>(nu.size()); ++i)
    for (int c = part(mu, i) + 1; c <= part(nu, i); ++c) cells.insert({i, c});
  return cells;
}

std::vector<Cell> circle_cells(const SuperPartition& sp) {
  const Partition star = sp.star();
  std::vector<Cell> out;
  for (int row : sp.circle_rows()) out.push_back({row, part(star, row) + 1});
  return out;
}

// Searches an injection from `from` into `to` respecting `allowed`; fills
// `image[i]` with the index in `to`.
bool find_matching(const std::vector<Cell>& from, const std::vector<Cell>& to,
                   const std::function<bool(const Cell&, const Cell&)>& allowed, std::vector<int>& image) {
  image.assign(from.size(), -1);
  std::vector<char> used(to.size(), 0);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == from.size()) return true;
    for (std::size_t j = 0; j < to.size(); ++j) {
      if (used[j] || !allowed(from[i], to[j])) continue;
      used[j] = 1;
      image[i] = static_cast<int>(j);
      if (go(i + 1)) return true;
      used[j] = 0;
    }
    image[i] = -1;
    return false;
  };
  return go(0);
}

DecoratedDiagram make_diagram(const SuperPartition& base, const SuperPartition& result, int sign) {
  DecoratedDiagram d;
  d.base = base;
  d.result = result;
  d.added_cells = strip_cells(base.star(), result.star());
  d.circle_rows = result.circle_rows();
  d.sign = sign;
  return d;
}

void mark_moved(DecoratedDiagram& d, const std::vector<Cell>& from, const std::vector<Cell>& to,
                const std::vector<int>& image) {
  for (std::size_t i = 0; i < from.size(); ++i)
    if (to[image[i]].row != from[i].row) d.moved_circle_rows.push_back(to[image[i]].row);
  std::sort(d.moved_circle_rows.begin(), d.moved_circle_rows.end());
}

std::vector<DecoratedDiagram> terms_e_I(int r, const SuperPartition& sp) {
  const Partition mu = sp.star();
  const auto old_circles = circle_cells(sp);
  auto allowed = [&](const Cell& a, const Cell& b) {
    if (a == b) return true;
    if (a.col == 1 && b.col == 1) return true;
    if (a.col > 1 && b.col == a.col && part(mu, b.row) >= a.col - 1) return true;
    return b.row == a.row && b.col == a.col + 1;
  };
  std::vector<DecoratedDiagram> out;
  for (const Partition& nu : vertical_strips(mu, r)) {
    for_each_subset(corner_rows(nu), sp.fermionic_degree(), [&](const std::vector<int>& rows) {
      auto omega = with_circles(nu, rows);
      if (!omega) return;
      const auto new_circles = circle_cells(*omega);
      std::vector<int> image;
      if (!find_matching(old_circles, new_circles, allowed, image)) return;
      DecoratedDiagram d = make_diagram(sp, *omega, 1);
      mark_moved(d, old_circles, new_circles, image);
      out.push_back(std::move(d));
    });
  }
  return out;
}

std::vector<DecoratedDiagram> terms_theta_I(int r, const SuperPartition& sp) {
  if (r < 1) return {};
  const Partition mu = sp.star();
  const auto old_circles = circle_cells(sp);
  auto allowed = [&](const Cell& a, const Cell& b) {
    if (a == b) return true;
    if (a.row == 1 && b.row == 1) return true;
    if (a.row > 1 && b.row == a.row && part(mu, a.row - 1) >= b.col) return true;
    return b.col == a.col && b.row == a.row + 1;
  };
  std::vector<DecoratedDiagram> out;
  for (const Partition& nu : horizontal_strips(mu, r - 1)) {
    const auto added = strip_cells(mu, nu);
    int rightmost_added = 0;
    for (const Cell& c : added) rightmost_added = std::max(rightmost_added, c.col);
    for_each_subset(corner_rows(nu), sp.fermionic_degree() + 1, [&](const std::vector<int>& rows) {
      auto omega = with_circles(nu, rows);
      if (!omega) return;
      const auto new_circles = circle_cells(*omega);
      // Try every choice of the fresh circle; the first admissible one wins.
      for (std::size_t fresh = 0; fresh < new_circles.size(); ++fresh) {
        if (new_circles[fresh].col <= rightmost_added) continue;
        std::vector<Cell> rest;
        for (std::size_t j = 0; j < new_circles.size(); ++j)
          if (j != fresh) rest.push_back(new_circles[j]);
        std::vector<int> image;
        if (!find_matching(old_circles, rest, allowed, image)) continue;
        int above = 0;
        for (const Cell& c : new_circles) above += c.row < new_circles[fresh].row;
        DecoratedDiagram d = make_diagram(sp, *omega, above % 2 ? -1 : 1);
        mark_moved(d, old_circles, rest, image);
        out.push_back(std::move(d));
        return;
      }
    });
  }
  return out;
}

std::vector<DecoratedDiagram> terms_h_Istar(int r, const SuperPartition& sp) {
  const Partition mu = sp.star();
  std::vector<DecoratedDiagram> out;
  for (const Partition& nu : horizontal_strips(mu, r)) {
    std::vector<int> targets;
    std::vector<int> moved;
    for (int row : sp.circle_rows()) {
      const int to = part(nu, row) > part(mu, row) ? row + 1 : row;
      targets.push_back(to);
      if (to != row) moved.push_back(to);
    }
    std::vector<int> sorted = targets;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    const auto corners = corner_rows(nu);
    bool ok = true;
    for (int t : sorted) ok = ok && std::count(corners.begin(), corners.end(), t);
    if (!ok) continue;
    auto omega = with_circles(nu, sorted);
    if (!omega) continue;
    DecoratedDiagram d = make_diagram(sp, *omega, 1);
    std::sort(moved.begin(), moved.end());
    d.moved_circle_rows = moved;
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<DecoratedDiagram> terms_e_Istar(int r, const SuperPartition& sp) {
  const Partition mu = sp.star();
  const auto circle_rows = sp.circle_rows();
  auto is_circle_row = [&](int row) { return std::count(circle_rows.begin(), circle_rows.end(), row) != 0; };
  std::vector<DecoratedDiagram> out;
  for (const Partition& nu : vertical_strips(mu, r)) {
    std::vector<int> targets;
    std::vector<int> moved;
    bool ok = true;
    for (int row : circle_rows) {
      int to = row;
      // Relocate until the circle reaches a row that received no box.
      while (part(nu, to) > part(mu, to)) {
        ++to;
        if (is_circle_row(to)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
      targets.push_back(to);
      if (to != row) moved.push_back(to);
    }
    if (!ok) continue;
    std::vector<int> sorted = targets;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    const auto corners = corner_rows(nu);
    for (int t : sorted) ok = ok && std::count(corners.begin(), corners.end(), t);
    if (!ok) continue;
    auto omega = with_circles(nu, sorted);
    if (!omega) continue;
    DecoratedDiagram d = make_diagram(sp, *omega, 1);
    std::sort(moved.begin(), moved.end());
    d.moved_circle_rows = moved;
    out.push_back(std::move(d));
  }
  return out;
}

SignedExpansion collect(const std::vector<DecoratedDiagram>& terms) {
  SignedExpansion out;
  for (const auto& d : terms) {
    int& c = out[d.result];
    c += d.sign;
    if (c == 0) out.erase(d.result);
  }
  return out;
}

}  // namespace

PieriRule parse_pieri_rule(const std::string& name) {
  if (name == "eI") return PieriRule::ElementaryOnS;
  if (name == "thetaI") return PieriRule::ThetaOnS;
  if (name == "hIstar") return PieriRule::HomogeneousOnSStar;
  if (name == "eIstar") return PieriRule::ElementaryOnSStar;
  throw ParseError(0, "unknown Pieri rule '" + name + "' (expected eI, thetaI, hIstar, eIstar)");
}

std::string to_string(PieriRule rule) {
  switch (rule) {
    case PieriRule::ElementaryOnS:
      return "eI";
    case PieriRule::ThetaOnS:
      return "thetaI";
    case PieriRule::HomogeneousOnSStar:
      return "hIstar";
    case PieriRule::ElementaryOnSStar:
      return "eIstar";
  }
  return "?";
}

SchurType rule_family(PieriRule rule) {
  return rule == PieriRule::ElementaryOnS || rule == PieriRule::ThetaOnS ? SchurType::I : SchurType::Istar;
}

SuperPolynomial rule_generator(PieriRule rule, int r) {
  switch (rule) {
    case PieriRule::ElementaryOnS:
    case PieriRule::ElementaryOnSStar:
      return elementary(r);
    case PieriRule::HomogeneousOnSStar:
      return homogeneous(r);
    case PieriRule::ThetaOnS:
      return r >= 1 ? SuperPolynomial::theta(r) : SuperPolynomial();
  }
  return {};
}

std::vector<DecoratedDiagram> pieri_terms(PieriRule rule, int r, const SuperPartition& sp) {
  if (r < 0) return {};
  switch (rule) {
    case PieriRule::ElementaryOnS:
      return terms_e_I(r, sp);
    case PieriRule::ThetaOnS:
      return terms_theta_I(r, sp);
    case PieriRule::HomogeneousOnSStar:
      return terms_h_Istar(r, sp);
    case PieriRule::ElementaryOnSStar:
      return terms_e_Istar(r, sp);
  }
  return {};
}

SignedExpansion pieri(PieriRule rule, int r, const SuperPartition& sp) { return collect(pieri_terms(rule, r, sp)); }

SignedExpansion pieri_e_I(int r, const SuperPartition& sp) { return pieri(PieriRule::ElementaryOnS, r, sp); }
SignedExpansion pieri_theta_I(int r, const SuperPartition& sp) { return pieri(PieriRule::ThetaOnS, r, sp); }
SignedExpansion pieri_h_Istar(int r, const SuperPartition& sp) { return pieri(PieriRule::HomogeneousOnSStar, r, sp); }
SignedExpansion pieri_e_Istar(int r, const SuperPartition& sp) { return pieri(PieriRule::ElementaryOnSStar, r, sp); }

SignedExpansion inverse_pieri_e(int r, const SuperPartition& sp, SchurType family) {
  PieriRule dual_rule;
  if (family == SchurType::I)
    dual_rule = PieriRule::ElementaryOnSStar;
  else if (family == SchurType::Istar)
    dual_rule = PieriRule::ElementaryOnS;
  else
    throw Error("inverse e-Pieri action is only available for the I and Istar families");
  SignedExpansion out;
  if (r < 0 || r > sp.total_degree()) return out;
  for (const auto& omega : enumerate_superpartitions(sp.total_degree() - r, sp.fermionic_degree())) {
    const auto row = pieri(dual_rule, r, omega);
    auto it = row.find(sp);
    if (it != row.end()) out.emplace(omega, it->second);
  }
  return out;
}

SignedExpansion apply_rule(PieriRule rule, int r, const SignedExpansion& e) {
  SignedExpansion out;
  for (const auto& [sp, c] : e)
    for (const auto& [omega, k] : pieri(rule, r, sp)) {
      int& v = out[omega];
      v += c * k;
      if (v == 0) out.erase(omega);
    }
  return out;
}

std::optional<SuperPartition> strip_first_circle(const SuperPartition& sp) {
  const Partition star = sp.star(), circled = sp.circled();
  if (circled.empty() || part(circled, 1) == part(star, 1)) return std::nullopt;
  Partition reduced = circled;
  reduced[0] -= 1;
  return SuperPartition::from_diagrams(star, trimmed(reduced));
}

std::optional<SuperPartition> add_first_circle(const SuperPartition& sp) {
  const Partition star = sp.star();
  Partition circled = sp.circled();
  if (circled.empty()) circled.push_back(0);
  if (part(circled, 1) != part(star, 1)) return std::nullopt;
  circled[0] += 1;
  try {
    return SuperPartition::from_diagrams(star, circled);
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

Expansion oracle_product(const SuperPolynomial& generator, const SuperPartition& sp, SchurType type,
                         SchurTable& table) {
  return table.expand(generator * table.get(type, sp), type);
}

Expansion to_expansion(const SignedExpansion& e) {
  Expansion out;
  for (const auto& [sp, c] : e)
    if (c != 0) out.emplace(sp, Rational(c));
  return out;
}

std::string render_diagram(const DecoratedDiagram& d) {
  const Partition star = d.result.star();
  const auto& circles = d.circle_rows;
  int rows = static_cast<int>(star.size());
  for (int r : circles) rows = std::max(rows, r);
  for (const Cell& c : d.removed_cells) rows = std::max(rows, c.row);
  std::string out;
  for (int i = 1; i <= rows; ++i) {
    int width = part(star, i);
    for (const Cell& c : d.removed_cells)
      if (c.row == i) width = std::max(width, c.col);
    std::string line;
    for (int c = 1; c <= width; ++c) {
      if (d.removed_cells.count({i, c}))
        line += "[x]";
      else if (d.added_cells.count({i, c}))
        line += "[+]";
      else
        line += "[ ]";
    }
    if (std::count(circles.begin(), circles.end(), i))
      line += std::count(d.moved_circle_rows.begin(), d.moved_circle_rows.end(), i) ? "(!)" : "( )";
    out += line;
    out += '\n';
  }
  if (out.empty()) out = ".\n";
  return out;
}

}  // namespace sschur
