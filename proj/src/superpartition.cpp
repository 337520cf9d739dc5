#include "sschur/superpartition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include <nlohmann/json.hpp>

#include "sschur/error.hpp"

namespace sschur {

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

int at_or_zero(const Partition& p, std::size_t i) { return i < p.size() ? p[i] : 0; }

}  // namespace

SuperPartition::SuperPartition(std::vector<int> antisymmetric, std::vector<int> symmetric)
    : a_(std::move(antisymmetric)), s_(std::move(symmetric)) {
  using Kind = ValidationError::Kind;
  for (int v : a_)
    if (v < 0) throw ValidationError(Kind::NegativePart, "negative fermionic part");
  for (int v : s_) {
    if (v < 0) throw ValidationError(Kind::NegativePart, "negative bosonic part");
    if (v == 0) throw ValidationError(Kind::ZeroSymmetricPart, "bosonic parts must be positive");
  }
  for (std::size_t i = 1; i < a_.size(); ++i)
    if (a_[i - 1] <= a_[i])
      throw ValidationError(Kind::NotStrictlyDecreasing,
                            "fermionic parts must be strictly decreasing: (" + join(a_) + ")");
  for (std::size_t i = 1; i < s_.size(); ++i)
    if (s_[i - 1] < s_[i])
      throw ValidationError(Kind::NotWeaklyDecreasing,
                            "bosonic parts must be non-increasing: (" + join(s_) + ")");
}

int SuperPartition::total_degree() const {
  return std::accumulate(a_.begin(), a_.end(), 0) + std::accumulate(s_.begin(), s_.end(), 0);
}

Partition SuperPartition::star() const {
  Partition p;
  for (int v : a_)
    if (v > 0) p.push_back(v);
  p.insert(p.end(), s_.begin(), s_.end());
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

Partition SuperPartition::circled() const {
  Partition p;
  for (int v : a_) p.push_back(v + 1);
  p.insert(p.end(), s_.begin(), s_.end());
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

int SuperPartition::epsilon(int i) const {
  const Partition c = circled();
  if (i < 1 || i > static_cast<int>(c.size()))
    throw IndexOutOfRange("epsilon index " + std::to_string(i) + " outside 1.." +
                          std::to_string(c.size()));
  return c[i - 1] - at_or_zero(star(), i - 1);
}

std::vector<int> SuperPartition::circle_rows() const {
  const Partition st = star(), c = circled();
  std::vector<int> rows;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != at_or_zero(st, i)) rows.push_back(static_cast<int>(i) + 1);
  return rows;
}

SuperPartition SuperPartition::from_diagrams(const Partition& star, const Partition& circled) {
  using Kind = ValidationError::Kind;
  auto bad = [](const std::string& why) { return ValidationError(Kind::BadDiagram, why); };
  if (circled.size() < star.size()) throw bad("circled diagram shorter than star diagram");
  for (std::size_t i = 0; i < circled.size(); ++i) {
    if (i > 0 && circled[i] > circled[i - 1]) throw bad("circled diagram is not a partition");
    if (i < star.size() && (star[i] <= 0 || (i > 0 && star[i] > star[i - 1])))
      throw bad("star diagram is not a partition");
    const int d = circled[i] - at_or_zero(star, i);
    if (d != 0 && d != 1) throw bad("rows differ by more than one cell");
  }
  std::vector<int> a, s;
  for (std::size_t i = 0; i < circled.size(); ++i) {
    const int len = at_or_zero(star, i);
    if (circled[i] != len)
      a.push_back(len);
    else
      s.push_back(len);
  }
  // Circles in distinct columns means the fermionic parts are distinct.
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] == a[i - 1]) throw bad("two circles in the same column");
  return SuperPartition(std::move(a), std::move(s));
}

std::strong_ordering operator<=>(const SuperPartition& x, const SuperPartition& y) {
  if (auto c = x.total_degree() <=> y.total_degree(); c != 0) return c;
  if (auto c = x.fermionic_degree() <=> y.fermionic_degree(); c != 0) return c;
  if (auto c = y.circled() <=> x.circled(); c != 0) return c;
  return y.star() <=> x.star();
}

Partition transpose(const Partition& p) {
  Partition t;
  if (p.empty()) return t;
  t.resize(p.front(), 0);
  for (int row : p)
    for (int j = 0; j < row; ++j) ++t[j];
  return t;
}

SuperPartition conjugate(const SuperPartition& sp) {
  return SuperPartition::from_diagrams(transpose(sp.star()), transpose(sp.circled()));
}

Rational automorphism_count(const Partition& p) {
  Rational out = 1;
  std::size_t i = 0;
  while (i < p.size()) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    for (std::size_t k = 2; k <= j - i; ++k) out *= static_cast<long>(k);
    i = j;
  }
  return out;
}

PartitionWeight z_weight(const SuperPartition& sp) {
  const int m = sp.fermionic_degree();
  PartitionWeight w;
  w.sign_exponent = (m * (m - 1) / 2) % 2;
  Rational denom = 1;
  for (int v : sp.symmetric()) denom *= v;
  w.value = automorphism_count(sp.symmetric()) / denom;
  if (w.sign_exponent) w.value = -w.value;
  return w;
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<SuperPartition> enumerate_superpartitions(int total_degree, int fermionic_degree) {
  std::vector<SuperPartition> out;
  if (total_degree < 0 || fermionic_degree < 0) return out;
  std::vector<int> a;
  std::function<void(int, int)> rec = [&](int remaining, int upper) {
    if (static_cast<int>(a.size()) == fermionic_degree) {
      for (auto& s : enumerate_partitions(remaining)) out.emplace_back(a, std::move(s));
      return;
    }
    for (int part = std::min(remaining, upper); part >= 0; --part) {
      a.push_back(part);
      rec(remaining - part, part - 1);
      a.pop_back();
    }
  };
  rec(total_degree, total_degree);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  std::size_t pos() const { return pos_; }
  std::vector<int> integer_list() {
    std::vector<int> out;
    skip_space();
    if (pos_ >= text_.size() || !(std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-'))
      return out;
    do {
      skip_space();
      out.push_back(integer());
    } while (eat(','));
    return out;
  }
  int integer() {
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    long value = 0;
    std::size_t digits = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000000) throw ParseError(start, "integer too large");
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw ParseError(start, "expected an integer");
    return static_cast<int>(negative ? -value : value);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SuperPartition parse_superpartition(std::string_view text) {
  Cursor cur(text);
  const bool paren = cur.eat('(');
  std::vector<int> a = cur.integer_list();
  if (!cur.eat(';')) throw ParseError(cur.pos(), "expected ';' separating fermionic and bosonic parts");
  std::vector<int> s = cur.integer_list();
  if (paren && !cur.eat(')')) throw ParseError(cur.pos(), "expected ')'");
  if (!cur.at_end()) throw ParseError(cur.pos(), "unexpected trailing characters");
  try {
    return SuperPartition(std::move(a), std::move(s));
  } catch (const ValidationError& e) {
    throw ParseError(0, std::string("invalid superpartition: ") + e.what());
  }
}

std::string to_string(const SuperPartition& sp) {
  return join(sp.antisymmetric()) + ";" + join(sp.symmetric());
}

std::string to_display_string(const SuperPartition& sp) { return "(" + to_string(sp) + ")"; }

void to_json(nlohmann::json& j, const SuperPartition& sp) {
  j = nlohmann::json{{"a", sp.antisymmetric()}, {"s", sp.symmetric()}};
}

void from_json(const nlohmann::json& j, SuperPartition& sp) {
  sp = SuperPartition(j.at("a").get<std::vector<int>>(), j.at("s").get<std::vector<int>>());
}

}  // namespace sschur
