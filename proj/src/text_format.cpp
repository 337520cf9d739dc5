#include "sschur/text_format.hpp"

#include <algorithm>
#include <cctype>

#include <nlohmann/json.hpp>

#include "sschur/error.hpp"

namespace sschur {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  auto digits = [&](std::size_t start) {
    std::size_t j = start;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == start) throw ParseError(start, "expected digits in rational '" + std::string(text) + "'");
    return j;
  };
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t end = digits(i);
  if (end < text.size() && text[end] == '/') {
    end = digits(end + 1);
  }
  if (end != text.size()) throw ParseError(end, "unexpected character in rational");
  std::string s(text[0] == '+' ? text.substr(1) : text);
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError(0, "malformed rational '" + s + "'");
  if (q.get_den() == 0) throw ParseError(0, "zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(const SuperMonomial& m) {
  std::string out;
  auto append = [&](const std::string& factor) {
    if (!out.empty()) out += '*';
    out += factor;
  };
  for (int k : m.theta_indices()) append("t" + std::to_string(k));
  for (int k = 1; k <= SuperMonomial::kMaxX; ++k) {
    const int e = m.x_exponent(k);
    if (e == 1) append("x" + std::to_string(k));
    if (e > 1) append("x" + std::to_string(k) + "^" + std::to_string(e));
  }
  return out;
}

std::string to_string(const SuperPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.sorted_terms()) {
    if (!out.empty()) out += " | ";
    out += to_string(c);
    const std::string mono = to_string(m);
    if (!mono.empty()) out += " " + mono;
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_index(std::string_view s, std::size_t offset) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError(offset, "expected a generator index");
  if (s.size() > 4) throw ParseError(offset, "generator index too large");
  return std::stoi(std::string(s));
}

// Builds a signed canonical monomial from theta/x lists given in arbitrary order.
SuperPolynomial monomial_from_factors(const std::vector<int>& theta, const std::vector<int>& x) {
  SuperPolynomial acc = SuperPolynomial::one();
  for (int k : theta) acc = multiply(acc, SuperPolynomial::theta(k));
  SuperMonomial xs = SuperMonomial::from_parts({}, x);
  return multiply(acc, SuperPolynomial(xs, 1));
}

}  // namespace

SuperPolynomial parse_polynomial(std::string_view text) {
  SuperPolynomial out;
  std::string_view whole = trim(text);
  if (whole == "0") return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t bar = text.find('|', pos);
    if (bar == std::string_view::npos) bar = text.size();
    std::string_view term = text.substr(pos, bar - pos);
    const std::size_t term_offset = pos;
    term = trim(term);
    if (term.empty()) throw ParseError(term_offset, "empty term");
    const std::size_t space = term.find(' ');
    const Rational c = parse_rational(term.substr(0, space));
    std::vector<int> theta, x;
    if (space != std::string_view::npos) {
      std::string_view rest = trim(term.substr(space));
      std::size_t p = 0;
      while (p <= rest.size()) {
        std::size_t star = rest.find('*', p);
        if (star == std::string_view::npos) star = rest.size();
        std::string_view factor = trim(rest.substr(p, star - p));
        if (factor.size() < 2) throw ParseError(term_offset + p, "malformed factor");
        if (factor[0] == 't') {
          theta.push_back(parse_index(factor.substr(1), term_offset + p));
        } else if (factor[0] == 'x') {
          const std::size_t caret = factor.find('^');
          const int k = parse_index(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1),
                                    term_offset + p);
          const int e = caret == std::string_view::npos ? 1 : parse_index(factor.substr(caret + 1), term_offset + p);
          for (int i = 0; i < e; ++i) x.push_back(k);
        } else {
          throw ParseError(term_offset + p, "unknown generator '" + std::string(factor) + "'");
        }
        p = star + 1;
      }
    }
    std::vector<int> sorted = theta;
    std::sort(sorted.begin(), sorted.end());
    // A repeated odd generator makes the term vanish.
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end())
      out += c * monomial_from_factors(theta, x);
    pos = bar + 1;
  }
  return out;
}

nlohmann::json to_json(const SuperPolynomial& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : f.sorted_terms())
    arr.push_back({{"coeff", to_string(c)}, {"theta", m.theta_indices()}, {"x", m.x_parts()}});
  return arr;
}

SuperPolynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError(0, "polynomial JSON must be an array of terms");
  SuperPolynomial out;
  for (const auto& term : j) {
    const Rational c = parse_rational(term.at("coeff").get<std::string>());
    const auto theta = term.at("theta").get<std::vector<int>>();
    const auto x = term.at("x").get<std::vector<int>>();
    for (std::size_t i = 1; i < theta.size(); ++i)
      if (theta[i - 1] >= theta[i]) throw ParseError(i, "theta indices must be strictly increasing");
    out.add_term(SuperMonomial::from_parts(theta, x), c);
  }
  return out;
}

std::string to_string(const Expansion& e) {
  if (e.empty()) return "0";
  std::string out;
  for (const auto& [sp, c] : e) {
    if (!out.empty()) out += '\n';
    out += to_display_string(sp) + ": " + to_string(c);
  }
  return out;
}

nlohmann::json to_json(const Expansion& e) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [sp, c] : e) arr.push_back({{"superpartition", sp}, {"coeff", to_string(c)}});
  return arr;
}

Expansion expansion_from_json(const nlohmann::json& j) {
  Expansion out;
  for (const auto& entry : j) {
    const Rational c = parse_rational(entry.at("coeff").get<std::string>());
    if (c != 0) out[entry.at("superpartition").get<SuperPartition>()] += c;
  }
  return out;
}

}  // namespace sschur
