#include "sschur/superalgebra.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "sschur/error.hpp"

namespace sschur {

namespace {

int popcount(std::uint64_t v) { return std::popcount(v); }

std::uint64_t bit(int k) { return std::uint64_t{1} << (k - 1); }

// Bits strictly below theta_k.
std::uint64_t below(int k) { return bit(k) - 1; }

void check_theta_index(int k) {
  if (k < 1 || k > SuperMonomial::kMaxTheta)
    throw IndexOutOfRange("theta index " + std::to_string(k) + " outside 1.." +
                          std::to_string(SuperMonomial::kMaxTheta));
}

void check_x_index(int k) {
  if (k < 1 || k > SuperMonomial::kMaxX)
    throw IndexOutOfRange("x index " + std::to_string(k) + " outside 1.." +
                          std::to_string(SuperMonomial::kMaxX));
}

}  // namespace

SuperMonomial SuperMonomial::from_parts(const std::vector<int>& theta, const std::vector<int>& x) {
  SuperMonomial m;
  for (int k : theta) {
    check_theta_index(k);
    if (m.has_theta(k)) throw Error("repeated theta index " + std::to_string(k));
    m.set_theta(k, true);
  }
  for (int k : x) m.set_x_exponent(k, m.x_exponent(k) + 1);
  return m;
}

std::vector<int> SuperMonomial::theta_indices() const {
  std::vector<int> out;
  for (std::uint64_t t = theta_; t; t &= t - 1) out.push_back(std::countr_zero(t) + 1);
  return out;
}

std::vector<int> SuperMonomial::x_parts() const {
  std::vector<int> out;
  for (int k = kMaxX; k >= 1; --k)
    for (int e = 0; e < x_[k - 1]; ++e) out.push_back(k);
  return out;
}

int SuperMonomial::fermionic_degree() const { return popcount(theta_); }

int SuperMonomial::x_degree() const {
  int d = 0;
  for (int k = 1; k <= kMaxX; ++k) d += k * x_[k - 1];
  return d;
}

int SuperMonomial::total_degree() const {
  int d = x_degree();
  for (std::uint64_t t = theta_; t; t &= t - 1) d += std::countr_zero(t);
  return d;
}

int SuperMonomial::max_theta_index() const { return theta_ ? 64 - std::countl_zero(theta_) : 0; }

void SuperMonomial::set_theta(int k, bool on) {
  check_theta_index(k);
  if (on)
    theta_ |= bit(k);
  else
    theta_ &= ~bit(k);
}

void SuperMonomial::set_x_exponent(int k, int e) {
  check_x_index(k);
  if (e < 0 || e > 255) throw IndexOutOfRange("x exponent out of range");
  x_[k - 1] = static_cast<std::uint8_t>(e);
}

SuperPartition label_of(const SuperMonomial& m) {
  std::vector<int> a;
  for (int k : m.theta_indices()) a.push_back(k - 1);
  std::reverse(a.begin(), a.end());
  return SuperPartition(std::move(a), m.x_parts());
}

bool canonical_less(const SuperMonomial& a, const SuperMonomial& b) { return label_of(a) < label_of(b); }

SuperPolynomial::SuperPolynomial(const Rational& c) {
  if (c != 0) terms_.emplace(SuperMonomial{}, c);
}

SuperPolynomial::SuperPolynomial(const SuperMonomial& m, const Rational& c) {
  if (c != 0) terms_.emplace(m, c);
}

SuperPolynomial SuperPolynomial::theta(int k) {
  SuperMonomial m;
  m.set_theta(k, true);
  return SuperPolynomial(m, 1);
}

SuperPolynomial SuperPolynomial::x(int k) {
  SuperMonomial m;
  m.set_x_exponent(k, 1);
  return SuperPolynomial(m, 1);
}

Rational SuperPolynomial::coefficient(const SuperMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SuperPolynomial::add_term(const SuperMonomial& m, const Rational& c) {
  if (c == 0) return;
  // GMP arithmetic assumes reduced operands; callers may pass e.g. Rational(2, 4).
  auto [it, inserted] = terms_.try_emplace(m, c);
  it->second.canonicalize();
  if (!inserted) {
    Rational reduced(c);
    reduced.canonicalize();
    it->second += reduced;
    if (it->second == 0) terms_.erase(it);
  }
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

SuperPolynomial& SuperPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::vector<std::pair<SuperMonomial, Rational>> SuperPolynomial::sorted_terms() const {
  std::vector<std::pair<SuperPartition, std::pair<SuperMonomial, Rational>>> keyed;
  keyed.reserve(terms_.size());
  for (const auto& t : terms_) keyed.emplace_back(label_of(t.first), t);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<std::pair<SuperMonomial, Rational>> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return out;
}

std::vector<Bidegree> SuperPolynomial::bidegrees() const {
  std::set<Bidegree> seen;
  for (const auto& [m, c] : terms_) seen.insert(m.bidegree());
  return {seen.begin(), seen.end()};
}

SuperPolynomial SuperPolynomial::homogeneous_component(Bidegree d) const {
  SuperPolynomial out;
  for (const auto& [m, c] : terms_)
    if (m.bidegree() == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

bool SuperPolynomial::has_theta() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.theta_mask() != 0; });
}

int SuperPolynomial::max_x_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x_degree());
  return d;
}

int SuperPolynomial::max_theta_index() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.max_theta_index());
  return d;
}

SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
SuperPolynomial operator-(SuperPolynomial a) { return a *= Rational(-1); }
SuperPolynomial operator*(const Rational& c, SuperPolynomial a) { return a *= c; }
SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) { return multiply(a, b); }

int multiply_monomials(const SuperMonomial& a, const SuperMonomial& b, SuperMonomial& out) {
  const std::uint64_t ta = a.theta_mask(), tb = b.theta_mask();
  if (ta & tb) return 0;
  // Each theta of b must pass the thetas of a with a larger index.
  int inversions = 0;
  for (std::uint64_t t = tb; t; t &= t - 1) {
    const int k = std::countr_zero(t) + 1;
    inversions += popcount(ta & ~(below(k) | bit(k)));
  }
  out = a;
  for (std::uint64_t t = tb; t; t &= t - 1) out.set_theta(std::countr_zero(t) + 1, true);
  for (int k = 1; k <= SuperMonomial::kMaxX; ++k) {
    const int e = b.x_exponent(k);
    if (e) out.set_x_exponent(k, a.x_exponent(k) + e);
  }
  return (inversions & 1) ? -1 : 1;
}

SuperPolynomial multiply_serial(const SuperPolynomial& f, const SuperPolynomial& g) {
  SuperPolynomial out;
  SuperMonomial m;
  for (const auto& [ma, ca] : f.terms())
    for (const auto& [mb, cb] : g.terms()) {
      const int sign = multiply_monomials(ma, mb, m);
      if (sign == 0) continue;
      Rational c = ca * cb;
      if (sign < 0) c = -c;
      out.add_term(m, c);
    }
  return out;
}

SuperPolynomial multiply_parallel(const SuperPolynomial& f, const SuperPolynomial& g) {
  std::vector<const SuperPolynomial::TermMap::value_type*> left;
  left.reserve(f.size());
  for (const auto& t : f.terms()) left.push_back(&t);
  const int workers = worker_count();
  std::vector<SuperPolynomial> partial(static_cast<std::size_t>(workers));
#pragma omp parallel num_threads(workers)
  {
    SuperPolynomial& acc = partial[static_cast<std::size_t>(worker_index())];
    SuperMonomial m;
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(left.size()); ++i) {
      const auto& [ma, ca] = *left[static_cast<std::size_t>(i)];
      for (const auto& [mb, cb] : g.terms()) {
        const int sign = multiply_monomials(ma, mb, m);
        if (sign == 0) continue;
        Rational c = ca * cb;
        if (sign < 0) c = -c;
        acc.add_term(m, c);
      }
    }
  }
  SuperPolynomial out = std::move(partial[0]);
  for (std::size_t w = 1; w < partial.size(); ++w) out += partial[w];
  return out;
}

SuperPolynomial multiply(const SuperPolynomial& f, const SuperPolynomial& g) {
  if (worker_count() > 1 && f.size() * g.size() >= 4096 && f.size() >= 2)
    return multiply_parallel(f, g);
  return multiply_serial(f, g);
}

SuperPolynomial theta_times(int k, const SuperPolynomial& f) {
  check_theta_index(k);
  SuperPolynomial out;
  for (const auto& [m, c] : f.terms()) {
    if (m.has_theta(k)) continue;
    SuperMonomial r = m;
    r.set_theta(k, true);
    out.add_term(r, (popcount(m.theta_mask() & below(k)) & 1) ? Rational(-c) : c);
  }
  return out;
}

SuperPolynomial partial_x(int k, const SuperPolynomial& f) {
  check_x_index(k);
  SuperPolynomial out;
  for (const auto& [m, c] : f.terms()) {
    const int e = m.x_exponent(k);
    if (e == 0) continue;
    SuperMonomial r = m;
    r.set_x_exponent(k, e - 1);
    out.add_term(r, c * e);
  }
  return out;
}

SuperPolynomial partial_theta(int k, const SuperPolynomial& f) {
  check_theta_index(k);
  SuperPolynomial out;
  for (const auto& [m, c] : f.terms()) {
    if (!m.has_theta(k)) continue;
    SuperMonomial r = m;
    r.set_theta(k, false);
    out.add_term(r, (popcount(m.theta_mask() & below(k)) & 1) ? Rational(-c) : c);
  }
  return out;
}

SuperPolynomial parity_twist(const SuperPolynomial& f) {
  SuperPolynomial result;
  for (const auto& [m, c] : f.terms()) result.add_term(m, (m.fermionic_degree() & 1) ? Rational(-c) : c);
  return result;
}

Rational monomial_weight(const SuperMonomial& m) {
  Rational w = automorphism_count(m.x_parts());
  for (int k = 1; k <= SuperMonomial::kMaxX; ++k)
    for (int e = 0; e < m.x_exponent(k); ++e) w /= k;
  const int s = m.fermionic_degree();
  if ((s * (s - 1) / 2) & 1) w = -w;
  return w;
}

Rational scalar_product(const SuperPolynomial& f, const SuperPolynomial& g) {
  const SuperPolynomial& small = f.size() <= g.size() ? f : g;
  const SuperPolynomial& large = f.size() <= g.size() ? g : f;
  Rational total = 0;
  for (const auto& [m, c] : small.terms()) {
    auto it = large.terms().find(m);
    if (it != large.terms().end()) total += c * it->second * monomial_weight(m);
  }
  return total;
}

SuperPolynomial apply_even_adjoint(const SuperPolynomial& f, const SuperPolynomial& g) {
  SuperPolynomial out;
  for (const auto& [mf, cf] : f.terms()) {
    if (mf.theta_mask() != 0)
      throw OddInputRejected("adjoint substitution expects a polynomial in x only");
    for (const auto& [mg, cg] : g.terms()) {
      Rational c = cf * cg;
      SuperMonomial r = mg;
      bool ok = true;
      for (int k = 1; k <= SuperMonomial::kMaxX && ok; ++k) {
        const int need = mf.x_exponent(k);
        if (!need) continue;
        const int have = mg.x_exponent(k);
        if (have < need) {
          ok = false;
          break;
        }
        for (int i = 0; i < need; ++i) {
          c *= have - i;
          c /= k;
        }
        r.set_x_exponent(k, have - need);
      }
      if (ok) out.add_term(r, c);
    }
  }
  return out;
}

std::vector<SuperMonomial> monomial_basis(Bidegree d) {
  std::vector<SuperMonomial> out;
  for (const auto& sp : enumerate_superpartitions(d.total, d.fermionic)) {
    std::vector<int> theta;
    for (int a : sp.antisymmetric()) theta.push_back(a + 1);
    out.push_back(SuperMonomial::from_parts(theta, sp.symmetric()));
  }
  return out;
}

}  // namespace sschur
