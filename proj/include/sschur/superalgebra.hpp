#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "sschur/parallel.hpp"
#include "sschur/rational.hpp"
#include "sschur/superpartition.hpp"

namespace sschur {

struct Bidegree {
  int total = 0;
  int fermionic = 0;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

// theta_S * x_lambda with S stored as a bitmask (bit k-1 for theta_k) and
// lambda as exponent counts of x_1..x_kMaxX.
class SuperMonomial {
 public:
  static constexpr int kMaxTheta = 64;
  static constexpr int kMaxX = 32;

  SuperMonomial() = default;
  // theta indices in any order must be distinct; the caller handles the sign.
  static SuperMonomial from_parts(const std::vector<int>& theta, const std::vector<int>& x);

  std::uint64_t theta_mask() const { return theta_; }
  bool has_theta(int k) const { return k >= 1 && k <= kMaxTheta && ((theta_ >> (k - 1)) & 1u); }
  int x_exponent(int k) const { return (k >= 1 && k <= kMaxX) ? x_[k - 1] : 0; }

  std::vector<int> theta_indices() const;  // increasing
  std::vector<int> x_parts() const;        // non-increasing, with multiplicity

  int fermionic_degree() const;
  int x_degree() const;  // sum of k over x_k factors
  int total_degree() const;
  Bidegree bidegree() const { return {total_degree(), fermionic_degree()}; }
  int max_theta_index() const;

  void set_theta(int k, bool on);
  void set_x_exponent(int k, int e);

  friend bool operator==(const SuperMonomial&, const SuperMonomial&) = default;
  friend auto operator<=>(const SuperMonomial&, const SuperMonomial&) = default;

 private:
  std::uint64_t theta_ = 0;
  std::array<std::uint8_t, kMaxX> x_{};
};

// The superpartition (S-1 decreasing; lambda) labelling a canonical monomial.
SuperPartition label_of(const SuperMonomial& m);
// Canonical term order used for rendering.
bool canonical_less(const SuperMonomial& a, const SuperMonomial& b);

class SuperPolynomial {
 public:
  using TermMap = std::map<SuperMonomial, Rational>;

  SuperPolynomial() = default;
  explicit SuperPolynomial(const Rational& c);
  SuperPolynomial(const SuperMonomial& m, const Rational& c);

  static SuperPolynomial one() { return SuperPolynomial(Rational(1)); }
  static SuperPolynomial theta(int k);
  static SuperPolynomial x(int k);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const SuperMonomial& m) const;

  void add_term(const SuperMonomial& m, const Rational& c);
  SuperPolynomial& operator+=(const SuperPolynomial& other);
  SuperPolynomial& operator-=(const SuperPolynomial& other);
  SuperPolynomial& operator*=(const Rational& c);

  // Terms in canonical rendering order.
  std::vector<std::pair<SuperMonomial, Rational>> sorted_terms() const;

  std::vector<Bidegree> bidegrees() const;
  SuperPolynomial homogeneous_component(Bidegree d) const;
  bool is_homogeneous() const { return bidegrees().size() <= 1; }
  bool has_theta() const;
  int max_x_degree() const;
  int max_theta_index() const;

  friend bool operator==(const SuperPolynomial&, const SuperPolynomial&) = default;

 private:
  TermMap terms_;
};

SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b);
SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b);
SuperPolynomial operator-(SuperPolynomial a);
SuperPolynomial operator*(const Rational& c, SuperPolynomial a);
SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b);

// Product of canonical monomials: returns the sign (0 when a theta repeats).
int multiply_monomials(const SuperMonomial& a, const SuperMonomial& b, SuperMonomial& out);

// Supercommutative product. The parallel kernel splits the left factor across
// OpenMP workers with private accumulators; multiply_serial is the reference.
SuperPolynomial multiply(const SuperPolynomial& f, const SuperPolynomial& g);
SuperPolynomial multiply_serial(const SuperPolynomial& f, const SuperPolynomial& g);
SuperPolynomial multiply_parallel(const SuperPolynomial& f, const SuperPolynomial& g);

// Left multiplication by theta_k.
SuperPolynomial theta_times(int k, const SuperPolynomial& f);

SuperPolynomial partial_x(int k, const SuperPolynomial& f);
// Left derivative: passing each theta_j with j < k flips the sign.
SuperPolynomial partial_theta(int k, const SuperPolynomial& f);

// (-1)^(fermionic degree) on each term.
SuperPolynomial parity_twist(const SuperPolynomial& f);

// <theta_S x_l, theta_S x_l> = (-1)^binom(|S|,2) |Aut l| / prod l_i.
Rational monomial_weight(const SuperMonomial& m);
Rational scalar_product(const SuperPolynomial& f, const SuperPolynomial& g);

// f must be free of theta; substitutes x_k -> (1/k) d/dx_k and applies to g.
SuperPolynomial apply_even_adjoint(const SuperPolynomial& f, const SuperPolynomial& g);

// Canonical monomials of a block, ordered like enumerate_superpartitions.
std::vector<SuperMonomial> monomial_basis(Bidegree d);

}  // namespace sschur
