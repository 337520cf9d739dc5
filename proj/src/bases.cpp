#include "sschur/bases.hpp"

#include <deque>
#include <mutex>

namespace sschur {

namespace {

SuperPolynomial theta_product_decreasing(const std::vector<int>& antisymmetric) {
  SuperPolynomial acc = SuperPolynomial::one();
  for (int a : antisymmetric) acc = multiply(acc, SuperPolynomial::theta(a + 1));
  return acc;
}

// Grow-only memo for a sequence indexed by n >= 0. References stay valid
// because std::deque never relocates existing elements on push_back.
class SequenceMemo {
 public:
  explicit SequenceMemo(SuperPolynomial (*make)(int)) : make_(make) {}
  const SuperPolynomial& get(int n) {
    static const SuperPolynomial zero;
    if (n < 0) return zero;
    std::lock_guard<std::mutex> lock(mutex_);
    while (static_cast<int>(values_.size()) <= n) values_.push_back(make_(static_cast<int>(values_.size())));
    return values_[static_cast<std::size_t>(n)];
  }

 private:
  SuperPolynomial (*make_)(int);
  std::mutex mutex_;
  std::deque<SuperPolynomial> values_;
};

SuperPolynomial make_h(int n) {
  SuperPolynomial out;
  for (const auto& lambda : enumerate_partitions(n))
    out.add_term(SuperMonomial::from_parts({}, lambda), 1 / automorphism_count(lambda));
  return out;
}

SuperPolynomial make_e(int n) {
  SuperPolynomial out;
  for (const auto& lambda : enumerate_partitions(n)) {
    const bool negative = (n - static_cast<int>(lambda.size())) % 2 != 0;
    const Rational c = 1 / automorphism_count(lambda);
    out.add_term(SuperMonomial::from_parts({}, lambda), negative ? Rational(-c) : c);
  }
  return out;
}

SuperPolynomial make_ht(int n) {
  SuperPolynomial out;
  for (int k = 1; k <= n + 1; ++k) out += theta_times(k, homogeneous(n - k + 1));
  return out;
}

SuperPolynomial make_et(int n) {
  SuperPolynomial out;
  for (int k = 1; k <= n + 1; ++k) {
    SuperPolynomial term = theta_times(k, elementary(n - k + 1));
    if (k % 2 == 0) term *= Rational(-1);
    out += term;
  }
  return out;
}

SequenceMemo& h_memo() {
  static SequenceMemo memo(make_h);
  return memo;
}
SequenceMemo& e_memo() {
  static SequenceMemo memo(make_e);
  return memo;
}
SequenceMemo& ht_memo() {
  static SequenceMemo memo(make_ht);
  return memo;
}
SequenceMemo& et_memo() {
  static SequenceMemo memo(make_et);
  return memo;
}

}  // namespace

SuperPolynomial power_sum_basis(const SuperPartition& sp) {
  return multiply(theta_product_decreasing(sp.antisymmetric()),
                  SuperPolynomial(SuperMonomial::from_parts({}, sp.symmetric()), 1));
}

const SuperPolynomial& homogeneous(int n) { return h_memo().get(n); }
const SuperPolynomial& elementary(int n) { return e_memo().get(n); }
const SuperPolynomial& homogeneous_tilde(int n) { return ht_memo().get(n); }
const SuperPolynomial& elementary_tilde(int n) { return et_memo().get(n); }

SuperPolynomial h_check_basis(const SuperPartition& sp) {
  SuperPolynomial acc = theta_product_decreasing(sp.antisymmetric());
  for (int s : sp.symmetric()) acc = multiply(acc, homogeneous(s));
  return acc;
}

}  // namespace sschur
