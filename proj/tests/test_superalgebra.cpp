#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <random>

#include "oracles.hpp"
#include "printers.hpp"
#include "sschur/bases.hpp"
#include "sschur/error.hpp"
#include "sschur/linear_operator.hpp"
#include "sschur/operators.hpp"
#include "sschur/text_format.hpp"

using namespace sschur;
using SP = SuperPolynomial;

namespace {

SP random_block(std::mt19937& rng, Bidegree d, int terms) {
  const auto basis = monomial_basis(d);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  SP f;
  for (int i = 0; i < terms; ++i) f.add_term(basis[pick(rng)], Rational(num(rng), den(rng)));
  return f;
}

SP theta_product(const std::vector<int>& order) {
  SP f = SP::one();
  for (int k : order) f = f * SP::theta(k);
  return f;
}

}  // namespace

TEST(SuperAlgebra, ThetaReorderingSignMatchesSwapCount) {
  std::vector<int> v{1, 2, 3, 5};
  do {
    const SP f = theta_product(v);
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f.terms().begin()->second, Rational(oracle::sort_sign(v)));
  } while (std::next_permutation(v.begin(), v.end()));
  EXPECT_TRUE((SP::theta(2) * SP::theta(2)).is_zero());
}

TEST(SuperAlgebra, SupercommutativityAndAssociativity) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Bidegree da{trial % 4 + 1, trial % 2}, db{trial % 3 + 1, (trial / 2) % 2}, dc{2, trial % 2};
    const SP a = random_block(rng, da, 4), b = random_block(rng, db, 4), c = random_block(rng, dc, 3);
    const Rational sign((da.fermionic * db.fermionic) % 2 ? -1 : 1);
    EXPECT_EQ(a * b, sign * (b * a));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(SuperAlgebra, ParallelProductEqualsSerial) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const SP a = random_block(rng, {6, 1}, 40), b = random_block(rng, {5, 2}, 40);
    EXPECT_EQ(multiply_parallel(a, b), multiply_serial(a, b));
  }
  const SP h = homogeneous(7) * homogeneous_tilde(5);
  EXPECT_EQ(multiply_parallel(h, elementary(6)), multiply_serial(h, elementary(6)));
}

TEST(SuperAlgebra, Derivatives) {
  EXPECT_EQ(partial_x(2, elementary(3)), Rational(-1) * elementary(1));
  EXPECT_EQ(partial_theta(2, elementary_tilde(3)), Rational(-1) * elementary(2));
  // left derivative passes theta_1 with a sign
  EXPECT_EQ(partial_theta(3, SP::theta(1) * SP::theta(3)), Rational(-1) * SP::theta(1));
  EXPECT_TRUE(partial_theta(4, SP::theta(1)).is_zero());
}

TEST(SuperAlgebra, ScalarProductWeights) {
  const auto m = [](const std::vector<int>& t, const std::vector<int>& x) { return SuperMonomial::from_parts(t, x); };
  EXPECT_EQ(monomial_weight(m({}, {2})), Rational(1, 2));
  EXPECT_EQ(monomial_weight(m({}, {1, 1})), Rational(2));
  EXPECT_EQ(monomial_weight(m({1, 2}, {})), Rational(-1));
  EXPECT_EQ(monomial_weight(m({1, 2, 3}, {3, 3})), Rational(-2, 9));
  EXPECT_EQ(scalar_product(SP::one(), SP::one()), Rational(1));
  EXPECT_EQ(scalar_product(SP::x(1), SP::x(2)), Rational(0));
}

TEST(SuperAlgebra, ScalarProductIsSymmetric) {
  std::mt19937 rng(3);
  for (int m = 0; m <= 3; ++m) {
    const SP a = random_block(rng, {5, m}, 6), b = random_block(rng, {5, m}, 6);
    EXPECT_EQ(scalar_product(a, b), scalar_product(b, a));
  }
}

TEST(SuperAlgebra, EvenAdjointRejectsOddInput) {
  EXPECT_THROW(apply_even_adjoint(SP::theta(1), SP::x(1)), OddInputRejected);
  EXPECT_EQ(apply_even_adjoint(SP::x(2), SP::x(2)), Rational(1, 2) * SP::one());
}

TEST(SuperAlgebra, GramAdjointSatisfiesTheDefiningPairing) {
  std::mt19937 rng(5);
  const std::vector<LinearOperator> ops = {multiplication_by(elementary_tilde(1), "et1"), bernstein_B(2, 1),
                                           partial_e_tilde(0), multiplication_by(homogeneous(2), "h2")};
  for (const auto& T : ops) {
    const LinearOperator Tp = gram_adjoint(T);
    for (int m = 0; m <= 2; ++m) {
      const Bidegree d{3, m};
      const Bidegree target{d.total + T.shift().total, d.fermionic + T.shift().fermionic};
      if (target.fermionic < 0 || target.total < 0) continue;
      const SP f = random_block(rng, d, 4), g = random_block(rng, target, 4);
      EXPECT_EQ(scalar_product(T(f), g), scalar_product(f, Tp(g))) << T.name();
    }
  }
}

TEST(SuperAlgebra, MonomialBasisMatchesEnumeration) {
  for (int n = 0; n <= 7; ++n)
    for (int m = 0; m <= 3; ++m) {
      const auto basis = monomial_basis({n, m});
      const auto labels = enumerate_superpartitions(n, m);
      ASSERT_EQ(basis.size(), labels.size());
      for (std::size_t i = 0; i < basis.size(); ++i) EXPECT_EQ(label_of(basis[i]), labels[i]);
    }
}

TEST(SuperAlgebra, RenderingAndParsing) {
  const SP f = parse_polynomial("-1 t4 | 1 t1*x3 | 1 t1*x1*x2 | 1/6 t1*x1^3");
  EXPECT_EQ(to_string(f), "-1 t4 | 1 t1*x3 | 1 t1*x1*x2 | 1/6 t1*x1^3");
  EXPECT_EQ(to_string(SP()), "0");
  EXPECT_EQ(to_string(SP::one()), "1");
  EXPECT_EQ(parse_polynomial("1 t2*t1"), Rational(-1) * (SP::theta(1) * SP::theta(2)));
  EXPECT_TRUE(parse_polynomial("1 t1*t1").is_zero());
  EXPECT_THROW(parse_polynomial("1 y3"), ParseError);
}

TEST(SuperAlgebra, TextAndJsonRoundTrip) {
  std::mt19937 rng(9);
  for (int m = 0; m <= 3; ++m) {
    const SP f = random_block(rng, {6, m}, 8) + random_block(rng, {3, m}, 3);
    EXPECT_EQ(parse_polynomial(to_string(f)), f);
    EXPECT_EQ(polynomial_from_json(to_json(f)), f);
    EXPECT_EQ(polynomial_from_json(nlohmann::json::parse(to_json(f).dump())), f);
  }
}

TEST(SuperAlgebra, LinearOperatorBookkeeping) {
  const auto a = bernstein_B(2, 1), b = e_perp(1);
  const auto c = compose(a, b);
  EXPECT_EQ(c.shift(), (DegreeShift{a.shift().total + b.shift().total, a.shift().fermionic + b.shift().fermionic}));
  EXPECT_EQ(c.parity(), Parity::Odd);
  EXPECT_EQ(parity_operator()(SP::theta(1) + SP::x(1)), SP::x(1) - SP::theta(1));
  EXPECT_THROW(a + b, Error);
}
