#include <gtest/gtest.h>

#include "printers.hpp"
#include "sschur/bases.hpp"
#include "sschur/error.hpp"
#include "sschur/operators.hpp"
#include "sschur/schur_table.hpp"
#include "sschur/verify.hpp"

using namespace sschur;
using SP = SuperPolynomial;

namespace {

SuperPartition sp(std::vector<int> a, std::vector<int> s) { return SuperPartition(std::move(a), std::move(s)); }
const SP& s_I(std::vector<int> a, std::vector<int> s) { return schur(SchurType::I, sp(std::move(a), std::move(s))); }

void expect_agree(const LinearOperator& a, const LinearOperator& b, int max_total, int max_fermionic) {
  std::string where;
  EXPECT_TRUE(agree_on_blocks(a, b, max_total, max_fermionic, &where)) << a.name() << " vs " << b.name() << ": " << where;
}

}  // namespace

TEST(Operators, ModesOnOne) {
  for (int k = 0; k <= 5; ++k) {
    EXPECT_EQ(bernstein_B(k, 1)(SP::one()), SP::theta(k + 1));
    EXPECT_EQ(bernstein_B(k, 0)(SP::one()), homogeneous(k));
    EXPECT_EQ(bernstein_C(k, 1)(SP::one()), homogeneous_tilde(k));
    EXPECT_EQ(bernstein_Bbar(k, 1)(SP::one()), homogeneous_tilde(0) * homogeneous(k));
  }
}

TEST(Operators, WorkedModeActions) {
  EXPECT_EQ(bernstein_B(3, 1)(s_I({0}, {3})), s_I({3, 0}, {3}));
  EXPECT_EQ(bernstein_C(2, 1)(schur(SchurType::Istar, sp({}, {1}))),
            homogeneous_tilde(2) * homogeneous(1) - SP::theta(1) * homogeneous(3));
  EXPECT_EQ(bernstein_C(3, 0)(schur(SchurType::Istar, sp({1}, {3}))), schur(SchurType::Istar, sp({1}, {3, 3})));
  const SP built = parse_operator_string("B4^1 B3^0 B2^0 B2^0 B1^1")(SP::one());
  EXPECT_EQ(expand_in_schur(built, SchurType::I), (Expansion{{sp({4, 1}, {3, 2, 2}), Rational(1)}}));
}

TEST(Operators, BarredModesReproduceClassicalSchurOnBosonicStrings) {
  const SP c = bernstein_Cbar(3, 0)(bernstein_Cbar(1, 0)(SP::one()));
  EXPECT_EQ(c, homogeneous(3) * homogeneous(1) - homogeneous(4));
}

TEST(Operators, AlternativeFormsAgree) {
  for (int n = -1; n <= 3; ++n) {
    expect_agree(bernstein_B(n, 0), bernstein_B0_expanded(n), 5, 3);
    expect_agree(bernstein_C(n, 1), bernstein_C1_alternative(n), 5, 3);
  }
  for (int n = 0; n <= 2; ++n)
    for (int eps = 0; eps <= 1; ++eps) expect_agree(bernstein_Bbar(n, eps), bernstein_Bbar_explicit(n, eps), 4, 2);
  // the single block called out for the even barred mode
  SchurTable table;
  for (const auto& mono : monomial_basis({3, 1})) {
    const SP f(mono, Rational(1));
    EXPECT_EQ(bernstein_Bbar(2, 0)(f), bernstein_Bbar_explicit(2, 0)(f));
  }
}

TEST(Operators, Beta) {
  EXPECT_EQ(beta(1)(SP::theta(1)), SP::theta(2));
  EXPECT_EQ(beta(2)(SP::theta(1) * SP::theta(3)), SP::theta(1) * SP::theta(5));
  EXPECT_TRUE(beta(3)(homogeneous(4)).is_zero());
}

TEST(Operators, Automorphisms) {
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(omega(elementary(n)), homogeneous(n));
  for (int r = 0; r <= 5; ++r) EXPECT_EQ(phi(SP::theta(r + 1)), homogeneous_tilde(r));
  EXPECT_EQ(rho(s_I({2}, {1})), s_I({0}, {2, 1}));
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 2; ++m)
      for (const auto& mono : monomial_basis({n, m})) {
        const SP f(mono, Rational(1));
        EXPECT_EQ(phi(phi_inverse(f)), f);
        EXPECT_EQ(phi_inverse(phi(f)), f);
        EXPECT_EQ(phi(f), omega(rho(f)));
      }
}

TEST(Operators, AdjointAutomorphisms) {
  EXPECT_EQ(rho_perp(schur(SchurType::Istar, sp({2}, {1}))), schur(SchurType::Istar, sp({0}, {2, 1})));
  for (const auto& mono : monomial_basis({3, 2})) {
    const SP f(mono, Rational(1));
    EXPECT_EQ(rho_perp(rho_perp(f)), f);
    EXPECT_EQ(phi_perp_inverse(phi_perp(f)), f);
  }
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 2; ++m)
      for (const auto& x : enumerate_superpartitions(n, m))
        EXPECT_EQ(phi_perp(schur(SchurType::II, x)), schur(SchurType::Istar, x)) << to_string(x);
}

TEST(Operators, OddDerivation) {
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(partial_e_tilde(0)(SP::theta(k + 1)), homogeneous(k));
  EXPECT_TRUE(partial_e_tilde(0)(s_I({}, {3, 1})).is_zero());
  EXPECT_EQ(partial_e_tilde(0)(s_I({3, 0}, {3})), s_I({0}, {3, 3}));
  for (int r = 0; r <= 2; ++r) expect_agree(partial_e_tilde_perp(r), gram_adjoint(partial_e_tilde(r)), 5, 3);
}

TEST(Operators, NegativeModes) {
  EXPECT_EQ(Rational(-1) * mode_L(-1, 0)(s_I({}, {1})), SP::one());
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(mode_L(-n, 0)(SP::one()).is_zero());
  // the modes read off the conjugate strip s_(2;1) down to (-1)^3
  SP f = s_I({2}, {1});
  for (const auto& [n, eps] : mode_string(conjugate(sp({2}, {1})))) f = mode_L(-n, eps)(f);
  EXPECT_EQ(Rational(-1) * f, SP::one());
}

TEST(Operators, NegativeModeSignConventionIsTheUniqueFullScore) {
  SchurTable table;
  const auto scores = calibrate_negative_mode_signs({4, 2}, table);
  const NegativeModeSigns chosen = negative_mode_signs();
  int perfect = 0;
  for (const auto& s : scores) {
    const bool full = s.k_passed == s.total && s.l_passed == s.total;
    perfect += full;
    if (full) {
      EXPECT_EQ(s.sign, chosen.k_odd);
      EXPECT_EQ(s.sign, chosen.l_odd);
    }
  }
  EXPECT_EQ(perfect, 1);
}

TEST(Operators, OperatorStringParsing) {
  EXPECT_EQ(parse_operator_string("B3^1")(s_I({0}, {3})), s_I({3, 0}, {3}));
  EXPECT_TRUE(parse_operator_string("de0")(s_I({}, {3})).is_zero());
  EXPECT_EQ(parse_operator_string("beta1")(SP::theta(1)), SP::theta(2));
  EXPECT_THROW(parse_operator_string("Q3^1"), UnknownOperator);
  EXPECT_THROW(parse_operator_string("B3^2"), ParseError);
}
