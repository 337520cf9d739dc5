#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "printers.hpp"
#include "sschur/error.hpp"
#include "sschur/superpartition.hpp"

using namespace sschur;

namespace {

SuperPartition sp(std::vector<int> a, std::vector<int> s) { return SuperPartition(std::move(a), std::move(s)); }

}  // namespace

TEST(SuperPartition, RejectsMalformedParts) {
  auto kind_of = [](auto make) {
    try {
      make();
    } catch (const ValidationError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no ValidationError";
    return ValidationError::Kind::BadDiagram;
  };
  EXPECT_EQ(kind_of([] { sp({1, 1}, {}); }), ValidationError::Kind::NotStrictlyDecreasing);
  EXPECT_EQ(kind_of([] { sp({}, {1, 2}); }), ValidationError::Kind::NotWeaklyDecreasing);
  EXPECT_EQ(kind_of([] { sp({2, -1}, {}); }), ValidationError::Kind::NegativePart);
  EXPECT_EQ(kind_of([] { sp({}, {2, 0}); }), ValidationError::Kind::ZeroSymmetricPart);
}

TEST(SuperPartition, DiagramsOfTheLargeExample) {
  const auto x = sp({8, 6, 3, 2, 0}, {5, 3});
  EXPECT_EQ(x.star(), (Partition{8, 6, 5, 3, 3, 2}));
  EXPECT_EQ(x.circled(), (Partition{9, 7, 5, 4, 3, 3, 1}));
  EXPECT_EQ(sp({}, {4}).star(), Partition{4});
  EXPECT_EQ(sp({}, {4}).circled(), Partition{4});
  EXPECT_TRUE(sp({0}, {}).star().empty());
  EXPECT_EQ(sp({0}, {}).circled(), Partition{1});
}

TEST(SuperPartition, ConjugateExamples) {
  EXPECT_EQ(conjugate(sp({8, 6, 3, 2, 0}, {5, 3})), sp({6, 5, 3, 1, 0}, {6, 3, 2, 1}));
  EXPECT_EQ(conjugate(sp({}, {3})), sp({}, {1, 1, 1}));
  EXPECT_EQ(conjugate(sp({2}, {1})), sp({0}, {2, 1}));
}

TEST(SuperPartition, ConjugateMatchesCellTransposeAndIsAnInvolution) {
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; m <= 4; ++m)
      for (const auto& x : enumerate_superpartitions(n, m)) {
        const auto c = conjugate(x);
        EXPECT_EQ(c, oracle::conjugate_by_cells(x)) << to_string(x);
        EXPECT_EQ(conjugate(c), x);
        EXPECT_EQ(c.total_degree(), n);
        EXPECT_EQ(c.fermionic_degree(), m);
      }
}

TEST(SuperPartition, Epsilon) {
  const auto x = sp({4, 1}, {3, 2, 2});
  std::vector<int> eps;
  for (int i = 1; i <= x.row_count(); ++i) eps.push_back(x.epsilon(i));
  EXPECT_EQ(eps, (std::vector<int>{1, 0, 0, 0, 1}));
  EXPECT_EQ(sp({}, {3}).epsilon(1), 0);
  EXPECT_EQ(sp({3}, {}).epsilon(1), 1);
  EXPECT_THROW(x.epsilon(0), IndexOutOfRange);
  EXPECT_THROW(x.epsilon(6), IndexOutOfRange);
}

TEST(SuperPartition, DiagramInvariants) {
  for (int n = 0; n <= 7; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const auto& x : enumerate_superpartitions(n, m)) {
        int sum = 0;
        for (int i = 1; i <= x.row_count(); ++i) sum += x.epsilon(i);
        EXPECT_EQ(sum, m);
        // circles sit in distinct columns
        std::set<int> columns;
        const Partition star = x.star();
        for (int row : x.circle_rows()) columns.insert(row <= static_cast<int>(star.size()) ? star[row - 1] : 0);
        EXPECT_EQ(static_cast<int>(columns.size()), m);
        EXPECT_EQ(SuperPartition::from_diagrams(x.star(), x.circled()), x);
      }
}

TEST(SuperPartition, Weights) {
  EXPECT_EQ(z_weight(sp({}, {2})).value, Rational(1, 2));
  EXPECT_EQ(z_weight(sp({1, 0}, {})).value, Rational(-1));
  EXPECT_EQ(z_weight(sp({}, {1, 1})).value, Rational(2));
  EXPECT_EQ(z_weight(sp({2, 1, 0}, {3, 3, 1})).value, Rational(-2, 9));
}

TEST(SuperPartition, EnumerationExamples) {
  EXPECT_EQ(enumerate_superpartitions(0, 1), (std::vector<SuperPartition>{sp({0}, {})}));
  const auto one = enumerate_superpartitions(1, 1);
  EXPECT_EQ(std::set<SuperPartition>(one.begin(), one.end()), (std::set<SuperPartition>{sp({1}, {}), sp({0}, {1})}));
  const auto three = enumerate_superpartitions(3, 1);
  const std::set<SuperPartition> expected{sp({3}, {}),    sp({2}, {1}),    sp({1}, {2}),      sp({1}, {1, 1}),
                                          sp({0}, {3}), sp({0}, {2, 1}), sp({0}, {1, 1, 1})};
  EXPECT_EQ(std::set<SuperPartition>(three.begin(), three.end()), expected);
  EXPECT_EQ(three.size(), 7u);
}

TEST(SuperPartition, EnumerationMatchesBruteForce) {
  for (int n = 0; n <= 9; ++n)
    for (int m = 0; m <= 4; ++m) {
      const auto listed = enumerate_superpartitions(n, m);
      std::set<std::pair<std::vector<int>, std::vector<int>>> got;
      for (const auto& x : listed) got.emplace(x.antisymmetric(), x.symmetric());
      EXPECT_EQ(got.size(), listed.size()) << "duplicates at " << n << "," << m;
      EXPECT_EQ(got, oracle::superpartitions(n, m)) << n << "," << m;
      EXPECT_TRUE(std::is_sorted(listed.begin(), listed.end()));
      std::set<SuperPartition> as_set(listed.begin(), listed.end());
      for (const auto& x : listed) EXPECT_TRUE(as_set.count(conjugate(x)));
    }
}

TEST(SuperPartition, CanonicalOrder) {
  EXPECT_LT(sp({0}, {}), sp({}, {3}));  // total degree first
  EXPECT_LT(sp({}, {1}), sp({1}, {}));
  EXPECT_LT(sp({}, {2}), sp({}, {1, 1}));
  EXPECT_LT(sp({3}, {}), sp({0}, {3}));
  EXPECT_LT(sp({}, {3}), sp({}, {2, 1}));  // larger diagram first
}

TEST(SuperPartition, TextAndJsonRoundTrip) {
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const auto& x : enumerate_superpartitions(n, m)) {
        EXPECT_EQ(parse_superpartition(to_string(x)), x);
        EXPECT_EQ(parse_superpartition(to_display_string(x)), x);
        nlohmann::json j = x;
        EXPECT_EQ(j.get<SuperPartition>(), x);
      }
  EXPECT_EQ(to_string(sp({3, 0}, {3})), "3,0;3");
  EXPECT_EQ(to_display_string(sp({}, {})), "(;)");
  EXPECT_EQ(parse_superpartition(";"), SuperPartition());
  EXPECT_EQ(parse_superpartition("2,0;"), sp({2, 0}, {}));
}

TEST(SuperPartition, ParseErrorsCarryPositions) {
  EXPECT_THROW(parse_superpartition("1,1;"), ParseError);
  EXPECT_THROW(parse_superpartition("3;x"), ParseError);
  EXPECT_THROW(parse_superpartition("3"), ParseError);
  try {
    parse_superpartition("3;2,a");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_GT(e.position(), 0u);
  }
}
