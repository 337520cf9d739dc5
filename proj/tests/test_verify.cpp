#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "printers.hpp"
#include "sschur/error.hpp"
#include "sschur/schur_table.hpp"
#include "sschur/verify.hpp"

using namespace sschur;

namespace {

void expect_passes(const SuiteReport& r) {
  EXPECT_TRUE(r.passed()) << to_text(r);
  EXPECT_FALSE(r.checks.empty()) << r.suite;
}

}  // namespace

TEST(Verify, SuiteNamesAreRunnable) {
  SchurTable table;
  for (const auto& name : suite_names()) {
    if (name == "dualities") continue;
    const auto reports = run_suite(name, {3, 1}, table);
    ASSERT_EQ(reports.size(), 1u) << name;
    expect_passes(reports.front());
  }
  EXPECT_THROW(run_suite("nonsense", {3, 1}, table), Error);
}

TEST(Verify, SmallBoundsPass) {
  SchurTable table;
  expect_passes(verify_examples(table));
  expect_passes(verify_row_column_forms(4, table));
  expect_passes(verify_orthogonality({4, 2}, table));
  expect_passes(verify_creation({3, 2}, table));
  expect_passes(verify_pieri({3, 2}, table, 3));
  expect_passes(verify_exchange_relations({3, 1}, 3));
  expect_passes(verify_negative_modes({4, 2}, table));
  expect_passes(verify_recurrence({3, 2}, 2));
}

TEST(Verify, LiteralDualitiesFailWithACounterexample) {
  SchurTable table;
  const SuiteReport r = verify_dualities({2, 2}, table);
  EXPECT_FALSE(r.passed());
  ASSERT_NE(r.first_failure(), nullptr);
  EXPECT_FALSE(r.first_failure()->counterexample.empty());
  for (const auto& c : r.checks)
    if (c.informational) EXPECT_TRUE(c.passed) << c.name;
}

TEST(Verify, JsonReportShape) {
  SchurTable table;
  const SuiteReport r = verify_orthogonality({0, 0}, table);
  const nlohmann::json j = r;
  EXPECT_EQ(j.at("suite"), "orthogonality");
  EXPECT_EQ(j.at("status"), "PASS");
  ASSERT_TRUE(j.at("checks").is_array());
  for (const auto& c : j.at("checks")) {
    EXPECT_TRUE(c.contains("name"));
    EXPECT_TRUE(c.contains("status"));
    EXPECT_TRUE(c.contains("count"));
  }
}
