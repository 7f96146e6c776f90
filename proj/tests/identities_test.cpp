#include "catri/identities.hpp"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <set>

#include "catri/errors.hpp"
#include "oracle.hpp"

namespace catri {
namespace {

// Small caps keep the per-identity tests fast; the acceptance binary runs
// the full domains.
RangeMap small_ranges(const IdentityDescriptor& d) { return default_ranges(d, 14); }

TEST(RegistryTest, DescriptorsAreWellFormed) {
  std::set<std::string> ids;
  for (const auto& d : list_identities()) {
    EXPECT_TRUE(ids.insert(d.id).second) << "duplicate " << d.id;
    EXPECT_FALSE(d.statement.empty()) << d.id;
    EXPECT_FALSE(d.anchor.empty()) << d.id;
    EXPECT_FALSE(d.hypothesis_text.empty()) << d.id;
    EXPECT_FALSE(d.parameters.empty()) << d.id;
    for (const auto& p : d.parameters) EXPECT_GE(p.hypothesis_min, p.hard_min) << d.id;
  }
  EXPECT_GE(ids.size(), 30u);
}

TEST(RegistryTest, UnknownIdListsValidIds) {
  try {
    find_identity("no-such-identity");
    FAIL() << "expected UnknownIdentityError";
  } catch (const UnknownIdentityError& e) {
    EXPECT_NE(std::string(e.what()).find("thm-b-cube"), std::string::npos);
  }
}

TEST(EvaluateTest, SpotValues) {
  EXPECT_EQ(evaluate_sides("thm-linear-sum", {{"m", 6}, {"n", 3}}),
            std::make_pair(Rational(10), Rational(10)));
  EXPECT_EQ(evaluate_sides("cor-alt-B", {{"n", 3}}), std::make_pair(Rational(-2), Rational(-2)));
  EXPECT_EQ(evaluate_sides("thm-b-cube", {{"n", 2}}), std::make_pair(Rational(9), Rational(9)));
  EXPECT_EQ(evaluate_sides("eq-convolution", {{"n", 2}, {"i", 1}}),
            std::make_pair(Rational(6), Rational(6)));
}

TEST(EvaluateTest, Violations) {
  EXPECT_THROW(evaluate_sides("thm-linear-sum", {{"m", 6}}), ConstraintViolation);
  EXPECT_THROW(evaluate_sides("thm-linear-sum", {{"m", 6}, {"n", 3}, {"q", 1}}),
               ConstraintViolation);
  EXPECT_THROW(evaluate_sides("thm-linear-sum", {{"m", 1}, {"n", 3}}), ConstraintViolation);
  EXPECT_THROW(evaluate_sides("eq-convolution", {{"n", 2}, {"i", 3}}), ConstraintViolation);
  EXPECT_THROW(evaluate_sides("nope", {{"n", 2}}), UnknownIdentityError);
}

TEST(SweepTest, EveryIdentityPassesOnSmallDomain) {
  for (const auto& d : list_identities()) {
    auto report = verify_identity(d, small_ranges(d));
    EXPECT_TRUE(report.passed()) << d.id;
    EXPECT_GT(report.cells, 0u) << d.id;
  }
}

// Random admissible cells, evaluated one by one outside the sweep engine.
TEST(SweepTest, RandomAdmissibleCellsBalance) {
  oracle::Gen gen(2024);
  const auto& all = list_identities();
  int checked = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const auto& d = all[static_cast<std::size_t>(gen.uniform(0, static_cast<std::int64_t>(all.size()) - 1))];
    std::vector<std::int64_t> cell;
    for (const auto& p : d.parameters) {
      cell.push_back(gen.uniform(p.hypothesis_min, std::min<std::int64_t>(p.default_cap, 60)));
    }
    if (!d.satisfies_hypotheses(cell)) continue;
    EXPECT_EQ(d.lhs(cell), d.rhs(cell)) << d.id;
    ++checked;
  }
  EXPECT_GT(checked, 300);
}

TEST(SweepTest, SwappingSidesKeepsOutcome) {
  for (const auto& d : list_identities()) {
    IdentityDescriptor swapped = d;
    std::swap(swapped.lhs, swapped.rhs);
    auto a = verify_identity(d, small_ranges(d));
    auto b = verify_identity(swapped, small_ranges(d));
    EXPECT_EQ(a.passed(), b.passed()) << d.id;
    EXPECT_EQ(a.cells, b.cells) << d.id;
  }
}

TEST(SweepTest, PerturbedRhsFailsEveryCell) {
  for (const auto& d : list_identities()) {
    auto broken = with_rhs_offset(d, Rational(BigInt(1), BigInt(7)));
    auto report = verify_identity(broken, small_ranges(d));
    EXPECT_FALSE(report.passed()) << d.id;
    EXPECT_EQ(report.mismatches.size(), report.cells) << d.id;
  }
}

TEST(SweepTest, FailFastStopsEarly) {
  auto broken = with_rhs_offset(find_identity("thm-linear-sum"), Rational(1));
  VerifyOptions options;
  options.fail_fast = true;
  auto report = verify_identity(broken, default_ranges(broken, 30), options);
  EXPECT_FALSE(report.passed());
  EXPECT_LT(report.mismatches.size(), 30u * 29u);
}

TEST(SweepTest, ParallelismDoesNotChangeReport) {
  for (const char* id : {"thm-square-sum", "eq-convolution", "thm-harmonic", "rec-A"}) {
    const auto& d = find_identity(id);
    VerifyOptions serial;
    VerifyOptions parallel;
    parallel.jobs = 4;
    auto ranges = default_ranges(d, 25);
    EXPECT_EQ(report_to_json(verify_identity(d, ranges, serial), false),
              report_to_json(verify_identity(d, ranges, parallel), false))
        << id;
    auto broken = with_rhs_offset(d, Rational(3));
    EXPECT_EQ(report_to_json(verify_identity(broken, ranges, serial), false),
              report_to_json(verify_identity(broken, ranges, parallel), false))
        << id;
  }
}

TEST(SweepTest, DomainHandling) {
  const auto& d = find_identity("thm-linear-sum");
  EXPECT_THROW(verify_identity(d, {{"m", {1, 1}}, {"n", {1, 3}}}), UsageError);
  EXPECT_THROW(verify_identity(d, {{"m", {2, 5}}}), UsageError);
  EXPECT_THROW(verify_identity(d, {{"m", {2, 5}}, {"n", {1, 3}}, {"z", {0, 1}}}), UsageError);

  // Outside the hypotheses the identity still evaluates; the report says so.
  VerifyOptions outside;
  outside.allow_outside_domain = true;
  auto inside = verify_identity(d, {{"m", {0, 8}}, {"n", {0, 8}}});
  auto wider = verify_identity(d, {{"m", {0, 8}}, {"n", {0, 8}}}, outside);
  EXPECT_GT(wider.cells, inside.cells);
  EXPECT_TRUE(wider.outside_hypotheses);
}

TEST(ReportTest, JsonShape) {
  auto broken = with_rhs_offset(find_identity("eq-linear-B"), Rational(1));
  auto report = verify_identity(broken, {{"n", {1, 3}}});
  auto doc = nlohmann::json::parse(report_to_json(report, false));
  EXPECT_EQ(doc["identity"], "eq-linear-B");
  EXPECT_EQ(doc["status"], "FAIL");
  EXPECT_EQ(doc["cells"], 3);
  EXPECT_TRUE(doc["elapsed_ms"].is_null());
  ASSERT_EQ(doc["mismatches"].size(), 3u);
  EXPECT_EQ(doc["mismatches"][0]["assignment"]["n"], 1);
  EXPECT_TRUE(doc["mismatches"][0]["lhs"].is_string());
  EXPECT_EQ(doc["domain"]["ranges"]["n"], "1..3");
  EXPECT_TRUE(nlohmann::json::parse(report_to_json(report, true))["elapsed_ms"].is_number());
}

}  // namespace
}  // namespace catri
