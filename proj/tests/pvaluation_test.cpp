#include "iwahori/errors.hpp"
#include "iwahori/pvaluation.hpp"

#include <gtest/gtest.h>

using namespace iwahori;

namespace {

void expect_clean(const SuiteReport& r) {
  for (const auto& t : r.properties) {
    EXPECT_EQ(t.failed, 0u) << r.suite << "/" << t.name << ": "
                            << (t.failures.empty() ? std::string() : t.failures.front().detail);
    EXPECT_GT(t.passed, 0u) << r.suite << "/" << t.name;
  }
}

}  // namespace

TEST(PValuationProps, AxiomsHoldOnSamples) {
  for (auto g : {GroupType::SL2, GroupType::SL3, GroupType::Sp4}) expect_clean(check_pvaluation_axioms(g, 7, 12, 60, 1));
}

TEST(PValuationProps, AxiomMarginsAreExact) {
  auto r = check_pvaluation_axioms(GroupType::SL2, 7, 12, 40, 2);
  // ω(g^p) = ω(g) + 1 has zero margin by definition.
  ASSERT_TRUE(r.tally("p_power").worst_margin.has_value());
  EXPECT_EQ(*r.tally("p_power").worst_margin, 0);
  // ω takes values in (1/(p-1), ∞), so the margin over 1/6 is positive.
  EXPECT_GT(*r.tally("lower_bound").worst_margin, 0);
}

TEST(PValuationProps, SameSeedSameReport) {
  auto a = check_pvaluation_axioms(GroupType::SL3, 7, 12, 20, 9);
  auto b = check_pvaluation_axioms(GroupType::SL3, 7, 12, 20, 9);
  for (std::size_t k = 0; k < a.properties.size(); ++k) {
    EXPECT_EQ(a.properties[k].passed, b.properties[k].passed);
    EXPECT_EQ(a.properties[k].worst_margin, b.properties[k].worst_margin);
  }
}

TEST(PValuationProps, CompatibilityForEveryWeylElement) {
  for (auto g : {GroupType::SL2, GroupType::SL3, GroupType::Sp4}) expect_clean(check_compatibility_all_w(g, 7, 12, 10, 3));
}

TEST(PValuationProps, EtEmbedding) {
  auto sl2 = check_et_embedding(GroupType::SL2, 7, 12);
  expect_clean(sl2);
  // v(α(t)) = 1/2 against the bounds (1/6, 5/6).
  EXPECT_EQ(*sl2.tally("root_inequalities").worst_margin, Rational(1, 3));
  auto sp4 = check_et_embedding(GroupType::Sp4, 7, 12);
  expect_clean(sp4);
  // ht/4 ∈ {1/4, 1/2, 3/4}: the closest approach is 3/4 against 5/6.
  EXPECT_EQ(*sp4.tally("root_inequalities").worst_margin, Rational(1, 12));
  expect_clean(check_et_embedding(GroupType::SL3, 7, 12));
  EXPECT_THROW(check_et_embedding(GroupType::Sp4, 5, 12), GateError);
}

TEST(PValuationProps, OracleAgreement) {
  for (auto g : {GroupType::SL2, GroupType::SL3, GroupType::Sp4}) expect_clean(check_oracle_agreement(g, 7, 12, 30, 4));
}

TEST(PValuationProps, OrderedBasis) {
  for (auto g : {GroupType::SL2, GroupType::SL3, GroupType::Sp4}) expect_clean(check_ordered_basis(g, 7, 12, 4, 5));
}

TEST(PValuationProps, SeedsAreDistinctPerSample) {
  EXPECT_NE(sample_seed(1, 0), sample_seed(1, 1));
  EXPECT_NE(sample_seed(1, 0), sample_seed(2, 0));
  EXPECT_EQ(sample_seed(7, 3), sample_seed(7, 3));
}
