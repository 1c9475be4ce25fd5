#include "iwahori/checks.hpp"

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

TEST(Checks, PadicArithmetic) { expect_clean(check_padic_arithmetic(7, 12, 50, 1)); }

TEST(Checks, Eigenfunctions) {
  expect_clean(check_eigenfunctions(GroupType::SL2, 7, 6, 1));
  expect_clean(check_eigenfunctions(GroupType::Sp4, 7, 4, 1));
}

TEST(Checks, Projector) {
  expect_clean(check_projector(GroupType::SL2, 7, 12, 30, 5, 1));
  expect_clean(check_projector(GroupType::Sp4, 7, 12, 30, 5, 1));
}

TEST(Checks, ConstantsLimit) {
  for (auto g : {GroupType::SL2, GroupType::SL3, GroupType::Sp4}) expect_clean(check_constants_limit(g, 7, 30, 5, 1));
}

TEST(Checks, HaarAndCombinatorics) {
  expect_clean(check_haar(10));
  expect_clean(check_verma_multiplicities(GroupType::SL3, 6));
  for (auto g : {GroupType::SL2, GroupType::SL3, GroupType::Sp4}) expect_clean(check_multiplicity_one(g));
}

TEST(Checks, Sp4GoldenFlagsOnlyTheLongRootCondition) {
  auto r = check_sp4_golden(7, 20, 1);
  for (const auto& t : r.properties) {
    if (t.name == "conditions_identity") {
      // The displayed 2c₁+2 differs from the pairing value c₁+2 unless c₁ = 0.
      EXPECT_GT(t.failed, 0u);
      ASSERT_FALSE(t.failures.empty());
      EXPECT_NE(t.failures.front().detail.find("2alpha+beta"), std::string::npos);
      EXPECT_EQ(t.failures.front().detail.find("alpha: "), std::string::npos);
    } else {
      EXPECT_EQ(t.failed, 0u) << t.name;
      EXPECT_GT(t.passed, 0u) << t.name;
    }
  }
  EXPECT_EQ(iwahori_pattern(ChevalleyGroup(GroupType::Sp4, 7, 12)).front(), "1 p p p");
}
