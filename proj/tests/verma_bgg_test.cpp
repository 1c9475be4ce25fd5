#include "iwahori/rigid_series.hpp"
#include "iwahori/verma_bgg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace iwahori;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-40, 40), den(1, 12);
  return Rational(num(rng), den(rng));
}

RatVec sub(RatVec a, const RatVec& b) {
  for (std::size_t j = 0; j < a.size(); ++j) a[j] -= b[j];
  return a;
}

}  // namespace

TEST(VermaBgg, WeylTwist) {
  const auto d = RootDatum::make(GroupType::Sp4);
  const RatVec chi = {Rational(1, 3), Rational(1, 5)};
  EXPECT_EQ(weyl_twist(d, chi, d.identity()), chi);
  // s_α exchanges a and b since α(t_{a,b}) = a/b.
  EXPECT_EQ(weyl_twist(d, chi, d.parse_word("s1")), (RatVec{Rational(1, 5), Rational(1, 3)}));
  // s_β inverts b.
  EXPECT_EQ(weyl_twist(d, chi, d.parse_word("s2")), (RatVec{Rational(1, 3), Rational(-1, 5)}));
  for (const auto& w : d.weyl_group()) EXPECT_EQ(weyl_twist(d, weyl_twist(d, chi, w), d.inverse(w)), chi);
  const auto sl3 = RootDatum::make(GroupType::SL3);
  EXPECT_EQ(weyl_twist(sl3, {3, 0, 0}, sl3.identity()), (RatVec{2, -1, -1}));
}

TEST(VermaBgg, MultiplicityExamples) {
  const auto sl2 = RootDatum::make(GroupType::SL2);
  const RatVec chi = {Rational(2, 7), Rational(-2, 7)};
  EXPECT_EQ(weight_multiplicity(sl2, chi, chi, sl2.identity()), 1u);
  const auto& a = sl2.positive_roots().front().vec;
  for (int k = 0; k <= 12; ++k) {
    RatVec l = {chi[0] - k * a[0], chi[1] - k * a[1]};
    EXPECT_EQ(weight_multiplicity(sl2, chi, l, sl2.identity()), 1u);
    RatVec up = {chi[0] + (k + 1) * a[0], chi[1] + (k + 1) * a[1]};
    EXPECT_EQ(weight_multiplicity(sl2, chi, up, sl2.identity()), 0u);
  }
  // Off the root lattice.
  EXPECT_EQ(weight_multiplicity(sl2, chi, {0, 0}, sl2.identity()), 0u);
  // Sp4: 2(α+β) = 2α+β + β = α + (α+β) + β = 2α + 2β = 2(α+β): four ways.
  const auto sp4 = RootDatum::make(GroupType::Sp4);
  EXPECT_EQ(weight_multiplicity(sp4, {0, 0}, {-2, -2}, sp4.identity()), 4u);
  const auto sl3 = RootDatum::make(GroupType::SL3);
  EXPECT_THROW(weight_multiplicity(sl3, {0, 0}, {2, 1}, sl3.identity()), std::invalid_argument);
}

TEST(VermaBgg, SolverMatchesMonomialEnumeration) {
  for (auto g : {GroupType::SL3, GroupType::Sp4}) {
    for (const auto& d : {RootDatum::make(g), RootDatum::make(g).opposite()}) {
      const RatVec chi = g == GroupType::Sp4 ? RatVec{Rational(1, 3), Rational(-2)} : RatVec{1, Rational(1, 2), 0};
      for (const auto& w : d.weyl_group()) {
        auto table = monomial_weight_table(d, chi, w, 10);
        for (const auto& [lambda, count] : table)
          ASSERT_EQ(weight_multiplicity(d, chi, lambda, w), count) << group_name(g) << " w=" << w.word_string();
      }
    }
  }
}

TEST(VermaBgg, MultiplicityInvariantUnderTwist) {
  // Count for (dχ, λ, w) equals the count for (w⁻¹·dχ twisted back, w⁻¹λ, 1).
  const auto d = RootDatum::make(GroupType::Sp4);
  const RatVec chi = {Rational(1, 2), 3};
  for (const auto& w : d.weyl_group())
    for (int x = -6; x <= 6; ++x)
      for (int y = -6; y <= 6; ++y) {
        RatVec lambda = {x, y};
        auto a = weight_multiplicity(d, chi, lambda, w);
        auto b = weight_multiplicity(d, chi, d.inverse(w).act(lambda), d.identity());
        ASSERT_EQ(a, b) << w.word_string() << " " << x << "," << y;
      }
}

TEST(VermaBgg, MultiplicityCountsMonomialsOfEachLieWeight) {
  // Weight spaces of polynomial functions on U_w⁺ under the torus Lie action.
  SeriesContext ctx(GroupType::Sp4, 7, "s1s2", {Rational(1, 2), 3});
  const auto& d = ctx.datum();
  std::map<RatVec, std::uint64_t> seen;
  std::function<void(MultiIndex&, std::size_t, int)> walk = [&](MultiIndex& i, std::size_t r, int left) {
    if (r == i.size()) {
      RatVec weight = ctx.twisted_character();
      for (std::size_t s = 0; s < i.size(); ++s)
        for (std::size_t j = 0; j < weight.size(); ++j) weight[j] -= i[s] * ctx.roots()[s][j];
      ++seen[weight];
      return;
    }
    for (int k = 0; k <= left; ++k) {
      i[r] = k;
      walk(i, r + 1, left - k);
    }
    i[r] = 0;
  };
  MultiIndex i(ctx.nvars(), 0);
  walk(i, 0, 6);
  for (const auto& [lambda, count] : seen) {
    if (pairing(sub(ctx.twisted_character(), lambda), ctx.mu()) > 6 * 2) continue;  // incomplete shell
    EXPECT_EQ(weight_multiplicity(d, ctx.character(), lambda, ctx.w()), count);
  }
}

TEST(VermaBgg, BggExamples) {
  auto zero = bgg_simple(GroupType::Sp4, {0, 0});
  EXPECT_FALSE(zero.simple);
  ASSERT_EQ(zero.certificate.size(), 4u);
  auto v = bgg_simple(GroupType::Sp4, {Rational(1, 3), Rational(1, 5)});
  EXPECT_TRUE(v.simple);
  std::map<std::string, Rational> by_label;
  for (const auto& c : v.certificate) by_label[c.label] = c.value;
  EXPECT_EQ(by_label.at("alpha"), Rational(17, 15));
  EXPECT_EQ(by_label.at("beta"), Rational(6, 5));
  EXPECT_EQ(by_label.at("alpha+beta"), Rational(53, 15));
  EXPECT_EQ(by_label.at("2alpha+beta"), Rational(7, 3));
  // Dominant integral weights are never simple; antidominant shifts are.
  EXPECT_FALSE(bgg_simple(GroupType::SL3, {2, 1, 0}).simple);
  EXPECT_TRUE(bgg_simple(GroupType::SL3, {-5, 0, 5}).simple);
  EXPECT_TRUE(bgg_simple(GroupType::SL2, {Rational(-1, 2), Rational(1, 2)}).simple);
  EXPECT_FALSE(bgg_simple(GroupType::SL2, {0, 0}).simple);
}

TEST(VermaBgg, BggVerdictInvariantUnderTwist) {
  std::mt19937_64 rng(41);
  for (auto g : {GroupType::SL2, GroupType::SL3, GroupType::Sp4}) {
    const auto d = RootDatum::make(g);
    for (int k = 0; k < 30; ++k) {
      RatVec chi;
      for (int j = 0; j < d.ambient_dim(); ++j) chi.push_back(k % 3 == 0 ? Rational(std::uniform_int_distribution<int>(-3, 3)(rng)) : random_rational(rng));
      auto base = bgg_simple(g, chi);
      for (const auto& w : d.weyl_group()) {
        auto t = bgg_simple_twisted(g, chi, w);
        EXPECT_EQ(t.simple, base.simple);
        for (std::size_t r = 0; r < t.certificate.size(); ++r) EXPECT_EQ(t.certificate[r].value, base.certificate[r].value);
      }
    }
  }
}

TEST(VermaBgg, Sp4ConditionPaths) {
  EXPECT_EQ(sp4_conditions(0, 0).displayed, (std::array<Rational, 4>{1, 1, 3, 2}));
  EXPECT_EQ(sp4_conditions(-1, -1).displayed, (std::array<Rational, 4>{1, 0, 1, 0}));
  std::mt19937_64 rng(7);
  for (int k = 0; k < 100; ++k) {
    const Rational c1 = random_rational(rng), c2 = random_rational(rng);
    auto c = sp4_conditions(c1, c2);
    EXPECT_TRUE(c.matrices_match_datum);
    EXPECT_EQ(c.generic, c.datum_path);
    // The stored matrix for 2α+β is diag(1,0,0,−1), so that condition is c₁ + 2.
    EXPECT_EQ(c.generic[3], c1 + 2);
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(c.displayed[j], c.generic[j]);
    EXPECT_EQ(c.agree(), c1 == 0);
    EXPECT_EQ(c.simple(), bgg_simple(GroupType::Sp4, {c1, c2}).simple);
  }
}

TEST(VermaBgg, SummandInventory) {
  auto sp4 = summand_inventory(GroupType::Sp4);
  EXPECT_EQ(sp4.size(), 8u);
  std::size_t pairs = 0;
  for (const auto& s : sp4) pairs += s.witnesses.size();
  EXPECT_EQ(pairs, 56u);
  EXPECT_TRUE(inventory_complete(sp4));
  auto sl2 = summand_inventory(GroupType::SL2);
  ASSERT_EQ(sl2.size(), 2u);
  ASSERT_TRUE(sl2[0].witnesses[0].second.has_value());
  EXPECT_EQ(*sl2[0].witnesses[0].second, RootDatum::make(GroupType::SL2).positive_roots().front().vec);
  EXPECT_TRUE(inventory_complete(summand_inventory(GroupType::SL3)));
}
