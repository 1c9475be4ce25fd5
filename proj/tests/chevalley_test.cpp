#include "iwahori/chevalley.hpp"
#include "iwahori/errors.hpp"

#include <gtest/gtest.h>

using namespace iwahori;

namespace {

const GroupType kAll[] = {GroupType::SL2, GroupType::SL3, GroupType::Sp4};

IntVec neg(IntVec v) {
  for (auto& x : v) x = -x;
  return v;
}

// Upper-triangular root in ε-coordinates for SL2.
const IntVec kUpper{1, -1};
const IntVec kLower{-1, 1};

}  // namespace

TEST(Chevalley, RootUnipotentBasics) {
  ChevalleyGroup G(GroupType::SL2, 7, 12);
  auto zero = PadicScalar::zero(G.ring());
  EXPECT_TRUE(G.root_unipotent(kLower, zero) == G.identity());
  auto x = G.scalar(5);
  auto u = G.root_unipotent(kUpper, x);
  EXPECT_TRUE(u(0, 1) == x);
  EXPECT_TRUE(u(1, 0).is_zero());
  EXPECT_TRUE(G.multiply(G.root_unipotent(kUpper, x), G.root_unipotent(kUpper, G.scalar(3))) ==
              G.root_unipotent(kUpper, G.scalar(8)));
  for (auto t : kAll) {
    ChevalleyGroup H(t, 7, 8);
    for (const auto& r : H.datum().roots()) EXPECT_TRUE(H.in_group(H.root_unipotent(r, H.scalar(3))));
  }
}

TEST(Chevalley, TorusConjugationOnRandomSamples) {
  for (auto t : kAll) {
    ChevalleyGroup G(t, 7, 10);
    std::mt19937_64 rng(3);
    const auto roots = G.datum().roots();
    for (int i = 0; i < 50; ++i) {
      std::vector<PadicScalar> tc;
      for (int k = 0; k < G.datum().ambient_dim(); ++k) {
        auto c = PadicScalar::random(G.ring(), rng);
        if (!c.is_unit()) c += PadicScalar::one(G.ring());
        if (!c.is_unit()) c += PadicScalar::one(G.ring());
        tc.push_back(c);
      }
      if (t != GroupType::Sp4) {
        // Determinant one.
        PadicScalar prod = tc[0];
        for (std::size_t k = 1; k + 1 < tc.size(); ++k) prod *= tc[k];
        tc.back() = prod.inverse();
      }
      auto tor = G.torus(tc);
      EXPECT_TRUE(G.in_group(tor));
      const auto& r = roots[rng() % roots.size()];
      auto x = PadicScalar::random(G.ring(), rng);
      auto lhs = G.multiply(G.multiply(tor, G.root_unipotent(r, x)), G.inverse(tor));
      auto rhs = G.root_unipotent(r, G.character_value(r, tc) * x);
      EXPECT_TRUE(lhs == rhs);
    }
  }
}

TEST(Chevalley, Sp4TorusShape) {
  ChevalleyGroup G(GroupType::Sp4, 7, 8);
  auto a = G.scalar(2), b = G.scalar(3);
  auto t = G.torus({a, b});
  EXPECT_TRUE(t(0, 0) == a);
  EXPECT_TRUE(t(1, 1) == b);
  EXPECT_TRUE(t(2, 2) == b.inverse());
  EXPECT_TRUE(t(3, 3) == a.inverse());
  EXPECT_TRUE(G.cocharacter({0, 0}, a) == G.identity());
  // v(α(μ(c))) = ⟨α, μ⟩·v(c) with c = 7·unit would leave the torus of units; use c ≡ 1 instead.
  auto c = padic::exp(G.scalar(7));
  IntVec mu = G.datum().adapted_cocharacter(G.datum().identity());
  auto tc = std::vector<PadicScalar>{c.pow(mu[0]), c.pow(mu[1])};
  for (const auto& r : G.datum().roots()) {
    auto val = (G.character_value(r, tc) - PadicScalar::one(G.ring())).valuation();
    EXPECT_EQ(val, PValue::finite(1 + valuation(Integer(pairing(r, mu)), 7)));
  }
}

TEST(Chevalley, MembershipPredicates) {
  ChevalleyGroup G(GroupType::SL2, 7, 12);
  for (int r = 1; r <= 12; ++r) EXPECT_TRUE(G.in_congruence(G.identity(), r));
  EXPECT_THROW(G.in_congruence(G.identity(), 13), PrecisionError);
  EXPECT_TRUE(G.in_iwahori(G.root_unipotent(kLower, G.scalar(1))));
  EXPECT_FALSE(G.in_iwahori(G.root_unipotent(kUpper, G.scalar(1))));
  EXPECT_TRUE(G.in_iwahori(G.root_unipotent(kUpper, G.scalar(7))));
  ChevalleyGroup S(GroupType::Sp4, 7, 12);
  for (const auto& r : S.datum().positive_roots()) EXPECT_TRUE(S.in_iwahori(S.root_unipotent(r.vec, S.scalar(1))));
  for (const auto& r : S.datum().positive_roots()) EXPECT_FALSE(S.in_iwahori(S.root_unipotent(neg(r.vec), S.scalar(1))));
}

TEST(Chevalley, GateFailsForSp4AtFive) {
  ChevalleyGroup G(GroupType::Sp4, 5, 8);
  EXPECT_FALSE(G.gate_ok());
  try {
    G.require_gate();
    FAIL();
  } catch (const GateError& e) {
    EXPECT_NE(std::string(e.what()).find("p-1 = 4 <= eh = 4"), std::string::npos);
  }
  EXPECT_TRUE(ChevalleyGroup(GroupType::Sp4, 7, 8).gate_ok());
}

TEST(Chevalley, FactorizeKnownWords) {
  ChevalleyGroup G(GroupType::SL2, 7, 12);
  auto f = G.factorize(G.identity(), G.datum().identity());
  for (const auto& r : f.minus) EXPECT_TRUE(r.parameter.is_zero());
  for (const auto& r : f.plus) EXPECT_TRUE(r.parameter.is_zero());
  for (const auto& c : f.torus) EXPECT_TRUE(c == PadicScalar::one(G.ring()));
  // u_upper(p)·coroot(1+p)·u_lower(1).
  const IntVec coroot = G.datum().positive_roots()[0].coroot;
  auto g = G.multiply(G.multiply(G.root_unipotent(kUpper, G.scalar(7)), G.cocharacter(coroot, G.scalar(8))),
                      G.root_unipotent(kLower, G.scalar(1)));
  f = G.factorize(g, G.datum().identity());
  ASSERT_EQ(f.minus.size(), 1u);
  EXPECT_EQ(f.minus[0].root, kUpper);
  EXPECT_TRUE(f.minus[0].parameter == G.scalar(7));
  EXPECT_TRUE(f.plus[0].parameter == G.scalar(1));
  EXPECT_TRUE(G.torus(f.torus) == G.cocharacter(coroot, G.scalar(8)));
  EXPECT_THROW(G.factorize(G.root_unipotent(kUpper, G.scalar(1)), G.datum().identity()), MembershipError);
}

TEST(Chevalley, FactorizationRoundTripAndUniqueness) {
  for (auto t : kAll) {
    ChevalleyGroup G(t, 7, 12);
    std::mt19937_64 rng(11);
    for (const auto& w : G.datum().weyl_group()) {
      for (int i = 0; i < 15; ++i) {
        auto g = G.random_element(rng);
        auto f = G.factorize(g, w);
        EXPECT_TRUE(G.from_factorization(f) == g) << G.datum().name() << " " << w.word_string();
        for (const auto& r : f.minus)
          if (!G.datum().is_positive(r.root)) EXPECT_GE(r.parameter.pi_valuation(), 1);
        auto again = G.factorize(G.from_factorization(f), w);
        for (std::size_t k = 0; k < f.minus.size(); ++k) EXPECT_TRUE(again.minus[k].parameter == f.minus[k].parameter);
        for (std::size_t k = 0; k < f.plus.size(); ++k) EXPECT_TRUE(again.plus[k].parameter == f.plus[k].parameter);
        auto alt = G.factorize(g, w, BatchOrder::HeightReverseLex);
        EXPECT_TRUE(G.from_factorization(alt) == g);
        EXPECT_EQ(G.factorization_omega(alt), G.factorization_omega(f));
      }
    }
  }
}

TEST(Chevalley, OmegaClosedForms) {
  ChevalleyGroup G(GroupType::SL2, 7, 12);
  EXPECT_EQ(G.omega(G.root_unipotent(kLower, G.scalar(1))), PValue::finite(Rational(1, 2)));
  EXPECT_EQ(G.omega(G.root_unipotent(kUpper, G.scalar(7))), PValue::finite(Rational(1, 2)));
  const IntVec coroot = G.datum().positive_roots()[0].coroot;
  EXPECT_EQ(G.omega(G.cocharacter(coroot, padic::exp(G.scalar(7)))), PValue::finite(1));
  EXPECT_EQ(G.omega(G.identity()), PValue::infinite());
  EXPECT_EQ(G.omega_oracle(G.identity()), PValue::infinite());
  // ω(u(1)^7) = ω(u(7)) = 1/2 + 1.
  auto u = G.root_unipotent(kLower, G.scalar(1));
  EXPECT_EQ(G.omega(G.power(u, 7)), PValue::finite(Rational(3, 2)));
}

TEST(Chevalley, OracleAgreesWithFormula) {
  for (auto t : kAll) {
    ChevalleyGroup G(t, 7, 12);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
      auto g = G.random_element(rng);
      EXPECT_EQ(G.omega_oracle(g), G.omega(g));
    }
    for (const auto& e : G.ordered_basis(G.datum().identity()).entries) {
      EXPECT_EQ(G.omega_oracle(e.generator), G.omega(e.generator)) << e.label;
    }
  }
}

TEST(Chevalley, EtConjugationIntoCongruenceSubgroup) {
  ChevalleyGroup G(GroupType::SL2, 7, 12);
  EXPECT_EQ(G.oracle_ramification(), 4);
  EXPECT_EQ(G.oracle_congruence_level(), 1);
  for (const auto& e : G.ordered_basis(G.datum().identity()).entries)
    EXPECT_TRUE(G.oracle_conjugate_in_congruence(e.generator, 1)) << e.label;
}

TEST(Chevalley, OrderedBasisShapeAndValues) {
  ChevalleyGroup G(GroupType::Sp4, 7, 12);
  auto b = G.ordered_basis(G.datum().identity());
  EXPECT_EQ(b.entries.size(), 10u);
  EXPECT_EQ(b.minus_count, 4u);
  EXPECT_EQ(b.torus_count, 2u);
  const int eh = 4;
  for (std::size_t i = 0; i < b.entries.size(); ++i) {
    const auto& e = b.entries[i];
    EXPECT_NE(greater(e.omega, PValue::finite(1)), Decision::True);
    EXPECT_EQ(G.omega(e.generator), e.omega) << e.label;
    Rational expected = i < 4 ? 1 + Rational(G.datum().height(e.vector), eh)
                        : i < 6 ? Rational(1)
                                : Rational(G.datum().height(e.vector), eh);
    EXPECT_EQ(e.omega, PValue::finite(expected)) << e.label;
  }
}

TEST(Chevalley, CoordinatesRoundTripAndMinFormula) {
  for (auto t : kAll) {
    ChevalleyGroup G(t, 7, 12);
    std::mt19937_64 rng(21);
    for (const auto& w : G.datum().weyl_group()) {
      for (int i = 0; i < 10; ++i) {
        auto x = G.random_coordinates(rng);
        auto h = G.from_coordinates(x, w);
        EXPECT_TRUE(G.in_iwahori(h));
        auto y = G.coordinates(h, w);
        ASSERT_EQ(y.size(), x.size());
        for (std::size_t k = 0; k < x.size(); ++k) EXPECT_TRUE(y[k] == x[k]);
        EXPECT_TRUE(G.from_coordinates(y, w) == h);
        EXPECT_EQ(G.omega(h), G.coordinate_omega(x, w));
      }
    }
  }
}

TEST(Chevalley, OmegaIsConjugationInvariant) {
  for (auto t : kAll) {
    ChevalleyGroup G(t, 7, 12);
    std::mt19937_64 rng(8);
    for (int i = 0; i < 20; ++i) {
      auto g = G.random_element(rng);
      auto h = G.random_element(rng);
      auto c = G.multiply(G.multiply(h, g), G.inverse(h));
      EXPECT_EQ(G.omega(c), G.omega(g));
    }
  }
}
