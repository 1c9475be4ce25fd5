#include "iwahori/errors.hpp"
#include "iwahori/padic.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace iwahori;
using namespace iwahori::padic;

namespace {

// Exact rational partial sums of the exp and log series, reduced afterwards.
Rational exp_series_oracle(const Rational& x, int terms) {
  Rational sum = 0, term = 1;
  for (int n = 0; n < terms; ++n) {
    if (n > 0) term = term * x / n;
    sum += term;
  }
  return sum;
}

Rational log1p_series_oracle(const Rational& y, int terms) {
  Rational sum = 0, power = 1;
  for (int n = 1; n < terms; ++n) {
    power *= y;
    sum += (n % 2 == 1 ? power : -power) / n;
  }
  return sum;
}

}  // namespace

TEST(PadicRing, RejectsBadParameters) {
  EXPECT_THROW(make_ring(2, 1, 10), std::invalid_argument);
  EXPECT_THROW(make_ring(9, 1, 10), std::invalid_argument);
  EXPECT_THROW(make_ring(7, 0, 10), std::invalid_argument);
  EXPECT_THROW(make_ring(7, 1, 0), std::invalid_argument);
  EXPECT_THROW(make_ring(7, 1, 40), std::invalid_argument);
  EXPECT_NO_THROW(make_ring(7, 1, 21));
}

TEST(PadicValuation, Normalization) {
  auto zp = make_ring(7, 1, 12);
  EXPECT_EQ(PadicScalar::from_integer(zp, 7).valuation(), PValue::finite(1));
  auto e4 = make_ring(7, 4, 48);
  EXPECT_EQ(PadicScalar::uniformizer(e4).valuation(), PValue::finite(Rational(1, 4)));
  EXPECT_EQ(PadicScalar::zero(zp).valuation(), PValue::infinite());
  EXPECT_EQ(PadicScalar::from_integer(zp, boost::multiprecision::pow(Integer(7), 12)).valuation(), PValue::at_least(12));
  // 0 modulo p^N is a bound, not infinity.
  auto x = PadicScalar::from_integer(zp, 7) * PadicScalar::from_integer(zp, boost::multiprecision::pow(Integer(7), 11));
  EXPECT_EQ(x.valuation(), PValue::at_least(12));
}

TEST(PadicValuation, DigitInspection) {
  auto zp = make_ring(7, 1, 12);
  auto x = PadicScalar::from_integer(zp, 49 + 343);
  auto d = x.digits();
  int first = 0;
  while (d[static_cast<std::size_t>(first)] == 0) ++first;
  EXPECT_EQ(first, 2);
  EXPECT_EQ(x.valuation(), PValue::finite(first));
}

TEST(PadicArith, UniformizerRelation) {
  auto e4 = make_ring(7, 4, 48);
  auto pi = PadicScalar::uniformizer(e4);
  EXPECT_TRUE(pi.pow(4) == PadicScalar::from_integer(e4, 7));
  EXPECT_EQ(pi.pow(4).to_string(), "1*pi^4 + O(pi^48)");
}

TEST(PadicArith, UnitInverse) {
  auto zp = make_ring(7, 1, 12);
  auto u = PadicScalar::from_integer(zp, 8);
  EXPECT_TRUE(u.inverse() * u == PadicScalar::one(zp));
  EXPECT_THROW(PadicScalar::from_integer(zp, 7).inverse(), DomainError);
  auto e3 = make_ring(7, 3, 30);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    auto x = PadicScalar::random(e3, rng);
    if (!x.is_unit()) continue;
    EXPECT_TRUE(x * x.inverse() == PadicScalar::one(e3));
  }
}

TEST(PadicArith, FromRationalMatchesDivision) {
  auto zp = make_ring(5, 1, 10);
  auto third = PadicScalar::from_rational(zp, Rational(1, 3));
  EXPECT_TRUE(third * PadicScalar::from_integer(zp, 3) == PadicScalar::one(zp));
  EXPECT_THROW(PadicScalar::from_rational(zp, Rational(1, 5)), DomainError);
}

TEST(PadicArith, PrecisionTracking) {
  auto zp = make_ring(7, 1, 12);
  auto x = PadicScalar::from_integer(zp, 49).divide_by_pi_power(2);
  EXPECT_EQ(x.absolute_precision(), 10);
  EXPECT_TRUE(x == PadicScalar::one(zp));
  // A product with a multiple of p regains the lost digits.
  auto y = x * PadicScalar::from_integer(zp, 7);
  EXPECT_EQ(y.absolute_precision(), 11);
}

TEST(PadicArith, RingAxiomsOnRandomTriples) {
  for (auto ring : {make_ring(7, 1, 12), make_ring(7, 4, 48), make_ring(11, 3, 20)}) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
      auto a = PadicScalar::random(ring, rng);
      auto b = PadicScalar::random(ring, rng);
      auto c = PadicScalar::random(ring, rng);
      EXPECT_TRUE((a + b) + c == a + (b + c));
      EXPECT_TRUE((a * b) * c == a * (b * c));
      EXPECT_TRUE(a * (b + c) == a * b + a * c);
      EXPECT_TRUE(a - a == PadicScalar::zero(ring));
    }
  }
}

TEST(PadicValuation, MultiplicativeAndUltrametric) {
  for (auto ring : {make_ring(7, 1, 12), make_ring(7, 4, 48)}) {
    std::mt19937_64 rng(23);
    const Rational cap(ring->precision(), ring->ramification());
    for (int i = 0; i < 200; ++i) {
      // Scale by random π-powers so that valuations spread out.
      auto pi = PadicScalar::uniformizer(ring);
      auto x = PadicScalar::random(ring, rng) * pi.pow(static_cast<std::int64_t>(rng() % 5));
      auto y = PadicScalar::random(ring, rng) * pi.pow(static_cast<std::int64_t>(rng() % 5));
      auto vx = x.valuation(), vy = y.valuation();
      if (!vx.is_finite() || !vy.is_finite()) continue;
      auto vxy = (x * y).valuation();
      if (vx.value() + vy.value() < cap) EXPECT_EQ(vxy, vx + vy);
      auto vs = (x + y).valuation();
      EXPECT_NE(greater_equal(vs, min_of(vx, vy)), Decision::False);
    }
  }
}

TEST(PadicExp, AgreesWithRationalSeries) {
  auto zp = make_ring(7, 1, 12);
  for (int k : {1, 2, 3, 5, -4}) {
    Rational x = Rational(7 * k);
    auto expected = PadicScalar::from_rational(zp, exp_series_oracle(x, 40));
    EXPECT_TRUE(exp(PadicScalar::from_integer(zp, 7 * k)).identical(expected)) << k;
  }
}

TEST(PadicExp, BasicValues) {
  auto zp = make_ring(7, 1, 12);
  EXPECT_TRUE(exp(PadicScalar::zero(zp)) == PadicScalar::one(zp));
  auto p = PadicScalar::from_integer(zp, 7);
  EXPECT_EQ((exp(p) - PadicScalar::one(zp)).valuation(), PValue::finite(1));
  EXPECT_TRUE((exp(p) * exp(p)).identical(exp(PadicScalar::from_integer(zp, 14))));
  EXPECT_THROW(exp(PadicScalar::one(zp)), DomainError);
}

TEST(PadicLog, AgreesWithRationalSeries) {
  auto zp = make_ring(7, 1, 12);
  for (int k : {1, 3, -2, 8}) {
    Rational y(7 * k);
    auto expected = PadicScalar::from_rational(zp, log1p_series_oracle(y, 60));
    EXPECT_TRUE(log(PadicScalar::from_integer(zp, 1 + 7 * k)).identical(expected)) << k;
  }
}

TEST(PadicLog, BasicValues) {
  auto zp = make_ring(7, 1, 12);
  EXPECT_TRUE(log(PadicScalar::one(zp)) == PadicScalar::zero(zp));
  auto u = PadicScalar::from_integer(zp, 8);
  EXPECT_TRUE(log(u * u).identical(log(u) + log(u)));
  EXPECT_TRUE(exp(log(u)).identical(u));
  EXPECT_THROW(log(PadicScalar::from_integer(zp, 2)), DomainError);
}

TEST(PadicExpLog, InverseAndHomomorphismOnSamples) {
  for (auto ring : {make_ring(7, 1, 12), make_ring(7, 4, 24), make_ring(11, 3, 24)}) {
    std::mt19937_64 rng(99);
    const int m = ring->ramification();
    const int min_v = m / static_cast<int>(ring->prime() - 1) + 1;
    auto pi = PadicScalar::uniformizer(ring);
    for (int i = 0; i < 60; ++i) {
      auto x = PadicScalar::random(ring, rng) * pi.pow(min_v);
      auto y = PadicScalar::random(ring, rng) * pi.pow(min_v);
      EXPECT_TRUE(log(exp(x)) == x);
      EXPECT_TRUE(exp(x + y) == exp(x) * exp(y));
      auto u = PadicScalar::one(ring) + y;
      EXPECT_TRUE(exp(log(u)) == u);
      EXPECT_EQ((exp(x) - PadicScalar::one(ring)).valuation(), x.valuation());
    }
  }
}

TEST(PadicExpLog, RationalPower) {
  auto zp = make_ring(7, 1, 12);
  auto u = PadicScalar::from_integer(zp, 8);
  EXPECT_TRUE(rational_power(u, 3) == u.pow(3));
  auto r = rational_power(u, Rational(1, 2));
  EXPECT_TRUE(r * r == u);
}

TEST(PadicText, RoundTrip) {
  auto zp = make_ring(7, 1, 6);
  auto x = PadicScalar::from_integer(zp, 3 + 2 * 49);
  EXPECT_EQ(x.to_string(), "3 + 2*p^2 + O(p^6)");
  EXPECT_TRUE(parse_scalar(zp, x.to_string()).identical(x));
  EXPECT_TRUE(parse_scalar(zp, "1/2") == PadicScalar::from_rational(zp, Rational(1, 2)));
  auto e2 = make_ring(7, 2, 6);
  auto y = PadicScalar::uniformizer(e2) + PadicScalar::from_integer(e2, 5);
  EXPECT_EQ(y.to_string(), "5 + 1*pi + O(pi^6)");
  EXPECT_TRUE(parse_scalar(e2, y.to_string()).identical(y));
  EXPECT_EQ(PadicScalar::zero(zp).to_string(), "0");
}
