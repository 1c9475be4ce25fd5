#pragma once

#include "iwahori/rational.hpp"

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace iwahori::padic {

/// The valuation ring of E = Q_p(π), π^m = p, truncated at absolute precision π^N.
///
/// m = 1 gives Z_p itself. Coefficients of the π-basis are stored as machine
/// integers, so p^ceil(N/m) must stay below 2^62.
class ScalarRing {
public:
  ScalarRing(std::int64_t p, int ramification, int precision);

  std::int64_t prime() const { return p_; }
  int ramification() const { return m_; }
  int precision() const { return n_; }

  /// Number of base-p digits needed for coefficient i at absolute precision prec.
  int digits_for(int prec, int i) const;
  std::int64_t prime_power(int k) const { return powers_.at(static_cast<std::size_t>(k)); }
  int max_digits() const { return static_cast<int>(powers_.size()) - 1; }

  friend bool operator==(const ScalarRing& a, const ScalarRing& b) {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.n_ == b.n_;
  }

private:
  std::int64_t p_;
  int m_;
  int n_;
  std::vector<std::int64_t> powers_;
};

using RingPtr = std::shared_ptr<const ScalarRing>;

/// Validating factory; throws std::invalid_argument for p not an odd prime,
/// m < 1, N < 1, or a precision that overflows 64-bit coefficients.
RingPtr make_ring(std::int64_t p, int ramification, int precision);

bool is_prime(std::int64_t n);

/// Element of O_E known modulo π^prec (prec <= N), in canonical form.
///
/// Precision is absolute. Sums keep the smaller precision; products keep
/// min(prec_a + v(b), prec_b + v(a)); division by π^k loses k digits.
/// A separate flag marks values known to be exactly zero.
class PadicScalar {
public:
  using Coeffs = boost::container::small_vector<std::int64_t, 4>;

  static PadicScalar zero(RingPtr ring);
  static PadicScalar one(RingPtr ring);
  static PadicScalar from_integer(RingPtr ring, const Integer& n);
  static PadicScalar from_integer(RingPtr ring, std::int64_t n) { return from_integer(std::move(ring), Integer(n)); }
  /// Throws DomainError when q is not p-integral.
  static PadicScalar from_rational(RingPtr ring, const Rational& q);
  static PadicScalar uniformizer(RingPtr ring);
  /// Σ d_k π^k, at full ring precision.
  static PadicScalar from_digits(RingPtr ring, std::span<const std::int64_t> digits);
  /// Uniform element of O_E / π^N.
  static PadicScalar random(RingPtr ring, std::mt19937_64& rng);

  const ScalarRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  int absolute_precision() const { return prec_; }
  bool is_exact_zero() const { return exact_zero_; }

  /// True when the value vanishes modulo π^prec.
  bool is_zero() const;
  bool is_unit() const { return pi_valuation() == 0 && prec_ > 0; }

  /// π-adic valuation, or the absolute precision when the value is zero at precision.
  int pi_valuation() const;

  /// Valuation normalized by v(p) = 1: exact below the cap, a lower bound at it, ∞ for exact zero.
  PValue valuation() const;

  PadicScalar operator+(const PadicScalar& o) const;
  PadicScalar operator-(const PadicScalar& o) const;
  PadicScalar operator*(const PadicScalar& o) const;
  PadicScalar operator-() const;
  PadicScalar& operator+=(const PadicScalar& o) { return *this = *this + o; }
  PadicScalar& operator-=(const PadicScalar& o) { return *this = *this - o; }
  PadicScalar& operator*=(const PadicScalar& o) { return *this = *this * o; }

  /// Equality modulo π^min(prec).
  bool operator==(const PadicScalar& o) const;

  /// Same precision and same digits.
  bool identical(const PadicScalar& o) const;

  /// Inverse of a unit; throws DomainError for non-units.
  PadicScalar inverse() const;

  /// Non-negative powers for any element; negative powers for units.
  PadicScalar pow(const Integer& e) const;
  PadicScalar pow(std::int64_t e) const { return pow(Integer(e)); }

  /// Exact division by π^k; requires π^k | x and loses k digits of precision.
  PadicScalar divide_by_pi_power(int k) const;

  /// Exact division x / d inside O_E (field mode restricted to integral results).
  PadicScalar divide_exact(const PadicScalar& d) const;

  PadicScalar multiply_by_integer(const Integer& k) const;

  /// Reduces to a smaller absolute precision.
  PadicScalar with_precision(int prec) const;

  /// Re-interprets the stored representative in another ring with the same
  /// p and m. With as_exact the representative is treated as known to the
  /// target's full precision.
  PadicScalar lift_to(RingPtr target, bool as_exact) const;

  /// Embeds an element of Z_p into a ramified ring with the same p.
  PadicScalar embed_into(RingPtr target) const;

  /// π-adic digits d_0, ..., d_{prec-1} in [0, p).
  std::vector<std::int64_t> digits() const;

  /// Representative in [0, p^prec) for m = 1.
  std::int64_t residue() const;

  /// "d0 + d1*p + d2*p^2 + O(p^N)" (symbol "pi" when m > 1).
  std::string to_string() const;

  const Coeffs& coefficients() const { return c_; }

private:
  PadicScalar(RingPtr ring, Coeffs c, int prec, bool exact_zero);
  void normalize();
  void require_same_ring(const PadicScalar& o) const;

  RingPtr ring_;
  Coeffs c_;
  int prec_ = 0;
  bool exact_zero_ = false;
};

/// Exponential series Σ x^n/n!; requires v(x) > 1/(p-1). Isometric on its domain.
PadicScalar exp(const PadicScalar& x);

/// Logarithm log(1 + y); requires v(u - 1) > 1/(p-1). Inverse of exp on that domain.
PadicScalar log(const PadicScalar& u);

/// u^c := exp(c·log u) for u ≡ 1 and p-integral rational c.
PadicScalar rational_power(const PadicScalar& u, const Rational& c);

/// Accepts "a", "a/b" or a digit expansion as produced by to_string().
PadicScalar parse_scalar(RingPtr ring, std::string_view text);

}  // namespace iwahori::padic
