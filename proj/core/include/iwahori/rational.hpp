#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace iwahori {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// p-adic valuation of a nonzero integer.
int valuation(const Integer& n, std::int64_t p);

/// p-adic valuation of a nonzero rational (may be negative).
int valuation(const Rational& q, std::int64_t p);

/// Canonical text form: "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);

/// Parses "a", "-a" or "a/b". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// True when q is a positive integer (1, 2, 3, ...).
bool is_positive_integer(const Rational& q);

/// A value in Q ∪ {∞} that may only be known as a lower bound.
///
/// Used both for scalar valuations and for the p-valuation ω on groups.
/// A lower bound arises when a quantity is zero at the working precision.
class PValue {
public:
  enum class Kind { Finite, AtLeast, Infinite };

  static PValue finite(Rational v) { return PValue(Kind::Finite, std::move(v)); }
  static PValue at_least(Rational v) { return PValue(Kind::AtLeast, std::move(v)); }
  static PValue infinite() { return PValue(Kind::Infinite, Rational(0)); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_lower_bound() const { return kind_ == Kind::AtLeast; }
  bool is_infinite() const { return kind_ == Kind::Infinite; }

  /// The exact value (Finite) or the bound (AtLeast). Meaningless for ∞.
  const Rational& value() const { return value_; }

  /// Shifts by an exact rational; ∞ stays ∞.
  PValue operator+(const Rational& shift) const;

  /// Sum of two values, as needed for ω(g) + ω(h).
  PValue operator+(const PValue& other) const;

  std::string to_string() const;

  friend bool operator==(const PValue&, const PValue&) = default;

private:
  PValue(Kind k, Rational v) : kind_(k), value_(std::move(v)) {}
  Kind kind_;
  Rational value_;
};

/// Minimum of values where some are only lower bounds.
///
/// The result is exact when the smallest exact value does not exceed any bound.
PValue min_of(const PValue& a, const PValue& b);

/// Three-way outcome of an exact comparison that may be undecidable at the cap.
enum class Decision { True, False, Undecided };

/// Decides a >= b.
Decision greater_equal(const PValue& a, const PValue& b);

/// Decides a == b (both must be exact or infinite to decide equality).
Decision equal(const PValue& a, const PValue& b);

/// Decides a > b.
Decision greater(const PValue& a, const PValue& b);

}  // namespace iwahori
