#include "iwahori/rational.hpp"

#include <stdexcept>

namespace iwahori {

int valuation(const Integer& n, std::int64_t p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  Integer m = abs(n);
  int v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

int valuation(const Rational& q, std::int64_t p) {
  return valuation(numerator(q), p) - valuation(denominator(q), p);
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad integer: " + std::string(s));
    for (std::size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("bad integer: " + std::string(s));
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer num = parse_int(trim(text.substr(0, slash)));
  Integer den = parse_int(trim(text.substr(slash + 1)));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num, den);
}

bool is_positive_integer(const Rational& q) { return denominator(q) == 1 && q > 0; }

PValue PValue::operator+(const Rational& shift) const {
  if (is_infinite()) return *this;
  return PValue(kind_, value_ + shift);
}

PValue PValue::operator+(const PValue& other) const {
  if (is_infinite() || other.is_infinite()) return infinite();
  Kind k = (is_finite() && other.is_finite()) ? Kind::Finite : Kind::AtLeast;
  return PValue(k, value_ + other.value_);
}

std::string PValue::to_string() const {
  switch (kind_) {
    case Kind::Finite: return iwahori::to_string(value_);
    case Kind::AtLeast: return ">=" + iwahori::to_string(value_);
    case Kind::Infinite: return "inf";
  }
  return {};
}

PValue min_of(const PValue& a, const PValue& b) {
  if (a.is_infinite()) return b;
  if (b.is_infinite()) return a;
  if (a.is_finite() && b.is_finite()) return a.value() <= b.value() ? a : b;
  if (a.is_lower_bound() && b.is_lower_bound())
    return a.value() <= b.value() ? a : b;
  const PValue& f = a.is_finite() ? a : b;
  const PValue& l = a.is_finite() ? b : a;
  if (f.value() <= l.value()) return f;
  return l;
}

Decision greater_equal(const PValue& a, const PValue& b) {
  if (b.is_infinite()) return a.is_infinite() ? Decision::True : (a.is_finite() ? Decision::False : Decision::Undecided);
  if (a.is_infinite()) return Decision::True;
  if (b.is_finite()) {
    if (a.value() >= b.value()) return Decision::True;
    return a.is_finite() ? Decision::False : Decision::Undecided;
  }
  // b is only a lower bound, so a >= b can be refuted but never confirmed.
  if (a.is_finite() && a.value() < b.value()) return Decision::False;
  return Decision::Undecided;
}

Decision greater(const PValue& a, const PValue& b) {
  if (b.is_infinite()) return a.is_infinite() ? Decision::False : (a.is_finite() ? Decision::False : Decision::Undecided);
  if (a.is_infinite()) return Decision::True;
  if (b.is_finite()) {
    if (a.value() > b.value()) return Decision::True;
    return a.is_finite() ? Decision::False : Decision::Undecided;
  }
  if (a.is_finite() && a.value() <= b.value()) return Decision::False;
  return Decision::Undecided;
}

Decision equal(const PValue& a, const PValue& b) {
  if (a.is_infinite() && b.is_infinite()) return Decision::True;
  if (a.is_finite() && b.is_finite()) return a.value() == b.value() ? Decision::True : Decision::False;
  if (a.is_finite() && b.is_infinite()) return Decision::False;
  if (a.is_infinite() && b.is_finite()) return Decision::False;
  // One side is a bound: equality is refuted if the exact side is strictly below it.
  if (a.is_finite() && a.value() < b.value()) return Decision::False;
  if (b.is_finite() && b.value() < a.value()) return Decision::False;
  return Decision::Undecided;
}

}  // namespace iwahori
