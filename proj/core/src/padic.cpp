#include "iwahori/padic.hpp"

#include "iwahori/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace iwahori::padic {

namespace {

__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t mod) {
  return static_cast<std::int64_t>(static_cast<u128>(a) * static_cast<u128>(b) % static_cast<u128>(mod));
}

std::int64_t addmod(std::int64_t a, std::int64_t b, std::int64_t mod) {
  std::int64_t s = a + b;  // a, b < 2^62
  return s >= mod ? s - mod : s;
}

std::int64_t reduce(std::int64_t a, std::int64_t mod) {
  std::int64_t r = a % mod;
  return r < 0 ? r + mod : r;
}

std::int64_t reduce(const Integer& a, std::int64_t mod) {
  Integer r = a % mod;
  if (r < 0) r += mod;
  return static_cast<std::int64_t>(r);
}

// Inverse of a modulo mod, gcd(a, mod) = 1.
std::int64_t invmod(std::int64_t a, std::int64_t mod) {
  i128 t = 0, new_t = 1, r = mod, new_r = a;
  while (new_r != 0) {
    i128 q = r / new_r;
    i128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw DomainError("not invertible modulo p^k");
  if (t < 0) t += mod;
  return static_cast<std::int64_t>(t);
}

int vp(std::int64_t a, std::int64_t p) {
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

int vp_factorial(std::int64_t n, std::int64_t p) {
  int v = 0;
  for (std::int64_t q = p; q <= n; q *= p) v += static_cast<int>(n / q);
  return v;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ScalarRing::ScalarRing(std::int64_t p, int ramification, int precision)
    : p_(p), m_(ramification), n_(precision) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
  if (m_ < 1) throw std::invalid_argument("ramification must be >= 1");
  if (n_ < 1) throw std::invalid_argument("precision must be >= 1");
  int k = (n_ + m_ - 1) / m_;
  powers_.push_back(1);
  for (int i = 1; i <= k; ++i) {
    if (powers_.back() > (std::int64_t{1} << 62) / p)
      throw std::invalid_argument("precision too large for 64-bit coefficients");
    powers_.push_back(powers_.back() * p);
  }
}

int ScalarRing::digits_for(int prec, int i) const {
  int d = prec - i;
  if (d <= 0) return 0;
  return (d + m_ - 1) / m_;
}

RingPtr make_ring(std::int64_t p, int ramification, int precision) {
  return std::make_shared<const ScalarRing>(p, ramification, precision);
}

PadicScalar::PadicScalar(RingPtr ring, Coeffs c, int prec, bool exact_zero)
    : ring_(std::move(ring)), c_(std::move(c)), prec_(prec), exact_zero_(exact_zero) {
  normalize();
}

void PadicScalar::normalize() {
  const auto& r = *ring_;
  c_.resize(static_cast<std::size_t>(r.ramification()), 0);
  prec_ = std::clamp(prec_, 0, r.precision());
  for (int i = 0; i < r.ramification(); ++i)
    c_[static_cast<std::size_t>(i)] = reduce(c_[static_cast<std::size_t>(i)], r.prime_power(r.digits_for(prec_, i)));
}

void PadicScalar::require_same_ring(const PadicScalar& o) const {
  if (!(*ring_ == *o.ring_)) throw std::invalid_argument("scalars from different rings");
}

PadicScalar PadicScalar::zero(RingPtr ring) {
  int n = ring->precision();
  return PadicScalar(std::move(ring), {}, n, true);
}

PadicScalar PadicScalar::one(RingPtr ring) { return from_integer(std::move(ring), Integer(1)); }

PadicScalar PadicScalar::from_integer(RingPtr ring, const Integer& n) {
  Coeffs c(static_cast<std::size_t>(ring->ramification()), 0);
  c[0] = reduce(n, ring->prime_power(ring->max_digits()));
  int prec = ring->precision();
  return PadicScalar(std::move(ring), std::move(c), prec, n == 0);
}

PadicScalar PadicScalar::from_rational(RingPtr ring, const Rational& q) {
  if (q == 0) return zero(std::move(ring));
  const std::int64_t p = ring->prime();
  if (denominator(q) % p == 0) throw DomainError("rational " + iwahori::to_string(q) + " is not p-integral");
  std::int64_t mod = ring->prime_power(ring->max_digits());
  std::int64_t num = reduce(numerator(q), mod);
  std::int64_t den = reduce(denominator(q), mod);
  Coeffs c(static_cast<std::size_t>(ring->ramification()), 0);
  c[0] = mulmod(num, invmod(den, mod), mod);
  int prec = ring->precision();
  return PadicScalar(std::move(ring), std::move(c), prec, false);
}

PadicScalar PadicScalar::uniformizer(RingPtr ring) {
  Coeffs c(static_cast<std::size_t>(ring->ramification()), 0);
  if (ring->ramification() == 1)
    c[0] = ring->prime();
  else
    c[1] = 1;
  int prec = ring->precision();
  return PadicScalar(std::move(ring), std::move(c), prec, false);
}

PadicScalar PadicScalar::from_digits(RingPtr ring, std::span<const std::int64_t> digits) {
  const int m = ring->ramification();
  Coeffs c(static_cast<std::size_t>(m), 0);
  for (std::size_t k = 0; k < digits.size() && static_cast<int>(k) < ring->precision(); ++k) {
    int i = static_cast<int>(k) % m;
    int e = static_cast<int>(k) / m;
    std::int64_t mod = ring->prime_power(ring->max_digits());
    c[static_cast<std::size_t>(i)] = addmod(c[static_cast<std::size_t>(i)], mulmod(reduce(digits[k], mod), ring->prime_power(e), mod), mod);
  }
  int prec = ring->precision();
  return PadicScalar(std::move(ring), std::move(c), prec, false);
}

PadicScalar PadicScalar::random(RingPtr ring, std::mt19937_64& rng) {
  std::vector<std::int64_t> d(static_cast<std::size_t>(ring->precision()));
  const auto p = static_cast<std::uint64_t>(ring->prime());
  // Rejection sampling keeps the draw independent of the standard library's distributions.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % p;
  for (auto& x : d) {
    std::uint64_t r;
    do r = rng(); while (r >= limit);
    x = static_cast<std::int64_t>(r % p);
  }
  return from_digits(std::move(ring), d);
}

bool PadicScalar::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t v) { return v == 0; });
}

int PadicScalar::pi_valuation() const {
  const int m = ring_->ramification();
  int best = prec_;
  for (int i = 0; i < m; ++i) {
    std::int64_t v = c_[static_cast<std::size_t>(i)];
    if (v != 0) best = std::min(best, m * vp(v, ring_->prime()) + i);
  }
  return best;
}

PValue PadicScalar::valuation() const {
  if (exact_zero_) return PValue::infinite();
  const int m = ring_->ramification();
  int v = pi_valuation();
  if (is_zero()) return PValue::at_least(Rational(prec_, m));
  return PValue::finite(Rational(v, m));
}

PadicScalar PadicScalar::operator+(const PadicScalar& o) const {
  require_same_ring(o);
  if (exact_zero_) return o;
  if (o.exact_zero_) return *this;
  int prec = std::min(prec_, o.prec_);
  Coeffs c(c_.size());
  std::int64_t mod = ring_->prime_power(ring_->max_digits());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = addmod(c_[i], o.c_[i], mod);
  return PadicScalar(ring_, std::move(c), prec, false);
}

PadicScalar PadicScalar::operator-() const {
  Coeffs c(c_.size());
  std::int64_t mod = ring_->prime_power(ring_->max_digits());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = c_[i] == 0 ? 0 : mod - c_[i];
  return PadicScalar(ring_, std::move(c), prec_, exact_zero_);
}

PadicScalar PadicScalar::operator-(const PadicScalar& o) const { return *this + (-o); }

PadicScalar PadicScalar::operator*(const PadicScalar& o) const {
  require_same_ring(o);
  if (exact_zero_) return *this;
  if (o.exact_zero_) return o;
  const int m = ring_->ramification();
  const std::int64_t p = ring_->prime();
  const std::int64_t mod = ring_->prime_power(ring_->max_digits());
  int prec = std::min({prec_ + o.pi_valuation(), o.prec_ + pi_valuation(), ring_->precision()});
  Coeffs c(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    if (c_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < m; ++j) {
      std::int64_t t = mulmod(c_[static_cast<std::size_t>(i)], o.c_[static_cast<std::size_t>(j)], mod);
      int k = i + j;
      if (k >= m) {
        t = mulmod(t, p, mod);
        k -= m;
      }
      c[static_cast<std::size_t>(k)] = addmod(c[static_cast<std::size_t>(k)], t, mod);
    }
  }
  return PadicScalar(ring_, std::move(c), prec, false);
}

bool PadicScalar::operator==(const PadicScalar& o) const {
  require_same_ring(o);
  if (exact_zero_ && o.exact_zero_) return true;
  int prec = std::min(prec_, o.prec_);
  return (with_precision(prec) - o.with_precision(prec)).is_zero();
}

bool PadicScalar::identical(const PadicScalar& o) const {
  return *ring_ == *o.ring_ && prec_ == o.prec_ && c_ == o.c_ && exact_zero_ == o.exact_zero_;
}

PadicScalar PadicScalar::inverse() const {
  if (!is_unit()) throw DomainError("inverse of a non-unit: " + to_string());
  const std::int64_t mod = ring_->prime_power(ring_->max_digits());
  if (ring_->ramification() == 1) {
    Coeffs c{invmod(c_[0], mod)};
    return PadicScalar(ring_, std::move(c), prec_, false);
  }
  // Newton iteration y <- y(2 - xy) doubles the number of correct digits.
  Coeffs c(c_.size(), 0);
  c[0] = invmod(c_[0] % ring_->prime(), ring_->prime());
  PadicScalar y(ring_, std::move(c), ring_->precision(), false);
  PadicScalar x = lift_to(ring_, true);
  PadicScalar two = from_integer(ring_, 2);
  for (int correct = 1; correct < ring_->precision(); correct *= 2) y = y * (two - x * y);
  y = y * (two - x * y);
  return y.with_precision(prec_);
}

PadicScalar PadicScalar::pow(const Integer& e) const {
  if (e < 0) return inverse().pow(Integer(-e));
  PadicScalar result = one(ring_);
  PadicScalar base = *this;
  Integer k = e;
  while (k > 0) {
    if ((k & 1) != 0) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

PadicScalar PadicScalar::divide_by_pi_power(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (exact_zero_) return *this;
  if (pi_valuation() < k) throw DomainError("not divisible by pi^" + std::to_string(k) + ": " + to_string());
  const int m = ring_->ramification();
  const std::int64_t p = ring_->prime();
  Coeffs c = c_;
  for (int step = 0; step < k; ++step) {
    std::int64_t c0 = c[0];
    for (int i = 0; i + 1 < m; ++i) c[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i) + 1];
    c[static_cast<std::size_t>(m) - 1] = c0 / p;
  }
  return PadicScalar(ring_, std::move(c), prec_ - k, false);
}

PadicScalar PadicScalar::divide_exact(const PadicScalar& d) const {
  require_same_ring(d);
  if (d.is_zero()) throw DomainError("division by zero at precision");
  int k = d.pi_valuation();
  return divide_by_pi_power(k) * d.divide_by_pi_power(k).inverse();
}

PadicScalar PadicScalar::multiply_by_integer(const Integer& k) const { return *this * from_integer(ring_, k); }

PadicScalar PadicScalar::with_precision(int prec) const {
  if (prec >= prec_) return *this;
  return PadicScalar(ring_, c_, prec, exact_zero_);
}

PadicScalar PadicScalar::lift_to(RingPtr target, bool as_exact) const {
  if (target->prime() != ring_->prime() || target->ramification() != ring_->ramification())
    throw std::invalid_argument("lift between incompatible rings");
  int prec = as_exact ? target->precision() : std::min(prec_, target->precision());
  return PadicScalar(std::move(target), c_, prec, exact_zero_);
}

PadicScalar PadicScalar::embed_into(RingPtr target) const {
  if (ring_->ramification() != 1 || target->prime() != ring_->prime())
    throw std::invalid_argument("embedding requires a Z_p source with the same prime");
  Coeffs c(static_cast<std::size_t>(target->ramification()), 0);
  c[0] = c_[0];
  int prec = prec_ * target->ramification();
  return PadicScalar(std::move(target), std::move(c), prec, exact_zero_);
}

std::vector<std::int64_t> PadicScalar::digits() const {
  std::vector<std::int64_t> out;
  PadicScalar x = *this;
  const std::int64_t p = ring_->prime();
  for (int k = 0; k < prec_; ++k) {
    std::int64_t d = x.c_[0] % p;
    out.push_back(d);
    if (k + 1 == prec_) break;
    Coeffs c = x.c_;
    c[0] -= d;
    x = PadicScalar(ring_, std::move(c), x.prec_, false).divide_by_pi_power(1);
  }
  return out;
}

std::int64_t PadicScalar::residue() const {
  if (ring_->ramification() != 1) throw std::logic_error("residue() requires m = 1");
  return c_[0];
}

std::string PadicScalar::to_string() const {
  if (exact_zero_) return "0";
  const std::string sym = ring_->ramification() == 1 ? "p" : "pi";
  std::string out;
  auto d = digits();
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += std::to_string(d[k]);
    if (k == 1) out += "*" + sym;
    if (k > 1) out += "*" + sym + "^" + std::to_string(k);
  }
  if (!out.empty()) out += " + ";
  out += "O(" + sym + "^" + std::to_string(prec_) + ")";
  return out;
}

namespace {

// Working ring with guard digits; the guard absorbs divisions by p inside a series.
RingPtr guard_ring(const ScalarRing& r, int target, int guard) {
  try {
    return make_ring(r.prime(), r.ramification(), target + guard);
  } catch (const std::invalid_argument&) {
    throw PrecisionError("series needs " + std::to_string(guard) + " guard digits beyond 64-bit coefficients");
  }
}

int floor_log(std::int64_t n, std::int64_t p) {
  int k = 0;
  for (std::int64_t q = p; q <= n; q *= p) ++k;
  return k;
}

PadicScalar divide_by_integer(const PadicScalar& x, std::int64_t n) {
  const auto& r = x.ring();
  int k = vp(n, r.prime());
  for (int i = 0; i < k; ++i) n /= r.prime();
  return x.divide_by_pi_power(r.ramification() * k) * PadicScalar::from_integer(x.ring_ptr(), n).inverse();
}

}  // namespace

PadicScalar exp(const PadicScalar& x) {
  const auto& r = x.ring();
  const int m = r.ramification();
  const std::int64_t p = r.prime();
  if (x.is_exact_zero()) return PadicScalar::one(x.ring_ptr());
  const std::int64_t v = x.pi_valuation();
  if (v * (p - 1) <= m) throw DomainError("exp needs v(x) > 1/(p-1), got " + x.valuation().to_string());
  const int target = x.absolute_precision();
  // v(x^n/n!) >= n*v - m*(n-1)/(p-1), increasing in n; later terms vanish modulo π^target.
  std::int64_t n_max = 0;
  while ((n_max + 1) * v * (p - 1) - m * n_max < static_cast<std::int64_t>(target) * (p - 1)) ++n_max;
  auto work = guard_ring(r, target, m * vp_factorial(n_max, p));
  PadicScalar y = x.lift_to(work, true);
  PadicScalar term = PadicScalar::one(work);
  PadicScalar sum = term;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    term = divide_by_integer(term * y, n);
    sum += term;
  }
  return sum.with_precision(target).lift_to(x.ring_ptr(), false);
}

PadicScalar log(const PadicScalar& u) {
  const auto& r = u.ring();
  const int m = r.ramification();
  const std::int64_t p = r.prime();
  const PadicScalar y = u - PadicScalar::one(u.ring_ptr());
  const std::int64_t v = y.pi_valuation();
  if (v * (p - 1) <= m) throw DomainError("log needs v(u-1) > 1/(p-1), got " + y.valuation().to_string());
  const int target = u.absolute_precision();
  if (v >= target) return PadicScalar::zero(u.ring_ptr()).with_precision(target);
  // v(y^n/n) >= n*v - m*floor(log_p n); keep every n where this can fall below target.
  std::int64_t n_max = 1;
  const std::int64_t scan = 4 * (target + 8 * m) + 64;
  for (std::int64_t n = 1; n <= scan; ++n)
    if (n * v - m * floor_log(n, p) < target) n_max = n;
  auto work = guard_ring(r, target, m * floor_log(n_max, p));
  PadicScalar z = y.lift_to(work, true);
  PadicScalar power = z;
  PadicScalar sum = PadicScalar::zero(work);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    if (n > 1) power *= z;
    PadicScalar term = divide_by_integer(power, n);
    sum = (n % 2 == 1) ? sum + term : sum - term;
  }
  return sum.with_precision(target).lift_to(u.ring_ptr(), false);
}

PadicScalar rational_power(const PadicScalar& u, const Rational& c) {
  if (c == 0) return PadicScalar::one(u.ring_ptr()).with_precision(u.absolute_precision());
  return exp(log(u) * PadicScalar::from_rational(u.ring_ptr(), c));
}

PadicScalar parse_scalar(RingPtr ring, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty scalar");
  if (s.find("O(") == std::string::npos && s.find('*') == std::string::npos && s.find('p') == std::string::npos)
    return PadicScalar::from_rational(std::move(ring), parse_rational(s));
  // Digit expansion: terms separated by '+'.
  const std::string sym = ring->ramification() == 1 ? "p" : "pi";
  std::vector<std::int64_t> digits(static_cast<std::size_t>(ring->precision()), 0);
  int prec = ring->precision();
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find('+', pos);
    std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    pos = next == std::string::npos ? s.size() + 1 : next + 1;
    if (term.empty()) throw std::invalid_argument("bad digit expansion: " + std::string(text));
    if (term.rfind("O(", 0) == 0) {
      std::string inner = term.substr(2, term.size() - 3);
      if (inner.rfind(sym, 0) != 0) throw std::invalid_argument("bad precision term: " + term);
      std::string rest = inner.substr(sym.size());
      prec = rest.empty() ? 1 : std::stoi(rest.substr(1));
      continue;
    }
    std::int64_t coeff = 0;
    int exponent = 0;
    auto star = term.find('*');
    if (star == std::string::npos) {
      if (term.rfind(sym, 0) == 0) {
        coeff = 1;
        std::string rest = term.substr(sym.size());
        exponent = rest.empty() ? 1 : std::stoi(rest.substr(1));
      } else {
        coeff = std::stoll(term);
      }
    } else {
      coeff = std::stoll(term.substr(0, star));
      std::string rest = term.substr(star + 1);
      if (rest.rfind(sym, 0) != 0) throw std::invalid_argument("bad term: " + term);
      rest = rest.substr(sym.size());
      exponent = rest.empty() ? 1 : std::stoi(rest.substr(1));
    }
    if (exponent < 0 || exponent >= ring->precision()) throw std::invalid_argument("exponent out of range: " + term);
    digits[static_cast<std::size_t>(exponent)] += coeff;
  }
  return PadicScalar::from_digits(ring, digits).with_precision(prec);
}

}  // namespace iwahori::padic
