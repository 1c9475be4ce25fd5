#include "iwahori/rigid_series.hpp"

#include "iwahori/errors.hpp"

#include <algorithm>
#include <numeric>

namespace iwahori {

namespace {

Rational scaled(const Rational& c, const Rational& q) { return c * q; }

PadicScalar scaled(const PadicScalar& c, const Rational& q) {
  return c * PadicScalar::from_rational(c.ring_ptr(), q);
}

Integer factorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Integer binomial(int n, int k) {
  Integer b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

MultiIndex zero_index(std::size_t n) { return MultiIndex(n, 0); }

Polynomial constant(std::size_t n, const Rational& q) {
  Polynomial f(n, Polynomial::kUntruncated);
  f.set(zero_index(n), q);
  return f;
}

Polynomial variable(std::size_t n, std::size_t r, const Rational& scale) {
  Polynomial f(n, Polynomial::kUntruncated);
  MultiIndex i = zero_index(n);
  i[r] = 1;
  f.set(i, scale);
  return f;
}

using PolyMatrix = Matrix<Polynomial>;

PolyMatrix poly_unipotent(GroupType type, std::size_t size, const IntVec& root, const Polynomial& x) {
  const auto n = x.nvars();
  auto m = PolyMatrix::identity(size, constant(n, 0), constant(n, 1));
  for (auto [i, j, s] : root_matrix_entries(type, root))
    m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = s > 0 ? x : constant(n, 0) - x;
  return m;
}

/// Parameters of u = Π_r u_{roots[r]}(x_r) read off level by level.
std::vector<Polynomial> peel_parameters(const ChevalleyGroup& g, const WeylElement& w, PolyMatrix u,
                                        const std::vector<IntVec>& roots) {
  const auto type = g.type();
  const auto size = u.rows();
  const auto n = u(0, 0).nvars();
  std::vector<Polynomial> out;
  std::size_t start = 0;
  while (start < roots.size()) {
    const int level = g.batch_level(w, roots[start]);
    std::size_t end = start;
    while (end < roots.size() && g.batch_level(w, roots[end]) == level) ++end;
    auto strip = PolyMatrix::identity(size, constant(n, 0), constant(n, 1));
    for (std::size_t k = start; k < end; ++k) {
      auto [i, j, s] = root_matrix_entries(type, roots[k]).front();
      Polynomial x = u(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (s < 0) x = constant(n, 0) - x;
      strip = poly_unipotent(type, size, roots[k], constant(n, 0) - x) * strip;
      out.push_back(std::move(x));
    }
    u = strip * u;
    start = end;
  }
  if (!(u == PolyMatrix::identity(size, constant(n, 0), constant(n, 1))))
    throw std::logic_error("translate: product left the root-group batch");
  return out;
}

}  // namespace

int total_degree(const MultiIndex& index) { return std::accumulate(index.begin(), index.end(), 0); }

PValue coefficient_valuation(const Rational& c, std::int64_t p) {
  if (c == 0) return PValue::infinite();
  return PValue::finite(Rational(valuation(c, p)));
}

PadicSeries to_padic(const RationalSeries& f, const RingPtr& ring) {
  PadicSeries out(f.nvars(), f.degree_cap());
  for (const auto& [i, c] : f.terms()) out.set(i, PadicScalar::from_rational(ring, c));
  return out;
}

SeriesContext::SeriesContext(GroupType group, std::int64_t p, const std::string& w_word, RatVec chi, int precision)
    : group_(std::make_shared<const ChevalleyGroup>(group, p, precision)) {
  const auto& d = group_->datum();
  w_ = &d.parse_word(w_word);
  mu_ = d.adapted_cocharacter(*w_);
  roots_ = group_->batch(*w_, true);
  for (const auto& r : roots_) mu_pairings_.push_back(pairing(r, mu_));
  if (chi.empty()) chi.assign(static_cast<std::size_t>(d.ambient_dim()), Rational(0));
  if (chi.size() != static_cast<std::size_t>(d.ambient_dim()))
    throw std::invalid_argument("character has the wrong number of coordinates");
  chi_ = d.normalize_character(chi);
  wchi_ = w_->act(chi_);
  for (const auto& c : wchi_)
    if (!is_rigid_component(c, p)) throw DomainError("character is not rigid analytic on the torus: " + to_string(c));
}

int SeriesContext::max_mu_pairing() const {
  return mu_pairings_.empty() ? 0 : *std::max_element(mu_pairings_.begin(), mu_pairings_.end());
}

bool is_rigid_component(const Rational& c, std::int64_t p) {
  if (c == 0) return true;
  return Rational(valuation(c, p)) > Rational(1, p - 1) - 1;
}

CharacterExpansion character_expand(const Rational& c, std::int64_t p, int r_max) {
  CharacterExpansion e;
  e.rigid = is_rigid_component(c, p);
  Rational pc = c * p;
  Rational power = 1;
  for (int r = 0; r <= r_max; ++r) {
    e.gammas.push_back(power / Rational(factorial(r)));
    power *= pc;
  }
  return e;
}

Integer lambda_eigenvalue(const SeriesContext& ctx, const MultiIndex& index) {
  Integer l = 0;
  for (std::size_t r = 0; r < index.size(); ++r) l += Integer(ctx.mu_pairings()[r]) * index[r];
  return l;
}

PValue slope(const SeriesContext& ctx, const MultiIndex& index) {
  Integer l = lambda_eigenvalue(ctx, index);
  if (l == 0) return PValue::infinite();
  return PValue::finite(Rational(valuation(l, ctx.prime())));
}

std::vector<PadicScalar> torus_from_coroot_coordinates(const SeriesContext& ctx, const std::vector<PadicScalar>& z) {
  const auto& d = ctx.datum();
  const auto& simple = d.simple_roots();
  if (z.size() != simple.size()) throw std::invalid_argument("one coordinate per simple coroot is required");
  const auto& ring = z.front().ring_ptr();
  std::vector<PadicScalar> t(static_cast<std::size_t>(d.ambient_dim()), PadicScalar::one(ring));
  const auto p = PadicScalar::from_integer(ring, ctx.prime());
  for (std::size_t k = 0; k < simple.size(); ++k) {
    const auto& coroot = d.positive_roots()[simple[k]].coroot;
    PadicScalar e = padic::exp(z[k] * p);
    for (std::size_t j = 0; j < coroot.size(); ++j)
      if (coroot[j] != 0) t[j] *= e.pow(coroot[j]);
  }
  return t;
}

PadicSeries torus_action(const SeriesContext& ctx, const std::vector<PadicScalar>& t, const PadicSeries& f) {
  if (t.size() != ctx.twisted_character().size()) throw std::invalid_argument("torus coordinates have the wrong length");
  const auto& ring = t.front().ring_ptr();
  PadicScalar chi_t = PadicScalar::one(ring);
  for (std::size_t k = 0; k < t.size(); ++k)
    if (ctx.twisted_character()[k] != 0) chi_t *= padic::rational_power(t[k], ctx.twisted_character()[k]);
  // (wα_r)(t)⁻¹ per variable.
  std::vector<PadicScalar> inv_root_values;
  for (const auto& r : ctx.roots()) inv_root_values.push_back(ctx.group().character_value(r, t).inverse());
  return f.transform([&](const MultiIndex& i, const PadicScalar& c) {
    PadicScalar m = chi_t;
    for (std::size_t r = 0; r < i.size(); ++r)
      if (i[r] != 0) m *= inv_root_values[r].pow(i[r]);
    return c * m;
  });
}

LieVector lie_vector(const SeriesContext& ctx, const RatVec& h) {
  LieVector v;
  for (const auto& r : ctx.roots()) v.root_values.push_back(pairing(h, r));
  v.character_value = 0;
  for (std::size_t k = 0; k < h.size(); ++k) v.character_value += h[k] * ctx.twisted_character()[k];
  return v;
}

Rational lie_eigenvalue(const LieVector& h, const MultiIndex& index) {
  Rational e = h.character_value;
  for (std::size_t r = 0; r < index.size(); ++r) e -= h.root_values[r] * index[r];
  return e;
}

template <class C>
TruncatedSeries<C> lie_action(const LieVector& h, const TruncatedSeries<C>& f) {
  if (h.root_values.size() != f.nvars()) throw std::invalid_argument("Lie vector and series disagree on variables");
  return f.transform([&](const MultiIndex& i, const C& c) { return scaled(c, lie_eigenvalue(h, i)); });
}

template <class C>
SlopeSplit<C> slope_split(const SeriesContext& ctx, const TruncatedSeries<C>& f, int s) {
  const auto bound = PValue::finite(Rational(s));
  auto steep = [&](const MultiIndex& i) { return greater_equal(slope(ctx, i), bound) == Decision::True; };
  return SlopeSplit<C>{f.filter([&](const MultiIndex& i) { return !steep(i); }), f.filter(steep)};
}

template <class C>
TruncatedSeries<C> slope_exact(const SeriesContext& ctx, const TruncatedSeries<C>& f, int s) {
  const auto target = PValue::finite(Rational(s));
  return f.filter([&](const MultiIndex& i) { return slope(ctx, i) == target; });
}

PadicSeries hida_projector(const SeriesContext& ctx, const PadicSeries& f, int s, int n) {
  if (s < 0 || n < 1) throw std::invalid_argument("projector needs s >= 0 and n >= 1");
  const auto bound = PValue::finite(Rational(s));
  for (const auto& [i, c] : f.terms())
    if (greater_equal(slope(ctx, i), bound) != Decision::True)
      throw DomainError("projector input has a term of slope below " + std::to_string(s));
  const Integer ps = boost::multiprecision::pow(Integer(ctx.prime()), static_cast<unsigned>(s));
  const Integer exponent = Integer(ctx.prime() - 1) * factorial(n);
  return f.transform([&](const MultiIndex& i, const PadicScalar& c) {
    Integer l = lambda_eigenvalue(ctx, i) / ps;
    return c * PadicScalar::from_integer(c.ring_ptr(), l).pow(exponent);
  });
}

Polynomial translate_action(const SeriesContext& ctx, const std::vector<Rational>& u0, const Polynomial& f) {
  const auto n = ctx.nvars();
  if (u0.size() != n || f.nvars() != n) throw std::invalid_argument("translation needs one coordinate per root");
  const auto& g = ctx.group();
  const auto& d = ctx.datum();
  const auto size = static_cast<std::size_t>(d.matrix_size());
  const auto& roots = ctx.roots();
  std::vector<Rational> scale;
  for (const auto& r : roots) scale.push_back(d.is_positive(r) ? Rational(1) : Rational(ctx.prime()));

  auto h = PolyMatrix::identity(size, constant(n, 0), constant(n, 1));
  auto u = h;
  for (std::size_t r = 0; r < n; ++r) {
    h = h * poly_unipotent(g.type(), size, roots[r], variable(n, r, scale[r]));
    u = u * poly_unipotent(g.type(), size, roots[r], constant(n, scale[r] * u0[r]));
  }
  auto params = peel_parameters(g, ctx.w(), h * u, roots);

  // Coordinates of h(z)·u₀, and their powers as needed.
  std::vector<std::vector<Polynomial>> powers(n);
  for (std::size_t r = 0; r < n; ++r) {
    const Rational inv = 1 / scale[r];
    powers[r].push_back(constant(n, 1));
    powers[r].push_back(params[r].transform([&](const MultiIndex&, const Rational& c) { return c * inv; }));
  }
  auto power = [&](std::size_t r, int k) -> const Polynomial& {
    while (static_cast<int>(powers[r].size()) <= k) powers[r].push_back(powers[r].back() * powers[r][1]);
    return powers[r][static_cast<std::size_t>(k)];
  };

  Polynomial out(n, Polynomial::kUntruncated);
  for (const auto& [i, c] : f.terms()) {
    Polynomial term = constant(n, c);
    for (std::size_t r = 0; r < n; ++r)
      if (i[r] != 0) term = term * power(r, i[r]);
    out = out + term;
  }
  return out;
}

template <class C>
ConstantsLimitReport constants_limit_check(const SeriesContext& ctx, const TruncatedSeries<C>& f, int s_max) {
  const MultiIndex origin = zero_index(f.nvars());
  const C* c0 = f.find(origin);
  if (c0 == nullptr || is_zero_value(*c0)) throw std::invalid_argument("series needs a nonzero constant term");
  int degree = f.degree_cap();
  if (degree < 0) {
    degree = 0;
    for (const auto& [i, c] : f.terms()) degree = std::max(degree, total_degree(i));
  }
  ConstantsLimitReport rep;
  const Integer reach = Integer(degree) * ctx.max_mu_pairing();
  Integer ps = 1;
  while (ps <= reach) {
    ps *= ctx.prime();
    ++rep.bound;
  }
  const int last = std::max(s_max, rep.bound);
  const auto constant_part = f.filter([&](const MultiIndex& i) { return i == origin; });
  rep.monotone = true;
  rep.exact_from_bound = true;
  for (int s = 0; s <= last; ++s) {
    const auto diff = slope_split(ctx, f, s).at_least - constant_part;
    const auto dist = gauss_valuation(diff, ctx.prime());
    if (!rep.distances.empty() && greater_equal(dist, rep.distances.back()) == Decision::False) rep.monotone = false;
    if (s >= rep.bound && !(diff == TruncatedSeries<C>(f.nvars(), f.degree_cap()))) rep.exact_from_bound = false;
    rep.distances.push_back(dist);
  }
  return rep;
}

HaarReport haar_obstruction(int degree) {
  if (degree < 0) throw std::invalid_argument("degree must be non-negative");
  HaarReport rep;
  rep.degree = degree;
  rep.unknowns = static_cast<std::size_t>(degree) + 1;
  rep.equations = rep.unknowns;
  RationalMatrix a(rep.equations, rep.unknowns, Rational(0));
  for (int k = 1; k <= degree + 1; ++k)
    for (int i = 0; i < k; ++i) a(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(i)) = Rational(binomial(k, i));
  rep.rank = rank(a);
  rep.null_dimension = null_space(a).size();
  if (rep.null_dimension == 0) rep.solution = *solve_unique(a, RationalVector(rep.equations, Rational(0)));
  return rep;
}

namespace {

MultiIndex random_index(std::size_t n, int degree, std::mt19937_64& rng) {
  MultiIndex i(n, 0);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int k = 0; k < degree; ++k) ++i[pick(rng)];
  return i;
}

template <class C, class Draw>
TruncatedSeries<C> random_series(std::size_t n, int degree, std::size_t terms, std::mt19937_64& rng,
                                 bool constant_term, Draw draw) {
  TruncatedSeries<C> f(n, degree);
  std::uniform_int_distribution<int> deg(1, std::max(degree, 1));
  if (constant_term) f.set(zero_index(n), draw(true));
  std::size_t attempts = 0;
  while (f.size() < terms + (constant_term ? 1 : 0) && attempts++ < 50 * terms) {
    auto i = random_index(n, std::min(deg(rng), degree), rng);
    if (total_degree(i) == 0 || f.find(i) != nullptr) continue;
    f.set(i, draw(false));
  }
  return f;
}

}  // namespace

PadicSeries random_padic_series(const SeriesContext& ctx, const RingPtr& ring, int degree, std::size_t terms,
                                std::mt19937_64& rng, bool constant_term) {
  return random_series<PadicScalar>(ctx.nvars(), degree, terms, rng, constant_term, [&](bool unit) {
    for (;;) {
      auto x = PadicScalar::random(ring, rng);
      if (unit ? x.is_unit() : !x.is_zero()) return x;
    }
  });
}

RationalSeries random_rational_series(const SeriesContext& ctx, int degree, std::size_t terms, std::mt19937_64& rng,
                                      bool constant_term) {
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 6);
  const auto p = ctx.prime();
  return random_series<Rational>(ctx.nvars(), degree, terms, rng, constant_term, [&](bool unit) {
    for (;;) {
      int a = num(rng), b = den(rng);
      if (a == 0 || b % p == 0 || (unit && a % p == 0)) continue;
      return Rational(a, b);
    }
  });
}


template RationalSeries lie_action(const LieVector&, const RationalSeries&);
template PadicSeries lie_action(const LieVector&, const PadicSeries&);
template SlopeSplit<Rational> slope_split(const SeriesContext&, const RationalSeries&, int);
template SlopeSplit<PadicScalar> slope_split(const SeriesContext&, const PadicSeries&, int);
template RationalSeries slope_exact(const SeriesContext&, const RationalSeries&, int);
template PadicSeries slope_exact(const SeriesContext&, const PadicSeries&, int);
template ConstantsLimitReport constants_limit_check(const SeriesContext&, const RationalSeries&, int);
template ConstantsLimitReport constants_limit_check(const SeriesContext&, const PadicSeries&, int);

}  // namespace iwahori
