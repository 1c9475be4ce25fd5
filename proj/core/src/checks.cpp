#include "iwahori/checks.hpp"

#include "iwahori/errors.hpp"

#include <algorithm>
#include <set>

namespace iwahori {

namespace {

SuiteReport make_suite(std::string name, GroupType group, std::int64_t p, int precision, std::uint64_t samples,
                       std::uint64_t seed, std::initializer_list<const char*> properties) {
  SuiteReport r{std::move(name), group, p, precision, samples, seed, {}};
  for (const char* n : properties) r.properties.push_back(PropertyTally{n});
  return r;
}

void expect(PropertyTally& t, bool ok, const std::string& detail, std::uint64_t seed = 0, std::uint64_t sample = 0) {
  if (ok)
    t.pass();
  else
    t.fail(FailureRecord{seed, sample, detail, {}});
}

void expect(PropertyTally& t, Decision d, const std::string& detail, std::uint64_t seed = 0,
            std::uint64_t sample = 0, const std::optional<Rational>& margin = std::nullopt) {
  switch (d) {
    case Decision::True: t.pass(margin); break;
    case Decision::False: t.fail(FailureRecord{seed, sample, detail, {}}); break;
    case Decision::Undecided: t.skip(); break;
  }
}

std::string index_string(const MultiIndex& i) {
  std::string s = "(";
  for (std::size_t r = 0; r < i.size(); ++r) s += (r ? "," : "") + std::to_string(i[r]);
  return s + ")";
}

void for_each_monomial(std::size_t n, int max_degree, const std::function<void(const MultiIndex&)>& f) {
  MultiIndex i(n, 0);
  std::function<void(std::size_t, int)> walk = [&](std::size_t r, int left) {
    if (r == n) {
      f(i);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      i[r] = k;
      walk(r + 1, left - k);
    }
    i[r] = 0;
  };
  walk(0, max_degree);
}

std::optional<Rational> pvalue_margin(const PValue& a, const PValue& b) {
  if (a.is_finite() && b.is_finite()) return a.value() - b.value();
  return std::nullopt;
}

}  // namespace

RatVec default_character(GroupType group) {
  switch (group) {
    case GroupType::SL2: return {Rational(1, 3), 0};
    case GroupType::SL3: return {1, Rational(1, 2), 0};
    case GroupType::Sp4: return {Rational(1, 2), 3};
  }
  throw std::invalid_argument("unknown group");
}

SuiteReport check_padic_arithmetic(std::int64_t p, int precision, std::uint64_t samples, std::uint64_t seed) {
  auto rep = make_suite("padic", GroupType::SL2, p, precision, samples, seed,
                        {"ring_identities", "unit_inverse", "exp_log_inverse", "log_homomorphism",
                         "digit_round_trip", "rational_embedding"});
  for (int m : {1, 2}) {
    auto ring = padic::make_ring(p, m, precision);
    const auto pi = PadicScalar::uniformizer(ring);
    const auto one = PadicScalar::one(ring);
    // exp converges on v > 1/(p−1); π^m = p is always inside.
    const auto small = PadicScalar::from_integer(ring, p);
    for (std::uint64_t i = 0; i < samples; ++i) {
      const auto s = sample_seed(seed, i + (m == 1 ? 0 : samples));
      std::mt19937_64 rng(s);
      auto a = PadicScalar::random(ring, rng), b = PadicScalar::random(ring, rng), c = PadicScalar::random(ring, rng);
      const std::string tag = "m=" + std::to_string(m) + " a=" + a.to_string() + " b=" + b.to_string();
      expect(rep.properties[0], (a + b) * c == a * c + b * c && (a * b) * c == a * (b * c) && a - a == PadicScalar::zero(ring),
             tag, s, i);
      auto u = a * pi + one;
      expect(rep.properties[1], u * u.inverse() == one, tag, s, i);
      auto x = b * small;
      expect(rep.properties[2], padic::log(padic::exp(x)) == x && padic::exp(padic::log(u * small + one - small)) == u * small + one - small,
             tag, s, i);
      auto v = c * small + one, w = a * small + one;
      expect(rep.properties[3], padic::log(v * w) == padic::log(v) + padic::log(w), tag, s, i);
      auto d = a.digits();
      expect(rep.properties[4], PadicScalar::from_digits(ring, d).identical(a), tag, s, i);
      if (m == 1) {
        std::uniform_int_distribution<int> num(-1000, 1000), den(1, 1000);
        int n = num(rng), k = den(rng);
        if (k % p == 0) ++k;
        auto q = PadicScalar::from_rational(ring, Rational(n, k));
        expect(rep.properties[5], q * PadicScalar::from_integer(ring, k) == PadicScalar::from_integer(ring, n),
               std::to_string(n) + "/" + std::to_string(k), s, i);
      }
    }
  }
  return rep;
}

SuiteReport check_eigenfunctions(GroupType group, std::int64_t p, int max_degree, std::uint64_t seed) {
  constexpr int kPrecision = 18;
  auto rep = make_suite("eigen", group, p, kPrecision, 0, seed, {"monomial_eigenvalue", "finite_difference"});
  const RatVec chi = default_character(group);
  const auto datum = RootDatum::make(group);
  const auto& weyl = datum.weyl_group();
  auto ring = padic::make_ring(p, 1, kPrecision);
  std::uint64_t index = 0;
  for (const auto& wb : weyl) {
    SeriesContext ctx(group, p, wb.word_string(), chi, kPrecision);
    const auto& d = ctx.datum();
    const auto& w = ctx.w();
    // Pairing values recomputed from w and the positive roots, not from the context tables.
    const auto& winv = d.inverse(w);
    std::vector<IntVec> twisted;
    for (const auto& r : ctx.roots()) {
      IntVec alpha = winv.act(r);
      if (!d.is_positive(alpha)) throw std::logic_error("variable root outside wΦ⁺");
      twisted.push_back(w.act(alpha));
    }
    const RatVec wchi = w.act(d.normalize_character(chi));
    std::mt19937_64 rng(sample_seed(seed, index++));
    RatVec random_h;
    for (std::size_t j = 0; j < chi.size(); ++j)
      random_h.emplace_back(std::uniform_int_distribution<int>(-9, 9)(rng), std::uniform_int_distribution<int>(1, 4)(rng));
    for (const RatVec& h : {RatVec(ctx.mu().begin(), ctx.mu().end()), random_h}) {
      const auto lv = lie_vector(ctx, h);
      Rational chi_h = 0;
      for (std::size_t j = 0; j < h.size(); ++j) chi_h += wchi[j] * h[j];
      for_each_monomial(ctx.nvars(), max_degree, [&](const MultiIndex& i) {
        RationalSeries f(ctx.nvars(), max_degree);
        f.set(i, 1);
        Rational expected = chi_h;
        for (std::size_t r = 0; r < i.size(); ++r) expected -= pairing(h, twisted[r]) * i[r];
        RationalSeries g(ctx.nvars(), max_degree);
        g.set(i, expected);
        expect(rep.properties[0], lie_action(lv, f) == g,
               "w = " + w.word_string() + ", I = " + index_string(i));
      });
    }
    // Finite differences along μ.
    const auto s = sample_seed(seed, index++);
    std::mt19937_64 frng(s);
    auto f = random_padic_series(ctx, ring, 8, 15, frng, true);
    auto hf = lie_action(lie_vector(ctx, RatVec(ctx.mu().begin(), ctx.mu().end())), f);
    for (int k = 3; k <= 6; ++k) {
      Integer pk = boost::multiprecision::pow(Integer(p), static_cast<unsigned>(k));
      auto e = padic::exp(PadicScalar::from_integer(ring, pk));
      std::vector<PadicScalar> t;
      for (int m : ctx.mu()) t.push_back(e.pow(m));
      auto quotient = (torus_action(ctx, t, f) - f).transform(
          [&](const MultiIndex&, const PadicScalar& c) { return c.divide_by_pi_power(k); });
      const auto err = gauss_valuation(quotient - hf, p);
      const auto bound = PValue::finite(Rational(k));
      expect(rep.properties[1], greater_equal(err, bound),
             "w = " + w.word_string() + ", k = " + std::to_string(k) + ": error valuation " + err.to_string(), s, index,
             pvalue_margin(err, bound));
    }
  }
  return rep;
}

SuiteReport check_projector(GroupType group, std::int64_t p, int precision, int degree, std::uint64_t samples,
                            std::uint64_t seed) {
  auto rep = make_suite("projector", group, p, precision, samples, seed,
                        {"convergence_bound", "idempotent", "orthogonal", "sum_to_identity", "rejects_low_slope"});
  auto ring = padic::make_ring(p, 1, precision);
  const auto datum = RootDatum::make(group);
  const auto& weyl = datum.weyl_group();
  constexpr int kMaxSlope = 2;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto s = sample_seed(seed, i);
    std::mt19937_64 rng(s);
    SeriesContext ctx(group, p, weyl[i % weyl.size()].word_string(), default_character(group), precision);
    auto f = random_padic_series(ctx, ring, degree, 40, rng, true);
    const std::string tag = "w = " + ctx.w().word_string();
    PadicSeries total(ctx.nvars(), degree);
    for (int sl = 0; sl <= kMaxSlope; ++sl) {
      auto steep = slope_split(ctx, f, sl).at_least;
      auto exact = slope_exact(ctx, f, sl);
      total = total + exact;
      Integer nf = 1;
      for (int n = 1; n <= 5; ++n) {
        nf *= n;
        const auto bound = gauss_valuation(steep, p) + Rational(1 + valuation(nf, p));
        const auto dist = gauss_valuation(hida_projector(ctx, steep, sl, n) - exact, p);
        expect(rep.properties[0], greater_equal(dist, bound),
               tag + ", s = " + std::to_string(sl) + ", n = " + std::to_string(n) + ": " + dist.to_string() + " < " +
                   bound.to_string(),
               s, i, pvalue_margin(dist, bound));
      }
      expect(rep.properties[1],
             slope_exact(ctx, exact, sl) == exact && slope_split(ctx, steep, sl).at_least == steep, tag, s, i);
      for (int other = 0; other <= kMaxSlope; ++other)
        if (other != sl) expect(rep.properties[2], slope_exact(ctx, exact, other).empty(), tag, s, i);
      auto split = slope_split(ctx, f, sl);
      expect(rep.properties[3], split.below + split.at_least == f, tag, s, i);
    }
    expect(rep.properties[3], slope_split(ctx, f, 0).below.empty() &&
                                  total + slope_split(ctx, f, kMaxSlope + 1).at_least == f,
           tag, s, i);
    bool threw = false;
    auto low = slope_split(ctx, f, 1).below;
    if (!low.empty()) {
      try {
        hida_projector(ctx, low, 1, 1);
      } catch (const DomainError&) {
        threw = true;
      }
      expect(rep.properties[4], threw, tag, s, i);
    }
  }
  return rep;
}

SuiteReport check_constants_limit(GroupType group, std::int64_t p, int degree, std::uint64_t samples,
                                  std::uint64_t seed) {
  auto rep = make_suite("constants", group, p, 0, samples, seed, {"exact_beyond_bound", "monotone"});
  const auto datum = RootDatum::make(group);
  const auto& weyl = datum.weyl_group();
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto s = sample_seed(seed, i);
    std::mt19937_64 rng(s);
    SeriesContext ctx(group, p, weyl[i % weyl.size()].word_string());
    auto f = random_rational_series(ctx, degree, 30, rng, true);
    auto r = constants_limit_check(ctx, f, 4);
    std::string dist;
    for (const auto& d : r.distances) dist += d.to_string() + " ";
    const std::string tag = "w = " + ctx.w().word_string() + ", bound " + std::to_string(r.bound) + ", distances " + dist;
    expect(rep.properties[0], r.exact_from_bound, tag, s, i);
    expect(rep.properties[1], r.monotone, tag, s, i);
  }
  return rep;
}

SuiteReport check_haar(int degree) {
  auto rep = make_suite("haar", GroupType::SL2, 0, 0, 0, 0, {"only_zero_functional"});
  for (int d = 0; d <= degree; ++d) {
    auto r = haar_obstruction(d);
    bool zero = r.only_zero() && r.rank == r.unknowns &&
                std::all_of(r.solution.begin(), r.solution.end(), [](const Rational& x) { return x == 0; });
    expect(rep.properties[0], zero, "degree " + std::to_string(d) + ": null space of dimension " +
                                        std::to_string(r.null_dimension));
  }
  return rep;
}

SuiteReport check_verma_multiplicities(GroupType group, int max_height) {
  auto rep = make_suite("verma", group, 0, 0, 0, 0, {"solver_equals_enumeration", "outside_cone_zero"});
  const RatVec chi = default_character(group);
  // Both the upper-triangular system and the one of the Iwahori variables.
  for (const auto& d : {RootDatum::make(group), RootDatum::make(group).opposite()}) {
    const std::string system = d.is_borel() ? "upper" : "lower";
    for (const auto& w : d.weyl_group()) {
      const auto table = monomial_weight_table(d, chi, w, max_height);
      for (const auto& [lambda, count] : table) {
        const auto got = weight_multiplicity(d, chi, lambda, w);
        std::string l;
        for (const auto& x : lambda) l += to_string(x) + " ";
        expect(rep.properties[0], got == count,
               system + ", w = " + w.word_string() + ", weight " + l + ": solver " + std::to_string(got) +
                   ", monomials " + std::to_string(count));
      }
      // Raising the top weight by any wα leaves the cone.
      const RatVec top = weyl_twist(d, chi, w);
      for (const auto& r : d.positive_roots()) {
        IntVec g = w.act(r.vec);
        RatVec above = top;
        for (std::size_t j = 0; j < above.size(); ++j) above[j] += g[j];
        expect(rep.properties[1], weight_multiplicity(d, chi, above, w) == 0 && table.count(above) == 0,
               system + ", w = " + w.word_string() + ", root " + d.label(r.vec));
      }
    }
  }
  return rep;
}

SuiteReport check_multiplicity_one(GroupType group) {
  auto rep = make_suite("multiplicity_one", group, 0, 0, 0, 0, {"witness_exists", "witness_valid"});
  const auto d = RootDatum::make(group);
  const auto inventory = summand_inventory(group);
  for (const auto& s : inventory) {
    const auto& w = d.parse_word(s.word);
    for (const auto& [other, witness] : s.witnesses) {
      const std::string tag = "(" + s.word + ", " + other + ")";
      expect(rep.properties[0], witness.has_value(), tag);
      if (!witness) continue;
      const auto& w2 = d.parse_word(other);
      bool valid = d.is_positive(d.inverse(w).act(*witness)) && !d.is_positive(d.inverse(w2).act(*witness));
      expect(rep.properties[1], valid, tag);
    }
  }
  return rep;
}

std::vector<std::string> iwahori_pattern(const ChevalleyGroup& g) {
  const auto n = static_cast<std::size_t>(g.datum().matrix_size());
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < n; ++i) {
    std::string row;
    for (std::size_t j = 0; j < n; ++j) row += std::string(j ? " " : "") + (i == j ? "1" : i > j ? "*" : "p");
    rows.push_back(row);
  }
  return rows;
}

SuiteReport check_sp4_golden(std::int64_t p, std::uint64_t samples, std::uint64_t seed) {
  auto rep = make_suite("sp4_golden", GroupType::Sp4, p, 12, samples, seed,
                        {"coxeter_number", "positive_roots", "delta", "coroot_matrices", "conditions_identity",
                         "zero_not_simple", "verdict_examples", "rigidity_bound", "summands", "membership_pattern"});
  const auto d = RootDatum::make(GroupType::Sp4);
  expect(rep.properties[0], d.coxeter_number() == 4, "h = " + std::to_string(d.coxeter_number()));

  const std::set<std::pair<std::string, IntVec>> roots = {
      {"alpha", {1, -1}}, {"beta", {0, 2}}, {"alpha+beta", {1, 1}}, {"2alpha+beta", {2, 0}}};
  std::set<std::pair<std::string, IntVec>> got;
  for (const auto& r : d.positive_roots()) got.emplace(r.label, r.vec);
  expect(rep.properties[1], got == roots, "positive roots differ");
  // δ(t_{a,b}) = a²b.
  expect(rep.properties[2], d.delta() == RatVec{2, 1}, "delta differs from a^2 b");

  const std::array<IntVec, 4> order = {IntVec{1, -1}, IntVec{0, 2}, IntVec{1, 1}, IntVec{2, 0}};
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& h = sp4_coroot_matrices()[k];
    IntVec co = d.coroot(order[k]);
    expect(rep.properties[3], h[0] == co[0] && h[1] == co[1] && h[2] == -co[1] && h[3] == -co[0],
           "matrix for " + d.label(order[k]));
  }

  const char* names[] = {"alpha", "beta", "alpha+beta", "2alpha+beta"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-60, 60), den(1, 30);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Rational c1(num(rng), den(rng)), c2(num(rng), den(rng));
    auto c = sp4_conditions(c1, c2);
    std::string detail;
    for (auto k : c.mismatches)
      detail += std::string(names[k]) + ": displayed " + to_string(c.displayed[k]) + " vs pairing " +
                to_string(c.generic[k]) + "; ";
    expect(rep.properties[4], c.agree() && c.generic == c.datum_path,
           "c = (" + to_string(c1) + ", " + to_string(c2) + "): " + detail, seed, i);
  }
  expect(rep.properties[5], !bgg_simple(GroupType::Sp4, {0, 0}).simple && !sp4_conditions(0, 0).simple(),
         "c1 = c2 = 0 reported simple");
  expect(rep.properties[6],
         bgg_simple(GroupType::Sp4, {Rational(1, 3), Rational(1, 5)}).simple &&
             !bgg_simple(GroupType::Sp4, {-1, -1}).simple,
         "verdicts for (1/3, 1/5) or (-1, -1)");

  // v_p(c) > 1/(p−1) − 1: valuation 0 passes, valuation −1 fails.
  expect(rep.properties[7],
         is_rigid_component(Rational(1), p) && is_rigid_component(Rational(1, 2), p) &&
             !is_rigid_component(Rational(1, p), p) && is_rigid_component(Rational(p), p),
         "rigidity threshold " + to_string(Rational(1, p - 1) - 1));

  auto inv = summand_inventory(GroupType::Sp4);
  expect(rep.properties[8], inv.size() == 8 && inventory_complete(inv), std::to_string(inv.size()) + " summands");

  ChevalleyGroup G(GroupType::Sp4, p, 12);
  const auto pattern = iwahori_pattern(G);
  for (std::uint64_t i = 0; i < std::min<std::uint64_t>(samples, 20); ++i) {
    std::mt19937_64 erng(sample_seed(seed, i));
    auto g = G.random_element(erng);
    bool ok = G.in_iwahori(g);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) {
        const char mark = pattern[r][2 * c];
        const auto& x = g(r, c);
        if (mark == '1') ok = ok && (x - PadicScalar::one(G.ring())).pi_valuation() >= 1;
        if (mark == 'p') ok = ok && x.pi_valuation() >= 1;
      }
    expect(rep.properties[9], ok, "sample outside the pattern", seed, i);
  }
  return rep;
}

}  // namespace iwahori
