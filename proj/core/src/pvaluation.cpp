#include "iwahori/pvaluation.hpp"

#include "iwahori/errors.hpp"

#include <random>

namespace iwahori {

namespace {

constexpr std::size_t kMaxFailureRecords = 5;

// Exact margin a − b when both sides are finite.
std::optional<Rational> margin(const PValue& a, const PValue& b) {
  if (a.is_finite() && b.is_finite()) return a.value() - b.value();
  return std::nullopt;
}

void record(PropertyTally& t, Decision d, const std::optional<Rational>& m, FailureRecord r) {
  switch (d) {
    case Decision::True: t.pass(m); break;
    case Decision::False: t.fail(std::move(r)); break;
    case Decision::Undecided: t.skip(); break;
  }
}

SuiteReport make_report(std::string suite, GroupType group, std::int64_t p, int precision, std::uint64_t samples,
                        std::uint64_t seed, std::initializer_list<const char*> names) {
  SuiteReport r{std::move(suite), group, p, precision, samples, seed, {}};
  for (const char* n : names) r.properties.push_back(PropertyTally{n});
  return r;
}

}  // namespace

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void PropertyTally::pass(const std::optional<Rational>& m) {
  ++passed;
  if (m && (!worst_margin || *m < *worst_margin)) worst_margin = m;
}

void PropertyTally::fail(FailureRecord r) {
  ++failed;
  if (failures.size() < kMaxFailureRecords) failures.push_back(std::move(r));
}

bool SuiteReport::ok() const {
  for (const auto& t : properties)
    if (t.failed > 0) return false;
  return true;
}

std::uint64_t SuiteReport::skipped() const {
  std::uint64_t s = 0;
  for (const auto& t : properties) s += t.skipped;
  return s;
}

std::uint64_t SuiteReport::checked() const {
  std::uint64_t s = 0;
  for (const auto& t : properties) s += t.checked();
  return s;
}

PropertyTally& SuiteReport::tally(const std::string& name) {
  for (auto& t : properties)
    if (t.name == name) return t;
  properties.push_back(PropertyTally{name});
  return properties.back();
}

std::vector<std::vector<std::string>> element_strings(const GroupElement& g) {
  std::vector<std::vector<std::string>> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out[i].push_back(g(i, j).to_string());
  return out;
}

SuiteReport check_pvaluation_axioms(GroupType group, std::int64_t p, int precision, std::uint64_t samples,
                                    std::uint64_t seed) {
  ChevalleyGroup G(group, p, precision);
  G.require_gate();
  auto report = make_report("axioms", group, p, precision, samples, seed,
                            {"lower_bound", "product", "commutator", "p_power"});
  const PValue floor = PValue::finite(Rational(1, p - 1));
  for (std::uint64_t i = 0; i < samples; ++i) {
    const std::uint64_t s = sample_seed(seed, i);
    std::mt19937_64 rng(s);
    auto g = G.random_element(rng);
    auto h = G.random_element(rng);
    const PValue wg = G.omega(g), wh = G.omega(h);
    auto failure = [&](std::string what, std::vector<GroupElement> els) {
      FailureRecord r{seed, i, std::move(what), {}};
      for (const auto& e : els) r.elements.push_back(element_strings(e));
      return r;
    };
    record(report.properties[0], greater(wg, floor), margin(wg, floor),
           failure("omega(g) = " + wg.to_string() + " <= 1/(p-1)", {g}));

    const PValue wgh = G.omega(G.multiply(g, h));
    const PValue lo = min_of(wg, wh);
    record(report.properties[1], greater_equal(wgh, lo), margin(wgh, lo),
           failure("omega(gh) = " + wgh.to_string() + " < min = " + lo.to_string(), {g, h}));

    const PValue wc = G.omega(G.commutator(g, h));
    const PValue sum = wg + wh;
    record(report.properties[2], greater_equal(wc, sum), margin(wc, sum),
           failure("omega([g,h]) = " + wc.to_string() + " < " + sum.to_string(), {g, h}));

    const PValue wp = G.omega(G.power(g, p));
    const PValue target = wg + Rational(1);
    record(report.properties[3], equal(wp, target), margin(wp, target),
           failure("omega(g^p) = " + wp.to_string() + " != " + target.to_string(), {g}));
  }
  return report;
}

SuiteReport check_compatibility_all_w(GroupType group, std::int64_t p, int precision, std::uint64_t samples,
                                      std::uint64_t seed) {
  ChevalleyGroup G(group, p, precision);
  G.require_gate();
  auto report = make_report("compat", group, p, precision, samples, seed,
                            {"min_of_factors", "alternative_order", "single_root"});
  const auto& W = G.datum().weyl_group();
  for (std::uint64_t i = 0; i < samples; ++i) {
    const std::uint64_t s = sample_seed(seed, i);
    std::mt19937_64 rng(s);
    auto g = G.random_element(rng);
    const PValue wg = G.omega(g);
    for (const auto& w : W) {
      const PValue fw = G.factorization_omega(G.factorize(g, w));
      record(report.properties[0], equal(wg, fw), std::nullopt,
             FailureRecord{seed, i, "w = " + w.word_string() + ": " + wg.to_string() + " != " + fw.to_string(),
                           {element_strings(g)}});
      const PValue alt = G.factorization_omega(G.factorize(g, w, BatchOrder::HeightReverseLex));
      record(report.properties[1], equal(wg, alt), std::nullopt,
             FailureRecord{seed, i, "alternative order, w = " + w.word_string(), {element_strings(g)}});
    }
    // A single root factor: the closed form must hold in every batch containing the root.
    const auto roots = G.datum().roots();
    const auto& root = roots[static_cast<std::size_t>(rng() % roots.size())];
    PadicScalar x = PadicScalar::random(G.ring(), rng);
    if (!G.datum().is_positive(root)) x *= G.scalar(p);
    auto u = G.root_unipotent(root, x);
    const PValue expected = G.root_factor_omega(root, x);
    for (const auto& w : W) {
      const PValue fw = G.factorization_omega(G.factorize(u, w));
      record(report.properties[2], equal(fw, expected), std::nullopt,
             FailureRecord{seed, i, "root " + G.datum().label(root) + ", w = " + w.word_string(),
                           {element_strings(u)}});
    }
  }
  return report;
}

SuiteReport check_et_embedding(GroupType group, std::int64_t p, int precision) {
  ChevalleyGroup G(group, p, precision);
  G.require_gate();
  auto report = make_report("et", group, p, precision, 0, 0, {"root_inequalities", "basis_in_congruence"});
  const int e = G.ramification_index();
  const int eh = e * G.coxeter_number();
  const Rational lower(1, p - 1);
  const Rational upper = Rational(1, e) - lower;
  for (const auto& r : G.datum().positive_roots()) {
    // v(α(μ(c))) = ⟨α, μ⟩·v(c) with v(c) = 1/(aeh).
    const IntVec mu = G.datum().adapted_cocharacter(G.datum().identity());
    const Rational v(pairing(r.vec, mu), G.oracle_ramification());
    const bool ok = lower < v && v < upper && v == Rational(r.height, eh);
    if (ok)
      report.properties[0].pass(std::min(v - lower, upper - v));
    else
      report.properties[0].fail(FailureRecord{0, 0, "root " + r.label + ": v = " + to_string(v), {}});
  }
  const int level = G.oracle_congruence_level();
  for (const auto& b : G.ordered_basis(G.datum().identity()).entries) {
    if (G.oracle_conjugate_in_congruence(b.generator, level))
      report.properties[1].pass();
    else
      report.properties[1].fail(FailureRecord{0, 0, b.label + " not in K_" + std::to_string(level),
                                              {element_strings(b.generator)}});
  }
  return report;
}

SuiteReport check_oracle_agreement(GroupType group, std::int64_t p, int precision, std::uint64_t samples,
                                   std::uint64_t seed) {
  ChevalleyGroup G(group, p, precision);
  G.require_gate();
  auto report = make_report("oracle", group, p, precision, samples, seed, {"formula_equals_oracle"});
  for (std::uint64_t i = 0; i < samples; ++i) {
    std::mt19937_64 rng(sample_seed(seed, i));
    auto g = G.random_element(rng);
    const PValue a = G.omega(g), b = G.omega_oracle(g);
    Decision d = equal(a, b);
    // Two lower bounds at the same cap agree as far as the precision can tell.
    if (a.is_lower_bound() && b.is_lower_bound()) d = Decision::Undecided;
    record(report.properties[0], d, std::nullopt,
           FailureRecord{seed, i, "formula " + a.to_string() + " vs oracle " + b.to_string(), {element_strings(g)}});
  }
  return report;
}

SuiteReport check_ordered_basis(GroupType group, std::int64_t p, int precision, std::uint64_t samples,
                                std::uint64_t seed) {
  ChevalleyGroup G(group, p, precision);
  G.require_gate();
  auto report = make_report("basis", group, p, precision, samples, seed,
                            {"closed_forms", "round_trip", "coordinates_recovered", "min_formula"});
  const int e = G.ramification_index();
  const int eh = e * G.coxeter_number();
  const auto& W = G.datum().weyl_group();
  for (const auto& w : W) {
    auto basis = G.ordered_basis(w);
    for (const auto& b : basis.entries) {
      Rational expected;
      if (b.kind == BasisEntry::Kind::Coroot)
        expected = Rational(1, e);
      else if (G.datum().is_positive(b.vector))
        expected = Rational(G.datum().height(b.vector), eh);
      else
        expected = Rational(1, e) + Rational(G.datum().height(b.vector), eh);
      const bool ok = b.omega == PValue::finite(expected) && G.omega(b.generator) == b.omega &&
                      expected <= Rational(p, p - 1);
      if (ok)
        report.properties[0].pass();
      else
        report.properties[0].fail(FailureRecord{0, 0, b.label + " in basis for w = " + w.word_string(), {}});
    }
  }
  std::uint64_t index = 0;
  for (const auto& w : W) {
    for (std::uint64_t i = 0; i < samples; ++i, ++index) {
      std::mt19937_64 rng(sample_seed(seed, index));
      auto x = G.random_coordinates(rng);
      auto h = G.from_coordinates(x, w);
      auto y = G.coordinates(h, w);
      bool same = y.size() == x.size();
      for (std::size_t k = 0; same && k < x.size(); ++k) same = y[k] == x[k];
      FailureRecord fr{seed, index, "w = " + w.word_string(), {element_strings(h)}};
      record(report.properties[2], same ? Decision::True : Decision::False, std::nullopt, fr);
      record(report.properties[1], G.from_coordinates(y, w) == h ? Decision::True : Decision::False, std::nullopt,
             fr);
      const PValue a = G.omega(h), b = G.coordinate_omega(x, w);
      fr.detail += ": omega " + a.to_string() + " vs min formula " + b.to_string();
      record(report.properties[3], equal(a, b), std::nullopt, fr);
    }
  }
  return report;
}

}  // namespace iwahori
