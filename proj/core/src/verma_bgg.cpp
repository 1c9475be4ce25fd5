#include "iwahori/verma_bgg.hpp"

#include <stdexcept>

namespace iwahori {

namespace {

/// Roots wα_r in a fixed order with their μ-pairings, μ adapted to w.
struct TwistedRoots {
  std::vector<IntVec> roots;
  std::vector<int> heights;  // ⟨wα_r, μ⟩ > 0
  IntVec mu;
};

TwistedRoots twisted_roots(const RootDatum& d, const WeylElement& w) {
  TwistedRoots t;
  t.mu = d.adapted_cocharacter(w);
  for (const auto& r : d.positive_roots()) {
    t.roots.push_back(w.act(r.vec));
    t.heights.push_back(pairing(t.roots.back(), t.mu));
    if (t.heights.back() <= 0) throw std::logic_error("adapted cocharacter is not positive on wΦ⁺");
  }
  return t;
}

std::optional<IntVec> integral(const RatVec& v) {
  IntVec out;
  for (const auto& x : v) {
    if (denominator(x) != 1) return std::nullopt;
    out.push_back(static_cast<int>(numerator(x)));
  }
  return out;
}

class PartitionCounter {
public:
  explicit PartitionCounter(const TwistedRoots& t) : t_(t) {}

  std::uint64_t count(const IntVec& v, std::size_t k) {
    if (k == t_.roots.size()) return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; }) ? 1 : 0;
    const int budget = pairing(v, t_.mu);
    if (budget < 0) return 0;
    auto key = std::make_pair(v, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::uint64_t total = 0;
    IntVec rest = v;
    for (int m = 0; m * t_.heights[k] <= budget; ++m) {
      total += count(rest, k + 1);
      for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= t_.roots[k][j];
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

private:
  const TwistedRoots& t_;
  std::map<std::pair<IntVec, std::size_t>, std::uint64_t> memo_;
};

BggValue evaluate(const RootDatum& d, const RatVec& shifted, const IntVec& root, const IntVec& coroot) {
  Rational v = pairing(shifted, coroot);
  return BggValue{root, d.label(root), coroot, v, is_positive_integer(v)};
}

}  // namespace

RatVec weyl_twist(const RootDatum& datum, const RatVec& chi, const WeylElement& w) {
  if (chi.size() != static_cast<std::size_t>(datum.ambient_dim()))
    throw std::invalid_argument("character has the wrong number of coordinates");
  return w.act(datum.normalize_character(chi));
}

std::uint64_t weight_multiplicity(const RootDatum& datum, const RatVec& chi, const RatVec& lambda,
                                  const WeylElement& w) {
  if (chi.size() != lambda.size()) throw std::invalid_argument("character and weight have different lengths");
  RatVec diff = weyl_twist(datum, chi, w);
  const RatVec l = datum.normalize_character(lambda);
  for (std::size_t j = 0; j < diff.size(); ++j) diff[j] -= l[j];
  auto v = integral(diff);
  if (!v) return 0;
  const auto t = twisted_roots(datum, w);
  return PartitionCounter(t).count(*v, 0);
}

std::map<RatVec, std::uint64_t> monomial_weight_table(const RootDatum& datum, const RatVec& chi,
                                                      const WeylElement& w, int max_height) {
  const RatVec top = weyl_twist(datum, chi, w);
  std::vector<IntVec> roots;
  std::vector<int> heights;
  for (const auto& r : datum.positive_roots()) {
    roots.push_back(w.act(r.vec));
    heights.push_back(r.height);
  }
  std::map<RatVec, std::uint64_t> table;
  IntVec acc(top.size(), 0);
  // Depth-first over exponents; acc = Σ i_r·wα_r.
  auto walk = [&](auto&& self, std::size_t r, int budget) -> void {
    if (r == roots.size()) {
      RatVec weight = top;
      for (std::size_t j = 0; j < weight.size(); ++j) weight[j] -= acc[j];
      ++table[weight];
      return;
    }
    for (int i = 0; i * heights[r] <= budget; ++i) {
      self(self, r + 1, budget - i * heights[r]);
      for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += roots[r][j];
    }
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] -= roots[r][j] * (budget / heights[r] + 1);
  };
  walk(walk, 0, max_height);
  return table;
}

BggVerdict bgg_simple(GroupType type, const RatVec& chi) {
  const auto d = RootDatum::make(type);
  return bgg_simple_twisted(type, chi, d.identity());
}

BggVerdict bgg_simple_twisted(GroupType type, const RatVec& chi, const WeylElement& w) {
  const auto d = RootDatum::make(type);
  if (chi.size() != static_cast<std::size_t>(d.ambient_dim()))
    throw std::invalid_argument("character has the wrong number of coordinates");
  const RatVec wchi = weyl_twist(d, chi, w);
  const RatVec wdelta = w.act(d.delta());
  RatVec shifted(wchi.size());
  for (std::size_t j = 0; j < shifted.size(); ++j) shifted[j] = wchi[j] + wdelta[j];
  BggVerdict out;
  for (const auto& r : d.positive_roots()) {
    IntVec root = w.act(r.vec);
    out.certificate.push_back(evaluate(d, shifted, root, w.act(r.coroot)));
    if (out.certificate.back().positive_integer) out.simple = false;
  }
  return out;
}

const std::array<std::array<int, 4>, 4>& sp4_coroot_matrices() {
  static const std::array<std::array<int, 4>, 4> h = {{
      {1, -1, 1, -1},  // α
      {0, 1, -1, 0},   // β
      {1, 1, -1, -1},  // α+β
      {1, 0, 0, -1},   // 2α+β
  }};
  return h;
}

bool Sp4Conditions::simple() const {
  for (const auto& v : generic)
    if (is_positive_integer(v)) return false;
  return true;
}

Sp4Conditions sp4_conditions(const Rational& c1, const Rational& c2) {
  static const std::array<IntVec, 4> roots = {IntVec{1, -1}, IntVec{0, 2}, IntVec{1, 1}, IntVec{2, 0}};
  const auto d = RootDatum::make(GroupType::Sp4);
  const RatVec shifted = {c1 + d.delta()[0], c2 + d.delta()[1]};
  Sp4Conditions out;
  out.displayed = {c1 - c2 + 1, c2 + 1, c1 + c2 + 3, 2 * c1 + 2};
  out.matrices_match_datum = true;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& h = sp4_coroot_matrices()[k];
    // diag(x, y, −y, −x) pairs with ε-coordinates through (x, y).
    if (h[2] != -h[1] || h[3] != -h[0]) throw std::logic_error("stored matrix is not in the torus Lie algebra");
    const IntVec from_matrix = {h[0], h[1]};
    out.generic[k] = pairing(shifted, from_matrix);
    out.datum_path[k] = pairing(shifted, d.coroot(roots[k]));
    if (from_matrix != d.coroot(roots[k])) out.matrices_match_datum = false;
    if (out.displayed[k] != out.generic[k]) out.mismatches.push_back(k);
  }
  return out;
}

std::vector<Summand> summand_inventory(GroupType type) {
  const auto d = RootDatum::make(type);
  std::vector<Summand> out;
  for (const auto& w : d.weyl_group()) {
    Summand s{w.word_string(), {}};
    for (const auto& w2 : d.weyl_group())
      if (w2.index != w.index) s.witnesses.emplace_back(w2.word_string(), d.intersection_witness(w, w2));
    out.push_back(std::move(s));
  }
  return out;
}

bool inventory_complete(const std::vector<Summand>& s) {
  for (const auto& x : s)
    for (const auto& [word, witness] : x.witnesses)
      if (!witness) return false;
  return true;
}

}  // namespace iwahori
