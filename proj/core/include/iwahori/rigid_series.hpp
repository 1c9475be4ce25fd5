#pragma once

#include "iwahori/chevalley.hpp"
#include "iwahori/padic.hpp"
#include "iwahori/rational.hpp"
#include "iwahori/root_datum.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <vector>

namespace iwahori {

/// Exponent tuple (i_1, ..., i_N), one entry per positive root.
using MultiIndex = std::vector<int>;

int total_degree(const MultiIndex& index);

inline bool is_zero_value(const Rational& c) { return c == 0; }
inline bool is_zero_value(const PadicScalar& c) { return c.is_zero(); }
inline bool is_exact_zero(const Rational& c) { return c == 0; }
inline bool is_exact_zero(const PadicScalar& c) { return c.is_exact_zero(); }
PValue coefficient_valuation(const Rational& c, std::int64_t p);
inline PValue coefficient_valuation(const PadicScalar& c, std::int64_t) { return c.valuation(); }

/// Finitely supported power series Σ c_I z^I with support in total degree ≤ D.
///
/// Only exact zeros are dropped, so a p-adic coefficient that vanishes at
/// precision still reports its lower bound in the Gauss norm. A negative
/// degree cap means an untruncated polynomial.
template <class C>
class TruncatedSeries {
public:
  static constexpr int kUntruncated = -1;

  TruncatedSeries(std::size_t nvars, int degree_cap) : nvars_(nvars), cap_(degree_cap) {}

  std::size_t nvars() const { return nvars_; }
  int degree_cap() const { return cap_; }
  const std::map<MultiIndex, C>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void set(const MultiIndex& index, C c) {
    if (index.size() != nvars_) throw std::invalid_argument("multi-index has the wrong length");
    for (int i : index)
      if (i < 0) throw std::invalid_argument("negative exponent");
    if (cap_ >= 0 && total_degree(index) > cap_) throw std::invalid_argument("monomial beyond the degree cap");
    if (is_exact_zero(c))
      terms_.erase(index);
    else
      terms_.insert_or_assign(index, std::move(c));
  }

  const C* find(const MultiIndex& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? nullptr : &it->second;
  }

  TruncatedSeries operator+(const TruncatedSeries& o) const { return merge(o, false); }
  TruncatedSeries operator-(const TruncatedSeries& o) const { return merge(o, true); }

  /// Product, truncated at the smaller cap.
  TruncatedSeries operator*(const TruncatedSeries& o) const {
    check_shape(o);
    int cap = cap_ < 0 ? o.cap_ : (o.cap_ < 0 ? cap_ : std::min(cap_, o.cap_));
    TruncatedSeries out(nvars_, cap);
    for (const auto& [i, a] : terms_)
      for (const auto& [j, b] : o.terms_) {
        MultiIndex k(nvars_);
        for (std::size_t r = 0; r < nvars_; ++r) k[r] = i[r] + j[r];
        if (cap >= 0 && total_degree(k) > cap) continue;
        auto it = out.terms_.find(k);
        if (it == out.terms_.end())
          out.terms_.emplace(k, a * b);
        else
          it->second = it->second + a * b;
      }
    out.drop_exact_zeros();
    return out;
  }

  /// Coefficientwise image f(I, c_I); exact zeros are dropped.
  template <class F>
  TruncatedSeries transform(F f) const {
    TruncatedSeries out(nvars_, cap_);
    for (const auto& [i, c] : terms_) out.set(i, f(i, c));
    return out;
  }

  template <class P>
  TruncatedSeries filter(P keep) const {
    TruncatedSeries out(nvars_, cap_);
    for (const auto& [i, c] : terms_)
      if (keep(i)) out.terms_.emplace(i, c);
    return out;
  }

  /// Coefficientwise equality; absent terms count as zero.
  bool operator==(const TruncatedSeries& o) const {
    if (nvars_ != o.nvars_) return false;
    for (const auto& [i, c] : (*this - o).terms_)
      if (!is_zero_value(c)) return false;
    return true;
  }

private:
  void check_shape(const TruncatedSeries& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("series in different numbers of variables");
  }

  TruncatedSeries merge(const TruncatedSeries& o, bool subtract) const {
    check_shape(o);
    TruncatedSeries out = *this;
    if (o.cap_ < 0 || (cap_ >= 0 && o.cap_ > cap_)) out.cap_ = o.cap_;
    for (const auto& [i, c] : o.terms_) {
      auto it = out.terms_.find(i);
      if (it == out.terms_.end())
        out.terms_.emplace(i, subtract ? C(-c) : c);
      else
        it->second = subtract ? C(it->second - c) : C(it->second + c);
    }
    out.drop_exact_zeros();
    return out;
  }

  void drop_exact_zeros() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = is_exact_zero(it->second) ? terms_.erase(it) : std::next(it);
  }

  std::size_t nvars_;
  int cap_;
  std::map<MultiIndex, C> terms_;
};

using RationalSeries = TruncatedSeries<Rational>;
using PadicSeries = TruncatedSeries<PadicScalar>;
/// Untruncated polynomials with rational coefficients.
using Polynomial = TruncatedSeries<Rational>;

/// Gauss norm as the minimum coefficient valuation (∞ for the zero series).
template <class C>
PValue gauss_valuation(const TruncatedSeries<C>& f, std::int64_t p) {
  PValue v = PValue::infinite();
  for (const auto& [i, c] : f.terms()) v = min_of(v, coefficient_valuation(c, p));
  return v;
}

PadicSeries to_padic(const RationalSeries& f, const RingPtr& ring);

/// Fixed data for functions on U_w⁺: the Weyl element, the adapted cocharacter
/// μ = w·(a·μ₀), the conjugated roots wα_r and the derived character dχ.
class SeriesContext {
public:
  /// chi: dχ in ε-coordinates (empty for the trivial character).
  SeriesContext(GroupType group, std::int64_t p, const std::string& w_word, RatVec chi = {}, int precision = 12);

  const ChevalleyGroup& group() const { return *group_; }
  const RootDatum& datum() const { return group_->datum(); }
  std::int64_t prime() const { return group_->prime(); }
  const WeylElement& w() const { return *w_; }
  const IntVec& mu() const { return mu_; }
  std::size_t nvars() const { return roots_.size(); }
  /// Dimension of each per-root block of variables; only 1 is supported.
  int block_dim() const { return 1; }
  /// wα_r.
  const std::vector<IntVec>& roots() const { return roots_; }
  /// ⟨wα_r, μ⟩.
  const std::vector<int>& mu_pairings() const { return mu_pairings_; }
  int max_mu_pairing() const;
  const RatVec& character() const { return chi_; }
  /// d(wχ) = w·dχ.
  const RatVec& twisted_character() const { return wchi_; }

private:
  std::shared_ptr<const ChevalleyGroup> group_;
  const WeylElement* w_;
  IntVec mu_;
  std::vector<IntVec> roots_;
  std::vector<int> mu_pairings_;
  RatVec chi_;
  RatVec wchi_;
};

struct CharacterExpansion {
  std::vector<Rational> gammas;  // γ_r = p^r c^r / r!
  bool rigid = false;            // v_p(c) > 1/(p−1) − 1
};

CharacterExpansion character_expand(const Rational& c, std::int64_t p, int r_max);
bool is_rigid_component(const Rational& c, std::int64_t p);

/// λ_I = Σ ⟨wα_r, μ⟩ i_r.
Integer lambda_eigenvalue(const SeriesContext& ctx, const MultiIndex& index);

/// v_p(λ_I) as a PValue; λ_0 = 0 has slope ∞.
PValue slope(const SeriesContext& ctx, const MultiIndex& index);

/// T₀¹ element from coordinates on the simple coroots: Π α∨(exp(p·z_α)), ε-coordinates.
std::vector<PadicScalar> torus_from_coroot_coordinates(const SeriesContext& ctx, const std::vector<PadicScalar>& z);

/// (tf)(z) = (wχ)(t)·f((wα_1)(t⁻¹)z_1, ...); t given by ε-coordinates in 1 + pZ_p.
PadicSeries torus_action(const SeriesContext& ctx, const std::vector<PadicScalar>& t, const PadicSeries& f);

/// A vector of the torus Lie algebra, recorded through its pairing values.
struct LieVector {
  std::vector<Rational> root_values;  // d(wα_r)(H)
  Rational character_value;           // d(wχ)(H)
};

/// Pairing values of the cocharacter direction H (ε-coordinates) in the context.
LieVector lie_vector(const SeriesContext& ctx, const RatVec& h);

/// Hf = d(wχ)(H)·f − Σ_r d(wα_r)(H)·z_r ∂f/∂z_r.
template <class C>
TruncatedSeries<C> lie_action(const LieVector& h, const TruncatedSeries<C>& f);

/// Eigenvalue d(wχ)(H) − Σ d(wα_r)(H) i_r of H on z^I.
Rational lie_eigenvalue(const LieVector& h, const MultiIndex& index);

template <class C>
struct SlopeSplit {
  TruncatedSeries<C> below;     // v(λ_I) < s
  TruncatedSeries<C> at_least;  // v(λ_I) ≥ s
};

template <class C>
SlopeSplit<C> slope_split(const SeriesContext& ctx, const TruncatedSeries<C>& f, int s);

/// Terms with v(λ_I) = s exactly.
template <class C>
TruncatedSeries<C> slope_exact(const SeriesContext& ctx, const TruncatedSeries<C>& f, int s);

/// U_s^{n!}: multiplies c_I by (λ_I/p^s)^{(p−1)·n!}; input must have slope ≥ s.
PadicSeries hida_projector(const SeriesContext& ctx, const PadicSeries& f, int s, int n);

/// Right translation (u₀f)(z) = f(coordinates(h(z)·u₀)) for u₀ ∈ U_w⁺ with the given coordinates.
Polynomial translate_action(const SeriesContext& ctx, const std::vector<Rational>& u0, const Polynomial& f);

struct ConstantsLimitReport {
  std::vector<PValue> distances;  // v(‖f^{≥s} − c₀‖) for s = 0..s_max
  int bound = 0;                  // least s with p^s > D·max⟨wα,μ⟩
  bool monotone = false;
  bool exact_from_bound = false;
  bool ok() const { return monotone && exact_from_bound; }
};

template <class C>
ConstantsLimitReport constants_limit_check(const SeriesContext& ctx, const TruncatedSeries<C>& f, int s_max);

struct HaarReport {
  int degree = 0;
  std::size_t equations = 0;
  std::size_t unknowns = 0;
  std::size_t rank = 0;
  std::size_t null_dimension = 0;
  std::vector<Rational> solution;  // ℓ(f_0), ..., ℓ(f_D) for the zero right-hand side
  bool only_zero() const { return null_dimension == 0; }
};

/// The system Σ_{i<k} binom(k, i) ℓ(f_i) = 0, k = 1..D+1, from ℓ(Tf_k) = ℓ(f_k) under z ↦ z + 1.
HaarReport haar_obstruction(int degree);

/// Random series with `terms` monomials of degree ≤ D; coefficients uniform in Z_p/p^N.
PadicSeries random_padic_series(const SeriesContext& ctx, const RingPtr& ring, int degree, std::size_t terms,
                                std::mt19937_64& rng, bool constant_term = false);
/// Random series with small integer numerators over p-prime denominators.
RationalSeries random_rational_series(const SeriesContext& ctx, int degree, std::size_t terms, std::mt19937_64& rng,
                                      bool constant_term = false);

}  // namespace iwahori
