#pragma once

#include "iwahori/rational.hpp"
#include "iwahori/root_datum.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace iwahori {

/// Characters and weights are ε-coordinates: values on the cocharacters of the diagonal torus.
/// For SL_n they are normalized to coordinate sum zero.

/// d(wχ) = w·dχ.
RatVec weyl_twist(const RootDatum& datum, const RatVec& chi, const WeylElement& w);

/// #{m ∈ N₀^N : Σ m_r·wα_r = w·dχ − λ}, α_r over the positive roots of `datum`.
///
/// Solved by a memoized partition count; μ-heights bound every branch.
std::uint64_t weight_multiplicity(const RootDatum& datum, const RatVec& chi, const RatVec& lambda,
                                  const WeylElement& w);

/// Weight → count over all monomials z^I with Σ i_r·ht(α_r) ≤ max_height, by direct enumeration.
std::map<RatVec, std::uint64_t> monomial_weight_table(const RootDatum& datum, const RatVec& chi,
                                                      const WeylElement& w, int max_height);

struct BggValue {
  IntVec root;
  std::string label;
  IntVec coroot;
  Rational value;  // (dχ + δ)(H_α)
  bool positive_integer;
};

struct BggVerdict {
  bool simple = true;
  std::vector<BggValue> certificate;
};

/// Simple iff no (dχ + δ)(H_α), α ∈ Φ⁺, is a positive integer. Uses the upper-triangular Borel.
BggVerdict bgg_simple(GroupType type, const RatVec& chi);

/// Same criterion for d(wχ) against the positive system wΦ⁺ with ρ-shift wδ.
BggVerdict bgg_simple_twisted(GroupType type, const RatVec& chi, const WeylElement& w);

/// Diagonals of the torus Lie elements attached to α, β, α+β, 2α+β in Sp4.
const std::array<std::array<int, 4>, 4>& sp4_coroot_matrices();

struct Sp4Conditions {
  std::array<Rational, 4> displayed;  // c₁−c₂+1, c₂+1, c₁+c₂+3, 2c₁+2
  std::array<Rational, 4> generic;    // through the stored matrices and δ
  std::array<Rational, 4> datum_path; // through the root datum coroots and δ
  bool matrices_match_datum = false;  // stored matrices equal the datum coroots
  std::vector<std::size_t> mismatches;  // positions where displayed ≠ generic
  bool agree() const { return mismatches.empty(); }
  /// Verdict from the generic values.
  bool simple() const;
};

Sp4Conditions sp4_conditions(const Rational& c1, const Rational& c2);

struct Summand {
  std::string word;
  /// For each other w′ (in Weyl-group order): a root in wΦ⁺ ∩ w′Φ⁻.
  std::vector<std::pair<std::string, std::optional<IntVec>>> witnesses;
};

std::vector<Summand> summand_inventory(GroupType type);
/// True when every ordered pair w ≠ w′ has a witness.
bool inventory_complete(const std::vector<Summand>& s);

}  // namespace iwahori
