#pragma once

#include "iwahori/chevalley.hpp"
#include "iwahori/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace iwahori {

/// Deterministic per-sample seed derived from the run seed and the sample counter.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

struct FailureRecord {
  std::uint64_t seed = 0;
  std::uint64_t sample = 0;
  std::string detail;
  std::vector<std::vector<std::vector<std::string>>> elements;  // offending matrices, entry strings
};

/// Pass/fail/skip counts for one property, with the smallest observed margin.
struct PropertyTally {
  PropertyTally() = default;
  explicit PropertyTally(std::string n) : name(std::move(n)) {}

  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
  std::optional<Rational> worst_margin;
  std::vector<FailureRecord> failures;  // first few only

  void pass(const std::optional<Rational>& margin = std::nullopt);
  void skip() { ++skipped; }
  void fail(FailureRecord r);
  std::uint64_t checked() const { return passed + failed + skipped; }
};

struct SuiteReport {
  std::string suite;
  GroupType group = GroupType::SL2;
  std::int64_t prime = 0;
  int precision = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<PropertyTally> properties;

  bool ok() const;
  std::uint64_t skipped() const;
  std::uint64_t checked() const;
  PropertyTally& tally(const std::string& name);
};

std::vector<std::vector<std::string>> element_strings(const GroupElement& g);

/// ω(g) > 1/(p−1), ω(gh) ≥ min, ω([g,h]) ≥ ω(g)+ω(h), ω(g^p) = ω(g)+1 on random pairs from I.
SuiteReport check_pvaluation_axioms(GroupType group, std::int64_t p, int precision, std::uint64_t samples,
                                    std::uint64_t seed);

/// ω(g) = min of factor values for every w, plus single-root elements and an alternative root order.
SuiteReport check_compatibility_all_w(GroupType group, std::int64_t p, int precision, std::uint64_t samples,
                                      std::uint64_t seed);

/// Root inequalities 1/(p−1) < v(α(t)) < 1/e − 1/(p−1) and μ(π)·h·μ(π)⁻¹ ∈ K_r on the ordered basis.
SuiteReport check_et_embedding(GroupType group, std::int64_t p, int precision);

/// ω through the factorization equals ω through conjugation into K_r.
SuiteReport check_oracle_agreement(GroupType group, std::int64_t p, int precision, std::uint64_t samples,
                                   std::uint64_t seed);

/// Coordinate round trip and ω(h) = min v(x_i) + ω(h_i) for every w; basis values against closed forms.
SuiteReport check_ordered_basis(GroupType group, std::int64_t p, int precision, std::uint64_t samples,
                                std::uint64_t seed);

}  // namespace iwahori
