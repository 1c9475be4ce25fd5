#pragma once

#include "iwahori/pvaluation.hpp"
#include "iwahori/rigid_series.hpp"
#include "iwahori/verma_bgg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace iwahori {

/// A fixed rigid character per group, used wherever a nontrivial dχ is needed.
RatVec default_character(GroupType group);

/// Ring identities, inverses, exp/log inversion and digit round trips in Z_p and a ramified ring.
SuiteReport check_padic_arithmetic(std::int64_t p, int precision, std::uint64_t samples, std::uint64_t seed);

/// Every monomial of degree ≤ max_degree is an eigenvector of the torus Lie action, for all w;
/// and (tf − f)/p^k agrees with H_μ f to valuation k for t = μ(exp(p^k)), k = 3..6.
SuiteReport check_eigenfunctions(GroupType group, std::int64_t p, int max_degree, std::uint64_t seed);

/// U_s^{n!} convergence bound and the algebra of slope projections on random series.
SuiteReport check_projector(GroupType group, std::int64_t p, int precision, int degree, std::uint64_t samples,
                            std::uint64_t seed);

/// f^{≥s} reaches the constant term exactly once p^s > D·max⟨wα,μ⟩, monotonically before.
SuiteReport check_constants_limit(GroupType group, std::int64_t p, int degree, std::uint64_t samples,
                                  std::uint64_t seed);

/// No nonzero translation-invariant functional on polynomials of degree ≤ D.
SuiteReport check_haar(int degree);

/// Partition-count multiplicities equal monomial counts for every weight up to the height bound.
SuiteReport check_verma_multiplicities(GroupType group, int max_height);

/// wΦ⁺ ∩ w′Φ⁻ ≠ ∅ for every ordered pair w ≠ w′.
SuiteReport check_multiplicity_one(GroupType group);

/// The explicit Sp4 data: Coxeter number, roots, δ, coroot matrices, BGG conditions,
/// rigidity bound, summand count and the Iwahori membership pattern.
SuiteReport check_sp4_golden(std::int64_t p, std::uint64_t samples, std::uint64_t seed);

/// Residue pattern of I: "1" on the diagonal, "*" below, "p" above.
std::vector<std::string> iwahori_pattern(const ChevalleyGroup& g);

}  // namespace iwahori
