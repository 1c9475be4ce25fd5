// One line per acceptance criterion; exit status 1 when any criterion fails.
#include "iwahori/checks.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace iwahori;

namespace {

constexpr std::int64_t kPrime = 7;
constexpr int kPrecision = 12;
constexpr std::uint64_t kSeed = 1;
const GroupType kGroups[] = {GroupType::SL2, GroupType::SL3, GroupType::Sp4};

struct Verdict {
  bool ok = true;
  std::string detail;
};

/// Fails on any failed property, any property that never ran, or too many skips.
void absorb(Verdict& v, const SuiteReport& r, double max_skip_fraction = 1.0) {
  for (const auto& t : r.properties) {
    if (t.failed > 0) {
      v.ok = false;
      v.detail += group_name(r.group) + "/" + t.name + ": " + std::to_string(t.failed) + " failed";
      if (!t.failures.empty()) v.detail += " (" + t.failures.front().detail + ")";
      v.detail += "; ";
    } else if (t.passed == 0) {
      v.ok = false;
      v.detail += group_name(r.group) + "/" + t.name + ": nothing checked; ";
    }
  }
  const auto checked = r.checked();
  if (checked > 0 && static_cast<double>(r.skipped()) >= max_skip_fraction * static_cast<double>(checked)) {
    v.ok = false;
    v.detail += group_name(r.group) + ": " + std::to_string(r.skipped()) + "/" + std::to_string(checked) +
                " skipped at the precision cap; ";
  }
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "sp4 golden data and BGG conditions", 1.0,
       [] {
         Verdict v;
         absorb(v, check_sp4_golden(kPrime, 100, kSeed));
         return v;
       }},
      {2, "p-valuation axioms, 1000 samples per group", 90.0,
       [] {
         Verdict v;
         for (auto g : kGroups) {
           const auto start = std::chrono::steady_clock::now();
           absorb(v, check_pvaluation_axioms(g, kPrime, kPrecision, 1000, kSeed), 0.02);
           const std::chrono::duration<double> s = std::chrono::steady_clock::now() - start;
           if (s.count() >= 30.0) {
             v.ok = false;
             v.detail += group_name(g) + " exceeded 30 s; ";
           }
         }
         return v;
       }},
      {3, "omega formula equals conjugation oracle", 60.0,
       [] {
         Verdict v;
         for (auto g : kGroups) absorb(v, check_oracle_agreement(g, kPrime, kPrecision, 200, kSeed));
         return v;
       }},
      {4, "ordered basis round trip and min formula, all w", 60.0,
       [] {
         Verdict v;
         for (auto g : kGroups) absorb(v, check_ordered_basis(g, kPrime, kPrecision, 200, kSeed));
         return v;
       }},
      {5, "Weyl-conjugate factorization compatibility", 60.0,
       [] {
         Verdict v;
         for (auto g : kGroups) absorb(v, check_compatibility_all_w(g, kPrime, kPrecision, 100, kSeed));
         return v;
       }},
      {6, "monomial eigenfunctions and finite differences", 30.0,
       [] {
         Verdict v;
         absorb(v, check_eigenfunctions(GroupType::Sp4, kPrime, 12, kSeed));
         return v;
       }},
      {7, "projector convergence and slope projections", 60.0,
       [] {
         Verdict v;
         for (auto g : {GroupType::SL2, GroupType::Sp4}) absorb(v, check_projector(g, kPrime, kPrecision, 30, 50, kSeed));
         return v;
       }},
      {8, "constants as the slope limit", 30.0,
       [] {
         Verdict v;
         for (auto g : kGroups) absorb(v, check_constants_limit(g, kPrime, 30, 50, kSeed));
         return v;
       }},
      {9, "no translation-invariant functional up to degree 25", 5.0,
       [] {
         Verdict v;
         absorb(v, check_haar(25));
         return v;
       }},
      {10, "Verma multiplicities against monomial enumeration", 30.0,
       [] {
         Verdict v;
         for (auto g : {GroupType::SL3, GroupType::Sp4}) absorb(v, check_verma_multiplicities(g, 10));
         return v;
       }},
      {11, "root intersection witnesses for all pairs", 1.0,
       [] {
         Verdict v;
         for (auto g : kGroups) absorb(v, check_multiplicity_one(g));
         return v;
       }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v = c.run();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (elapsed.count() >= c.limit_seconds) {
      v.ok = false;
      v.detail += "runtime limit " + std::to_string(c.limit_seconds) + " s exceeded; ";
    }
    if (!v.ok) ++failures;
    std::printf("%s criterion %2d: %s [%.3f s]%s%s\n", v.ok ? "PASS" : "FAIL", c.number, c.name, elapsed.count(),
                v.detail.empty() ? "" : " -- ", v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
