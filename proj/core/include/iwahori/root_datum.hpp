#pragma once

#include "iwahori/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace iwahori {

enum class GroupType { SL2, SL3, Sp4 };

GroupType parse_group(std::string_view name);
std::string group_name(GroupType type);

using IntVec = std::vector<int>;
using RatVec = std::vector<Rational>;

int pairing(const IntVec& x, const IntVec& y);
Rational pairing(const RatVec& x, const IntVec& y);
RatVec to_rational(const IntVec& v);

/// Weyl group element acting on ε-coordinates by a signed permutation matrix.
///
/// The ε-pairing is the dot product for every supported type, so the same
/// matrix acts on characters and cocharacters.
struct WeylElement {
  std::size_t index = 0;            // position in RootDatum::weyl_group()
  std::vector<IntVec> matrix;       // rows
  std::vector<int> word;            // reduced word in simple reflections, 1-based

  IntVec act(const IntVec& x) const;
  RatVec act(const RatVec& x) const;
  std::string word_string() const;  // "e" or "s1s2..."
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix == b.matrix; }
};

struct Root {
  IntVec vec;             // ε-coordinates
  IntVec coroot;          // ε-coordinates of the coroot
  IntVec simple_coeffs;   // coefficients in the simple roots of this datum
  int height = 0;
  std::string label;
};

/// Split root datum of SL2, SL3 or Sp4 in ε-coordinates with a chosen positive system.
///
/// make() returns the upper-triangular (Borel) positive system. opposite()
/// negates it, which is the system whose root groups lie in the pro-p
/// Iwahori subgroup modulo p.
class RootDatum {
public:
  static RootDatum make(GroupType type);
  RootDatum opposite() const;

  GroupType type() const { return type_; }
  std::string name() const { return group_name(type_); }
  int rank() const { return static_cast<int>(simple_.size()); }
  int ambient_dim() const { return ambient_; }
  /// Size of the defining matrix representation.
  int matrix_size() const { return static_cast<int>(weights_.size()); }
  /// ε-coordinates of the diagonal characters t ↦ t_kk of the torus.
  const std::vector<IntVec>& diagonal_weights() const { return weights_; }
  bool is_borel() const { return borel_; }

  const std::vector<Root>& positive_roots() const { return positive_; }
  /// Indices into positive_roots().
  const std::vector<std::size_t>& simple_roots() const { return simple_; }
  std::vector<IntVec> roots() const;

  bool is_root(const IntVec& v) const;
  bool is_positive(const IntVec& v) const;
  int height(const IntVec& root) const;
  IntVec coroot(const IntVec& root) const;
  std::string label(const IntVec& root) const;
  /// Highest root of this positive system.
  const Root& highest_root() const;
  int coxeter_number() const { return highest_root().height + 1; }

  /// Half-sum of positive roots, in ε-coordinates.
  const RatVec& delta() const { return delta_; }
  Rational delta_pairing(const IntVec& root) const { return pairing(delta_, coroot(root)); }

  const std::vector<WeylElement>& weyl_group() const { return *weyl_; }
  const WeylElement& identity() const { return weyl_->front(); }
  const WeylElement& simple_reflection(int i) const;  // 1-based
  const WeylElement& compose(const WeylElement& a, const WeylElement& b) const;
  const WeylElement& inverse(const WeylElement& w) const;
  const WeylElement& longest() const;
  /// Parses "e", "s1s2", "1,2" or "12"; the result is the product of the letters.
  const WeylElement& parse_word(std::string_view word) const;
  /// |Φ⁺ ∩ wΦ⁻|.
  int length(const WeylElement& w) const;
  /// A root in wΦ⁺ ∩ w′Φ⁻, if any.
  std::optional<IntVec> intersection_witness(const WeylElement& w, const WeylElement& w2) const;

  /// Position permutation σ with w·d_k = d_σ(k) on the diagonal weights.
  std::vector<int> position_permutation(const WeylElement& w) const;

  /// μ₀ with ⟨α, μ₀⟩ = ht(α) for every root.
  const RatVec& mu0() const { return mu0_; }
  /// Least a ≥ 1 with a·μ₀ integral.
  int mu_scale() const { return mu_scale_; }
  /// w·(a·μ₀); pairs to a·ht(α) with wα.
  IntVec adapted_cocharacter(const WeylElement& w) const;

  /// Canonical representative of a character (SL_n: coordinates summing to zero).
  RatVec normalize_character(const RatVec& chi) const;
  bool in_cocharacter_lattice(const IntVec& y) const;

private:
  RootDatum() = default;
  void finish();

  GroupType type_ = GroupType::SL2;
  bool borel_ = true;
  int ambient_ = 0;
  std::vector<IntVec> weights_;
  std::vector<Root> positive_;
  std::vector<std::size_t> simple_;
  std::vector<IntVec> base_simple_;       // Borel simple roots, for labels
  std::vector<std::string> base_names_;
  std::map<IntVec, int> height_;
  RatVec delta_;
  RatVec mu0_;
  int mu_scale_ = 1;
  std::shared_ptr<const std::vector<WeylElement>> weyl_;
};

}  // namespace iwahori
