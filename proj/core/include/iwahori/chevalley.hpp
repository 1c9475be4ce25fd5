#pragma once

#include "iwahori/matrix.hpp"
#include "iwahori/padic.hpp"
#include "iwahori/rational.hpp"
#include "iwahori/root_datum.hpp"

#include <random>
#include <string>
#include <vector>

namespace iwahori {

using padic::PadicScalar;
using padic::RingPtr;
using ScalarMatrix = Matrix<PadicScalar>;

/// A matrix in SL2, SL3 or Sp4 over a p-adic scalar ring.
///
/// The identity flag marks elements known to be exactly 1, for which ω = ∞.
class GroupElement {
public:
  GroupElement(ScalarMatrix m, bool exact_identity = false) : m_(std::move(m)), identity_(exact_identity) {}

  const ScalarMatrix& matrix() const { return m_; }
  const PadicScalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  std::size_t size() const { return m_.rows(); }
  bool is_exact_identity() const { return identity_; }

  /// Entrywise equality at the smaller precision of each pair.
  bool operator==(const GroupElement& o) const { return m_ == o.m_; }

private:
  ScalarMatrix m_;
  bool identity_;
};

struct RootFactor {
  IntVec root;
  PadicScalar parameter;
};

/// g = Π_{minus} u_γ(x_γ) · t · Π_{plus} u_γ(y_γ) for the batches wΦ⁻ and wΦ⁺.
struct IwahoriFactorization {
  std::vector<RootFactor> minus;
  std::vector<PadicScalar> torus;  // ε-coordinates of t
  std::vector<RootFactor> plus;
};

/// Order of root factors inside a batch: by height, ties broken by ε-coordinates.
enum class BatchOrder { HeightLex, HeightReverseLex };

struct BasisEntry {
  enum class Kind { Root, Coroot };
  Kind kind;
  IntVec vector;      // root, or coroot of a simple root
  std::string label;
  GroupElement generator;
  PValue omega;
};

struct OrderedBasis {
  std::vector<BasisEntry> entries;
  std::size_t minus_count = 0;
  std::size_t torus_count = 0;
};

/// Entries (i, j, sign) of the Chevalley basis matrix E_γ; the first has sign +1.
std::vector<std::tuple<int, int, int>> root_matrix_entries(GroupType type, const IntVec& root);

/// Matrix model of G(Z_p) at precision N with its pro-p Iwahori subgroup I.
///
/// I is the group of matrices congruent to a lower unitriangular matrix mod p.
/// The root system used for heights and batches is the one whose root groups
/// are lower triangular; upper-triangular root groups enter I through pZ_p.
class ChevalleyGroup {
public:
  ChevalleyGroup(GroupType type, std::int64_t p, int precision);

  GroupType type() const { return borel_.type(); }
  const RootDatum& borel_datum() const { return borel_; }
  const RootDatum& datum() const { return iwahori_; }
  const RingPtr& ring() const { return ring_; }
  std::int64_t prime() const { return ring_->prime(); }
  int precision() const { return ring_->precision(); }
  int ramification_index() const { return 1; }
  int coxeter_number() const { return iwahori_.coxeter_number(); }

  /// p − 1 > e·h.
  bool gate_ok() const;
  /// Throws GateError naming the failed inequality.
  void require_gate() const;

  PadicScalar scalar(const Integer& n) const { return PadicScalar::from_integer(ring_, n); }

  GroupElement identity() const;
  GroupElement root_unipotent(const IntVec& root, const PadicScalar& x) const;
  /// Torus element with the given ε-coordinates (units).
  GroupElement torus(const std::vector<PadicScalar>& coords) const;
  /// y(c) for a cocharacter y and a unit c.
  GroupElement cocharacter(const IntVec& y, const PadicScalar& c) const;
  /// χ(t) = Π t_k^{χ_k} on ε-coordinates.
  PadicScalar character_value(const IntVec& chi, const std::vector<PadicScalar>& coords) const;

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& g) const;
  GroupElement power(const GroupElement& g, std::int64_t n) const;
  GroupElement commutator(const GroupElement& g, const GroupElement& h) const;

  /// det = 1, or ᵗgJg = J for Sp4, at precision.
  bool in_group(const GroupElement& g) const;
  bool in_congruence(const GroupElement& g, int r) const;
  bool in_iwahori(const GroupElement& g) const;

  /// Root batches wΦ⁻ and wΦ⁺ in product order.
  std::vector<IntVec> batch(const WeylElement& w, bool plus, BatchOrder order = BatchOrder::HeightLex) const;
  /// Height of w⁻¹γ inside its batch (always positive).
  int batch_level(const WeylElement& w, const IntVec& root) const;

  IwahoriFactorization factorize(const GroupElement& g, const WeylElement& w,
                                 BatchOrder order = BatchOrder::HeightLex) const;
  GroupElement from_factorization(const IwahoriFactorization& f) const;

  /// v(x) + ht(γ)/(eh).
  PValue root_factor_omega(const IntVec& root, const PadicScalar& x) const;
  /// min_k v(t_kk − 1).
  PValue torus_omega(const std::vector<PadicScalar>& coords) const;
  PValue factorization_omega(const IwahoriFactorization& f) const;

  /// ω through the factorization with w = 1.
  PValue omega(const GroupElement& g) const;

  /// ω through conjugation by μ(π) into a congruence subgroup over Q_p(π), π^{aeh} = p.
  PValue omega_oracle(const GroupElement& g) const;
  /// Ramification a·e·h of the oracle extension.
  int oracle_ramification() const;
  /// Smallest integer r > e_E/(p − 1).
  int oracle_congruence_level() const;
  /// Whether μ(π)·g·μ(π)⁻¹ lies in K_r over the oracle extension.
  bool oracle_conjugate_in_congruence(const GroupElement& g, int r) const;

  OrderedBasis ordered_basis(const WeylElement& w) const;
  std::vector<PadicScalar> coordinates(const GroupElement& g, const WeylElement& w) const;
  GroupElement from_coordinates(const std::vector<PadicScalar>& x, const WeylElement& w) const;
  /// min_i v(x_i) + ω(h_i).
  PValue coordinate_omega(const std::vector<PadicScalar>& x, const WeylElement& w) const;

  /// Uniform element of I through uniform coordinates.
  GroupElement random_element(std::mt19937_64& rng) const;
  std::vector<PadicScalar> random_coordinates(std::mt19937_64& rng) const;

private:
  /// Parameter scale ϖ_γ of the basis element: p for upper roots, 1 for lower ones.
  bool needs_uniformizer(const IntVec& root) const { return !iwahori_.is_positive(root); }
  std::vector<RootFactor> peel(ScalarMatrix u, const std::vector<IntVec>& roots, const WeylElement& w) const;
  ScalarMatrix unipotent_matrix(const IntVec& root, const PadicScalar& x) const;
  std::vector<PadicScalar> torus_coordinates_from_diagonal(const ScalarMatrix& d) const;
  std::vector<IntVec> torus_basis() const;

  RootDatum borel_;
  RootDatum iwahori_;
  RingPtr ring_;
  RationalMatrix torus_solver_;  // left inverse of the simple-coroot matrix
};

}  // namespace iwahori
