#include "iwahori/chevalley.hpp"

#include "iwahori/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace iwahori {

namespace {

// Chevalley basis of sp4 for the antidiagonal form J with rows (1,1,-1,-1) from top right.
const std::map<IntVec, std::vector<std::tuple<int, int, int>>>& sp4_entries() {
  static const std::map<IntVec, std::vector<std::tuple<int, int, int>>> table = {
      {{2, 0}, {{0, 3, 1}}},
      {{0, 2}, {{1, 2, 1}}},
      {{1, -1}, {{0, 1, 1}, {2, 3, -1}}},
      {{1, 1}, {{0, 2, 1}, {1, 3, 1}}},
      {{-2, 0}, {{3, 0, 1}}},
      {{0, -2}, {{2, 1, 1}}},
      {{-1, 1}, {{1, 0, 1}, {3, 2, -1}}},
      {{-1, -1}, {{2, 0, 1}, {3, 1, 1}}},
  };
  return table;
}

PValue scalar_value(const PadicScalar& x) { return x.valuation(); }

}  // namespace

std::vector<std::tuple<int, int, int>> root_matrix_entries(GroupType type, const IntVec& root) {
  if (type == GroupType::Sp4) {
    auto it = sp4_entries().find(root);
    if (it == sp4_entries().end()) throw std::invalid_argument("not a root of sp4");
    return it->second;
  }
  int i = -1, j = -1;
  for (std::size_t k = 0; k < root.size(); ++k) {
    if (root[k] == 1 && i < 0) i = static_cast<int>(k);
    else if (root[k] == -1 && j < 0) j = static_cast<int>(k);
    else if (root[k] != 0) throw std::invalid_argument("not a root of sl_n");
  }
  if (i < 0 || j < 0) throw std::invalid_argument("not a root of sl_n");
  return {{i, j, 1}};
}

ChevalleyGroup::ChevalleyGroup(GroupType type, std::int64_t p, int precision)
    : borel_(RootDatum::make(type)),
      iwahori_(borel_.opposite()),
      ring_(padic::make_ring(p, 1, precision)),
      torus_solver_(1, 1, Rational(0)) {
  auto basis = torus_basis();
  RationalMatrix c(static_cast<std::size_t>(iwahori_.ambient_dim()), basis.size(), Rational(0));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < c.rows(); ++i) c(i, j) = basis[j][i];
  torus_solver_ = left_inverse(c);
}

bool ChevalleyGroup::gate_ok() const { return prime() - 1 > ramification_index() * coxeter_number(); }

void ChevalleyGroup::require_gate() const {
  if (gate_ok()) return;
  const int eh = ramification_index() * coxeter_number();
  throw GateError("p-1 = " + std::to_string(prime() - 1) + " <= eh = " + std::to_string(eh) + " for " +
                  borel_.name());
}

std::vector<IntVec> ChevalleyGroup::torus_basis() const {
  std::vector<IntVec> out;
  for (auto i : iwahori_.simple_roots()) out.push_back(iwahori_.positive_roots()[i].coroot);
  return out;
}

GroupElement ChevalleyGroup::identity() const {
  auto n = static_cast<std::size_t>(iwahori_.matrix_size());
  return GroupElement(ScalarMatrix::identity(n, PadicScalar::zero(ring_), PadicScalar::one(ring_)), true);
}

ScalarMatrix ChevalleyGroup::unipotent_matrix(const IntVec& root, const PadicScalar& x) const {
  auto n = static_cast<std::size_t>(iwahori_.matrix_size());
  auto m = ScalarMatrix::identity(n, PadicScalar::zero(x.ring_ptr()), PadicScalar::one(x.ring_ptr()));
  for (auto [i, j, s] : root_matrix_entries(type(), root))
    m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = s > 0 ? x : -x;
  return m;
}

GroupElement ChevalleyGroup::root_unipotent(const IntVec& root, const PadicScalar& x) const {
  if (!iwahori_.is_root(root)) throw std::invalid_argument("not a root");
  return GroupElement(unipotent_matrix(root, x), x.is_exact_zero());
}

GroupElement ChevalleyGroup::torus(const std::vector<PadicScalar>& coords) const {
  if (coords.size() != static_cast<std::size_t>(iwahori_.ambient_dim()))
    throw std::invalid_argument("torus coordinates have the wrong length");
  const auto& rp = coords.front().ring_ptr();
  auto n = static_cast<std::size_t>(iwahori_.matrix_size());
  auto m = ScalarMatrix::identity(n, PadicScalar::zero(rp), PadicScalar::one(rp));
  for (std::size_t k = 0; k < n; ++k) m(k, k) = character_value(iwahori_.diagonal_weights()[k], coords);
  return GroupElement(std::move(m));
}

GroupElement ChevalleyGroup::cocharacter(const IntVec& y, const PadicScalar& c) const {
  std::vector<PadicScalar> coords;
  for (int k : y) coords.push_back(c.pow(k));
  return torus(coords);
}

PadicScalar ChevalleyGroup::character_value(const IntVec& chi, const std::vector<PadicScalar>& coords) const {
  PadicScalar v = PadicScalar::one(coords.front().ring_ptr());
  for (std::size_t k = 0; k < chi.size(); ++k)
    if (chi[k] != 0) v *= coords[k].pow(chi[k]);
  return v;
}

GroupElement ChevalleyGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  if (a.is_exact_identity()) return b;
  if (b.is_exact_identity()) return a;
  return GroupElement(a.matrix() * b.matrix());
}

GroupElement ChevalleyGroup::inverse(const GroupElement& g) const {
  if (g.is_exact_identity()) return g;
  // Gauss-Jordan with a unit pivot in each column; valid on GL_n(Z_p).
  const std::size_t n = g.size();
  const auto& rp = g(0, 0).ring_ptr();
  ScalarMatrix a = g.matrix();
  ScalarMatrix inv = ScalarMatrix::identity(n, PadicScalar::zero(rp), PadicScalar::one(rp));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && !a(piv, col).is_unit()) ++piv;
    if (piv == n) throw DomainError("matrix is not invertible over the valuation ring");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(col, j), a(piv, j));
      std::swap(inv(col, j), inv(piv, j));
    }
    PadicScalar s = a(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= s;
      inv(col, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      PadicScalar f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return GroupElement(std::move(inv));
}

GroupElement ChevalleyGroup::power(const GroupElement& g, std::int64_t n) const {
  if (n < 0) return power(inverse(g), -n);
  GroupElement result = identity();
  GroupElement base = g;
  while (n > 0) {
    if (n & 1) result = multiply(result, base);
    n >>= 1;
    if (n > 0) base = multiply(base, base);
  }
  return result;
}

GroupElement ChevalleyGroup::commutator(const GroupElement& g, const GroupElement& h) const {
  return multiply(multiply(inverse(g), inverse(h)), multiply(g, h));
}

bool ChevalleyGroup::in_group(const GroupElement& g) const {
  const std::size_t n = g.size();
  const auto& rp = g(0, 0).ring_ptr();
  if (type() == GroupType::Sp4) {
    auto zero = PadicScalar::zero(rp);
    ScalarMatrix j(4, 4, zero);
    j(0, 3) = PadicScalar::one(rp);
    j(1, 2) = PadicScalar::one(rp);
    j(2, 1) = -PadicScalar::one(rp);
    j(3, 0) = -PadicScalar::one(rp);
    return g.matrix().transpose() * j * g.matrix() == j;
  }
  // Leibniz expansion; n ≤ 3 here.
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[k] = k;
  PadicScalar det = PadicScalar::zero(rp);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    PadicScalar term = PadicScalar::one(rp);
    for (std::size_t k = 0; k < n; ++k) term *= g(k, perm[k]);
    det = inversions % 2 == 0 ? det + term : det - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det == PadicScalar::one(rp);
}

bool ChevalleyGroup::in_congruence(const GroupElement& g, int r) const {
  const auto& ring = g(0, 0).ring();
  if (r > ring.precision()) throw PrecisionError("congruence level " + std::to_string(r) + " exceeds precision " +
                                                 std::to_string(ring.precision()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      PadicScalar d = i == j ? g(i, j) - PadicScalar::one(g(i, j).ring_ptr()) : g(i, j);
      if (d.pi_valuation() < r) return false;
    }
  return true;
}

bool ChevalleyGroup::in_iwahori(const GroupElement& g) const {
  const int m = g(0, 0).ring().ramification();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i; j < g.size(); ++j) {
      PadicScalar d = i == j ? g(i, j) - PadicScalar::one(g(i, j).ring_ptr()) : g(i, j);
      if (d.pi_valuation() < m) return false;
    }
  return in_group(g);
}

int ChevalleyGroup::batch_level(const WeylElement& w, const IntVec& root) const {
  int h = iwahori_.height(iwahori_.inverse(w).act(root));
  return h > 0 ? h : -h;
}

std::vector<IntVec> ChevalleyGroup::batch(const WeylElement& w, bool plus, BatchOrder order) const {
  std::vector<IntVec> out;
  for (const auto& r : iwahori_.positive_roots()) {
    IntVec g = w.act(r.vec);
    if (!plus)
      for (auto& x : g) x = -x;
    out.push_back(g);
  }
  std::sort(out.begin(), out.end(), [&](const IntVec& a, const IntVec& b) {
    int la = batch_level(w, a), lb = batch_level(w, b);
    if (la != lb) return la < lb;
    return order == BatchOrder::HeightLex ? a < b : b < a;
  });
  return out;
}

std::vector<RootFactor> ChevalleyGroup::peel(ScalarMatrix u, const std::vector<IntVec>& roots,
                                             const WeylElement& w) const {
  std::vector<RootFactor> out;
  std::size_t start = 0;
  while (start < roots.size()) {
    const int level = batch_level(w, roots[start]);
    std::size_t end = start;
    while (end < roots.size() && batch_level(w, roots[end]) == level) ++end;
    // Entries of one level are untouched by the other factors of that level.
    std::vector<RootFactor> level_factors;
    for (std::size_t k = start; k < end; ++k) {
      auto [i, j, s] = root_matrix_entries(type(), roots[k]).front();
      PadicScalar x = u(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      level_factors.push_back(RootFactor{roots[k], s > 0 ? x : -x});
    }
    // Strip the level product from the left: apply inverses in reverse order.
    ScalarMatrix strip = unipotent_matrix(level_factors.front().root, -level_factors.front().parameter);
    for (std::size_t k = 1; k < level_factors.size(); ++k)
      strip = unipotent_matrix(level_factors[k].root, -level_factors[k].parameter) * strip;
    u = strip * u;
    out.insert(out.end(), level_factors.begin(), level_factors.end());
    start = end;
  }
  const std::size_t n = u.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& x = u(i, j);
      bool ok = i == j ? (x - PadicScalar::one(x.ring_ptr())).is_zero() : x.is_zero();
      if (!ok) throw std::logic_error("unipotent part is not a product of its batch root groups");
    }
  return out;
}

IwahoriFactorization ChevalleyGroup::factorize(const GroupElement& g, const WeylElement& w, BatchOrder order) const {
  if (!in_iwahori(g)) throw MembershipError("element is not in the pro-p Iwahori subgroup");
  const std::size_t n = g.size();
  const auto sigma = iwahori_.position_permutation(w);
  const auto& rp = g(0, 0).ring_ptr();
  // A(i,j) = g(σ(r(i)), σ(r(j))) with r the reversal; A = L·D·U turns into g = X·t·Y.
  auto pos = [&](std::size_t i) { return static_cast<std::size_t>(sigma[n - 1 - i]); };
  ScalarMatrix a(n, n, PadicScalar::zero(rp));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = g(pos(i), pos(j));
  auto zero = PadicScalar::zero(rp);
  auto one = PadicScalar::one(rp);
  ScalarMatrix l = ScalarMatrix::identity(n, zero, one);
  ScalarMatrix u = ScalarMatrix::identity(n, zero, one);
  std::vector<PadicScalar> d(n, zero);
  for (std::size_t k = 0; k < n; ++k) {
    PadicScalar s = a(k, k);
    for (std::size_t m = 0; m < k; ++m) s -= l(k, m) * d[m] * u(m, k);
    if (!s.is_unit()) throw std::logic_error("non-unit pivot " + s.to_string() + " at position " + std::to_string(k));
    d[k] = s;
    PadicScalar inv = s.inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      PadicScalar li = a(i, k), ui = a(k, i);
      for (std::size_t m = 0; m < k; ++m) {
        li -= l(i, m) * d[m] * u(m, k);
        ui -= l(k, m) * d[m] * u(m, i);
      }
      l(i, k) = li * inv;
      u(k, i) = ui * inv;
    }
  }
  ScalarMatrix x = ScalarMatrix::identity(n, zero, one);
  ScalarMatrix y = ScalarMatrix::identity(n, zero, one);
  ScalarMatrix t = ScalarMatrix::identity(n, zero, one);
  for (std::size_t i = 0; i < n; ++i) {
    t(pos(i), pos(i)) = d[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (i > j) x(pos(i), pos(j)) = l(i, j);
      if (i < j) y(pos(i), pos(j)) = u(i, j);
    }
  }
  IwahoriFactorization f{peel(x, batch(w, false, order), w), torus_coordinates_from_diagonal(t),
                         peel(y, batch(w, true, order), w)};
  return f;
}

std::vector<PadicScalar> ChevalleyGroup::torus_coordinates_from_diagonal(const ScalarMatrix& d) const {
  if (type() != GroupType::Sp4) {
    std::vector<PadicScalar> out;
    for (std::size_t k = 0; k < d.rows(); ++k) out.push_back(d(k, k));
    return out;
  }
  std::vector<PadicScalar> out{d(0, 0), d(1, 1)};
  if (!(d(2, 2) * d(1, 1) == PadicScalar::one(d(1, 1).ring_ptr())) ||
      !(d(3, 3) * d(0, 0) == PadicScalar::one(d(0, 0).ring_ptr())))
    throw std::logic_error("torus part is not symplectic");
  return out;
}

GroupElement ChevalleyGroup::from_factorization(const IwahoriFactorization& f) const {
  GroupElement g = identity();
  for (const auto& r : f.minus) g = multiply(g, root_unipotent(r.root, r.parameter));
  g = multiply(g, torus(f.torus));
  for (const auto& r : f.plus) g = multiply(g, root_unipotent(r.root, r.parameter));
  return g;
}

PValue ChevalleyGroup::root_factor_omega(const IntVec& root, const PadicScalar& x) const {
  const int eh = ramification_index() * coxeter_number();
  return scalar_value(x) + Rational(iwahori_.height(root), eh);
}

PValue ChevalleyGroup::torus_omega(const std::vector<PadicScalar>& coords) const {
  GroupElement t = torus(coords);
  PValue v = PValue::infinite();
  for (std::size_t k = 0; k < t.size(); ++k)
    v = min_of(v, (t(k, k) - PadicScalar::one(t(k, k).ring_ptr())).valuation());
  return v;
}

PValue ChevalleyGroup::factorization_omega(const IwahoriFactorization& f) const {
  PValue v = torus_omega(f.torus);
  for (const auto& r : f.minus) v = min_of(v, root_factor_omega(r.root, r.parameter));
  for (const auto& r : f.plus) v = min_of(v, root_factor_omega(r.root, r.parameter));
  return v;
}

PValue ChevalleyGroup::omega(const GroupElement& g) const {
  if (g.is_exact_identity()) return PValue::infinite();
  return factorization_omega(factorize(g, iwahori_.identity()));
}

int ChevalleyGroup::oracle_ramification() const {
  return iwahori_.mu_scale() * ramification_index() * coxeter_number();
}

int ChevalleyGroup::oracle_congruence_level() const {
  const int m = oracle_ramification();
  return static_cast<int>(m / (prime() - 1)) + 1;
}

namespace {

// Entries of μ(π)·g·μ(π)⁻¹ over the oracle extension.
ScalarMatrix oracle_conjugate(const ChevalleyGroup& G, const GroupElement& g) {
  const int m = G.oracle_ramification();
  auto ext = padic::make_ring(G.prime(), m, m * G.precision());
  const auto& datum = G.datum();
  const IntVec mu = datum.adapted_cocharacter(datum.identity());
  const auto& wts = datum.diagonal_weights();
  const std::size_t n = g.size();
  ScalarMatrix c(n, n, PadicScalar::zero(ext));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntVec diff = wts[i];
      for (std::size_t k = 0; k < diff.size(); ++k) diff[k] -= wts[j][k];
      const int k = pairing(diff, mu);
      PadicScalar x = g(i, j).embed_into(ext);
      c(i, j) = k >= 0 ? x * PadicScalar::uniformizer(ext).pow(k) : x.divide_by_pi_power(-k);
    }
  return c;
}

}  // namespace

PValue ChevalleyGroup::omega_oracle(const GroupElement& g) const {
  if (g.is_exact_identity()) return PValue::infinite();
  if (!in_iwahori(g)) throw MembershipError("element is not in the pro-p Iwahori subgroup");
  ScalarMatrix c = oracle_conjugate(*this, g);
  PValue v = PValue::infinite();
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) {
      PadicScalar d = i == j ? c(i, j) - PadicScalar::one(c(i, j).ring_ptr()) : c(i, j);
      v = min_of(v, d.valuation());
    }
  return v;
}

bool ChevalleyGroup::oracle_conjugate_in_congruence(const GroupElement& g, int r) const {
  ScalarMatrix c = oracle_conjugate(*this, g);
  return in_congruence(GroupElement(std::move(c)), r);
}

OrderedBasis ChevalleyGroup::ordered_basis(const WeylElement& w) const {
  OrderedBasis b;
  const auto p = scalar(prime());
  const auto one = PadicScalar::one(ring_);
  auto add_roots = [&](bool plus) {
    for (const auto& root : batch(w, plus)) {
      PadicScalar x = needs_uniformizer(root) ? p : one;
      b.entries.push_back(BasisEntry{BasisEntry::Kind::Root, root, iwahori_.label(root), root_unipotent(root, x),
                                     root_factor_omega(root, x)});
    }
  };
  add_roots(false);
  b.minus_count = b.entries.size();
  const auto exp_p = padic::exp(p);
  for (auto i : iwahori_.simple_roots()) {
    const auto& r = iwahori_.positive_roots()[i];
    GroupElement gen = cocharacter(r.coroot, exp_p);
    b.entries.push_back(BasisEntry{BasisEntry::Kind::Coroot, r.coroot, "coroot(" + r.label + ")", gen,
                                   PValue::finite(Rational(1, ramification_index()))});
  }
  b.torus_count = b.entries.size() - b.minus_count;
  add_roots(true);
  return b;
}

std::vector<PadicScalar> ChevalleyGroup::coordinates(const GroupElement& g, const WeylElement& w) const {
  auto f = factorize(g, w);
  std::vector<PadicScalar> out;
  auto push_roots = [&](const std::vector<RootFactor>& factors) {
    for (const auto& r : factors)
      out.push_back(needs_uniformizer(r.root) ? r.parameter.divide_by_pi_power(1) : r.parameter);
  };
  push_roots(f.minus);
  std::vector<PadicScalar> logs;
  for (const auto& c : f.torus) logs.push_back(padic::log(c).divide_by_pi_power(1));
  for (std::size_t a = 0; a < torus_solver_.rows(); ++a) {
    PadicScalar z = PadicScalar::zero(ring_);
    for (std::size_t k = 0; k < logs.size(); ++k)
      if (torus_solver_(a, k) != 0) z += PadicScalar::from_rational(ring_, torus_solver_(a, k)) * logs[k];
    out.push_back(z);
  }
  push_roots(f.plus);
  return out;
}

GroupElement ChevalleyGroup::from_coordinates(const std::vector<PadicScalar>& x, const WeylElement& w) const {
  const auto minus = batch(w, false);
  const auto plus = batch(w, true);
  const auto basis = torus_basis();
  if (x.size() != minus.size() + basis.size() + plus.size())
    throw std::invalid_argument("coordinate vector has the wrong length");
  const auto p = scalar(prime());
  IwahoriFactorization f;
  std::size_t k = 0;
  for (const auto& r : minus) {
    f.minus.push_back(RootFactor{r, needs_uniformizer(r) ? x[k] * p : x[k]});
    ++k;
  }
  f.torus.assign(static_cast<std::size_t>(iwahori_.ambient_dim()), PadicScalar::one(ring_));
  for (const auto& coroot : basis) {
    PadicScalar e = padic::exp(x[k] * p);
    for (std::size_t j = 0; j < coroot.size(); ++j)
      if (coroot[j] != 0) f.torus[j] *= e.pow(coroot[j]);
    ++k;
  }
  for (const auto& r : plus) {
    f.plus.push_back(RootFactor{r, needs_uniformizer(r) ? x[k] * p : x[k]});
    ++k;
  }
  return from_factorization(f);
}

PValue ChevalleyGroup::coordinate_omega(const std::vector<PadicScalar>& x, const WeylElement& w) const {
  auto b = ordered_basis(w);
  PValue v = PValue::infinite();
  for (std::size_t i = 0; i < x.size(); ++i) v = min_of(v, x[i].valuation() + b.entries[i].omega);
  return v;
}

std::vector<PadicScalar> ChevalleyGroup::random_coordinates(std::mt19937_64& rng) const {
  const std::size_t d = 2 * iwahori_.positive_roots().size() + static_cast<std::size_t>(iwahori_.rank());
  std::vector<PadicScalar> x;
  for (std::size_t i = 0; i < d; ++i) x.push_back(PadicScalar::random(ring_, rng));
  return x;
}

GroupElement ChevalleyGroup::random_element(std::mt19937_64& rng) const {
  return from_coordinates(random_coordinates(rng), iwahori_.identity());
}

}  // namespace iwahori
