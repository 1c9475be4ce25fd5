#include "iwahori/matrix.hpp"

#include <utility>

namespace iwahori {

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pick = row;
    while (pick < a.rows() && a(pick, col) == 0) ++pick;
    if (pick == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(row, j), a(pick, j));
    Rational inv = 1 / a(row, col);
    for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      Rational f = a(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix a) { return row_reduce(a).size(); }

std::optional<RationalVector> solve_unique(RationalMatrix a, RationalVector b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side has the wrong length");
  const std::size_t n = a.cols();
  RationalMatrix aug(a.rows(), n + 1, Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  if (pivots.size() != n) throw std::invalid_argument("system does not have full column rank");
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

std::vector<RationalVector> null_space(RationalMatrix a) {
  auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(a.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalMatrix left_inverse(const RationalMatrix& a) {
  // (aᵗa)⁻¹aᵗ, computed column by column.
  RationalMatrix at = a.transpose();
  RationalMatrix gram = at * a;
  RationalMatrix out(a.cols(), a.rows(), Rational(0));
  for (std::size_t j = 0; j < a.rows(); ++j) {
    RationalVector rhs(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) rhs[i] = at(i, j);
    auto x = solve_unique(gram, rhs);
    if (!x) throw std::invalid_argument("matrix has no left inverse");
    for (std::size_t i = 0; i < a.cols(); ++i) out(i, j) = (*x)[i];
  }
  return out;
}

}  // namespace iwahori
