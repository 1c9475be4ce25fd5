#pragma once

#include "iwahori/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace iwahori {

/// Dense row-major matrix over any ring-like T.
///
/// T needs +, -, * and ==; there is no default element, so every constructor
/// takes the fill value explicitly (p-adic scalars carry their ring).
template <class T>
class Matrix {
public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(rows_, o.cols_, (*this)(0, 0) - (*this)(0, 0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < o.cols_; ++j) {
        T acc = (*this)(i, 0) * o(0, j);
        for (std::size_t k = 1; k < cols_; ++k) acc = acc + (*this)(i, k) * o(k, j);
        out(i, j) = acc;
      }
    return out;
  }

  Matrix operator+(const Matrix& o) const { return zip(o, [](const T& a, const T& b) { return a + b; }); }
  Matrix operator-(const Matrix& o) const { return zip(o, [](const T& a, const T& b) { return a - b; }); }

  Matrix transpose() const {
    Matrix out(cols_, rows_, data_.front());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!(data_[k] == o.data_[k])) return false;
    return true;
  }

private:
  template <class F>
  Matrix zip(const Matrix& o, F f) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    Matrix out = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = f(data_[k], o.data_[k]);
    return out;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using RationalVector = std::vector<Rational>;

/// Rank by exact Gaussian elimination.
std::size_t rank(RationalMatrix a);

/// Solves a·x = b for a matrix of full column rank.
/// Returns nullopt when the system is inconsistent.
std::optional<RationalVector> solve_unique(RationalMatrix a, RationalVector b);

/// Basis of the null space {x : a·x = 0}.
std::vector<RationalVector> null_space(RationalMatrix a);

/// Left inverse L with L·a = 1 for a matrix of full column rank.
RationalMatrix left_inverse(const RationalMatrix& a);

}  // namespace iwahori
