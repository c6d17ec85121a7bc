#pragma once

// Small dense linear algebra over an exact field (row-major, Gaussian
// elimination).  Sizes in this library never exceed 9x9 except for the
// occasional stacked constraint system.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "okubo/field.hpp"

namespace okubo {

template <ExactField F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix() = default;
  Matrix(const F& f, std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

  static Matrix identity(const F& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Elem& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Elem>& data() const { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

template <ExactField F>
Matrix<F> multiply(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (f.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(a(i, k), b(k, j)));
    }
  return out;
}

template <ExactField F>
Matrix<F> transpose(const F& f, const Matrix<F>& a) {
  Matrix<F> out(f, a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

/// Reduced row echelon form in place; returns pivot columns.
template <ExactField F>
std::vector<std::size_t> row_reduce(const F& f, Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && f.is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    const auto inv = f.inv(m(row, col));
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || f.is_zero(m(i, col))) continue;
      const auto factor = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <ExactField F>
std::size_t rank(const F& f, Matrix<F> m) {
  return row_reduce(f, m).size();
}

/// Basis of {v : m v = 0}, one vector per free column, in column order.
template <ExactField F>
std::vector<std::vector<typename F::Elem>> nullspace(const F& f, Matrix<F> m) {
  const auto pivots = row_reduce(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Elem> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <ExactField F>
typename F::Elem determinant(const F& f, Matrix<F> m) {
  auto det = f.one();
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && f.is_zero(m(sel, col))) ++sel;
    if (sel == n) return f.zero();
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(col, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(col, col));
    const auto inv = f.inv(m(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      if (f.is_zero(m(i, col))) continue;
      const auto factor = f.mul(m(i, col), inv);
      for (std::size_t j = col; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(col, j)));
    }
  }
  return det;
}

template <ExactField F>
std::optional<Matrix<F>> inverse(const F& f, const Matrix<F>& m) {
  const std::size_t n = m.rows();
  Matrix<F> aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  const auto pivots = row_reduce(f, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> out(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

/// Some x with m x = b, or nullopt if inconsistent.
template <ExactField F>
std::optional<std::vector<typename F::Elem>> solve(const F& f, const Matrix<F>& m,
                                                   const std::vector<typename F::Elem>& b) {
  Matrix<F> aug(f, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto pivots = row_reduce(f, aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<typename F::Elem> x(m.cols(), f.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

}  // namespace okubo
