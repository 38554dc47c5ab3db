#pragma once

// Dense exact linear algebra used by the crossed-product model.

#include <bit>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mnring/poly.hpp"

namespace mnr {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

namespace detail {

template <class T>
bool entry_is_zero(const T& x) {
  return is_zero(x);
}

template <class T>
std::size_t weight(const T&) {
  return 1;
}
inline std::size_t weight(const LaurentPoly& p) { return p.size(); }

// Nonzero pivot in column c at or below row r, preferring the sparsest entry.
template <class T>
std::optional<std::size_t> find_pivot(const Matrix<T>& m, std::size_t r, std::size_t c) {
  std::optional<std::size_t> best;
  for (std::size_t i = r; i < m.rows(); ++i) {
    if (entry_is_zero(m(i, c))) continue;
    if (!best || weight(m(i, c)) < weight(m(*best, c))) best = i;
  }
  return best;
}

}  // namespace detail

// Fraction-free (Bareiss) elimination over an integral domain T. `divide(a, b)`
// must return the exact quotient; every division Bareiss performs is exact.
template <class T, class Divide>
T bareiss_determinant(Matrix<T> m, const T& zero, const T& one, Divide divide) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return one;
  T prev = one;
  bool prev_is_one = true;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    auto p = detail::find_pivot(m, k, k);
    if (!p) return zero;
    if (*p != k) {
      m.swap_rows(*p, k);
      negate = !negate;
    }
    const T pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const bool row_zero = detail::entry_is_zero(m(i, k));
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = pivot * m(i, j);
        if (!row_zero && !detail::entry_is_zero(m(k, j))) v = v - m(i, k) * m(k, j);
        if (!prev_is_one && !detail::entry_is_zero(v)) v = divide(v, prev);
        m(i, j) = std::move(v);
      }
      m(i, k) = zero;
    }
    prev = pivot;
    prev_is_one = false;
  }
  T det = m(n - 1, n - 1);
  return negate ? -det : det;
}

// Division-free Laplace expansion, memoized over column subsets: minor[S] is
// the determinant of the first |S| rows on columns S. O(n 2^n) ring products.
template <class T>
T expansion_determinant(const Matrix<T>& m, const T& zero, const T& one) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n > 20) throw std::invalid_argument("expansion determinant: matrix too large");
  std::vector<T> minor(std::size_t{1} << n, zero);
  minor[0] = one;
  for (std::size_t s = 1; s < minor.size(); ++s) {
    const std::size_t row = static_cast<std::size_t>(std::popcount(s)) - 1;
    std::size_t position = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!((s >> j) & 1)) continue;
      const std::size_t rest = s & ~(std::size_t{1} << j);
      if (!detail::entry_is_zero(m(row, j)) && !detail::entry_is_zero(minor[rest])) {
        T term = m(row, j) * minor[rest];
        if ((row + position) % 2 == 0)
          minor[s] = minor[s] + term;
        else
          minor[s] = minor[s] - term;
      }
      ++position;
    }
  }
  return minor.back();
}

inline LaurentPoly bareiss_determinant(Matrix<LaurentPoly> m) {
  return bareiss_determinant(std::move(m), LaurentPoly{}, LaurentPoly(Rational(1)),
                             [](const LaurentPoly& a, const LaurentPoly& b) {
                               auto q = divide_exact(a, b);
                               if (!q) throw std::logic_error("bareiss: inexact division");
                               return std::move(*q);
                             });
}

// Gaussian elimination over a field T (needs is_zero, inverse, + - *).
// Returns the reduced row echelon form and the pivot columns.
template <class T>
std::pair<Matrix<T>, std::vector<std::size_t>> row_reduce(Matrix<T> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    auto p = detail::find_pivot(m, r, c);
    if (!p) continue;
    m.swap_rows(*p, r);
    const T inv = inverse(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!detail::entry_is_zero(m(r, j))) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || detail::entry_is_zero(m(i, c))) continue;
      const T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!detail::entry_is_zero(m(r, j))) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return row_reduce(m).second.size();
}

// Basis of {v : m·v = 0}.
template <class T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& m, const T& zero, const T& one) {
  auto [rref, pivots] = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(m.cols(), zero);
    v[f] = one;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -rref(k, f);
    out.push_back(std::move(v));
  }
  return out;
}

// Solves m·x = rhs for square nonsingular m; nullopt if singular.
template <class T>
std::optional<std::vector<T>> solve(Matrix<T> m, std::vector<T> rhs, const T& zero) {
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k) {
    auto p = detail::find_pivot(m, k, k);
    if (!p) return std::nullopt;
    if (*p != k) {
      m.swap_rows(*p, k);
      std::swap(rhs[*p], rhs[k]);
    }
    const T inv = inverse(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (detail::entry_is_zero(m(i, k))) continue;
      const T f = m(i, k) * inv;
      for (std::size_t j = k + 1; j < n; ++j)
        if (!detail::entry_is_zero(m(k, j))) m(i, j) = m(i, j) - f * m(k, j);
      if (!detail::entry_is_zero(rhs[k])) rhs[i] = rhs[i] - f * rhs[k];
      m(i, k) = zero;
    }
  }
  std::vector<T> x(n, zero);
  for (std::size_t i = n; i-- > 0;) {
    T acc = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j)
      if (!detail::entry_is_zero(m(i, j)) && !detail::entry_is_zero(x[j])) acc = acc - m(i, j) * x[j];
    x[i] = acc * inverse(m(i, i));
  }
  return x;
}

// Determinant over a field T by elimination.
template <class T>
T determinant(Matrix<T> m, const T& zero, const T& one) {
  const std::size_t n = m.rows();
  T det = one;
  for (std::size_t k = 0; k < n; ++k) {
    auto p = detail::find_pivot(m, k, k);
    if (!p) return zero;
    if (*p != k) {
      m.swap_rows(*p, k);
      det = -det;
    }
    det = det * m(k, k);
    const T inv = inverse(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (detail::entry_is_zero(m(i, k))) continue;
      const T f = m(i, k) * inv;
      for (std::size_t j = k + 1; j < n; ++j)
        if (!detail::entry_is_zero(m(k, j))) m(i, j) = m(i, j) - f * m(k, j);
    }
  }
  return det;
}

}  // namespace mnr
