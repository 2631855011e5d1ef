// Copyright 2026 The comcat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Dense linear algebra shared by the exact (Rational) and floating (double)
// code paths. Elimination is written once; the only difference between the
// two instantiations is how a pivot is judged to be zero.

#include "comcat/error.hpp"
#include "comcat/scalar.hpp"

#include <optional>
#include <vector>

namespace comcat {

using Index = Eigen::Index;

template <class T>
struct Echelon {
  Mat<T> reduced;             // reduced row echelon form
  std::vector<Index> pivots;  // pivot column of each nonzero row
};

namespace detail {

inline bool pivot_is_zero(const Rational& x, const Rational&) { return x == 0; }
inline bool pivot_is_zero(double x, double scale) {
  return std::abs(x) <= numeric_tolerance() * std::max(1.0, scale);
}

}  // namespace detail

inline bool is_zero_exact_or_tiny(const Rational& x) { return x == 0; }
inline bool is_zero_exact_or_tiny(double x) { return x == 0.0; }

template <class T>
Echelon<T> rref(Mat<T> m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  T scale = max_abs<T>(m);
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index best = -1;
    if constexpr (is_exact_v<T>) {
      for (Index i = r; i < rows; ++i)
        if (m(i, c) != 0) {
          best = i;
          break;
        }
    } else {
      double best_abs = 0.0;
      for (Index i = r; i < rows; ++i)
        if (std::abs(m(i, c)) > best_abs) {
          best_abs = std::abs(m(i, c));
          best = i;
        }
      if (best >= 0 && detail::pivot_is_zero(m(best, c), scale)) best = -1;
    }
    if (best < 0) continue;
    if (best != r) m.row(best).swap(m.row(r));
    T inv = T(1) / m(r, c);
    m.row(r) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero_exact_or_tiny(m(i, c))) continue;
      T factor = m(i, c);
      m.row(i) -= factor * m.row(r);
    }
    pivots.push_back(c);
    ++r;
  }
  if constexpr (!is_exact_v<T>) {
    for (Index i = 0; i < m.size(); ++i)
      if (std::abs(m.data()[i]) <= 1e-15 * std::max(1.0, scale)) m.data()[i] = 0.0;
  }
  return {std::move(m), std::move(pivots)};
}

template <class T>
Index rank(const Mat<T>& m) {
  return static_cast<Index>(rref<T>(m).pivots.size());
}

/// Basis of the right null space, one vector per column.
template <class T>
Mat<T> nullspace(const Mat<T>& m) {
  auto e = rref<T>(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Index> free_cols;
  for (Index c = 0; c < cols; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  Mat<T> basis = Mat<T>::Zero(cols, static_cast<Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    Index f = free_cols[k];
    basis(f, static_cast<Index>(k)) = T(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis(e.pivots[r], static_cast<Index>(k)) = -e.reduced(static_cast<Index>(r), f);
  }
  return basis;
}

/// Some solution of A x = b, or nullopt when the system is inconsistent.
template <class T>
std::optional<Vec<T>> solve(const Mat<T>& a, const Vec<T>& b) {
  if (a.rows() != b.size()) throw Error(ErrorCode::DimensionMismatch, "solve: rhs length");
  Mat<T> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  auto e = rref<T>(aug);
  for (Index p : e.pivots)
    if (p == a.cols()) return std::nullopt;
  Vec<T> x = Vec<T>::Zero(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    x(e.pivots[r]) = e.reduced(static_cast<Index>(r), a.cols());
  return x;
}

template <class T>
std::optional<Mat<T>> inverse(const Mat<T>& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const Index n = a.rows();
  Mat<T> aug(n, 2 * n);
  aug << a, Mat<T>::Identity(n, n);
  auto e = rref<T>(aug);
  if (static_cast<Index>(e.pivots.size()) < n || e.pivots[static_cast<std::size_t>(n - 1)] >= n)
    return std::nullopt;
  return Mat<T>(e.reduced.rightCols(n));
}

template <class T>
T determinant(Mat<T> m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square");
  const Index n = m.rows();
  T det(1);
  for (Index c = 0; c < n; ++c) {
    Index p = -1;
    for (Index i = c; i < n; ++i) {
      if (is_zero_exact_or_tiny(m(i, c))) continue;
      if constexpr (is_exact_v<T>) {
        p = i;
        break;
      } else {
        if (p < 0 || std::abs(m(i, c)) > std::abs(m(p, c))) p = i;
      }
    }
    if (p < 0) return T(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    for (Index i = c + 1; i < n; ++i) {
      if (is_zero_exact_or_tiny(m(i, c))) continue;
      T factor = m(i, c) / m(c, c);
      m.row(i) -= factor * m.row(c);
    }
  }
  return det;
}

template <class T>
Mat<T> kron(const Mat<T>& a, const Mat<T>& b) {
  Mat<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

template <class T>
Vec<T> kron(const Vec<T>& a, const Vec<T>& b) {
  Vec<T> out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

// Bipartite vectors on a composite carrier R^{n_A n_B} use the row-major
// convention: coordinate (i, j) lives at index i * n_B + j, so that
// kron(x, y) is the product x (x) y and a bilinear form w satisfies
// w(a, b) = a^T reshape(w) b.

template <class T>
Mat<T> reshape(const Vec<T>& v, Index rows, Index cols) {
  if (v.size() != rows * cols) throw Error(ErrorCode::DimensionMismatch, "reshape size");
  Mat<T> out(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) out(i, j) = v(i * cols + j);
  return out;
}

template <class T>
Vec<T> flatten(const Mat<T>& m) {
  Vec<T> out(m.rows() * m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i * m.cols() + j) = m(i, j);
  return out;
}

/// Permutation implementing the symmetry sigma: A (x) B -> B (x) A.
template <class T>
Mat<T> swap_matrix(Index n_a, Index n_b) {
  Mat<T> p = Mat<T>::Zero(n_a * n_b, n_a * n_b);
  for (Index i = 0; i < n_a; ++i)
    for (Index j = 0; j < n_b; ++j) p(j * n_a + i, i * n_b + j) = T(1);
  return p;
}

template <class T>
Vec<T> swap_bipartite(const Vec<T>& v, Index n_a, Index n_b) {
  return flatten<T>(Mat<T>(reshape<T>(v, n_a, n_b).transpose()));
}

}  // namespace comcat
