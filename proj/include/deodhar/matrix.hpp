// Dense exact matrices over one scalar domain, with optional row/column
// labels (boundary indices).  Determinants are division free so they stay
// valid over the polynomial ring; rref requires a field.
#pragma once

#include "deodhar/algebra.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace deodhar {

template <class S>
class Matrix {
 public:
  Matrix(int rows, int cols, const S& fill)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimensions");
  }

  static Matrix identity(int n, const S& one) {
    Matrix m(n, n, one - one);
    for (int i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  S& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const S& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  // Labels are boundary indices (1..n); empty means unlabeled.
  std::vector<int> row_labels;
  std::vector<int> col_labels;

  // Row position of a label; throws if unlabeled or absent.
  int row_of_label(int label) const {
    for (std::size_t i = 0; i < row_labels.size(); ++i)
      if (row_labels[i] == label) return static_cast<int>(i);
    throw std::invalid_argument("Matrix: no row labeled " + std::to_string(label));
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    if (data_.empty()) throw std::invalid_argument("Matrix: product of empty matrix");
    S zero = data_[0] - data_[0];
    Matrix out(rows_, o.cols_, zero);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const S& a = at(i, k);
        if (scalar_is_zero(a)) continue;
        for (int j = 0; j < o.cols_; ++j) out.at(i, j) = out.at(i, j) + a * o.at(k, j);
      }
    out.row_labels = row_labels;
    out.col_labels = o.col_labels;
    return out;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  // Column pick by 0-based positions; keeps row labels, relabels columns.
  Matrix select_columns(const std::vector<int>& cols) const {
    if (data_.empty()) throw std::invalid_argument("Matrix: select_columns of empty matrix");
    Matrix out(rows_, static_cast<int>(cols.size()), data_[0] - data_[0]);
    for (int i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, static_cast<int>(j)) = at(i, cols[j]);
    out.row_labels = row_labels;
    if (!col_labels.empty())
      for (int c : cols) out.col_labels.push_back(col_labels[c]);
    return out;
  }

  // Division-free determinant: expansion along the first row of each
  // remaining block, memoized on the active column set.  Exact over any
  // commutative ring scalar, which is what the symbolic minors need.
  S determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
    if (rows_ == 0) throw std::invalid_argument("determinant: empty matrix");
    if (rows_ > 63) throw std::invalid_argument("determinant: dimension too large");
    std::unordered_map<std::uint64_t, S> memo;
    std::uint64_t full = (rows_ == 63) ? ~0ULL : ((1ULL << rows_) - 1);
    return det_rec(0, full, memo);
  }

 private:
  S det_rec(int row, std::uint64_t colmask, std::unordered_map<std::uint64_t, S>& memo) const {
    if (row == rows_ - 1) {
      int c = __builtin_ctzll(colmask);
      return at(row, c);
    }
    auto it = memo.find(colmask);
    if (it != memo.end()) return it->second;
    std::optional<S> acc;
    int sign = 1;
    for (std::uint64_t rest = colmask; rest;) {
      int c = __builtin_ctzll(rest);
      rest &= rest - 1;
      const S& pivot = at(row, c);
      if (!scalar_is_zero(pivot)) {
        S sub = det_rec(row + 1, colmask & ~(1ULL << c), memo);
        S term = pivot * sub;
        if (sign < 0) term = (term - term) - term;
        if (acc)
          acc = *acc + term;
        else
          acc = term;
      }
      sign = -sign;
    }
    S result = acc ? *acc : at(row, __builtin_ctzll(colmask)) - at(row, __builtin_ctzll(colmask));
    memo.emplace(colmask, result);
    return result;
  }

  int rows_, cols_;
  std::vector<S> data_;
};

// Reduced row echelon form over a field.  Returns the reduced matrix and the
// 0-based pivot columns.
template <class S>
std::pair<Matrix<S>, std::vector<int>> rref(Matrix<S> m) {
  static_assert(is_field_v<S>, "rref requires a field scalar");
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!scalar_is_zero(m.at(i, c))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
    S inv = m.at(r, c);
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) / inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || scalar_is_zero(m.at(i, c))) continue;
      S factor = m.at(i, c);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - factor * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class S>
int rank(const Matrix<S>& m) {
  return static_cast<int>(rref(m).second.size());
}

}  // namespace deodhar
