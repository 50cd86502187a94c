#pragma once

#include "homzero/integer.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace homzero {

/// Dense integer matrix, row-major. Chains are column vectors and maps act
/// on the left, so a boundary from degree n to degree n-1 has one column
/// per basis element of degree n.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
  static IntMatrix diagonal(std::span<const Integer> d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  const std::vector<Integer>& entries() const noexcept { return data_; }

  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_diagonal() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  /// Appends the columns of `other` on the right; row counts must agree.
  IntMatrix hconcat(const IntMatrix& other) const;
  IntMatrix submatrix(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
std::vector<Integer> operator*(const IntMatrix& a, std::span<const Integer> x);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

/// Compressed-column sparse matrix. Boundary maps are stored this way:
/// a column of a bar-type boundary has at most (n+1)*rank nonzeros.
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, Integer>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  static SparseMatrix from_dense(const IntMatrix& m);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }

  /// Entries of column c, sorted by row with no explicit zeros.
  const std::vector<Entry>& column(std::size_t c) const { return columns_[c]; }

  /// Replaces column c; duplicates are summed and zeros dropped.
  void set_column(std::size_t c, std::vector<Entry> entries);

  std::size_t nonzeros() const;
  IntMatrix to_dense() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace homzero
