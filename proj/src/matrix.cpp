#include "homzero/matrix.hpp"

#include "homzero/errors.hpp"

#include <algorithm>
#include <map>
#include <ostream>

namespace homzero {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw InvalidInput("matrix entry count " + std::to_string(data_.size()) + " does not match " +
                       std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const {
  if (other.rows_ != rows_) throw InvalidInput("hconcat: row counts differ");
  IntMatrix out(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
  }
  return out;
}

IntMatrix IntMatrix::submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                               std::size_t ncols) const {
  IntMatrix out(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < ncols; ++c) out(r, c) = (*this)(row0 + r, col0 + c);
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix product: inner dimensions differ");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("matrix sum: shapes differ");
  std::vector<Integer> e(a.entries());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries()[i];
  return IntMatrix(a.rows(), a.cols(), std::move(e));
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("matrix difference: shapes differ");
  std::vector<Integer> e(a.entries());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.entries()[i];
  return IntMatrix(a.rows(), a.cols(), std::move(e));
}

std::vector<Integer> operator*(const IntMatrix& a, std::span<const Integer> x) {
  if (a.cols() != x.size()) throw InvalidInput("matrix-vector product: dimensions differ");
  std::vector<Integer> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0 && x[j] != 0) y[i] += a(i, j) * x[j];
  return y;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

SparseMatrix SparseMatrix::from_dense(const IntMatrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::vector<Entry> col;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (m(r, c) != 0) col.emplace_back(r, m(r, c));
    s.columns_[c] = std::move(col);
  }
  return s;
}

void SparseMatrix::set_column(std::size_t c, std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& x, const Entry& y) { return x.first < y.first; });
  std::vector<Entry> merged;
  merged.reserve(entries.size());
  for (auto& e : entries) {
    if (e.first >= rows_) throw InvalidInput("sparse column entry out of range");
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
    } else {
      merged.push_back(std::move(e));
    }
  }
  std::erase_if(merged, [](const Entry& e) { return e.second == 0; });
  columns_[c] = std::move(merged);
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

IntMatrix SparseMatrix::to_dense() const {
  IntMatrix m(rows_, cols());
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& [r, v] : columns_[c]) m(r, c) = v;
  return m;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("sparse product: inner dimensions differ");
  SparseMatrix out(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    std::map<std::size_t, Integer> acc;
    for (const auto& [k, bkj] : b.column(j))
      for (const auto& [i, aik] : a.column(k)) acc[i] += aik * bkj;
    std::vector<SparseMatrix::Entry> col(acc.begin(), acc.end());
    out.set_column(j, std::move(col));
  }
  return out;
}

}  // namespace homzero
