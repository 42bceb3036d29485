#pragma once

#include "gradedk/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gradedk {

using Labels = std::vector<std::string>;

/// Dense row-major matrix of exact integers.
///
/// Either dimension may be zero. Row and column labels are optional; when
/// present they must match the corresponding dimension.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows,
                             std::size_t cols_if_empty = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<Integer>& entries() const { return entries_; }

  const std::optional<Labels>& row_labels() const { return row_labels_; }
  const std::optional<Labels>& col_labels() const { return col_labels_; }
  void set_row_labels(Labels labels);
  void set_col_labels(Labels labels);
  IntMatrix without_labels() const;

  std::vector<Integer> column(std::size_t c) const;
  std::vector<std::vector<Integer>> to_rows() const;

  bool is_zero() const;

  // Row/column operations used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  // col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  IntMatrix submatrix(const std::vector<std::size_t>& row_idx,
                      const std::vector<std::size_t>& col_idx) const;

  // Entry-wise equality; labels are ignored.
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
  std::optional<Labels> row_labels_;
  std::optional<Labels> col_labels_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
std::vector<Integer> operator*(const IntMatrix& m, const std::vector<Integer>& x);

/// Transpose; row and column labels swap along with the entries.
IntMatrix transpose(const IntMatrix& m);

/// Exact determinant via fraction-free (Bareiss) elimination.
/// Throws std::invalid_argument for non-square input; det of 0x0 is 1.
Integer determinant(const IntMatrix& m);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace gradedk
