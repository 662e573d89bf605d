// SPDX-License-Identifier: Apache-2.0
//
// Dense matrices over a Field and Gaussian elimination with first-nonzero pivoting.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "castreg/field.hpp"

namespace castreg {

class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  /// Throws FieldMismatch if an entry is not an element of `field`, BadParams on size mismatch.
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  const std::vector<Elem>& entries() const { return data_; }

  static Matrix identity(const Field& field, std::size_t n);
  /// Stacks the given vectors as rows; all must have length `cols`.
  static Matrix from_rows(const Field& field, std::size_t cols,
                          std::span<const std::vector<Elem>> rows);

  void append_row(std::span<const Elem> values);
  Matrix transpose() const;
  /// Matrix-vector product. Throws FieldMismatch on a length mismatch or invalid entry.
  std::vector<Elem> apply(std::span<const Elem> x) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Rows form a basis of the right null space, one per free column (ascending):
/// the vector with 1 at the free column and minus the reduced entries at the pivots.
Matrix kernel_basis(const Matrix& m);

/// Some x with m x = b (free variables zero), or nullopt when inconsistent.
std::optional<std::vector<Elem>> solve(const Matrix& m, std::span<const Elem> b);

/// True iff `v` lies in the row space of a matrix already in reduced row echelon form.
bool in_row_space(const RrefResult& reduced, std::span<const Elem> v);

}  // namespace castreg
