// SPDX-License-Identifier: Apache-2.0
#include "castreg/matrix.hpp"

#include "castreg/error.hpp"

namespace castreg {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) throw Error(ErrorCode::BadParams, "entry count does not match shape");
  for (Elem x : data_) {
    if (!field_.contains(x)) {
      throw Error(ErrorCode::FieldMismatch, "entry " + std::to_string(x.value) + " is not in " + field_.describe());
    }
  }
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(const Field& field, std::size_t cols, std::span<const std::vector<Elem>> rows) {
  Matrix m(field, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Matrix::append_row(std::span<const Elem> values) {
  if (values.size() != cols_) throw Error(ErrorCode::BadParams, "row length does not match column count");
  for (Elem x : values) {
    if (!field_.contains(x)) throw Error(ErrorCode::FieldMismatch, "entry not in " + field_.describe());
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

std::vector<Elem> Matrix::apply(std::span<const Elem> x) const {
  if (x.size() != cols_) throw Error(ErrorCode::FieldMismatch, "vector length does not match column count");
  std::vector<Elem> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Elem acc = field_.zero();
    for (std::size_t c = 0; c < cols_; ++c) acc = field_.add(acc, field_.mul(at(r, c), x[c]));
    out[r] = acc;
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RrefResult rref(const Matrix& m) {
  const Field& f = m.field();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
    std::size_t sel = pivot_row;
    while (sel < a.rows() && a.at(sel, c).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivot_row) {
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a.at(sel, k), a.at(pivot_row, k));
    }
    const Elem scale = f.inv(a.at(pivot_row, c));
    for (std::size_t k = c; k < a.cols(); ++k) a.at(pivot_row, k) = f.mul(a.at(pivot_row, k), scale);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row) continue;
      const Elem factor = a.at(r, c);
      if (factor.is_zero()) continue;
      const Elem neg = f.neg(factor);
      for (std::size_t k = c; k < a.cols(); ++k) {
        const Elem pk = a.at(pivot_row, k);
        if (!pk.is_zero()) a.at(r, k) = f.add(a.at(r, k), f.mul(neg, pk));
      }
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  const std::size_t r = pivots.size();
  return RrefResult{std::move(a), r, std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  // Row-echelon only; cheaper than the full reduction.
  const Field& f = m.field();
  Matrix a = m;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
    std::size_t sel = pivot_row;
    while (sel < a.rows() && a.at(sel, c).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivot_row) {
      for (std::size_t k = c; k < a.cols(); ++k) std::swap(a.at(sel, k), a.at(pivot_row, k));
    }
    const Elem scale = f.neg(f.inv(a.at(pivot_row, c)));
    for (std::size_t r = pivot_row + 1; r < a.rows(); ++r) {
      if (a.at(r, c).is_zero()) continue;
      const Elem factor = f.mul(a.at(r, c), scale);
      for (std::size_t k = c; k < a.cols(); ++k) {
        const Elem pk = a.at(pivot_row, k);
        if (!pk.is_zero()) a.at(r, k) = f.add(a.at(r, k), f.mul(factor, pk));
      }
    }
    ++pivot_row;
  }
  return pivot_row;
}

Matrix kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  const auto red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivot_cols) is_pivot[c] = true;
  Matrix basis(f, 0, m.cols());
  std::vector<Elem> v(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), f.zero());
    v[free] = f.one();
    for (std::size_t j = 0; j < red.rank; ++j) v[red.pivot_cols[j]] = f.neg(red.reduced.at(j, free));
    basis.append_row(v);
  }
  return basis;
}

std::optional<std::vector<Elem>> solve(const Matrix& m, std::span<const Elem> b) {
  const Field& f = m.field();
  if (b.size() != m.rows()) throw Error(ErrorCode::FieldMismatch, "right-hand side length does not match rows");
  Matrix aug(f, m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!f.contains(b[r])) throw Error(ErrorCode::FieldMismatch, "right-hand side entry not in field");
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  const auto red = rref(aug);
  if (!red.pivot_cols.empty() && red.pivot_cols.back() == m.cols()) return std::nullopt;
  std::vector<Elem> x(m.cols(), f.zero());
  for (std::size_t j = 0; j < red.rank; ++j) x[red.pivot_cols[j]] = red.reduced.at(j, m.cols());
  return x;
}

bool in_row_space(const RrefResult& red, std::span<const Elem> v) {
  const Field& f = red.reduced.field();
  std::vector<Elem> rest(v.begin(), v.end());
  for (std::size_t j = 0; j < red.rank; ++j) {
    const Elem c = rest[red.pivot_cols[j]];
    if (c.is_zero()) continue;
    const Elem neg = f.neg(c);
    auto row = red.reduced.row(j);
    for (std::size_t k = red.pivot_cols[j]; k < rest.size(); ++k) {
      if (!row[k].is_zero()) rest[k] = f.add(rest[k], f.mul(neg, row[k]));
    }
  }
  for (Elem x : rest)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace castreg
