#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rhoc/field.hpp"

namespace rhoc {

// Dense row-major matrix over a single Field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, field.zero()) {}
  // Throws Error(DimensionMismatch) on ragged rows.
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix identity(Field field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const { return Vector(row(r).begin(), row(r).end()); }
  std::vector<Vector> row_vectors() const;

  void append_row(std::span<const Scalar> values);
  void swap_rows(std::size_t a, std::size_t b);
  bool row_is_zero(std::size_t r) const;
  Matrix transpose() const;
  Matrix select_columns(std::span<const std::size_t> cols) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
// a * v for a column vector v.
Vector apply(const Matrix& a, std::span<const Scalar> v);

struct RrefResult {
  Matrix matrix;  // reduced row echelon form, zero rows removed
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan with row operations only; the pivot is always the topmost
// nonzero entry of the leftmost remaining column.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Basis of {v : m v = 0}, one vector per free column.
std::vector<Vector> nullspace(const Matrix& m);
Scalar determinant(const Matrix& m);

// Row space built one vector at a time. Stored rows are in echelon form with
// unit pivots, so membership and rank queries are incremental.
class EchelonBasis {
 public:
  EchelonBasis(Field field, std::size_t cols) : field_(field), cols_(cols) {}

  // Returns true when the row enlarged the span.
  bool add(std::span<const Scalar> row);
  void add_rows(const Matrix& m);
  bool contains(std::span<const Scalar> row) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

 private:
  Vector reduce(std::span<const Scalar> row) const;

  Field field_;
  std::size_t cols_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace rhoc
