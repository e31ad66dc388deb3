#include "rhoc/matrix.hpp"

#include <utility>

#include "rhoc/error.hpp"

namespace rhoc {

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, 0, cols);
  for (const auto& r : rows) {
    if (r.size() != cols) {
      throw Error(ErrorCode::DimensionMismatch,
                  "row of length " + std::to_string(r.size()) + ", expected " + std::to_string(cols));
    }
    m.append_row(r);
  }
  return m;
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

void Matrix::append_row(std::span<const Scalar> values) {
  if (values.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "appended row has wrong length");
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

bool Matrix::row_is_zero(std::size_t r) const {
  for (const auto& x : row(r)) {
    if (!field_.is_zero(x)) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix out(field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = (*this)(r, cols[j]);
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  if (!(a.field() == b.field())) throw Error(ErrorCode::MixedField, "matrix product over different fields");
  const Field& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (f.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(a(i, k), b(k, j)));
    }
  return out;
}

Vector apply(const Matrix& a, std::span<const Scalar> v) {
  if (a.cols() != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  Vector out;
  out.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) out.push_back(dot(a.field(), a.row(r), v));
  return out;
}

RrefResult rref(const Matrix& m) {
  const Field& f = m.field();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t pr = lead;
    while (pr < a.rows() && f.is_zero(a(pr, col))) ++pr;
    if (pr == a.rows()) continue;
    a.swap_rows(pr, lead);
    Scalar inv = f.inv(a(lead, col));
    for (std::size_t c = col; c < a.cols(); ++c) a(lead, c) = f.mul(a(lead, c), inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || f.is_zero(a(r, col))) continue;
      Scalar factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) = f.sub_mul(a(r, c), factor, a(lead, c));
    }
    pivots.push_back(col);
    ++lead;
  }
  Matrix reduced(f, 0, a.cols());
  for (std::size_t r = 0; r < lead; ++r) reduced.append_row(a.row(r));
  return {std::move(reduced), lead, std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  EchelonBasis basis(m.field(), m.cols());
  basis.add_rows(m);
  return basis.rank();
}

std::vector<Vector> nullspace(const Matrix& m) {
  const Field& f = m.field();
  auto [r, rk, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < rk; ++i) v[pivots[i]] = f.neg(r(i, free));
    out.push_back(std::move(v));
  }
  return out;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const Field& f = m.field();
  Matrix a = m;
  Scalar det = f.one();
  for (std::size_t col = 0; col < a.cols(); ++col) {
    std::size_t pr = col;
    while (pr < a.rows() && f.is_zero(a(pr, col))) ++pr;
    if (pr == a.rows()) return f.zero();
    if (pr != col) {
      a.swap_rows(pr, col);
      det = f.neg(det);
    }
    det = f.mul(det, a(col, col));
    Scalar inv = f.inv(a(col, col));
    for (std::size_t r = col + 1; r < a.rows(); ++r) {
      if (f.is_zero(a(r, col))) continue;
      Scalar factor = f.mul(a(r, col), inv);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) = f.sub_mul(a(r, c), factor, a(col, c));
    }
  }
  return det;
}

Vector EchelonBasis::reduce(std::span<const Scalar> row) const {
  if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "row length differs from basis width");
  Vector v(row.begin(), row.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar coeff = v[pivots_[i]];
    if (field_.is_zero(coeff)) continue;
    for (std::size_t c = pivots_[i]; c < cols_; ++c) v[c] = field_.sub_mul(v[c], coeff, rows_[i][c]);
  }
  return v;
}

bool EchelonBasis::add(std::span<const Scalar> row) {
  Vector v = reduce(row);
  std::size_t lead = 0;
  while (lead < cols_ && field_.is_zero(v[lead])) ++lead;
  if (lead == cols_) return false;
  Scalar inv = field_.inv(v[lead]);
  for (std::size_t c = lead; c < cols_; ++c) v[c] = field_.mul(v[c], inv);
  rows_.push_back(std::move(v));
  pivots_.push_back(lead);
  return true;
}

void EchelonBasis::add_rows(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) add(m.row(r));
}

bool EchelonBasis::contains(std::span<const Scalar> row) const {
  Vector v = reduce(row);
  for (const auto& x : v) {
    if (!field_.is_zero(x)) return false;
  }
  return true;
}

}  // namespace rhoc
