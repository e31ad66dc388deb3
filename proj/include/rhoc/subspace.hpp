#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rhoc/matrix.hpp"

namespace rhoc {

// A linear subspace of K^n stored as the RREF of any generating set, with zero
// rows dropped. Two subspaces are equal as sets iff their bases are equal
// entry-wise. The zero subspace (no basis rows) is representable; families
// reject it.
class Subspace {
 public:
  static Subspace zero(Field field, std::size_t ambient_dim);
  // Canonicalizes an arbitrary generating matrix; the result may be zero.
  static Subspace span_of(const Matrix& generators);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return basis_.rows() == 0; }
  const Matrix& basis() const { return basis_; }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_;
};

// Throws Error(AllRowsZero) if the span is zero, Error(DimensionMismatch) on
// ragged rows.
Subspace subspace_from_rows(const Field& field, std::size_t ambient_dim, const std::vector<Vector>& rows);

// Dimension of the span of the union; 0 for an empty list.
// Throws Error(MixedAmbient) when ambient dimensions differ.
std::size_t span_dim(std::span<const Subspace> subspaces);
Subspace span_of(std::span<const Subspace> subspaces);

// {v in f : constraints * v = 0}. Throws Error(DimensionMismatch) when the
// constraint width differs from f's ambient dimension.
Subspace kernel_in_subspace(const Subspace& f, const Matrix& constraints);

}  // namespace rhoc
