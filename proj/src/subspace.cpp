#include "rhoc/subspace.hpp"

#include "rhoc/error.hpp"

namespace rhoc {

Subspace Subspace::zero(Field field, std::size_t ambient_dim) { return Subspace(Matrix(field, 0, ambient_dim)); }

Subspace Subspace::span_of(const Matrix& generators) { return Subspace(rref(generators).matrix); }

bool Subspace::contains(std::span<const Scalar> v) const {
  EchelonBasis b(field(), ambient_dim());
  b.add_rows(basis_);
  return b.contains(v);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw Error(ErrorCode::MixedAmbient, "containment across ambient dimensions");
  EchelonBasis b(field(), ambient_dim());
  b.add_rows(basis_);
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!b.contains(other.basis().row(r))) return false;
  }
  return true;
}

Subspace subspace_from_rows(const Field& field, std::size_t ambient_dim, const std::vector<Vector>& rows) {
  auto s = Subspace::span_of(Matrix::from_rows(field, ambient_dim, rows));
  if (s.is_zero()) throw Error(ErrorCode::AllRowsZero, "every generating row is zero");
  return s;
}

namespace {

void check_compatible(std::span<const Subspace> subspaces) {
  for (const auto& s : subspaces) {
    if (s.ambient_dim() != subspaces.front().ambient_dim()) {
      throw Error(ErrorCode::MixedAmbient, "subspaces live in different ambient dimensions");
    }
    if (!(s.field() == subspaces.front().field())) {
      throw Error(ErrorCode::MixedField, "subspaces live over different fields");
    }
  }
}

}  // namespace

std::size_t span_dim(std::span<const Subspace> subspaces) {
  if (subspaces.empty()) return 0;
  check_compatible(subspaces);
  EchelonBasis b(subspaces.front().field(), subspaces.front().ambient_dim());
  for (const auto& s : subspaces) b.add_rows(s.basis());
  return b.rank();
}

Subspace span_of(std::span<const Subspace> subspaces) {
  if (subspaces.empty()) throw Error(ErrorCode::DimensionMismatch, "span of an empty list has no ambient space");
  check_compatible(subspaces);
  Matrix all(subspaces.front().field(), 0, subspaces.front().ambient_dim());
  for (const auto& s : subspaces)
    for (std::size_t r = 0; r < s.dim(); ++r) all.append_row(s.basis().row(r));
  return Subspace::span_of(all);
}

Subspace kernel_in_subspace(const Subspace& f, const Matrix& constraints) {
  if (constraints.cols() != f.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "constraint width " + std::to_string(constraints.cols()) +
                                                  " differs from ambient dimension " + std::to_string(f.ambient_dim()));
  }
  const Field& field = f.field();
  // v = a^T B for basis rows B; C v = 0  <=>  (C B^T) a = 0.
  Matrix coeff = multiply(constraints, f.basis().transpose());
  Matrix gens(field, 0, f.ambient_dim());
  for (const auto& a : nullspace(coeff)) {
    Vector v(f.ambient_dim(), field.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (field.is_zero(a[i])) continue;
      for (std::size_t c = 0; c < v.size(); ++c) v[c] = field.add(v[c], field.mul(a[i], f.basis()(i, c)));
    }
    gens.append_row(v);
  }
  return Subspace::span_of(gens);
}

}  // namespace rhoc
