#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "rhoc/partitions.hpp"
#include "rhoc/sfm.hpp"

namespace rhoc {

// Rows of the form (v_i^t u_i - u_i^t v_i) x, i.e. (u_i·x) v_i - (v_i·x) u_i.
struct R2Row {
  Vector u;
  Vector v;
};

struct R2Instance {
  Field field = Field::rationals();
  std::size_t ambient_dim = 0;
  std::vector<R2Row> rows;
};

// Rows are antisymmetrized rank-1 k-tensors a^1 ⊗ ... ⊗ a^k contracted with
// k-1 variable vectors.
struct RkInstance {
  Field field = Field::rationals();
  std::size_t ambient_dim = 0;
  std::size_t order = 0;
  std::vector<std::vector<Vector>> tensors;  // tensors[i][j] = a^{j+1}_i
};

// Throws DimensionMismatch on wrong vector lengths; RkInstance also throws
// BadOrder unless 2 <= k < n.
void validate(const R2Instance& inst);
void validate(const RkInstance& inst);

// Family built from the rows of an instance. Rows whose span is degenerate
// (u ∥ v, or dependent tensor factors) contribute an identically zero row and
// are listed in `dropped` instead of the family.
struct FamilyBuild {
  SubspaceFamily family;
  std::vector<std::size_t> source_rows;  // instance row of each family member
  std::vector<std::size_t> dropped;
};

FamilyBuild r2_family(const R2Instance& inst);
FamilyBuild rk_family(const RkInstance& inst);

struct SymbolicRank {
  std::size_t rank = 0;
  std::vector<std::size_t> dropped;
};

// Generic rank of the R_2 symbolic matrix: ρ_1 of the family of planes.
SymbolicRank r2_rank(const R2Instance& inst, SfmBackend backend = SfmBackend::automatic);
// Generic rank of the R_k symbolic matrix: ρ_{k-1} of the family of k-spaces.
SymbolicRank rk_rank(const RkInstance& inst, SfmBackend backend = SfmBackend::automatic);

// Explicit basis of f ∩ {x_1, ..., x_k}^⊥.
struct IntersectionBasis {
  Subspace subspace;
  Matrix constraints;
  std::vector<Vector> basis_vectors;
  bool fallback = false;  // true when the exact-kernel route was used

  Subspace span() const;
};

// Pivots on the first basis vector v_i with v_i·x ≠ 0 and returns
// w_ij = (v_j·x) v_i - (v_i·x) v_j for j ≠ i; returns f's own basis when
// f lies in the hyperplane.
IntersectionBasis intersect_with_hyperplane(const Subspace& f, std::span<const Scalar> x);

// Signed-minor vectors w_S for S = {i} ∪ J, where J is the lexicographically
// first set of k independent columns of M = X V. Falls back to the exact
// kernel (and sets `fallback`) whenever k >= dim f or dim(f ∩ h) ≠ dim f - k.
IntersectionBasis intersect_with_codim_k(const Subspace& f, const Matrix& constraints);

// m x d matrix with rows (u_i·x) v_i - (v_i·x) u_i.
Matrix evaluate_r2_matrix(const R2Instance& inst, std::span<const Scalar> x);
// Row i is the contraction of Â_i with x^1, ..., x^{k-1}, computed as the
// cofactor expansion along the last row of the k x k matrix whose first k-1
// rows are (x^r · a^j_i) and whose last row holds the vectors a^j_i.
Matrix evaluate_rk_matrix(const RkInstance& inst, const std::vector<Vector>& xs);

// A symbolic matrix presented by its shape and an evaluator at a point of
// K^num_vars.
struct SymbolicMatrix {
  std::size_t rows = 0;
  std::size_t num_vars = 0;
  std::function<Matrix(const Field&, std::span<const Scalar>)> evaluate;
};

SymbolicMatrix r2_symbolic(const R2Instance& inst);
SymbolicMatrix rk_symbolic(const RkInstance& inst);

// Maximum exact rank over `trials` random evaluation points; trial t draws
// its point from an rng seeded with derive_seed(seed, t). Throws
// Error(CharTooSmall) when p <= rows, Error(BadPrime) for non-prime fields.
std::size_t randomized_rank(const SymbolicMatrix& matrix, const Field& field, std::size_t trials, std::uint64_t seed);

// Planes spanned by pairs of basis vectors of each member. Throws
// Error(DimTooSmall) for 1-dimensional members.
SubspaceFamily split_to_planes(const SubspaceFamily& family);

}  // namespace rhoc
