#include "rhoc/symbolic_rank.hpp"

#include <algorithm>

#include "rhoc/error.hpp"
#include "rhoc/rho_engine.hpp"

namespace rhoc {

namespace {

void check_length(const Vector& v, std::size_t n, const std::string& what) {
  if (v.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                what + " has length " + std::to_string(v.size()) + ", expected " + std::to_string(n));
  }
}

Vector convert_vector(const Vector& v, const Field& to, const Field& from) {
  Vector out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(to.convert(s, from));
  return out;
}

// out += s * v
void axpy(const Field& f, Vector& out, const Scalar& s, std::span<const Scalar> v) {
  if (f.is_zero(s)) return;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(out[i], f.mul(s, v[i]));
}

std::size_t integral_rank(const Rational& value) {
  check_invariant(value.get_den() == 1 && sgn(value) >= 0, "symbolic rank is not a nonnegative integer");
  return value.get_num().get_ui();
}

Matrix r2_rows_in(const R2Instance& inst, const Field& field, std::span<const Scalar> x) {
  if (x.size() != inst.ambient_dim) {
    throw Error(ErrorCode::DimensionMismatch, "evaluation point has length " + std::to_string(x.size()) +
                                                  ", expected " + std::to_string(inst.ambient_dim));
  }
  Matrix out(field, 0, inst.ambient_dim);
  for (const auto& row : inst.rows) {
    Vector u = convert_vector(row.u, field, inst.field);
    Vector v = convert_vector(row.v, field, inst.field);
    Scalar ux = dot(field, u, x), vx = dot(field, v, x);
    Vector r(inst.ambient_dim, field.zero());
    axpy(field, r, ux, v);
    axpy(field, r, field.neg(vx), u);
    out.append_row(r);
  }
  return out;
}

Matrix rk_rows_in(const RkInstance& inst, const Field& field, const std::vector<Vector>& xs) {
  const std::size_t k = inst.order, n = inst.ambient_dim;
  if (xs.size() + 1 != k) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(k - 1) + " variable vectors, got " +
                                                  std::to_string(xs.size()));
  }
  for (const auto& x : xs) check_length(x, n, "variable vector");
  Matrix out(field, 0, n);
  for (const auto& tensor : inst.tensors) {
    std::vector<Vector> a;
    for (const auto& factor : tensor) a.push_back(convert_vector(factor, field, inst.field));
    Matrix pairing(field, k - 1, k);
    for (std::size_t r = 0; r + 1 < k; ++r)
      for (std::size_t j = 0; j < k; ++j) pairing(r, j) = dot(field, xs[r], a[j]);
    Vector row(n, field.zero());
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<std::size_t> cols;
      for (std::size_t c = 0; c < k; ++c)
        if (c != j) cols.push_back(c);
      Scalar minor = determinant(pairing.select_columns(cols));
      if ((k - 1 + j) % 2 == 1) minor = field.neg(minor);
      axpy(field, row, minor, a[j]);
    }
    out.append_row(row);
  }
  return out;
}

}  // namespace

void validate(const R2Instance& inst) {
  for (std::size_t i = 0; i < inst.rows.size(); ++i) {
    check_length(inst.rows[i].u, inst.ambient_dim, "row " + std::to_string(i) + " u");
    check_length(inst.rows[i].v, inst.ambient_dim, "row " + std::to_string(i) + " v");
  }
}

void validate(const RkInstance& inst) {
  if (inst.order < 2 || inst.order >= inst.ambient_dim) {
    throw Error(ErrorCode::BadOrder, "order k = " + std::to_string(inst.order) + " needs 2 <= k < n = " +
                                         std::to_string(inst.ambient_dim));
  }
  for (std::size_t i = 0; i < inst.tensors.size(); ++i) {
    if (inst.tensors[i].size() != inst.order) {
      throw Error(ErrorCode::DimensionMismatch, "tensor " + std::to_string(i) + " has " +
                                                    std::to_string(inst.tensors[i].size()) + " factors");
    }
    for (const auto& factor : inst.tensors[i]) check_length(factor, inst.ambient_dim, "tensor " + std::to_string(i) + " factor");
  }
}

FamilyBuild r2_family(const R2Instance& inst) {
  validate(inst);
  FamilyBuild out{SubspaceFamily(inst.field, inst.ambient_dim), {}, {}};
  for (std::size_t i = 0; i < inst.rows.size(); ++i) {
    auto s = Subspace::span_of(Matrix::from_rows(inst.field, inst.ambient_dim, {inst.rows[i].u, inst.rows[i].v}));
    if (s.dim() < 2) {
      out.dropped.push_back(i);
      continue;
    }
    out.family.push_back(std::move(s));
    out.source_rows.push_back(i);
  }
  return out;
}

FamilyBuild rk_family(const RkInstance& inst) {
  validate(inst);
  FamilyBuild out{SubspaceFamily(inst.field, inst.ambient_dim), {}, {}};
  for (std::size_t i = 0; i < inst.tensors.size(); ++i) {
    auto s = Subspace::span_of(Matrix::from_rows(inst.field, inst.ambient_dim, inst.tensors[i]));
    if (s.dim() < inst.order) {
      out.dropped.push_back(i);
      continue;
    }
    out.family.push_back(std::move(s));
    out.source_rows.push_back(i);
  }
  return out;
}

SymbolicRank r2_rank(const R2Instance& inst, SfmBackend backend) {
  auto built = r2_family(inst);
  auto result = rho(built.family, Rational(1), backend);
  return {integral_rank(result.value), built.dropped};
}

SymbolicRank rk_rank(const RkInstance& inst, SfmBackend backend) {
  auto built = rk_family(inst);
  auto result = rho(built.family, Rational(static_cast<unsigned long>(inst.order - 1)), backend);
  return {integral_rank(result.value), built.dropped};
}

Subspace IntersectionBasis::span() const {
  Matrix m(subspace.field(), 0, subspace.ambient_dim());
  for (const auto& w : basis_vectors) m.append_row(w);
  return Subspace::span_of(m);
}

IntersectionBasis intersect_with_hyperplane(const Subspace& f, std::span<const Scalar> x) {
  if (x.size() != f.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "hyperplane normal has wrong length");
  const Field& field = f.field();
  Matrix constraints(field, 0, f.ambient_dim());
  constraints.append_row(x);
  IntersectionBasis out{f, constraints, {}, false};

  std::vector<Scalar> pairings;
  for (std::size_t i = 0; i < f.dim(); ++i) pairings.push_back(dot(field, f.basis().row(i), x));
  auto pivot = std::find_if(pairings.begin(), pairings.end(), [&](const Scalar& s) { return !field.is_zero(s); });
  if (pivot == pairings.end()) {
    out.basis_vectors = f.basis().row_vectors();
    return out;
  }
  const auto i = static_cast<std::size_t>(pivot - pairings.begin());
  for (std::size_t j = 0; j < f.dim(); ++j) {
    if (j == i) continue;
    Vector w(f.ambient_dim(), field.zero());
    axpy(field, w, pairings[j], f.basis().row(i));
    axpy(field, w, field.neg(pairings[i]), f.basis().row(j));
    out.basis_vectors.push_back(std::move(w));
  }
  return out;
}

IntersectionBasis intersect_with_codim_k(const Subspace& f, const Matrix& constraints) {
  Subspace kernel = kernel_in_subspace(f, constraints);
  const Field& field = f.field();
  const std::size_t m = f.dim(), k = constraints.rows();
  IntersectionBasis out{f, constraints, {}, false};
  if (k >= m || kernel.dim() != m - k) {
    out.basis_vectors = kernel.basis().row_vectors();
    out.fallback = true;
    return out;
  }

  Matrix pairing = multiply(constraints, f.basis().transpose());  // M = X V, k x m
  std::vector<std::size_t> independent;
  EchelonBasis columns(field, k);
  Matrix pairing_t = pairing.transpose();
  for (std::size_t j = 0; j < m && independent.size() < k; ++j)
    if (columns.add(pairing_t.row(j))) independent.push_back(j);
  check_invariant(independent.size() == k, "pairing matrix lost rank although the kernel has codimension k");

  for (std::size_t i = 0; i < m; ++i) {
    if (std::find(independent.begin(), independent.end(), i) != independent.end()) continue;
    std::vector<std::size_t> s = independent;
    s.push_back(i);
    std::sort(s.begin(), s.end());
    Vector w(f.ambient_dim(), field.zero());
    for (std::size_t j = 0; j < s.size(); ++j) {
      std::vector<std::size_t> rest;
      for (std::size_t t = 0; t < s.size(); ++t)
        if (t != j) rest.push_back(s[t]);
      Scalar coeff = determinant(pairing.select_columns(rest));
      // (-1)^(j+1) with j counted from 1
      if (j % 2 == 0) coeff = field.neg(coeff);
      axpy(field, w, coeff, f.basis().row(s[j]));
    }
    out.basis_vectors.push_back(std::move(w));
  }

  for (const auto& w : out.basis_vectors) {
    for (std::size_t r = 0; r < k; ++r)
      check_invariant(field.is_zero(dot(field, w, constraints.row(r))), "w_S is not orthogonal to a constraint row");
  }
  Subspace spanned = out.span();
  check_invariant(spanned.dim() == m - k && spanned == kernel, "w_S vectors do not form a basis of f ∩ h");
  return out;
}

Matrix evaluate_r2_matrix(const R2Instance& inst, std::span<const Scalar> x) {
  validate(inst);
  return r2_rows_in(inst, inst.field, x);
}

Matrix evaluate_rk_matrix(const RkInstance& inst, const std::vector<Vector>& xs) {
  validate(inst);
  return rk_rows_in(inst, inst.field, xs);
}

SymbolicMatrix r2_symbolic(const R2Instance& inst) {
  validate(inst);
  return {inst.rows.size(), inst.ambient_dim,
          [inst](const Field& field, std::span<const Scalar> x) { return r2_rows_in(inst, field, x); }};
}

SymbolicMatrix rk_symbolic(const RkInstance& inst) {
  validate(inst);
  const std::size_t n = inst.ambient_dim;
  return {inst.tensors.size(), (inst.order - 1) * n, [inst, n](const Field& field, std::span<const Scalar> x) {
            std::vector<Vector> xs;
            for (std::size_t r = 0; r + 1 < inst.order; ++r) xs.emplace_back(x.begin() + r * n, x.begin() + (r + 1) * n);
            return rk_rows_in(inst, field, xs);
          }};
}

std::size_t randomized_rank(const SymbolicMatrix& matrix, const Field& field, std::size_t trials, std::uint64_t seed) {
  if (!field.is_prime()) throw Error(ErrorCode::BadPrime, "randomized rank needs a prime field");
  if (field.modulus() <= matrix.rows) {
    throw Error(ErrorCode::CharTooSmall, "characteristic " + std::to_string(field.modulus()) +
                                             " does not exceed the row count " + std::to_string(matrix.rows));
  }
  std::size_t best = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    Vector x = sample_vector(field, matrix.num_vars, rng);
    best = std::max(best, rank(matrix.evaluate(field, x)));
  }
  return best;
}

SubspaceFamily split_to_planes(const SubspaceFamily& family) {
  SubspaceFamily out(family.field(), family.ambient_dim());
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& basis = family[i].basis();
    if (basis.rows() < 2) {
      throw Error(ErrorCode::DimTooSmall, "member " + std::to_string(i) + " is 1-dimensional");
    }
    for (std::size_t a = 0; a < basis.rows(); ++a)
      for (std::size_t b = a + 1; b < basis.rows(); ++b)
        out.push_back(Subspace::span_of(Matrix::from_rows(family.field(), family.ambient_dim(),
                                                          {basis.row_vector(a), basis.row_vector(b)})));
  }
  return out;
}

}  // namespace rhoc
