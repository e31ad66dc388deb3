#include <doctest.h>

#include "helpers.hpp"
#include "rhoc/rigidity.hpp"
#include "rhoc/symbolic_rank.hpp"

using namespace rhoc;
using namespace rhoc::test;

namespace {

R2Instance single_row(const Field& f) { return {f, 2, {{vec(f, {1, 0}), vec(f, {0, 1})}}}; }

RkInstance e123_in_k4(const Field& f) {
  return {f, 4, 3, {{vec(f, {1, 0, 0, 0}), vec(f, {0, 1, 0, 0}), vec(f, {0, 0, 1, 0})}}};
}

}  // namespace

TEST_CASE("instance validation") {
  Field q = Field::rationals();
  R2Instance bad{q, 3, {{vec(q, {1, 0}), vec(q, {0, 1, 0})}}};
  CHECK(error_code_of([&] { validate(bad); }) == ErrorCode::DimensionMismatch);
  RkInstance k3{q, 3, 3, {{vec(q, {1, 0, 0}), vec(q, {0, 1, 0}), vec(q, {0, 0, 1})}}};
  CHECK(error_code_of([&] { validate(k3); }) == ErrorCode::BadOrder);
  RkInstance k1{q, 3, 1, {{vec(q, {1, 0, 0})}}};
  CHECK(error_code_of([&] { validate(k1); }) == ErrorCode::BadOrder);
}

TEST_CASE("r2_family examples") {
  Field q = Field::rationals();
  auto one = r2_family(single_row(q));
  REQUIRE(one.family.size() == 1);
  CHECK(one.family[0].dim() == 2);
  CHECK(one.dropped.empty());

  R2Instance parallel{q, 2, {{vec(q, {1, 0}), vec(q, {1, 0})}}};
  auto none = r2_family(parallel);
  CHECK(none.family.size() == 0);
  CHECK(none.dropped == std::vector<std::size_t>{0});

  auto k3 = r2_family(rigidity_r2_instance(Graph(3, {{0, 1}, {0, 2}, {1, 2}})));
  CHECK(k3.family.size() == 3);
  CHECK(k3.family.ambient_dim() == 6);
  for (const auto& s : k3.family.members()) CHECK(s.dim() == 2);
}

TEST_CASE("r2_rank examples") {
  Field q = Field::rationals();
  CHECK(r2_rank(single_row(q)).rank == 1);
  CHECK(r2_rank(rigidity_r2_instance(Graph(3, {{0, 1}, {0, 2}, {1, 2}}))).rank == 3);
  auto dropped = r2_rank({q, 2, {{vec(q, {1, 0}), vec(q, {2, 0})}}});
  CHECK(dropped.rank == 0);
  CHECK(dropped.dropped == std::vector<std::size_t>{0});
}

TEST_CASE("rk_rank examples") {
  Field q = Field::rationals();
  CHECK(rk_rank(e123_in_k4(q)).rank == 1);
  RkInstance repeated{q, 4, 3, {{vec(q, {1, 0, 0, 0}), vec(q, {1, 0, 0, 0}), vec(q, {0, 0, 1, 0})}}};
  auto r = rk_rank(repeated);
  CHECK(r.rank == 0);
  CHECK(r.dropped == std::vector<std::size_t>{0});
}

TEST_CASE("rk_rank agrees with random evaluation on five tensors in K^6") {
  Field fp = Field::prime(kDefaultPrime);
  Rng rng(11);
  RkInstance inst{fp, 6, 3, {}};
  for (int i = 0; i < 5; ++i) {
    std::vector<Vector> factors;
    for (int j = 0; j < 3; ++j) factors.push_back(sample_vector(fp, 6, rng));
    inst.tensors.push_back(factors);
  }
  CHECK(rk_rank(inst).rank == randomized_rank(rk_symbolic(inst), fp, 5, 0));
}

TEST_CASE("intersect_with_hyperplane examples") {
  Field q = Field::rationals();
  Subspace f = span(q, 3, {{1, 0, 0}, {0, 1, 0}});
  auto a = intersect_with_hyperplane(f, vec(q, {1, 1, 1}));
  REQUIRE(a.basis_vectors.size() == 1);
  CHECK(a.basis_vectors[0] == vec(q, {1, -1, 0}));

  auto b = intersect_with_hyperplane(f, vec(q, {1, 0, 0}));
  REQUIRE(b.basis_vectors.size() == 1);
  CHECK(b.basis_vectors[0] == vec(q, {0, -1, 0}));
  CHECK(b.span() == line(q, 3, 1));

  auto c = intersect_with_hyperplane(line(q, 3, 0), vec(q, {0, 1, 0}));
  CHECK(c.span() == line(q, 3, 0));

  CHECK(error_code_of([&] { intersect_with_hyperplane(f, vec(q, {1, 0})); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("intersect_with_codim_k examples") {
  Field q = Field::rationals();
  Subspace k3 = span(q, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto a = intersect_with_codim_k(k3, mat(q, 3, {{1, 0, 0}, {0, 1, 0}}));
  CHECK_FALSE(a.fallback);
  REQUIRE(a.basis_vectors.size() == 1);
  CHECK(a.basis_vectors[0] == vec(q, {0, 0, -1}));

  Subspace plane = span(q, 3, {{1, 0, 0}, {0, 1, 0}});
  auto b = intersect_with_codim_k(plane, mat(q, 3, {{1, 2, 3}, {4, 5, 7}}));
  CHECK(b.fallback);
  CHECK(b.span().is_zero());

  Field fp = Field::prime(kDefaultPrime);
  Rng rng(3);
  std::vector<Vector> rows;
  for (int i = 0; i < 4; ++i) rows.push_back(sample_vector(fp, 6, rng));
  Subspace f = Subspace::span_of(Matrix::from_rows(fp, 6, rows));
  Matrix x = Matrix::from_rows(fp, 6, {sample_vector(fp, 6, rng), sample_vector(fp, 6, rng)});
  auto c = intersect_with_codim_k(f, x);
  CHECK_FALSE(c.fallback);
  REQUIRE(c.basis_vectors.size() == 2);
  for (const auto& w : c.basis_vectors) {
    CHECK(all_zero(fp, rhoc::apply(x, w)));
    CHECK(f.contains(w));
  }
  CHECK(c.span() == kernel_in_subspace(f, x));
}

TEST_CASE("evaluate_r2_matrix examples") {
  Field q = Field::rationals();
  Matrix m = evaluate_r2_matrix(single_row(q), vec(q, {3, 5}));
  CHECK(m.row_vector(0) == vec(q, {-5, 3}));
  R2Instance parallel{q, 2, {{vec(q, {1, 2}), vec(q, {2, 4})}}};
  CHECK(all_zero(q, evaluate_r2_matrix(parallel, vec(q, {7, -1})).row_vector(0)));
  CHECK(all_zero(q, evaluate_r2_matrix(single_row(q), vec(q, {0, 0})).row_vector(0)));
}

TEST_CASE("evaluate_rk_matrix examples") {
  Field q = Field::rationals();
  RkInstance k2{q, 3, 2, {{vec(q, {1, 2, 0}), vec(q, {0, 1, 3})}}};
  R2Instance r2{q, 3, {{vec(q, {1, 2, 0}), vec(q, {0, 1, 3})}}};
  Vector x = vec(q, {2, -1, 4});
  CHECK(evaluate_rk_matrix(k2, {x}) == evaluate_r2_matrix(r2, x));

  Vector y = vec(q, {1, 2, 3, 4});
  CHECK(all_zero(q, evaluate_rk_matrix(e123_in_k4(q), {y, y}).row_vector(0)));
  // e1 ∧ e2 ∧ e3 contracted with e1, e2 leaves e3.
  auto m = evaluate_rk_matrix(e123_in_k4(q), {vec(q, {1, 0, 0, 0}), vec(q, {0, 1, 0, 0})});
  CHECK(m.row_vector(0) == vec(q, {0, 0, 1, 0}));
}

TEST_CASE("randomized_rank examples and preconditions") {
  Field fp = Field::prime(kDefaultPrime);
  Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(randomized_rank(r2_symbolic(rigidity_r2_instance(k3)), fp, 3, 0) == 3);
  Field q = Field::rationals();
  CHECK(randomized_rank(r2_symbolic({q, 2, {{vec(q, {1, 0}), vec(q, {0, 0})}}}), fp, 5, 0) == 0);
  CHECK(randomized_rank(r2_symbolic(single_row(q)), fp, 5, 0) == 1);
  CHECK(error_code_of([&] { randomized_rank(r2_symbolic(single_row(q)), q, 5, 0); }) == ErrorCode::BadPrime);
  R2Instance many{q, 2, {}};
  for (int i = 0; i < 3; ++i) many.rows.push_back({vec(q, {1, 0}), vec(q, {0, 1})});
  CHECK(error_code_of([&] { randomized_rank(r2_symbolic(many), Field::prime(3), 5, 0); }) == ErrorCode::CharTooSmall);
  CHECK(randomized_rank(r2_symbolic(many), fp, 5, 9) == randomized_rank(r2_symbolic(many), fp, 5, 9));
}

TEST_CASE("split_to_planes examples") {
  Field q = Field::rationals();
  Subspace plane = span(q, 3, {{1, 0, 0}, {0, 1, 0}});
  auto one = split_to_planes(SubspaceFamily(q, 3, {plane}));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == plane);
  Subspace solid = span(q, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  CHECK(split_to_planes(SubspaceFamily(q, 4, {solid})).size() == 3);
  CHECK(error_code_of([&] { split_to_planes(SubspaceFamily(q, 3, {line(q, 3, 0)})); }) == ErrorCode::DimTooSmall);
}
