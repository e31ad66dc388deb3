#include <doctest.h>

#include "helpers.hpp"
#include "rhoc/generators.hpp"
#include "rhoc/rigidity.hpp"

using namespace rhoc;
using namespace rhoc::test;

namespace {

Graph k3() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }
Graph p3() { return Graph(3, {{0, 1}, {1, 2}}); }
Graph c4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
Graph k4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

}  // namespace

TEST_CASE("graph validation") {
  CHECK(error_code_of([] { Graph(2, {{0, 2}}); }) == ErrorCode::BadVertex);
  CHECK(error_code_of([] { Graph(3, {{2, 2}}); }) == ErrorCode::LoopEdge);
  CHECK(error_code_of([] { Graph(3, {{0, 1}, {1, 0}}); }) == ErrorCode::DuplicateEdge);
  CHECK(k3().has_edge(2, 0));
  CHECK_FALSE(p3().has_edge(0, 2));
}

TEST_CASE("edge_subspace examples") {
  Field q = Field::rationals();
  CHECK(edge_subspace(3, 0, 1, 2) == span(q, 6, {{1, -1, 0, 0, 0, 0}, {0, 0, 0, 1, -1, 0}}));
  CHECK(edge_subspace(2, 0, 1, 1) == span(q, 2, {{1, -1}}));
  CHECK(error_code_of([] { edge_subspace(3, 1, 1, 2); }) == ErrorCode::BadVertex);
  CHECK(error_code_of([] { edge_subspace(3, 0, 3, 2); }) == ErrorCode::BadVertex);
}

TEST_CASE("rigidity_family examples") {
  auto f = rigidity_family(k3(), 2);
  CHECK(f.size() == 3);
  CHECK(f.ambient_dim() == 6);
  CHECK(rigidity_family(Graph(2, {{0, 1}}), 2).size() == 1);
  CHECK(rigidity_family(Graph(4, {}), 2).empty());
}

TEST_CASE("rigidity_rank_2d examples") {
  CHECK(rigidity_rank_2d(k3()) == 3);
  CHECK(rigidity_rank_2d(p3()) == 2);
  CHECK(rigidity_rank_2d(k4()) == 5);
  CHECK(rigidity_rank_2d(c4()) == 4);
  CHECK(rigidity_rank_2d(Graph(5, {})) == 0);
}

TEST_CASE("rigidity_report examples") {
  auto a = rigidity_report(k3(), 2);
  CHECK(a.rank == 3);
  CHECK(a.required == 3);
  CHECK(a.rigid);
  CHECK(a.dof == 0);
  CHECK(a.method == RankMethod::deterministic);

  auto b = rigidity_report(c4(), 2);
  CHECK(b.rank == 4);
  CHECK(b.required == 5);
  CHECK_FALSE(b.rigid);
  CHECK(b.dof == 1);

  auto c = rigidity_report(k4(), 3);
  CHECK(c.rank == 6);
  CHECK(c.required == 6);
  CHECK(c.rigid);
  CHECK(c.method == RankMethod::randomized);

  RigidityOptions forced;
  forced.force_randomized = true;
  auto d = rigidity_report(k4(), 2, forced);
  CHECK(d.rank == 5);
  CHECK(d.method == RankMethod::randomized);

  CHECK(error_code_of([] { rigidity_report(Graph(2, {{0, 1}}), 2); }) == ErrorCode::TooFewVertices);
  RigidityOptions bad_prime;
  bad_prime.prime = 15;
  CHECK(error_code_of([&] { rigidity_report(k4(), 3, bad_prime); }) == ErrorCode::BadPrime);
}

TEST_CASE("symbolic_rigidity_row examples") {
  Field q = Field::rationals();
  Graph g(2, {{0, 1}});
  CHECK(symbolic_rigidity_row(g, 1, {0, 1}, vec(q, {5, 3}), q) == vec(q, {2, -2}));
  CHECK(all_zero(q, symbolic_rigidity_row(g, 1, {0, 1}, vec(q, {4, 4}), q)));

  // Column (u, j) holds x_{u,j} - x_{v,j}; with n = 3 and t = 2 the
  // coordinates are x = (x_{0,1}, x_{1,1}, x_{2,1}, x_{0,2}, x_{1,2}, x_{2,2}).
  Graph tri = k3();
  Vector coords = vec(q, {1, 4, 9, 2, -3, 5});
  Vector row = symbolic_rigidity_row(tri, 2, {0, 1}, coords, q);
  CHECK(row == vec(q, {-3, 3, 0, 5, -5, 0}));
  Matrix m = evaluate_r2_matrix(rigidity_r2_instance(tri, q), r2_point_from_coordinates(coords, 3, q));
  CHECK(m.row_vector(0) == row);
}

TEST_CASE("laman_oracle examples") {
  CHECK(laman_oracle(k3()));
  CHECK_FALSE(laman_oracle(c4()));
  CHECK(laman_oracle(k4()));
  CHECK(laman_oracle(Graph(2, {{0, 1}})));
  CHECK_FALSE(laman_oracle(Graph(2, {})));
  // Two triangles sharing a vertex: 6 edges, but 2n - 3 = 7.
  CHECK_FALSE(laman_oracle(Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}})));
  CHECK(error_code_of([] { laman_oracle(Graph(1, {})); }) == ErrorCode::TooFewVertices);
}

TEST_CASE("isomorphism-class enumeration counts") {
  // Number of simple graphs on n unlabeled vertices.
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156};
  for (std::size_t n = 0; n <= 6; ++n) CHECK(gen::graphs_up_to_isomorphism(n).size() == expected[n]);
}

TEST_CASE("larger graphs stay fast and consistent") {
  // The triangular prism is minimally rigid; add a disconnected copy of K4.
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
  for (Edge e : std::vector<Edge>{{6, 7}, {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9}}) edges.push_back(e);
  Graph g(10, edges);
  CHECK(rigidity_rank_2d(g) == 9 + 5);
  CHECK(rigidity_rank_2d(g, SfmBackend::mnp) == 14);
  CHECK(randomized_rank(rigidity_symbolic(g, 2), Field::prime(kDefaultPrime), 5, 1) == 14);
}
