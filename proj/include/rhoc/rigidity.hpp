#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rhoc/partitions.hpp"
#include "rhoc/sfm.hpp"
#include "rhoc/symbolic_rank.hpp"

namespace rhoc {

using Edge = std::pair<std::size_t, std::size_t>;

// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  // Throws BadVertex, LoopEdge or DuplicateEdge.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(std::size_t u, std::size_t v) const;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

// span{e_{jn+u} - e_{jn+v} : 0 <= j < t} in K^{tn}.
Subspace edge_subspace(std::size_t n, std::size_t u, std::size_t v, std::size_t t,
                       const Field& field = Field::rationals());

// One member per edge, in edge order.
SubspaceFamily rigidity_family(const Graph& g, std::size_t t, const Field& field = Field::rationals());

// Generic rank of M_{G,2}, computed deterministically as ρ_1 of the 2-D edge
// family.
std::size_t rigidity_rank_2d(const Graph& g, SfmBackend backend = SfmBackend::automatic);

enum class RankMethod { deterministic, randomized };
std::string_view to_string(RankMethod method);

struct RigidityOptions {
  bool force_randomized = false;  // use random evaluation even for t = 2
  std::uint64_t prime = kDefaultPrime;
  std::size_t trials = 5;
  std::uint64_t seed = 0;
  SfmBackend backend = SfmBackend::automatic;
};

struct RigidityReport {
  std::size_t dimension = 0;
  std::size_t rank = 0;
  std::size_t required = 0;  // t n - t (t + 1) / 2
  bool rigid = false;
  std::size_t dof = 0;
  RankMethod method = RankMethod::deterministic;
};

// Deterministic for t = 2; random evaluation of M_{G,t} otherwise.
// Throws Error(TooFewVertices) when n <= t.
RigidityReport rigidity_report(const Graph& g, std::size_t t, const RigidityOptions& options = {});

// Row of M_{G,t} for `edge` at the point x, where x[j n + u] is coordinate j
// of vertex u: column (u, j) holds x_{u,j} - x_{v,j}, column (v, j) its negation.
Vector symbolic_rigidity_row(const Graph& g, std::size_t t, const Edge& edge, std::span<const Scalar> x,
                             const Field& field);

// M_{G,t} as a symbolic matrix in the t n coordinates.
SymbolicMatrix rigidity_symbolic(const Graph& g, std::size_t t);

// The R_2 instance whose rows are the 2-D edge rows: u = e_u - e_v,
// v = e_{n+u} - e_{n+v}.
R2Instance rigidity_r2_instance(const Graph& g, const Field& field = Field::rationals());

// Maps vertex coordinates (x[u] = first coordinate, x[n+u] = second) to the
// point at which the R_2 instance reproduces M_{G,2}: the normal
// (x_{·,2}, -x_{·,1}).
Vector r2_point_from_coordinates(std::span<const Scalar> coords, std::size_t n, const Field& field);

// (2,3)-pebble game: true iff G has a spanning Laman subgraph, i.e. 2n - 3
// independent edges. Throws Error(TooFewVertices) for n < 2.
bool laman_oracle(const Graph& g);

}  // namespace rhoc
