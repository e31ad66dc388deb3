#pragma once

#include <cstddef>
#include <vector>

#include "rhoc/partitions.hpp"
#include "rhoc/rigidity.hpp"
#include "rhoc/symbolic_rank.hpp"

// Seeded random instances for property checks. Families are drawn inside the
// span of a small pool of sparse vectors so that spans overlap and merges
// actually happen; duplicates are injected on purpose.
namespace rhoc::gen {

struct FamilyShape {
  std::size_t min_members = 1;
  std::size_t max_members = 7;
  std::size_t min_ambient = 2;
  std::size_t max_ambient = 8;
  std::size_t min_dim = 1;
  std::size_t max_dim = 3;
  double duplicate_rate = 0.15;
  bool generic = false;  // dense random rows instead of pool combinations
};

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);
Rational random_c(Rng& rng);  // one of 1/2, 1, 3/2, 2

Vector small_vector(const Field& field, std::size_t dim, Rng& rng, std::int64_t bound = 1);
Subspace random_subspace(const Field& field, std::size_t ambient, std::size_t dim, Rng& rng);
SubspaceFamily random_family(const Field& field, Rng& rng, const FamilyShape& shape = {});
Partition random_partition(std::size_t n, Rng& rng);
std::vector<std::size_t> random_subset(std::size_t n, Rng& rng);

R2Instance random_r2(const Field& field, Rng& rng, std::size_t max_rows, std::size_t max_dim);
RkInstance random_rk(const Field& field, Rng& rng, std::size_t k, std::size_t max_tensors, std::size_t max_n);

Graph random_graph(Rng& rng, std::size_t n, double edge_probability);
// One representative per isomorphism class of simple graphs on n vertices.
std::vector<Graph> graphs_up_to_isomorphism(std::size_t n);

}  // namespace rhoc::gen
