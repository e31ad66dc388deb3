#include "rhoc/generators.hpp"

#include <algorithm>
#include <numeric>

namespace rhoc::gen {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Rational random_c(Rng& rng) {
  static const Rational choices[] = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
  return choices[uniform(rng, 0, 3)];
}

Vector small_vector(const Field& field, std::size_t dim, Rng& rng, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  Vector v;
  v.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) v.push_back(field.from_int(dist(rng)));
  return v;
}

namespace {

bool is_zero_vector(const Field& field, const Vector& v) {
  return std::all_of(v.begin(), v.end(), [&](const Scalar& s) { return field.is_zero(s); });
}

Vector nonzero_small_vector(const Field& field, std::size_t dim, Rng& rng, std::int64_t bound) {
  for (;;) {
    Vector v = small_vector(field, dim, rng, bound);
    if (!is_zero_vector(field, v)) return v;
  }
}

Vector combination(const Field& field, const std::vector<Vector>& pool, Rng& rng) {
  Vector out(pool.front().size(), field.zero());
  std::uniform_int_distribution<std::int64_t> coeff(-1, 2);
  for (const auto& p : pool) {
    Scalar a = field.from_int(coeff(rng));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field.add(out[i], field.mul(a, p[i]));
  }
  return out;
}

}  // namespace

Subspace random_subspace(const Field& field, std::size_t ambient, std::size_t dim, Rng& rng) {
  std::vector<Vector> rows;
  for (;;) {
    rows.clear();
    for (std::size_t i = 0; i < dim; ++i) rows.push_back(small_vector(field, ambient, rng, 3));
    Subspace s = Subspace::span_of(Matrix::from_rows(field, ambient, rows));
    if (s.dim() == std::min(dim, ambient)) return s;
  }
}

SubspaceFamily random_family(const Field& field, Rng& rng, const FamilyShape& shape) {
  std::size_t ambient = uniform(rng, shape.min_ambient, shape.max_ambient);
  std::size_t members = uniform(rng, shape.min_members, shape.max_members);
  std::size_t max_dim = std::min(shape.max_dim, ambient);
  std::size_t min_dim = std::min(shape.min_dim, max_dim);
  SubspaceFamily family(field, ambient);

  if (shape.generic) {
    for (std::size_t i = 0; i < members; ++i) {
      family.push_back(random_subspace(field, ambient, uniform(rng, min_dim, max_dim), rng));
    }
    return family;
  }

  // A pool smaller than the ambient space makes spans collide and saturate.
  std::size_t pool_size = uniform(rng, std::max<std::size_t>(min_dim, 1), ambient);
  std::vector<Vector> pool;
  do {
    pool.clear();
    for (std::size_t i = 0; i < pool_size; ++i) pool.push_back(nonzero_small_vector(field, ambient, rng, 1));
  } while (rank(Matrix::from_rows(field, ambient, pool)) < min_dim);

  std::bernoulli_distribution duplicate(shape.duplicate_rate);
  while (family.size() < members) {
    if (!family.empty() && duplicate(rng)) {
      family.push_back(family[uniform(rng, 0, family.size() - 1)]);
      continue;
    }
    std::size_t want = uniform(rng, min_dim, max_dim);
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < want; ++r) {
      std::vector<Vector> chosen;
      for (const auto& p : pool) {
        if (uniform(rng, 0, 1) == 1) chosen.push_back(p);
      }
      if (chosen.empty()) chosen.push_back(pool[uniform(rng, 0, pool.size() - 1)]);
      rows.push_back(combination(field, chosen, rng));
    }
    Subspace s = Subspace::span_of(Matrix::from_rows(field, ambient, rows));
    if (s.dim() >= min_dim && !s.is_zero()) family.push_back(std::move(s));
  }
  return family;
}

Partition random_partition(std::size_t n, Rng& rng) {
  if (n == 0) return Partition();
  std::size_t parts = uniform(rng, 1, n);
  std::vector<Block> blocks(parts);
  for (std::size_t i = 0; i < n; ++i) blocks[uniform(rng, 0, parts - 1)].push_back(i);
  std::erase_if(blocks, [](const Block& b) { return b.empty(); });
  return Partition::of(std::move(blocks), n);
}

std::vector<std::size_t> random_subset(std::size_t n, Rng& rng) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (uniform(rng, 0, 1) == 1) out.push_back(i);
  }
  return out;
}

R2Instance random_r2(const Field& field, Rng& rng, std::size_t max_rows, std::size_t max_dim) {
  R2Instance inst;
  inst.field = field;
  inst.ambient_dim = uniform(rng, 2, max_dim);
  std::size_t d = inst.ambient_dim;
  std::size_t rows = uniform(rng, 1, max_rows);
  // Rows are mostly built from a few shared vectors so that the planes
  // overlap; a few are fully random and a few are degenerate (u ∥ v).
  std::vector<Vector> pool;
  std::size_t pool_size = uniform(rng, 2, d + 1);
  for (std::size_t i = 0; i < pool_size; ++i) pool.push_back(nonzero_small_vector(field, d, rng, 1));
  for (std::size_t i = 0; i < rows; ++i) {
    std::size_t kind = uniform(rng, 0, 9);
    R2Row row;
    if (kind == 0) {
      row.u = small_vector(field, d, rng, 2);
      Scalar s = field.from_int(static_cast<std::int64_t>(uniform(rng, 0, 3)) - 1);
      for (const auto& a : row.u) row.v.push_back(field.mul(s, a));
    } else if (kind <= 3) {
      row.u = small_vector(field, d, rng, 3);
      row.v = small_vector(field, d, rng, 3);
    } else {
      row.u = pool[uniform(rng, 0, pool.size() - 1)];
      row.v = combination(field, pool, rng);
    }
    inst.rows.push_back(std::move(row));
  }
  return inst;
}

RkInstance random_rk(const Field& field, Rng& rng, std::size_t k, std::size_t max_tensors, std::size_t max_n) {
  RkInstance inst;
  inst.field = field;
  inst.order = k;
  inst.ambient_dim = uniform(rng, k + 1, std::max(k + 1, max_n));
  std::size_t n = inst.ambient_dim;
  std::size_t count = uniform(rng, 1, max_tensors);
  std::vector<Vector> pool;
  std::size_t pool_size = uniform(rng, k, n + 1);
  for (std::size_t i = 0; i < pool_size; ++i) pool.push_back(nonzero_small_vector(field, n, rng, 1));
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t kind = uniform(rng, 0, 9);
    std::vector<Vector> factors;
    for (std::size_t j = 0; j < k; ++j) {
      if (kind == 0 && j > 0) {
        factors.push_back(factors[0]);  // dependent factors: a zero row
      } else if (kind <= 3) {
        factors.push_back(small_vector(field, n, rng, 3));
      } else {
        factors.push_back(combination(field, pool, rng));
      }
    }
    inst.tensors.push_back(std::move(factors));
  }
  return inst;
}

Graph random_graph(Rng& rng, std::size_t n, double edge_probability) {
  std::bernoulli_distribution coin(edge_probability);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

std::vector<Graph> graphs_up_to_isomorphism(std::size_t n) {
  std::vector<Edge> pairs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    index[pairs[i].first][pairs[i].second] = index[pairs[i].second][pairs[i].first] = i;
  }
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    // Keep the mask only if no relabeling gives a smaller one.
    bool canonical = true;
    for (const auto& p : perms) {
      std::uint64_t image = 0;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mask >> i & 1) image |= std::uint64_t{1} << index[p[pairs[i].first]][p[pairs[i].second]];
      }
      if (image < mask) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) edges.push_back(pairs[i]);
    }
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

}  // namespace rhoc::gen
