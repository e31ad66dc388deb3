#include "rhoc/rigidity.hpp"

#include <algorithm>
#include <set>

#include "rhoc/error.hpp"
#include "rhoc/rho_engine.hpp"

namespace rhoc {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n) {
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    const std::string label = "[" + std::to_string(u) + "," + std::to_string(v) + "]";
    if (u >= n || v >= n) throw Error(ErrorCode::BadVertex, "edge " + label + " leaves the vertex range");
    if (u == v) throw Error(ErrorCode::LoopEdge, "edge " + label + " is a loop");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      throw Error(ErrorCode::DuplicateEdge, "edge " + label + " appears twice");
    }
    edges_.emplace_back(u, v);
  }
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [&](const Edge& e) { return (e.first == u && e.second == v) || (e.first == v && e.second == u); });
}

Subspace edge_subspace(std::size_t n, std::size_t u, std::size_t v, std::size_t t, const Field& field) {
  if (u >= n || v >= n || u == v) {
    throw Error(ErrorCode::BadVertex, "edge {" + std::to_string(u) + "," + std::to_string(v) +
                                          "} is not a pair of distinct vertices below " + std::to_string(n));
  }
  std::vector<Vector> rows;
  for (std::size_t j = 0; j < t; ++j) {
    Vector r(t * n, field.zero());
    r[j * n + u] = field.one();
    r[j * n + v] = field.neg(field.one());
    rows.push_back(std::move(r));
  }
  return subspace_from_rows(field, t * n, rows);
}

SubspaceFamily rigidity_family(const Graph& g, std::size_t t, const Field& field) {
  SubspaceFamily family(field, t * g.vertex_count());
  for (auto [u, v] : g.edges()) family.push_back(edge_subspace(g.vertex_count(), u, v, t, field));
  return family;
}

std::size_t rigidity_rank_2d(const Graph& g, SfmBackend backend) {
  // Edge generators are totally unimodular, so the span ranks agree over
  // every field; F_p is simply faster than Q.
  auto result = rho(rigidity_family(g, 2, Field::prime(kDefaultPrime)), Rational(1), backend);
  check_invariant(result.value.get_den() == 1 && sgn(result.value) >= 0, "rigidity rank is not a nonnegative integer");
  return result.value.get_num().get_ui();
}

std::string_view to_string(RankMethod method) {
  return method == RankMethod::deterministic ? "deterministic" : "randomized";
}

RigidityReport rigidity_report(const Graph& g, std::size_t t, const RigidityOptions& options) {
  const std::size_t n = g.vertex_count();
  if (t == 0) throw Error(ErrorCode::Unsupported, "dimension must be positive");
  if (n <= t) {
    throw Error(ErrorCode::TooFewVertices, "the required-rank formula needs n > t (n = " + std::to_string(n) +
                                               ", t = " + std::to_string(t) + ")");
  }
  RigidityReport report;
  report.dimension = t;
  report.required = t * n - t * (t + 1) / 2;
  if (t == 2 && !options.force_randomized) {
    report.rank = rigidity_rank_2d(g, options.backend);
    report.method = RankMethod::deterministic;
  } else {
    report.rank = randomized_rank(rigidity_symbolic(g, t), Field::prime(options.prime), options.trials, options.seed);
    report.method = RankMethod::randomized;
  }
  check_invariant(report.rank <= report.required, "rigidity rank exceeds t n - t(t+1)/2");
  report.dof = report.required - report.rank;
  report.rigid = report.dof == 0;
  return report;
}

Vector symbolic_rigidity_row(const Graph& g, std::size_t t, const Edge& edge, std::span<const Scalar> x,
                             const Field& field) {
  const std::size_t n = g.vertex_count();
  if (x.size() != t * n) throw Error(ErrorCode::DimensionMismatch, "coordinate vector must have length t n");
  auto [u, v] = edge;
  if (u >= n || v >= n || u == v) throw Error(ErrorCode::BadVertex, "edge endpoints are invalid");
  Vector row(t * n, field.zero());
  for (std::size_t j = 0; j < t; ++j) {
    Scalar diff = field.sub(x[j * n + u], x[j * n + v]);
    row[j * n + u] = diff;
    row[j * n + v] = field.neg(diff);
  }
  return row;
}

SymbolicMatrix rigidity_symbolic(const Graph& g, std::size_t t) {
  return {g.edge_count(), t * g.vertex_count(), [g, t](const Field& field, std::span<const Scalar> x) {
            Matrix m(field, 0, t * g.vertex_count());
            for (const auto& e : g.edges()) m.append_row(symbolic_rigidity_row(g, t, e, x, field));
            return m;
          }};
}

R2Instance rigidity_r2_instance(const Graph& g, const Field& field) {
  const std::size_t n = g.vertex_count();
  R2Instance inst{field, 2 * n, {}};
  for (auto [u, v] : g.edges()) {
    Vector a(2 * n, field.zero()), b(2 * n, field.zero());
    a[u] = field.one();
    a[v] = field.neg(field.one());
    b[n + u] = field.one();
    b[n + v] = field.neg(field.one());
    inst.rows.push_back({std::move(a), std::move(b)});
  }
  return inst;
}

Vector r2_point_from_coordinates(std::span<const Scalar> coords, std::size_t n, const Field& field) {
  if (coords.size() != 2 * n) throw Error(ErrorCode::DimensionMismatch, "coordinate vector must have length 2n");
  Vector x(2 * n);
  for (std::size_t u = 0; u < n; ++u) {
    x[u] = coords[n + u];
    x[n + u] = field.neg(coords[u]);
  }
  return x;
}

namespace {

// (k, l) = (2, 3) pebble game over a directed orientation of the accepted edges.
class PebbleGame {
 public:
  explicit PebbleGame(std::size_t n) : pebbles_(n, 2), out_(n) {}

  bool try_insert(std::size_t u, std::size_t v) {
    while (pebbles_[u] + pebbles_[v] < 4) {
      if (pebbles_[u] < 2 && gather(u, v)) continue;
      if (pebbles_[v] < 2 && gather(v, u)) continue;
      return false;
    }
    --pebbles_[u];
    out_[u].push_back(v);
    return true;
  }

 private:
  // Moves a free pebble to `root` by reversing a directed path, never taking
  // pebbles from root or `keep`.
  bool gather(std::size_t root, std::size_t keep) {
    std::vector<std::size_t> parent(pebbles_.size(), kNone);
    std::vector<bool> seen(pebbles_.size(), false);
    seen[root] = seen[keep] = true;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      std::size_t w = stack.back();
      stack.pop_back();
      for (auto next : out_[w]) {
        if (seen[next]) continue;
        seen[next] = true;
        parent[next] = w;
        if (pebbles_[next] > 0) {
          reverse_path(root, next, parent);
          return true;
        }
        stack.push_back(next);
      }
    }
    return false;
  }

  void reverse_path(std::size_t root, std::size_t found, const std::vector<std::size_t>& parent) {
    --pebbles_[found];
    ++pebbles_[root];
    for (std::size_t w = found; w != root; w = parent[w]) {
      std::size_t p = parent[w];
      auto& edges = out_[p];
      edges.erase(std::find(edges.begin(), edges.end(), w));
      out_[w].push_back(p);
    }
  }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<int> pebbles_;
  std::vector<std::vector<std::size_t>> out_;
};

}  // namespace

bool laman_oracle(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw Error(ErrorCode::TooFewVertices, "Laman test needs at least 2 vertices");
  PebbleGame game(n);
  std::size_t independent = 0;
  for (auto [u, v] : g.edges())
    if (game.try_insert(u, v)) ++independent;
  return independent == 2 * n - 3;
}

}  // namespace rhoc
