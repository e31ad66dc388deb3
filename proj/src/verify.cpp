#include "rhoc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "rhoc/error.hpp"
#include "rhoc/generators.hpp"
#include "rhoc/rho_engine.hpp"
#include "rhoc/rigidity.hpp"
#include "rhoc/sfm.hpp"
#include "rhoc/symbolic_rank.hpp"

namespace rhoc::verify {

namespace {

struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class... Parts>
[[noreturn]] void fail(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  throw CheckFailed(os.str());
}

template <class... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

std::string show(const Partition& pi) {
  std::string out;
  for (const auto& block : pi.blocks()) {
    out += "{";
    for (std::size_t i = 0; i < block.size(); ++i) out += (i ? "," : "") + std::to_string(block[i]);
    out += "}";
  }
  return out.empty() ? "{}" : out;
}

std::string show(const SubspaceFamily& f) {
  std::string out = f.field().name() + "^" + std::to_string(f.ambient_dim()) + " dims [";
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + std::to_string(f[i].dim());
  return out + "]";
}

Rational q(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Field big_prime() { return Field::prime(kDefaultPrime); }
Field small_prime() { return Field::prime(10007); }

const Rational kCs[] = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};

bool is_zero_vector(const Field& field, std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [&](const Scalar& s) { return field.is_zero(s); });
}

bool same_multiset(const SubspaceFamily& a, const SubspaceFamily& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& s : a.members()) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j) {
      if (!used[j] && b[j] == s) used[j] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

std::vector<std::size_t> shuffled(std::size_t n, Rng& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Matrix random_matrix(const Field& field, Rng& rng, std::size_t rows, std::size_t cols, std::int64_t bound) {
  std::vector<Vector> data;
  for (std::size_t r = 0; r < rows; ++r) {
    if (r > 0 && gen::uniform(rng, 0, 3) == 0) {
      // Copies and negations keep entries in range while forcing deficiency.
      Vector copy = data[gen::uniform(rng, 0, r - 1)];
      if (gen::uniform(rng, 0, 1)) {
        for (auto& s : copy) s = field.neg(s);
      }
      data.push_back(std::move(copy));
    } else {
      data.push_back(gen::small_vector(field, cols, rng, bound));
    }
  }
  return Matrix::from_rows(field, cols, data);
}

Matrix permute_rows(const Matrix& m, std::span<const std::size_t> perm) {
  std::vector<Vector> rows;
  for (auto i : perm) rows.push_back(m.row_vector(i));
  return Matrix::from_rows(m.field(), m.cols(), rows);
}

// ---------------------------------------------------------------------------
// Independent oracles

// Tabulated set function with every minimizer listed.
struct Table {
  std::vector<Rational> values;
  Rational min;
  std::vector<std::uint64_t> minimizers;
};

Table tabulate(const SubmodularOracle& oracle) {
  Table t;
  const std::uint64_t total = std::uint64_t{1} << oracle.ground_size;
  t.values.resize(total);
  for (std::uint64_t m = 0; m < total; ++m) t.values[m] = oracle.eval(Subset::from_mask(oracle.ground_size, m));
  t.min = *std::min_element(t.values.begin(), t.values.end());
  for (std::uint64_t m = 0; m < total; ++m) {
    if (t.values[m] == t.min) t.minimizers.push_back(m);
  }
  return t;
}

std::uint64_t mask_of(const Subset& s) {
  std::uint64_t m = 0;
  for (auto i : s.members()) m |= std::uint64_t{1} << i;
  return m;
}

// Unions and intersections of minimizers must minimize again.
void check_lattice(const Table& t, const std::string& where) {
  for (auto a : t.minimizers) {
    for (auto b : t.minimizers) {
      if (t.values[a | b] != t.min || t.values[a & b] != t.min) {
        fail(where, ": minimizers ", a, " and ", b, " are not closed under union/intersection");
      }
    }
  }
}

// Laman count condition checked directly: some 2n-3 edges with every vertex
// subset V' (|V'| >= 2) spanning at most 2|V'| - 3 of them.
bool laman_by_counting(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t need = 2 * n - 3;
  const auto& edges = g.edges();
  if (edges.size() < need) return false;
  std::vector<std::uint64_t> emask;
  for (const auto& [u, v] : edges) emask.push_back((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
  std::vector<bool> pick(edges.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(need), true);
  do {
    bool ok = true;
    for (std::uint64_t vm = 0; vm < (std::uint64_t{1} << n) && ok; ++vm) {
      int size = __builtin_popcountll(vm);
      if (size < 2) continue;
      int spanned = 0;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (pick[e] && (emask[e] & ~vm) == 0) ++spanned;
      }
      ok = spanned <= 2 * size - 3;
    }
    if (ok) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

// Σ_σ sgn(σ) Π_{r<k} (x^r · a^{σ(r)}) a^{σ(k)}: the antisymmetrized tensor
// contracted in its first k-1 slots, summed over all permutations.
Matrix contraction_by_permutations(const RkInstance& inst, const std::vector<Vector>& xs) {
  const Field& field = inst.field;
  const std::size_t k = inst.order;
  Matrix out(field, inst.tensors.size(), inst.ambient_dim);
  for (std::size_t i = 0; i < inst.tensors.size(); ++i) {
    const auto& a = inst.tensors[i];
    std::vector<std::size_t> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      std::size_t inversions = 0;
      for (std::size_t p = 0; p < k; ++p)
        for (std::size_t r = p + 1; r < k; ++r) inversions += sigma[p] > sigma[r];
      Scalar coeff = inversions % 2 ? field.neg(field.one()) : field.one();
      for (std::size_t r = 0; r + 1 < k; ++r) coeff = field.mul(coeff, dot(field, xs[r], a[sigma[r]]));
      for (std::size_t c = 0; c < inst.ambient_dim; ++c) {
        out(i, c) = field.add(out(i, c), field.mul(coeff, a[sigma[k - 1]][c]));
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  return out;
}

std::size_t intersection_dim(const SubspaceFamily& family, std::span<const Scalar> x) {
  std::vector<Subspace> parts;
  for (const auto& f : family.members()) parts.push_back(intersect_with_hyperplane(f, x).span());
  return span_dim(parts);
}

std::size_t laman_required(std::size_t n) { return 2 * n - 3; }

// ---------------------------------------------------------------------------
// exact_linalg

std::string linalg_rref(std::uint64_t seed) {
  Rng rng(seed);
  std::size_t checked = 0;
  for (std::size_t t = 0; t < 300; ++t) {
    Field field = t % 2 ? small_prime() : Field::rationals();
    Matrix m = random_matrix(field, rng, gen::uniform(rng, 1, 6), gen::uniform(rng, 1, 7), 4);
    RrefResult r = rref(m);
    RrefResult again = rref(r.matrix);
    if (!(again.matrix == r.matrix) || again.rank != r.rank || again.pivots != r.pivots) fail("rref not idempotent, case ", t);
    for (int s = 0; s < 3; ++s) {
      auto perm = shuffled(m.rows(), rng);
      RrefResult p = rref(permute_rows(m, perm));
      if (p.rank != r.rank || !(p.matrix == r.matrix)) fail("rref changed under row permutation, case ", t);
    }
    if (!field.is_prime()) {
      for (std::size_t i = 0; i < r.matrix.rows(); ++i) {
        for (std::size_t j = 0; j < r.matrix.cols(); ++j) {
          Rational v = r.matrix(i, j).as_rational();
          mpz_class g = gcd(v.get_num(), v.get_den());
          if (v.get_den() <= 0 || (v != 0 && g != 1)) fail("non-canonical rational ", v.get_str(), ", case ", t);
        }
      }
    }
    ++checked;
  }
  return cat(checked, " matrices, 3 row permutations each");
}

std::string linalg_canonical(std::uint64_t seed) {
  Rng rng(seed);
  std::size_t zero_cases = 0;
  for (std::size_t t = 0; t < 200; ++t) {
    Field field = t % 2 ? small_prime() : Field::rationals();
    std::size_t cols = gen::uniform(rng, 1, 6);
    Matrix m = random_matrix(field, rng, gen::uniform(rng, 1, 5), cols, 1);
    auto rows = m.row_vectors();
    bool all_zero = std::all_of(rows.begin(), rows.end(), [&](const Vector& v) { return is_zero_vector(field, v); });
    if (all_zero) {
      try {
        subspace_from_rows(field, cols, rows);
        fail("all-zero rows accepted, case ", t);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::AllRowsZero) throw;
      }
      ++zero_cases;
      continue;
    }
    Subspace s = subspace_from_rows(field, cols, rows);
    for (int k = 0; k < 5; ++k) {
      std::shuffle(rows.begin(), rows.end(), rng);
      if (!(subspace_from_rows(field, cols, rows) == s)) fail("subspace depends on row order, case ", t);
    }
  }
  return cat("200 generating sets, 5 shuffles each, ", zero_cases, " all-zero rejections");
}

std::string linalg_span_bounds(std::uint64_t seed) {
  Rng rng(seed);
  for (std::size_t t = 0; t < 200; ++t) {
    Field field = t % 2 ? small_prime() : Field::rationals();
    std::size_t n = gen::uniform(rng, 1, 7);
    Subspace f = gen::random_subspace(field, n, gen::uniform(rng, 1, n), rng);
    Subspace g = t % 5 == 0 ? f : gen::random_subspace(field, n, gen::uniform(rng, 1, n), rng);
    std::vector<Subspace> pair{f, g};
    std::size_t d = span_dim(pair);
    if (d < std::max(f.dim(), g.dim()) || d > f.dim() + g.dim() || d > n) fail("span_dim out of bounds, case ", t);
  }
  if (span_dim(std::span<const Subspace>{}) != 0) fail("span_dim of the empty list is not 0");
  return "200 pairs";
}

std::string linalg_kernel(std::uint64_t seed) {
  Rng rng(seed);
  for (std::size_t t = 0; t < 200; ++t) {
    Field field = t % 2 ? small_prime() : Field::rationals();
    std::size_t n = gen::uniform(rng, 1, 7);
    Subspace f = gen::random_subspace(field, n, gen::uniform(rng, 1, n), rng);
    Matrix c = random_matrix(field, rng, gen::uniform(rng, 1, 4), n, 2);
    Subspace k = kernel_in_subspace(f, c);
    if (!f.contains(k)) fail("kernel leaves f, case ", t);
    for (std::size_t r = 0; r < k.dim(); ++r) {
      if (!is_zero_vector(field, rhoc::apply(c, k.basis().row(r)))) fail("kernel vector violates a constraint, case ", t);
    }
    // dim(f ∩ ker C) = dim f - rank(C Bᵀ) for any basis B of f.
    if (k.dim() != f.dim() - rank(multiply(c, f.basis().transpose()))) fail("kernel has the wrong dimension, case ", t);
  }
  return "200 subspace/constraint pairs";
}

std::string linalg_fields_agree(std::uint64_t seed) {
  Rng rng(seed);
  Field fp = big_prime();
  std::size_t deficient = 0;
  for (std::size_t t = 0; t < 200; ++t) {
    // |det| <= (9 sqrt 6)^6 < 1.2e8, far below the modulus.
    Matrix m = random_matrix(Field::rationals(), rng, 6, 6, 9);
    std::vector<Vector> reduced;
    for (const auto& row : m.row_vectors()) {
      Vector v;
      for (const auto& s : row) v.push_back(fp.convert(s, Field::rationals()));
      reduced.push_back(v);
    }
    Matrix mp = Matrix::from_rows(fp, 6, reduced);
    std::size_t rq = rank(m), rp = rank(mp);
    if (rq != rp) fail("rank over Q is ", rq, " but ", rp, " mod p, case ", t);
    if (!(fp.convert(determinant(m), Field::rationals()) == determinant(mp))) fail("determinants disagree, case ", t);
    deficient += rq < 6;
  }
  return cat("200 integer 6x6 matrices, ", deficient, " rank-deficient");
}

// ---------------------------------------------------------------------------
// partitions

std::string partitions_minimum(std::uint64_t seed) {
  Rng rng(seed);
  std::size_t ties = 0;
  for (std::size_t t = 0; t < 100; ++t) {
    Field field = t % 2 ? small_prime() : Field::rationals();
    SubspaceFamily f = gen::random_family(field, rng);
    Rational c = gen::random_c(rng);
    RhoResult best = rho_bruteforce(f, c);
    if (rho_of_partition(f, best.partition, c) != best.value) fail("witness does not attain the minimum, ", show(f));
    for (int s = 0; s < 50; ++s) {
      Partition pi = gen::random_partition(f.size(), rng);
      Rational v = rho_of_partition(f, pi, c);
      if (v < best.value) fail("partition ", show(pi), " beats the brute-force minimum on ", show(f));
      if (v == best.value) {
        ++ties;
        if (pi.size() < best.partition.size() || (pi.size() == best.partition.size() && !(pi == best.partition))) {
          fail("minimizer ", show(pi), " competes with ", show(best.partition), " on ", show(f));
        }
      }
    }
  }
  return cat("100 families x 50 random partitions, ", ties, " ties with the minimum");
}

// ---------------------------------------------------------------------------
// sfm

// Cut function of a random weighted graph plus a modular term.
SubmodularOracle cut_oracle(Rng& rng, std::size_t n) {
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n, 0));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) w[u][v] = w[v][u] = frac(static_cast<long>(gen::uniform(rng, 0, 3)), 2);
  std::vector<Rational> m(n);
  for (auto& x : m) x = Rational(static_cast<long>(gen::uniform(rng, 0, 8)) - 4);
  return {n, [w, m, n](const Subset& x) -> Rational {
            Rational v = 0;
            for (std::size_t u = 0; u < n; ++u) {
              if (!x.contains(u)) continue;
              v += m[u];
              for (std::size_t t = 0; t < n; ++t) {
                if (!x.contains(t)) v += w[u][t];
              }
            }
            return v;
          }};
}

// Concave function of |X| minus a modular term.
SubmodularOracle cardinality_oracle(Rng& rng, std::size_t n) {
  std::size_t cap = gen::uniform(rng, 0, n);
  std::vector<Rational> m(n);
  for (auto& x : m) x = frac(static_cast<long>(gen::uniform(rng, 0, 4)), 2);
  return {n, [cap, m](const Subset& x) -> Rational {
            Rational v = q(std::min(x.count(), cap));
            for (auto i : x.members()) v -= m[i];
            return v;
          }};
}

SubmodularOracle random_insertion_oracle(Rng& rng, std::size_t max_base) {
  Field field = gen::uniform(rng, 0, 1) ? small_prime() : Field::rationals();
  gen::FamilyShape shape;
  shape.max_members = max_base;
  SubspaceFamily base = gen::random_family(field, rng, shape);
  Subspace g = gen::random_subspace(field, base.ambient_dim(), gen::uniform(rng, 1, std::min<std::size_t>(3, base.ambient_dim())), rng);
  return insertion_oracle(base, g, gen::random_c(rng));
}

SubmodularOracle random_oracle(Rng& rng, std::size_t t, std::size_t max_n) {
  switch (t % 3) {
    case 0: return cut_oracle(rng, gen::uniform(rng, 1, max_n));
    case 1: return cardinality_oracle(rng, gen::uniform(rng, 1, max_n));
    default: return random_insertion_oracle(rng, std::min<std::size_t>(max_n, 10));
  }
}

std::string sfm_backends_agree(std::uint64_t seed) {
  Rng rng(seed);
  std::size_t largest = 0;
  for (std::size_t t = 0; t < 120; ++t) {
    SubmodularOracle oracle = random_oracle(rng, t, 12);
    MinimizerResult a = minimize_exhaustive(oracle);
    MinimizerResult b = minimize_polynomial(oracle);
    if (a.value != b.value || !(a.minimizer == b.minimizer)) {
      fail("case ", t, " (n=", oracle.ground_size, "): exhaustive ", a.value.get_str(), " at ", to_string(a.minimizer),
           ", mnp ", b.value.get_str(), " at ", to_string(b.minimizer));
    }
    largest = std::max(largest, oracle.ground_size);
  }
  return cat("120 oracles up to n=", largest);
}

std::string sfm_lattice(std::uint64_t seed) {
  Rng rng(seed);
  std::size_t minimizers = 0;
  for (std::size_t t = 0; t < 120; ++t) {
    SubmodularOracle oracle = random_oracle(rng, t, 9);
    Table table = tabulate(oracle);
    check_lattice(table, cat("case ", t));
    std::uint64_t all = 0;
    for (auto m : table.minimizers) all |= m;
    MinimizerResult r = minimize_exhaustive(oracle);
    if (mask_of(r.minimizer) != all || r.value != table.min) fail("case ", t, ": returned minimizer is not the union");
    minimizers += table.minimizers.size();
  }
  return cat("120 oracles, ", minimizers, " minimizers");
}

std::string sfm_closure(std::uint64_t seed) {
  Rng rng(seed);
  for (std::size_t t = 0; t < 60; ++t) {
    SubmodularOracle oracle = random_oracle(rng, t, 9);
    const std::size_t n = oracle.ground_size;
    Table table = tabulate(oracle);
    std::uint64_t meet = ~std::uint64_t{0};
    for (auto m : table.minimizers) meet &= m;
    std::vector<std::uint64_t> starts{meet, table.minimizers[gen::uniform(rng, 0, table.minimizers.size() - 1)]};
    for (auto start : starts) {
      std::vector<std::size_t> identity(n);
      std::iota(identity.begin(), identity.end(), 0);
      Subset fix = maximality_closure(oracle, Subset::from_mask(n, start), identity);
      if (!(maximality_closure(oracle, fix, identity) == fix)) fail("closure not idempotent, case ", t);
      if (table.values[mask_of(fix)] != table.min) fail("closure left the minimizers, case ", t);
      for (int o = 0; o < 20; ++o) {
        auto order = shuffled(n, rng);
        if (!(maximality_closure(oracle, Subset::from_mask(n, start), order) == fix)) {
          fail("closure depends on the element order, case ", t);
        }
      }
    }
  }
  return "60 oracles, 2 starts x 20 orderings";
}

// ---------------------------------------------------------------------------
// rho_engine

std::string engine_order(std::uint64_t seed) {
  Rng rng(seed);
  for (std::size_t t = 0; t < 40; ++t) {
    Field field = t % 2 ? small_prime() : Field::rationals();
    SubspaceFamily f = gen::random_family(field, rng);
    Rational c = gen::random_c(rng);
    RhoResult base = rho(f, c);
    for (int o = 0; o < 10; ++o) {
      auto perm = shuffled(f.size(), rng);
      RhoResult r = rho(f.subfamily(perm), c);
      Partition back = r.partition.relabel(perm);
      if (r.value != base.value || !(back == base.partition)) {
        fail(show(f), " c=", c.get_str(), ": ", show(base.partition), " vs ", show(back), " after reordering");
      }
    }
  }
  return "40 families x 10 orderings";
}

std::string engine_hat_discipline(std::uint64_t seed) {
  Rng rng(seed);
  std::size_t steps = 0;
  for (std::size_t t = 0; t < 60; ++t) {
    Field field = t % 2 ? small_prime() : Field::rationals();
    gen::FamilyShape shape;
    shape.max_members = 8;
    SubspaceFamily f = gen::random_family(field, rng, shape);
    Rational c = gen::random_c(rng);
    EngineState state(field, f.ambient_dim(), c);
    for (std::size_t i = 0; i < f.size(); ++i) {
      Rational r_star;
      SubspaceFamily before = state.hat;
      state = insert_subspace(state, f[i], i, SfmBackend::automatic,
                              [&](const SubspaceFamily&, const Subspace&, const SubmodularOracle&,
                                  const MinimizerResult& m) { r_star = m.value; });
      SubspaceFamily with_g = before;
      with_g.push_back(f[i]);
      if (r_star != rho_bruteforce(with_g, c).value) fail("r* differs from the brute-force value on ", show(with_g));
      if (state.hat.size() <= 8 && !rho_bruteforce(state.hat, c).partition.all_singletons()) {
        fail("hat ", show(state.hat), " is not its own minimal partition");
      }
      ++steps;
    }
  }
  return cat(steps, " insertions");
}

std::string engine_trivial(std::uint64_t seed) {
  Rng rng(seed);
  const Rational cs[] = {Rational(0), Rational(-1, 2), Rational(-3)};
  for (std::size_t t = 0; t < 30; ++t) {
    SubspaceFamily f = gen::random_family(t % 2 ? small_prime() : Field::rationals(), rng);
    for (const auto& c : cs) {
      RhoResult r = rho(f, c);
      Rational expect = q(span_dim(f.members())) - c;
      if (r.value != expect || !(r.partition == Partition::whole(f.size()))) fail("c=", c.get_str(), " on ", show(f));
      RhoResult b = rho_bruteforce(f, c);
      if (b.value != r.value || !(b.partition == r.partition)) fail("brute force disagrees at c=", c.get_str());
    }
  }
  RhoResult empty = rho(SubspaceFamily(Field::rationals(), 3), Rational(1));
  if (empty.value != 0 || empty.partition.size() != 0) fail("empty family");
  return "30 families x 3 nonpositive c, plus the empty family";
}

// ---------------------------------------------------------------------------
// symbolic_rank

std::string symbolic_k2(std::uint64_t seed) {
  Rng rng(seed);
  for (std::size_t t = 0; t < 50; ++t) {
    Field field = t % 2 ? big_prime() : Field::rationals();
    R2Instance r2;
    do {
      r2 = gen::random_r2(field, rng, 10, 8);
    } while (r2.ambient_dim < 3);
    RkInstance rk{field, r2.ambient_dim, 2, {}};
    for (const auto& row : r2.rows) rk.tensors.push_back({row.u, row.v});
    Vector x = sample_vector(field, r2.ambient_dim, rng);
    if (!(evaluate_rk_matrix(rk, {x}) == evaluate_r2_matrix(r2, x))) fail("k=2 rows differ from R_2 rows, case ", t);
  }
  return "50 instances";
}

std::string symbolic_split(std::uint64_t seed) {
  Rng rng(seed);
  std::size_t done = 0;
  while (done < 40) {
    Field field = done % 2 ? small_prime() : Field::rationals();
    gen::FamilyShape shape;
    shape.max_members = 4;
    shape.min_dim = 2;
    shape.min_ambient = 2;
    shape.max_ambient = 6;
    SubspaceFamily f = gen::random_family(field, rng, shape);
    std::size_t planes = 0;
    for (const auto& s : f.members()) planes += s.dim() * (s.dim() - 1) / 2;
    if (planes > kBruteforceLimit) continue;
    SubspaceFamily split = split_to_planes(f);
    if (rho_bruteforce(f, 1).value != rho_bruteforce(split, 1).value) fail("splitting changes rho_1 on ", show(f));
    ++done;
  }
  return "40 families";
}

// ---------------------------------------------------------------------------
// rigidity

std::string rigidity_randomized(std::uint64_t seed) {
  Rng rng(seed);
  for (std::size_t t = 0; t < 100; ++t) {
    Graph g = gen::random_graph(rng, gen::uniform(rng, 2, 8), 0.25 + 0.1 * static_cast<double>(t % 5));
    std::size_t det = rigidity_rank_2d(g);
    std::size_t ran = randomized_rank(rigidity_symbolic(g, 2), big_prime(), 5, derive_seed(seed, t));
    if (det != ran) fail("graph ", t, ": deterministic ", det, ", randomized ", ran);
    if (det > std::min(g.edge_count(), laman_required(g.vertex_count()))) fail("rank above min(m, 2n-3), graph ", t);
  }
  return "100 random graphs, n <= 8";
}

std::string rigidity_bridge(std::uint64_t seed) {
  Rng rng(seed);
  std::size_t rows = 0;
  for (std::size_t t = 0; t < 40; ++t) {
    Field field = t % 2 ? big_prime() : Field::rationals();
    Graph g = gen::random_graph(rng, gen::uniform(rng, 2, 7), 0.5);
    Vector coords = sample_vector(field, 2 * g.vertex_count(), rng);
    R2Instance inst = rigidity_r2_instance(g, field);
    Matrix m = evaluate_r2_matrix(inst, r2_point_from_coordinates(coords, g.vertex_count(), field));
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (m.row_vector(e) != symbolic_rigidity_row(g, 2, g.edges()[e], coords, field)) fail("edge row mismatch, graph ", t);
      ++rows;
    }
  }
  return cat(rows, " edge rows");
}

std::string rigidity_monotone(std::uint64_t seed) {
  Rng rng(seed);
  std::size_t done = 0;
  while (done < 50) {
    std::size_t n = gen::uniform(rng, 2, 8);
    Graph g = gen::random_graph(rng, n, 0.4);
    std::vector<Edge> missing;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (!g.has_edge(u, v)) missing.emplace_back(u, v);
    if (missing.empty()) continue;
    auto edges = g.edges();
    edges.push_back(missing[gen::uniform(rng, 0, missing.size() - 1)]);
    Graph h(n, edges);
    std::size_t before = rigidity_rank_2d(g), after = rigidity_rank_2d(h);
    if (after < before || after > before + 1) fail("rank went from ", before, " to ", after, " after adding an edge");
    if (after > std::min(h.edge_count(), laman_required(n))) fail("rank above min(m, 2n-3)");
    ++done;
  }
  return "50 edge additions";
}

std::string rigidity_three_d(std::uint64_t) {
  auto complete = [](std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
  };
  struct Case {
    Graph g;
    std::size_t rank;
    bool rigid;
  };
  std::vector<Case> cases{{complete(4), 6, true},
                          {complete(5), 9, true},
                          {Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}), 5, false}};
  for (const auto& c : cases) {
    RigidityReport r = rigidity_report(c.g, 3);
    if (r.rank != c.rank || r.rigid != c.rigid || r.method != RankMethod::randomized) {
      fail("t=3 on n=", c.g.vertex_count(), ": rank ", r.rank, ", expected ", c.rank);
    }
  }
  return "K4, K5, C5 in 3 dimensions";
}

// ---------------------------------------------------------------------------
// acceptance

// Families of the brute-force sweep; shared so that the submodularity check
// sees exactly the oracles the sweep builds.
std::vector<SubspaceFamily> sweep_families(std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0x5eed));
  gen::FamilyShape shape;
  shape.min_ambient = 1;
  std::vector<SubspaceFamily> out;
  for (std::size_t t = 0; t < 200; ++t) out.push_back(gen::random_family(t < 100 ? Field::rationals() : small_prime(), rng, shape));
  return out;
}

std::string accept_bruteforce(std::uint64_t seed) {
  std::size_t runs = 0, merged = 0;
  for (const auto& f : sweep_families(seed)) {
    for (const auto& c : kCs) {
      RhoResult expect = rho_bruteforce(f, c);
      merged += expect.partition.size() < f.size();
      for (auto backend : {SfmBackend::exhaustive, SfmBackend::mnp}) {
        RhoResult got = rho(f, c, backend);
        if (got.value != expect.value || !(got.partition == expect.partition)) {
          fail(show(f), " c=", c.get_str(), " backend ", to_string(backend), ": got ", got.value.get_str(), " ",
               show(got.partition), ", expected ", expect.value.get_str(), " ", show(expect.partition));
        }
        ++runs;
      }
    }
  }
  return cat(runs, " runs (200 families x 4 c x 2 backends), ", merged, "/800 with merged blocks");
}

std::string accept_submodular(std::uint64_t seed) {
  std::size_t oracles = 0;
  Rng rng(seed);
  for (const auto& f : sweep_families(seed)) {
    for (const auto& c : kCs) {
      for (auto backend : {SfmBackend::exhaustive, SfmBackend::mnp}) {
        rho(f, c, backend, [&](const SubspaceFamily& base, const Subspace&, const SubmodularOracle& oracle,
                               const MinimizerResult& m) {
          if (oracle.ground_size > 6) return;
          if (!verify_submodular(oracle, 0, rng)) fail("insertion oracle over ", show(base), " is not submodular");
          Table table = tabulate(oracle);
          check_lattice(table, show(base));
          std::uint64_t all = 0;
          for (auto x : table.minimizers) all |= x;
          if (m.value != table.min || mask_of(m.minimizer) != all) fail("chosen X* is not the maximal minimizer on ", show(base));
          ++oracles;
        });
      }
    }
  }
  return cat(oracles, " insertion oracles checked exhaustively");
}

std::string accept_laman(std::uint64_t) {
  std::size_t graphs = 0, rigid = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& g : gen::graphs_up_to_isomorphism(n)) {
      std::size_t r = rigidity_rank_2d(g);
      bool pebble = laman_oracle(g);
      bool counted = laman_by_counting(g);
      if (pebble != counted) fail("pebble game and Laman count disagree on n=", n, " m=", g.edge_count());
      if ((r == laman_required(n)) != pebble) fail("rank ", r, " vs Laman ", pebble, " on n=", n, " m=", g.edge_count());
      if (r > std::min(g.edge_count(), laman_required(n))) fail("rank above min(m, 2n-3)");
      ++graphs;
      rigid += pebble;
    }
  }
  return cat(graphs, " isomorphism classes on 2..6 vertices, ", rigid, " rigid");
}

std::string accept_named(std::uint64_t seed) {
  struct Named {
    const char* name;
    Graph g;
    std::size_t rank;
    bool rigid;
    std::size_t dof;
  };
  std::vector<Named> cases{
      {"K3", Graph(3, {{0, 1}, {1, 2}, {0, 2}}), 3, true, 0},
      {"P3", Graph(3, {{0, 1}, {1, 2}}), 2, false, 1},
      {"C4", Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), 4, false, 1},
      {"K4", Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}), 5, true, 0},
  };
  for (const auto& c : cases) {
    RigidityOptions forced;
    forced.force_randomized = true;
    forced.seed = seed;
    for (const auto& r : {rigidity_report(c.g, 2), rigidity_report(c.g, 2, forced)}) {
      if (r.rank != c.rank || r.rigid != c.rigid || r.dof != c.dof) {
        fail(c.name, " (", to_string(r.method), "): rank ", r.rank, " dof ", r.dof, ", expected ", c.rank, " / ", c.dof);
      }
    }
    if (rho_bruteforce(rigidity_family(c.g, 2), 1).value != q(c.rank)) fail(c.name, ": brute-force rho_1 differs");
  }
  return "K3, P3, C4, K4 by three methods";
}

std::string accept_pit_r2(std::uint64_t seed) {
  Rng rng(seed);
  std::size_t dropped = 0, ranks = 0;
  for (std::size_t t = 0; t < 100; ++t) {
    R2Instance inst = gen::random_r2(t % 2 ? big_prime() : Field::rationals(), rng, 12, 10);
    SymbolicRank det = r2_rank(inst);
    std::size_t ran = randomized_rank(r2_symbolic(inst), big_prime(), 5, derive_seed(seed, t));
    if (det.rank != ran) fail("instance ", t, " (", inst.rows.size(), " rows, d=", inst.ambient_dim, "): rho_1 ", det.rank, ", random ", ran);
    dropped += det.dropped.size();
    ranks += det.rank;
  }
  return cat("100/100 agree, total rank ", ranks, ", ", dropped, " degenerate rows");
}

std::string accept_pit_rk(std::uint64_t seed) {
  Rng rng(seed);
  for (std::size_t t = 0; t < 50; ++t) {
    RkInstance inst = gen::random_rk(t % 2 ? big_prime() : Field::rationals(), rng, 3, 8, 6);
    SymbolicRank det = rk_rank(inst);
    std::size_t ran = randomized_rank(rk_symbolic(inst), big_prime(), 5, derive_seed(seed, t));
    if (det.rank != ran) fail("instance ", t, ": rho_2 ", det.rank, ", random ", ran);
  }
  for (std::size_t t = 0; t < 20; ++t) {
    Field field = t % 2 ? big_prime() : Field::rationals();
    RkInstance inst = gen::random_rk(field, rng, t % 4 == 3 ? 4 : 3, 8, 6);
    std::vector<Vector> xs;
    for (std::size_t r = 0; r + 1 < inst.order; ++r) xs.push_back(sample_vector(field, inst.ambient_dim, rng));
    Matrix m = evaluate_rk_matrix(inst, xs);
    Matrix o = contraction_by_permutations(inst, xs);
    if (rank(m) != rank(o)) fail("contraction ranks differ, instance ", t);
    std::optional<Scalar> lambda;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      bool mz = is_zero_vector(field, m.row(i)), oz = is_zero_vector(field, o.row(i));
      if (mz != oz) fail("row ", i, " vanishes on one side only, instance ", t);
      if (mz) continue;
      std::size_t j = 0;
      while (field.is_zero(o(i, j))) ++j;
      Scalar l = field.div(m(i, j), o(i, j));
      if (lambda && !(*lambda == l)) fail("rows are scaled differently, instance ", t);
      lambda = l;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!(m(i, c) == field.mul(l, o(i, c)))) fail("row ", i, " is not proportional, instance ", t);
      }
    }
  }
  return "50/50 ranks agree; 20 contractions proportional to the permutation sum";
}

std::string accept_intersections(std::uint64_t seed) {
  Rng rng(seed);
  Field fp = big_prime();
  for (std::size_t t = 0; t < 100; ++t) {
    SubspaceFamily f = gen::random_family(fp, rng);
    Vector x = sample_vector(fp, f.ambient_dim(), rng);
    std::size_t d = intersection_dim(f, x);
    Rational r = rho(f, 1).value;
    if (q(d) != r) fail("hyperplane: d(F∩h) = ", d, ", rho_1 = ", r.get_str(), " on ", show(f));
  }
  for (std::size_t t = 0; t < 50; ++t) {
    std::size_t k = 2 + t % 2;
    gen::FamilyShape shape;
    shape.min_dim = k + 1;
    shape.max_dim = k + 2;
    shape.min_ambient = k + 1;
    shape.max_ambient = 8;
    SubspaceFamily f = gen::random_family(fp, rng, shape);
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < k; ++r) rows.push_back(sample_vector(fp, f.ambient_dim(), rng));
    Matrix constraints = Matrix::from_rows(fp, f.ambient_dim(), rows);
    std::vector<Subspace> parts;
    for (const auto& s : f.members()) parts.push_back(intersect_with_codim_k(s, constraints).span());
    Rational r = rho(f, q(k)).value;
    if (q(span_dim(parts)) != r) fail("codim ", k, ": d(F∩h) = ", span_dim(parts), ", rho_k = ", r.get_str(), " on ", show(f));
  }
  return "100 hyperplane and 50 codim-k (k in {2,3}) instances";
}

std::string accept_w_basis(std::uint64_t seed) {
  Rng rng(seed);
  std::size_t fallback = 0, minors = 0, vectors = 0;
  for (std::size_t t = 0; t < 200; ++t) {
    Field field = t % 2 ? big_prime() : Field::rationals();
    std::size_t n = gen::uniform(rng, 2, 9);
    std::size_t k = gen::uniform(rng, 1, 3);
    // Mostly dim f > k so the signed-minor construction is exercised.
    std::size_t lo = t % 4 == 0 || k + 1 > n ? 1 : k + 1;
    Subspace f = gen::random_subspace(field, n, gen::uniform(rng, lo, std::min<std::size_t>(n, 6)), rng);
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < k; ++r) {
      std::size_t kind = gen::uniform(rng, 0, 9);
      if (kind == 0 && r > 0) {
        rows.push_back(rows.back());  // dependent constraints
      } else if (kind == 1) {
        // A constraint vanishing on f forces the degenerate branch.
        auto perp = nullspace(f.basis());
        rows.push_back(perp.empty() ? Vector(n, field.zero()) : perp[gen::uniform(rng, 0, perp.size() - 1)]);
      } else {
        rows.push_back(gen::small_vector(field, n, rng, 3));
      }
    }
    Matrix c = Matrix::from_rows(field, n, rows);
    Subspace expect = kernel_in_subspace(f, c);
    std::vector<IntersectionBasis> results{intersect_with_codim_k(f, c)};
    if (k == 1) results.push_back(intersect_with_hyperplane(f, rows[0]));
    for (const auto& res : results) {
      for (const auto& w : res.basis_vectors) {
        if (!is_zero_vector(field, rhoc::apply(c, w))) fail("w vector not orthogonal to the constraints, case ", t);
        if (!f.contains(w)) fail("w vector outside f, case ", t);
        ++vectors;
      }
      Subspace spanned = res.basis_vectors.empty()
                             ? Subspace::zero(field, n)
                             : Subspace::span_of(Matrix::from_rows(field, n, res.basis_vectors));
      if (!(spanned == expect) || !(res.span() == expect)) fail("w vectors do not span the exact kernel, case ", t);
      fallback += res.fallback;
    }
    minors += !results.front().fallback;
  }
  if (minors < 100) fail("only ", minors, " of 200 pairs reached the signed-minor construction");
  return cat("200 pairs, ", vectors, " vectors, ", minors, " via signed minors, ", fallback, " exact-kernel fallbacks");
}

std::string accept_structure(std::uint64_t seed) {
  Rng rng(seed);
  std::size_t merged = 0;
  for (std::size_t t = 0; t < 100; ++t) {
    Field field = t % 2 ? small_prime() : Field::rationals();
    gen::FamilyShape shape;
    shape.min_members = 2;
    shape.max_members = 7;
    SubspaceFamily all = gen::random_family(field, rng, shape);
    Rational c = gen::random_c(rng);
    std::size_t split = gen::uniform(rng, 1, all.size() - 1);
    std::vector<std::size_t> fi(split), gi(all.size() - split);
    std::iota(fi.begin(), fi.end(), 0);
    std::iota(gi.begin(), gi.end(), split);
    SubspaceFamily f = all.subfamily(fi), g = all.subfamily(gi);

    // Uniqueness is asserted inside every rho_bruteforce call.
    RhoResult whole = rho_bruteforce(all, c);
    merged += whole.partition.size() < all.size();

    auto sub = gen::random_subset(all.size(), rng);
    if (!sub.empty()) {
      Partition local = rho_bruteforce(all.subfamily(sub), c).partition.relabel(sub);
      if (!is_refinement(local, restrict_partition(whole.partition, sub))) {
        fail("monotonicity: ", show(local), " does not refine ", show(whole.partition), " restricted, on ", show(all));
      }
    }

    SubspaceFamily hat_f = hat_family(f, rho_bruteforce(f, c).partition, c);
    if (rho_bruteforce(hat_f.concat(g), c).value != whole.value) fail("hat replacement changes the value on ", show(all));
    if (!rho_bruteforce(hat_f, c).partition.all_singletons()) fail("hat is not a fixpoint on ", show(f));
    SubspaceFamily hat_all = hat_family(all, whole.partition, c);
    SubspaceFamily mixed = hat_f.concat(g);
    SubspaceFamily hat_mixed = hat_family(mixed, rho_bruteforce(mixed, c).partition, c);
    if (!same_multiset(hat_all, hat_mixed)) fail("hat(F ∪ G) differs from hat(hat(F) ∪ G) on ", show(all));
  }
  return cat("100 instances, ", merged, " with merged blocks");
}

std::string accept_statistical(std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0xfa111));
  Field field = small_prime();
  gen::FamilyShape shape;
  shape.min_members = shape.max_members = 5;
  shape.min_ambient = shape.max_ambient = 6;
  shape.generic = true;
  SubspaceFamily f = gen::random_family(field, rng, shape);
  Rational r = rho(f, 1).value;
  const std::size_t samples = 2000;
  std::size_t bad = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    Vector x = sample_vector(field, f.ambient_dim(), rng);
    bad += q(intersection_dim(f, x)) != r;
  }
  const double p = 5.0 / 10007.0;
  const double bound = p + 3.0 * std::sqrt(p * (1 - p) / static_cast<double>(samples));
  const double rate = static_cast<double>(bad) / static_cast<double>(samples);
  std::string summary = cat(bad, "/", samples, " non-generic (rate ", rate, ", bound ", bound, "), rho_1 = ", r.get_str());
  if (rate > bound) fail(summary);
  return summary;
}

std::vector<Check> build_registry() {
  return {
      {"exact_linalg", "rref_idempotent_and_canonical", linalg_rref},
      {"exact_linalg", "subspace_row_order", linalg_canonical},
      {"exact_linalg", "span_dim_bounds", linalg_span_bounds},
      {"exact_linalg", "kernel_in_subspace", linalg_kernel},
      {"exact_linalg", "rationals_vs_prime_field", linalg_fields_agree},
      {"partitions", "bruteforce_minimum", partitions_minimum},
      {"sfm", "backends_agree", sfm_backends_agree},
      {"sfm", "minimizer_lattice", sfm_lattice},
      {"sfm", "closure_order_independent", sfm_closure},
      {"rho_engine", "insertion_order_independent", engine_order},
      {"rho_engine", "hat_discipline_and_r_star", engine_hat_discipline},
      {"rho_engine", "nonpositive_c_and_empty", engine_trivial},
      {"symbolic_rank", "k2_matches_r2", symbolic_k2},
      {"symbolic_rank", "split_to_planes", symbolic_split},
      {"rigidity", "randomized_agreement", rigidity_randomized},
      {"rigidity", "edge_row_bridge", rigidity_bridge},
      {"rigidity", "monotone_rank", rigidity_monotone},
      {"rigidity", "three_dimensional", rigidity_three_d},
      {"acceptance", "brute_force_equivalence", accept_bruteforce},
      {"acceptance", "rigidity_ground_truth", accept_laman},
      {"acceptance", "named_instances", accept_named},
      {"acceptance", "pit_r2_agreement", accept_pit_r2},
      {"acceptance", "pit_rk_agreement", accept_pit_rk},
      {"acceptance", "intersection_identities", accept_intersections},
      {"acceptance", "w_basis_exactness", accept_w_basis},
      {"acceptance", "submodularity_and_lattice", accept_submodular},
      {"acceptance", "structural_properties", accept_structure},
      {"acceptance", "statistical_genericity", accept_statistical},
  };
}

}  // namespace

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = build_registry();
  return checks;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& c : registry()) {
    if (std::find(out.begin(), out.end(), c.suite) == out.end()) out.push_back(c.suite);
  }
  return out;
}

CheckResult run_check(const Check& check, std::uint64_t master_seed) {
  CheckResult result{check.suite, check.name, false, {}, 0};
  // Each check gets its own stream so adding checks never perturbs others.
  std::uint64_t stream = 0xcbf29ce484222325ULL;  // FNV-1a of "suite/name"
  for (unsigned char ch : check.suite + "/" + check.name) stream = (stream ^ ch) * 0x100000001b3ULL;
  auto start = std::chrono::steady_clock::now();
  try {
    result.detail = check.body(derive_seed(master_seed, stream));
    result.passed = true;
  } catch (const CheckFailed& e) {
    result.detail = e.what();
  } catch (const InvariantViolation& e) {
    result.detail = std::string("invariant violation: ") + e.what();
  } catch (const std::exception& e) {
    result.detail = std::string("unexpected error: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<CheckResult> run_suite(std::string_view suite, std::uint64_t master_seed,
                                   const std::function<void(const CheckResult&)>& on_result) {
  auto names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }
  std::vector<CheckResult> out;
  for (const auto& check : registry()) {
    if (suite != "all" && check.suite != suite) continue;
    out.push_back(run_check(check, master_seed));
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace rhoc::verify
