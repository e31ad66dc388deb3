#include "rhoc/sfm.hpp"

#include <algorithm>
#include <numeric>

#include "rhoc/error.hpp"
#include "rhoc/matrix.hpp"

namespace rhoc {

Subset Subset::full(std::size_t ground_size) {
  Subset s(ground_size);
  s.bits_.assign(ground_size, true);
  return s;
}

Subset Subset::from_mask(std::size_t ground_size, std::uint64_t mask) {
  Subset s(ground_size);
  for (std::size_t i = 0; i < ground_size; ++i) s.bits_[i] = (mask >> i) & 1;
  return s;
}

Subset Subset::of(std::size_t ground_size, std::span<const std::size_t> members) {
  Subset s(ground_size);
  for (auto i : members) s.insert(i);
  return s;
}

std::size_t Subset::count() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }

std::vector<std::size_t> Subset::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> Subset::complement_members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (!bits_[i]) out.push_back(i);
  return out;
}

Subset operator|(const Subset& a, const Subset& b) {
  Subset out(a.ground_size());
  for (std::size_t i = 0; i < a.ground_size(); ++i) out.bits_[i] = a.bits_[i] || b.bits_[i];
  return out;
}

Subset operator&(const Subset& a, const Subset& b) {
  Subset out(a.ground_size());
  for (std::size_t i = 0; i < a.ground_size(); ++i) out.bits_[i] = a.bits_[i] && b.bits_[i];
  return out;
}

std::string to_string(const Subset& s) {
  std::string out = "{";
  for (auto i : s.members()) out += (out.size() > 1 ? "," : "") + std::to_string(i);
  return out + "}";
}

SfmBackend parse_backend(std::string_view name) {
  if (name == "exhaustive") return SfmBackend::exhaustive;
  if (name == "mnp") return SfmBackend::mnp;
  if (name == "auto") return SfmBackend::automatic;
  throw Error(ErrorCode::Unsupported, "unknown SFM backend '" + std::string(name) + "'");
}

std::string_view to_string(SfmBackend backend) {
  switch (backend) {
    case SfmBackend::exhaustive: return "exhaustive";
    case SfmBackend::mnp: return "mnp";
    case SfmBackend::automatic: return "auto";
  }
  return "auto";
}

MinimizerResult minimize_exhaustive(const SubmodularOracle& oracle) {
  const std::size_t n = oracle.ground_size;
  if (n > kExhaustiveLimit) {
    throw Error(ErrorCode::TooLarge, "exhaustive minimization over " + std::to_string(n) + " elements");
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<Rational> values(total);
  Rational best;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    values[mask] = oracle.eval(Subset::from_mask(n, mask));
    if (mask == 0 || values[mask] < best) best = values[mask];
  }
  std::uint64_t union_mask = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (values[mask] == best) union_mask |= mask;
  check_invariant(values[union_mask] == best, "union of minimizers does not minimize; oracle is not submodular");
  return {best, Subset::from_mask(n, union_mask), true};
}

namespace {

using RVec = std::vector<Rational>;

Rational inner(const RVec& a, const RVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Minimizes ||sum a_i p_i|| subject to sum a_i = 1 by solving the bordered
// Gram system. The points are affinely independent, so the system is regular.
RVec affine_min_coefficients(const std::vector<RVec>& points) {
  const std::size_t m = points.size();
  const Field q = Field::rationals();
  Matrix sys(q, m + 1, m + 2);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) sys(i, j) = Scalar::rational(inner(points[i], points[j]));
    sys(i, m) = q.one();
    sys(m, i) = q.one();
  }
  sys(m, m + 1) = q.one();
  auto reduced = rref(sys);
  check_invariant(reduced.rank == m + 1 && reduced.pivots.back() == m,
                  "min-norm-point corral lost affine independence");
  RVec alpha(m);
  for (std::size_t i = 0; i < m; ++i) alpha[i] = reduced.matrix(i, m + 1).as_rational();
  return alpha;
}

class MinNormPoint {
 public:
  explicit MinNormPoint(const SubmodularOracle& oracle)
      : oracle_(oracle), n_(oracle.ground_size), offset_(oracle.eval(Subset(n_))) {}

  // Extreme base minimizing <x, q>: greedy over elements sorted by x, ties
  // broken by index.
  RVec greedy(const RVec& x) const {
    std::vector<std::size_t> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    RVec q(n_);
    Subset prefix(n_);
    Rational prev = 0;
    for (auto e : order) {
      prefix.insert(e);
      Rational cur = oracle_.eval(prefix) - offset_;
      q[e] = cur - prev;
      prev = cur;
    }
    return q;
  }

  RVec solve() {
    std::vector<RVec> corral{greedy(RVec(n_, 0))};
    RVec lambda{Rational(1)};
    RVec x = corral.front();
    const std::size_t max_major = 64 * (n_ + 1) * (n_ + 1) + 1000;
    for (std::size_t major = 0;; ++major) {
      check_invariant(major < max_major, "NotConverged: min-norm-point exceeded its iteration bound");
      RVec q = greedy(x);
      if (inner(x, q) >= inner(x, x)) return x;
      check_invariant(std::find(corral.begin(), corral.end(), q) == corral.end(),
                      "NotConverged: min-norm-point re-entered a corral point");
      corral.push_back(std::move(q));
      lambda.push_back(0);
      for (;;) {
        RVec alpha = affine_min_coefficients(corral);
        if (std::all_of(alpha.begin(), alpha.end(), [](const Rational& a) { return sgn(a) > 0; })) {
          lambda = std::move(alpha);
          x = combine(corral, lambda);
          break;
        }
        Rational theta = 1;
        for (std::size_t i = 0; i < corral.size(); ++i) {
          if (sgn(alpha[i]) <= 0) {
            Rational t = lambda[i] / (lambda[i] - alpha[i]);
            if (t < theta) theta = t;
          }
        }
        for (std::size_t i = 0; i < corral.size(); ++i) lambda[i] = theta * alpha[i] + (1 - theta) * lambda[i];
        std::vector<RVec> kept;
        RVec kept_lambda;
        for (std::size_t i = 0; i < corral.size(); ++i) {
          if (sgn(lambda[i]) > 0) {
            kept.push_back(std::move(corral[i]));
            kept_lambda.push_back(lambda[i]);
          }
        }
        check_invariant(kept.size() < corral.size(), "NotConverged: minor cycle removed no corral point");
        corral = std::move(kept);
        lambda = std::move(kept_lambda);
        x = combine(corral, lambda);
      }
    }
  }

  const Rational& offset() const { return offset_; }

 private:
  RVec combine(const std::vector<RVec>& points, const RVec& weights) const {
    RVec x(n_, 0);
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = 0; j < n_; ++j) x[j] += weights[i] * points[i][j];
    return x;
  }

  const SubmodularOracle& oracle_;
  std::size_t n_;
  Rational offset_;
};

}  // namespace

MinimizerResult minimize_polynomial(const SubmodularOracle& oracle) {
  const std::size_t n = oracle.ground_size;
  if (n == 0) return {oracle.eval(Subset(0)), Subset(0), true};
  MinNormPoint mnp(oracle);
  RVec x = mnp.solve();

  Subset candidate(n);
  Rational dual_bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) <= 0) candidate.insert(i);
    if (sgn(x[i]) < 0) dual_bound += x[i];
  }
  // Strong duality: min f - f(∅) equals the sum of the negative parts of x*.
  check_invariant(oracle.eval(candidate) - mnp.offset() == dual_bound,
                  "min-norm-point candidate fails the duality certificate");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Subset maximal = maximality_closure(oracle, candidate, order);
  return {oracle.eval(maximal), maximal, true};
}

MinimizerResult minimize(const SubmodularOracle& oracle, SfmBackend backend) {
  switch (backend) {
    case SfmBackend::exhaustive: return minimize_exhaustive(oracle);
    case SfmBackend::mnp: return minimize_polynomial(oracle);
    case SfmBackend::automatic:
      return oracle.ground_size <= kAutoExhaustiveLimit ? minimize_exhaustive(oracle) : minimize_polynomial(oracle);
  }
  return minimize_exhaustive(oracle);
}

Subset maximality_closure(const SubmodularOracle& oracle, Subset start, std::span<const std::size_t> order) {
  Rational current = oracle.eval(start);
  for (bool changed = true; changed;) {
    changed = false;
    for (auto e : order) {
      if (start.contains(e)) continue;
      start.insert(e);
      Rational grown = oracle.eval(start);
      if (grown <= current) {
        current = grown;
        changed = true;
      } else {
        start.erase(e);
      }
    }
  }
  return start;
}

bool verify_submodular(const SubmodularOracle& oracle, std::size_t trials, Rng& rng) {
  const std::size_t n = oracle.ground_size;
  if (n <= 6) {
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<Rational> values(total);
    for (std::uint64_t m = 0; m < total; ++m) values[m] = oracle.eval(Subset::from_mask(n, m));
    for (std::uint64_t a = 0; a < total; ++a)
      for (std::uint64_t b = a + 1; b < total; ++b)
        if (values[a] + values[b] < values[a | b] + values[a & b]) return false;
  }
  std::bernoulli_distribution coin(0.5);
  for (std::size_t t = 0; t < trials; ++t) {
    Subset x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (coin(rng)) x.insert(i);
      if (coin(rng)) y.insert(i);
    }
    if (oracle.eval(x) + oracle.eval(y) < oracle.eval(x | y) + oracle.eval(x & y)) return false;
  }
  return true;
}

}  // namespace rhoc
