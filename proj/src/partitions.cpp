#include "rhoc/partitions.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>

#include "rhoc/error.hpp"

namespace rhoc {

SubspaceFamily::SubspaceFamily(Field field, std::size_t ambient_dim, std::vector<Subspace> members)
    : field_(field), ambient_dim_(ambient_dim) {
  members_.reserve(members.size());
  for (auto& m : members) push_back(std::move(m));
}

void SubspaceFamily::push_back(Subspace s) {
  const auto index = std::to_string(members_.size());
  if (s.is_zero()) throw Error(ErrorCode::ZeroSubspace, "member " + index + " is the zero subspace");
  if (s.ambient_dim() != ambient_dim_) {
    throw Error(ErrorCode::MixedAmbient, "member " + index + " has ambient dimension " +
                                             std::to_string(s.ambient_dim()) + ", family has " +
                                             std::to_string(ambient_dim_));
  }
  if (!(s.field() == field_)) throw Error(ErrorCode::MixedField, "member " + index + " is over " + s.field().name());
  members_.push_back(std::move(s));
}

SubspaceFamily SubspaceFamily::subfamily(std::span<const std::size_t> indices) const {
  SubspaceFamily out(field_, ambient_dim_);
  for (auto i : indices) out.members_.push_back(members_.at(i));
  return out;
}

SubspaceFamily SubspaceFamily::concat(const SubspaceFamily& other) const {
  SubspaceFamily out = *this;
  for (const auto& m : other.members_) out.push_back(m);
  return out;
}

Partition::Partition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  std::set<std::size_t> seen;
  for (auto& b : blocks_) {
    if (b.empty()) throw Error(ErrorCode::InvalidPartition, "empty block");
    std::sort(b.begin(), b.end());
    for (auto i : b) {
      if (!seen.insert(i).second) throw Error(ErrorCode::InvalidPartition, "index " + std::to_string(i) + " repeats");
    }
  }
  std::sort(blocks_.begin(), blocks_.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
}

Partition Partition::of(std::vector<Block> blocks, std::size_t n) {
  Partition p(std::move(blocks));
  if (!p.covers_prefix(n)) {
    throw Error(ErrorCode::InvalidPartition, "blocks do not cover exactly {0.." + std::to_string(n) + "-1}");
  }
  return p;
}

Partition Partition::singletons(std::size_t n) {
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks.push_back({i});
  return Partition(std::move(blocks));
}

Partition Partition::whole(std::size_t n) {
  if (n == 0) return Partition();
  Block b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = i;
  return Partition({std::move(b)});
}

std::vector<std::size_t> Partition::ground_set() const {
  std::vector<std::size_t> out;
  for (const auto& b : blocks_) out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool Partition::covers_prefix(std::size_t n) const {
  auto g = ground_set();
  if (g.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (g[i] != i) return false;
  }
  return true;
}

bool Partition::all_singletons() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.size() == 1; });
}

Partition Partition::relabel(std::span<const std::size_t> labels) const {
  std::vector<Block> out = blocks_;
  for (auto& b : out)
    for (auto& i : b) i = labels[i];
  return Partition(std::move(out));
}

Rational rho_of_partition(const SubspaceFamily& family, const Partition& pi, const Rational& c) {
  if (!pi.covers_prefix(family.size())) {
    throw Error(ErrorCode::InvalidPartition, "partition does not cover the family's " +
                                                 std::to_string(family.size()) + " indices");
  }
  Rational total = 0;
  for (const auto& block : pi.blocks()) {
    auto members = family.subfamily(block).members();
    total += Rational(static_cast<unsigned long>(span_dim(members))) - c;
  }
  return total;
}

namespace {

struct BruteforceSearch {
  std::size_t n;
  std::vector<std::size_t> dims;  // span dimension per bitmask
  // Per block count k: least total dimension, how many partitions reach it,
  // and one witness.
  std::vector<std::size_t> best_sum;
  std::vector<std::size_t> best_count;
  std::vector<std::vector<std::uint32_t>> witness;
  std::vector<std::uint32_t> masks;

  void run(std::size_t next) {
    if (next == n) {
      std::size_t k = masks.size();
      std::size_t sum = 0;
      for (auto m : masks) sum += dims[m];
      if (sum < best_sum[k]) {
        best_sum[k] = sum;
        best_count[k] = 1;
        witness[k] = masks;
      } else if (sum == best_sum[k]) {
        ++best_count[k];
      }
      return;
    }
    const std::uint32_t bit = std::uint32_t{1} << next;
    for (std::size_t b = 0; b < masks.size(); ++b) {
      masks[b] |= bit;
      run(next + 1);
      masks[b] &= ~bit;
    }
    masks.push_back(bit);
    run(next + 1);
    masks.pop_back();
  }
};

}  // namespace

RhoResult rho_bruteforce(const SubspaceFamily& family, const Rational& c) {
  const std::size_t n = family.size();
  if (n > kBruteforceLimit) {
    throw Error(ErrorCode::TooLarge, std::to_string(n) + " members exceeds the brute-force limit of " +
                                         std::to_string(kBruteforceLimit));
  }
  if (n == 0) return {Rational(0), Partition()};

  BruteforceSearch search;
  search.n = n;
  search.dims.assign(std::size_t{1} << n, 0);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    EchelonBasis basis(family.field(), family.ambient_dim());
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint32_t{1} << i)) basis.add_rows(family[i].basis());
    search.dims[mask] = basis.rank();
  }
  search.best_sum.assign(n + 1, std::numeric_limits<std::size_t>::max());
  search.best_count.assign(n + 1, 0);
  search.witness.assign(n + 1, {});
  search.run(0);

  std::size_t best_k = 0;
  Rational best_value;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational value = Rational(static_cast<unsigned long>(search.best_sum[k])) - Rational(static_cast<unsigned long>(k)) * c;
    if (best_k == 0 || value < best_value) {
      best_k = k;
      best_value = value;
    }
  }
  check_invariant(search.best_count[best_k] == 1,
                  "minimal partition is not unique: several fewest-block minimizers exist");

  std::vector<Block> blocks;
  for (auto mask : search.witness[best_k]) {
    Block b;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint32_t{1} << i)) b.push_back(i);
    blocks.push_back(std::move(b));
  }
  return {best_value, Partition::of(std::move(blocks), n)};
}

Partition restrict_partition(const Partition& pi, std::span<const std::size_t> subset) {
  std::set<std::size_t> keep(subset.begin(), subset.end());
  std::vector<Block> out;
  for (const auto& b : pi.blocks()) {
    Block r;
    for (auto i : b)
      if (keep.count(i)) r.push_back(i);
    if (!r.empty()) out.push_back(std::move(r));
  }
  return Partition(std::move(out));
}

bool is_refinement(const Partition& fine, const Partition& coarse) {
  if (fine.ground_set() != coarse.ground_set()) {
    throw Error(ErrorCode::MismatchedGroundSet, "partitions cover different index sets");
  }
  std::vector<std::size_t> owner;
  for (std::size_t b = 0; b < coarse.blocks().size(); ++b)
    for (auto i : coarse.blocks()[b]) {
      if (owner.size() <= i) owner.resize(i + 1);
      owner[i] = b;
    }
  for (const auto& b : fine.blocks()) {
    for (auto i : b)
      if (owner[i] != owner[b.front()]) return false;
  }
  return true;
}

SubspaceFamily hat_family(const SubspaceFamily& family, const Partition& pi_star, const Rational& c) {
  if (!pi_star.covers_prefix(family.size())) {
    throw Error(ErrorCode::InvalidPartition, "partition does not cover the family");
  }
  SubspaceFamily out(family.field(), family.ambient_dim());
  for (const auto& block : pi_star.blocks()) out.push_back(span_of(family.subfamily(block).members()));
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (out[i] == out[j]) {
        check_invariant(c > Rational(static_cast<unsigned long>(out[i].dim())),
                        "two blocks of a minimal partition span the same subspace");
      }
    }
  return out;
}

}  // namespace rhoc
