#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rhoc/subspace.hpp"

namespace rhoc {

// An ordered list of nonzero subspaces over one field and ambient space.
// Duplicates are allowed: partitions act on indices, not on values.
class SubspaceFamily {
 public:
  SubspaceFamily(Field field, std::size_t ambient_dim) : field_(field), ambient_dim_(ambient_dim) {}
  // Throws ZeroSubspace / MixedAmbient / MixedField naming the offending index.
  SubspaceFamily(Field field, std::size_t ambient_dim, std::vector<Subspace> members);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const Subspace& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Subspace>& members() const { return members_; }

  void push_back(Subspace s);
  SubspaceFamily subfamily(std::span<const std::size_t> indices) const;
  // Members of `this` followed by members of `other`.
  SubspaceFamily concat(const SubspaceFamily& other) const;

 private:
  Field field_;
  std::size_t ambient_dim_;
  std::vector<Subspace> members_;
};

using Block = std::vector<std::size_t>;

// Disjoint cover of a ground set of indices by nonempty blocks. Stored
// canonically (indices sorted within blocks, blocks sorted by smallest
// element), so equality is syntactic.
class Partition {
 public:
  Partition() = default;
  // Any nonempty, pairwise-disjoint blocks; the ground set is their union.
  // Throws Error(InvalidPartition).
  explicit Partition(std::vector<Block> blocks);
  // Additionally requires the ground set to be exactly {0, ..., n-1}.
  static Partition of(std::vector<Block> blocks, std::size_t n);
  static Partition singletons(std::size_t n);
  static Partition whole(std::size_t n);

  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  std::vector<std::size_t> ground_set() const;
  bool covers_prefix(std::size_t n) const;
  bool all_singletons() const;

  // Maps each index i to labels[i].
  Partition relabel(std::span<const std::size_t> labels) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.blocks_ == b.blocks_; }

 private:
  std::vector<Block> blocks_;
};

struct RhoResult {
  Rational value;
  Partition partition;
};

// Sum over blocks of (span_dim(block) - c). Throws Error(InvalidPartition)
// unless pi partitions {0, ..., |F|-1}.
Rational rho_of_partition(const SubspaceFamily& family, const Partition& pi, const Rational& c);

inline constexpr std::size_t kBruteforceLimit = 12;

// Exhaustive minimum over all set partitions. Among minimizers, returns the
// one with the fewest blocks and checks that it is unique (InvariantViolation
// otherwise). Throws Error(TooLarge) above kBruteforceLimit members.
RhoResult rho_bruteforce(const SubspaceFamily& family, const Rational& c);

// {P ∩ subset : P ∈ pi, P ∩ subset ≠ ∅}; labels are kept.
Partition restrict_partition(const Partition& pi, std::span<const std::size_t> subset);

// True iff every block of fine lies inside some block of coarse.
// Throws Error(MismatchedGroundSet) when the ground sets differ.
bool is_refinement(const Partition& fine, const Partition& coarse);

// {span(P) : P ∈ pi_star}, one member per block in block order. Two block
// spans may coincide only when merging them would cost more, i.e. when c
// exceeds their dimension; any other coincidence means pi_star is not
// minimal and raises InvariantViolation.
SubspaceFamily hat_family(const SubspaceFamily& family, const Partition& pi_star, const Rational& c);

}  // namespace rhoc
