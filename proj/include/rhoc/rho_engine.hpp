#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "rhoc/partitions.hpp"
#include "rhoc/sfm.hpp"

namespace rhoc {

// Set function r(X) = d(X ∪ {g}) - c + Σ_{f ∈ base \ X} (d(f) - c) over
// subsets X of `base`. Submodular for every family and every c; `base` is
// expected to be its own hat (all-singleton minimal partition), which is what
// makes the minimizer meaningful for insertion. Throws Error(MixedAmbient) or
// Error(MixedField) when g does not match the family.
SubmodularOracle insertion_oracle(const SubspaceFamily& base, const Subspace& g, const Rational& c);

// The running hat family together with the input indices each hat member has
// absorbed.
struct EngineState {
  Rational c;
  SubspaceFamily hat;
  std::vector<Block> blocks;

  EngineState(Field field, std::size_t ambient_dim, Rational c_value)
      : c(std::move(c_value)), hat(field, ambient_dim) {}
};

// Observes each insertion step: the base hat, the inserted subspace, its
// oracle, and the minimizer chosen. Used by verification code.
using InsertionObserver =
    std::function<void(const SubspaceFamily& base, const Subspace& g, const SubmodularOracle& oracle,
                       const MinimizerResult& minimum)>;

// One step of the incremental algorithm: minimizes the insertion oracle,
// merges the maximal minimizer X* with g into one hat member and keeps the
// rest of the hat as is.
EngineState insert_subspace(const EngineState& state, const Subspace& g, std::size_t original_index,
                            SfmBackend backend = SfmBackend::automatic, const InsertionObserver& observer = {});

// ρ_c(F) and the minimal partition Π*(F) over F's indices. For c <= 0 the
// whole family is one block and the value is d(F) - c; the empty family has
// value 0 and the empty partition.
RhoResult rho(const SubspaceFamily& family, const Rational& c, SfmBackend backend = SfmBackend::automatic,
              const InsertionObserver& observer = {});

}  // namespace rhoc
