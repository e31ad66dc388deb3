#include "rhoc/rho_engine.hpp"

#include <algorithm>
#include <memory>

#include "rhoc/error.hpp"

namespace rhoc {

namespace {

Rational as_rational(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

struct InsertionData {
  SubspaceFamily base;
  Subspace g;
  Rational c;
  std::vector<Rational> member_cost;  // d(f) - c per base member
};

}  // namespace

SubmodularOracle insertion_oracle(const SubspaceFamily& base, const Subspace& g, const Rational& c) {
  if (g.ambient_dim() != base.ambient_dim()) {
    throw Error(ErrorCode::MixedAmbient, "inserted subspace has ambient dimension " +
                                             std::to_string(g.ambient_dim()) + ", family has " +
                                             std::to_string(base.ambient_dim()));
  }
  if (!(g.field() == base.field())) throw Error(ErrorCode::MixedField, "inserted subspace is over " + g.field().name());

  auto data = std::make_shared<const InsertionData>([&] {
    InsertionData d{base, g, c, {}};
    for (const auto& f : base.members()) d.member_cost.push_back(as_rational(f.dim()) - c);
    return d;
  }());

  SubmodularOracle oracle;
  oracle.ground_size = base.size();
  oracle.eval = [data](const Subset& x) -> Rational {
    EchelonBasis span(data->g.field(), data->g.ambient_dim());
    span.add_rows(data->g.basis());
    Rational value = -data->c;
    for (std::size_t i = 0; i < data->base.size(); ++i) {
      if (x.contains(i)) {
        span.add_rows(data->base[i].basis());
      } else {
        value += data->member_cost[i];
      }
    }
    return value + as_rational(span.rank());
  };
  return oracle;
}

EngineState insert_subspace(const EngineState& state, const Subspace& g, std::size_t original_index,
                            SfmBackend backend, const InsertionObserver& observer) {
  const SubspaceFamily& base = state.hat;
  SubmodularOracle oracle = insertion_oracle(base, g, state.c);
  MinimizerResult minimum = minimize(oracle, backend);
  if (observer) observer(base, g, oracle, minimum);

  EngineState next(base.field(), base.ambient_dim(), state.c);
  Matrix merged_generators = g.basis();
  Block merged_block{original_index};
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (minimum.minimizer.contains(i)) {
      for (std::size_t r = 0; r < base[i].dim(); ++r) merged_generators.append_row(base[i].basis().row(r));
      merged_block.insert(merged_block.end(), state.blocks[i].begin(), state.blocks[i].end());
    } else {
      next.hat.push_back(base[i]);
      next.blocks.push_back(state.blocks[i]);
    }
  }
  Subspace merged = Subspace::span_of(merged_generators);
  for (const auto& f : next.hat.members()) {
    if (f == merged) {
      // Equal spans in separate blocks are only optimal when c exceeds their dimension.
      check_invariant(state.c > as_rational(f.dim()), "insertion produced a duplicate hat member");
    }
  }
  std::sort(merged_block.begin(), merged_block.end());
  next.hat.push_back(std::move(merged));
  next.blocks.push_back(std::move(merged_block));
  return next;
}

RhoResult rho(const SubspaceFamily& family, const Rational& c, SfmBackend backend, const InsertionObserver& observer) {
  if (family.empty()) return {Rational(0), Partition()};
  if (sgn(c) <= 0) {
    return {as_rational(span_dim(family.members())) - c, Partition::whole(family.size())};
  }
  EngineState state(family.field(), family.ambient_dim(), c);
  for (std::size_t i = 0; i < family.size(); ++i) state = insert_subspace(state, family[i], i, backend, observer);

  Rational value = 0;
  for (const auto& f : state.hat.members()) value += as_rational(f.dim()) - c;
  return {value, Partition::of(state.blocks, family.size())};
}

}  // namespace rhoc
