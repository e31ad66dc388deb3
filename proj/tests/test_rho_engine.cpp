#include <doctest.h>

#include "helpers.hpp"
#include "rhoc/generators.hpp"
#include "rhoc/rho_engine.hpp"
#include "rhoc/rigidity.hpp"

using namespace rhoc;
using namespace rhoc::test;

namespace {

Subspace diagonal(const Field& q) { return Subspace::span_of(Matrix::from_rows(q, 2, {vec(q, {1, 1})})); }

}  // namespace

TEST_CASE("insertion oracle values") {
  Field q = Field::rationals();
  SubspaceFamily base(q, 2, {line(q, 2, 0), line(q, 2, 1)});
  auto r = insertion_oracle(base, diagonal(q), 1);
  CHECK(r.ground_size == 2);
  CHECK(r.eval(Subset::from_mask(2, 0)) == 0);
  CHECK(r.eval(Subset::from_mask(2, 1)) == 1);
  CHECK(r.eval(Subset::from_mask(2, 2)) == 1);
  CHECK(r.eval(Subset::from_mask(2, 3)) == 1);

  Subspace plane = span(q, 3, {{1, 0, 0}, {0, 1, 0}});
  auto lonely = insertion_oracle(SubspaceFamily(q, 3), plane, 1);
  CHECK(lonely.eval(Subset(0)) == 1);

  auto twin = insertion_oracle(SubspaceFamily(q, 3, {plane}), plane, 1);
  CHECK(twin.eval(Subset(1)) == 2);
  CHECK(twin.eval(Subset::full(1)) == 1);

  CHECK(error_code_of([&] { insertion_oracle(base, line(q, 3, 0), 1); }) == ErrorCode::MixedAmbient);
  CHECK(error_code_of([&] { insertion_oracle(base, line(Field::prime(5), 2, 0), 1); }) == ErrorCode::MixedField);
}

TEST_CASE("insert_subspace examples") {
  Field q = Field::rationals();
  EngineState state(q, 2, Rational(1));
  state = insert_subspace(state, line(q, 2, 0), 0);
  state = insert_subspace(state, line(q, 2, 1), 1);
  CHECK(state.hat.size() == 2);
  state = insert_subspace(state, diagonal(q), 2);
  CHECK(state.hat.size() == 3);
  CHECK(state.blocks == std::vector<Block>{{0}, {1}, {2}});

  Subspace plane = span(q, 3, {{1, 0, 0}, {0, 1, 0}});
  EngineState s2(q, 3, Rational(1));
  s2 = insert_subspace(s2, plane, 0);
  CHECK(s2.hat.size() == 1);
  CHECK(s2.blocks == std::vector<Block>{{0}});
  s2 = insert_subspace(s2, plane, 1);
  REQUIRE(s2.hat.size() == 1);
  CHECK(s2.hat[0] == plane);
  CHECK(s2.blocks == std::vector<Block>{{0, 1}});
}

TEST_CASE("rho examples") {
  Field q = Field::rationals();
  Subspace plane = span(q, 3, {{1, 0, 0}, {0, 1, 0}});
  for (auto backend : {SfmBackend::exhaustive, SfmBackend::mnp, SfmBackend::automatic}) {
    auto dup = rho(SubspaceFamily(q, 3, {plane, plane}), 1, backend);
    CHECK(dup.value == 1);
    CHECK(dup.partition == Partition::whole(2));

    auto k3 = rho(rigidity_family(Graph(3, {{0, 1}, {0, 2}, {1, 2}}), 2), 1, backend);
    CHECK(k3.value == 3);
    CHECK(k3.partition == Partition::whole(3));
  }
  SubspaceFamily f(q, 3, {plane, line(q, 3, 2), line(q, 3, 0)});
  auto neg = rho(f, -1);
  CHECK(neg.value == 4);
  CHECK(neg.partition == Partition::whole(3));

  auto empty = rho(SubspaceFamily(q, 3), 1);
  CHECK(empty.value == 0);
  CHECK(empty.partition.size() == 0);
}

TEST_CASE("large families go through the min-norm-point backend") {
  // With c = 2 above every member's dimension nothing ever merges, so the hat
  // grows past the exhaustive limit and the answer is known exactly.
  Field fp = Field::prime(10007);
  Rng rng(7);
  gen::FamilyShape shape;
  shape.min_members = shape.max_members = 24;
  shape.min_ambient = shape.max_ambient = 6;
  shape.max_dim = 1;
  auto f = gen::random_family(fp, rng, shape);
  std::size_t largest = 0;
  auto r = rho(f, 2, SfmBackend::automatic,
               [&](const SubspaceFamily&, const Subspace&, const SubmodularOracle& oracle, const MinimizerResult&) {
                 largest = std::max(largest, oracle.ground_size);
               });
  CHECK(largest == 23);
  CHECK(r.value == -24);
  CHECK(r.partition.all_singletons());
}

TEST_CASE("the observer sees every insertion") {
  Field q = Field::rationals();
  SubspaceFamily f(q, 2, {line(q, 2, 0), line(q, 2, 1), diagonal(q)});
  std::vector<std::size_t> grounds;
  rho(f, 1, SfmBackend::automatic,
      [&](const SubspaceFamily& base, const Subspace&, const SubmodularOracle& oracle, const MinimizerResult&) {
        CHECK(base.size() == oracle.ground_size);
        grounds.push_back(oracle.ground_size);
      });
  CHECK(grounds == std::vector<std::size_t>{0, 1, 2});
}
