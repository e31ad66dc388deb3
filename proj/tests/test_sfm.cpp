#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "rhoc/sfm.hpp"

using namespace rhoc;
using namespace rhoc::test;

namespace {

SubmodularOracle table_oracle(std::size_t n, std::vector<long> values) {
  return {n, [values](const Subset& x) -> Rational {
            std::size_t mask = 0;
            for (auto i : x.members()) mask |= std::size_t{1} << i;
            return Rational(values[mask]);
          }};
}

SubmodularOracle modular(std::size_t n, long sign) {
  return {n, [sign](const Subset& x) -> Rational { return Rational(sign * static_cast<long>(x.count())); }};
}

// Cut function of the path 0-1-2-...-(n-1) with unit weights, minus one
// unit on vertex 0.
SubmodularOracle path_cut(std::size_t n) {
  return {n, [n](const Subset& x) -> Rational {
            long v = x.contains(0) ? -1 : 0;
            for (std::size_t i = 0; i + 1 < n; ++i) v += x.contains(i) != x.contains(i + 1);
            return Rational(v);
          }};
}

}  // namespace

TEST_CASE("subset basics") {
  Subset s = Subset::from_mask(4, 0b1010);
  CHECK(s.members() == std::vector<std::size_t>{1, 3});
  CHECK(s.complement_members() == std::vector<std::size_t>{0, 2});
  CHECK(s.count() == 2);
  CHECK(to_string(s) == "{1,3}");
  CHECK((s | Subset::from_mask(4, 1)) == Subset::from_mask(4, 0b1011));
  CHECK((s & Subset::from_mask(4, 2)) == Subset::from_mask(4, 2));
  CHECK(Subset::full(3).count() == 3);
}

TEST_CASE("backend names") {
  CHECK(parse_backend("mnp") == SfmBackend::mnp);
  CHECK(parse_backend("exhaustive") == SfmBackend::exhaustive);
  CHECK(parse_backend("auto") == SfmBackend::automatic);
  CHECK(error_code_of([] { parse_backend("schrijver"); }) == ErrorCode::Unsupported);
  CHECK(to_string(SfmBackend::mnp) == "mnp");
}

TEST_CASE("minimize_exhaustive examples") {
  auto r = minimize_exhaustive(table_oracle(2, {0, 1, 1, 1}));
  CHECK(r.value == 0);
  CHECK(r.minimizer == Subset(2));

  auto up = minimize_exhaustive(modular(5, 1));
  CHECK(up.value == 0);
  CHECK(up.minimizer == Subset(5));

  auto down = minimize_exhaustive(modular(5, -1));
  CHECK(down.value == -5);
  CHECK(down.minimizer == Subset::full(5));
}

TEST_CASE("the maximal minimizer is returned when minimizers tie") {
  // f = 0 on ∅, {0}, {0,1}; the union {0,1} must be chosen.
  auto r = minimize_exhaustive(table_oracle(2, {0, 0, 1, 0}));
  CHECK(r.value == 0);
  CHECK(r.minimizer == Subset::full(2));
  CHECK(minimize_polynomial(table_oracle(2, {0, 0, 1, 0})).minimizer == Subset::full(2));
}

TEST_CASE("exhaustive search refuses large ground sets") {
  CHECK(error_code_of([] { minimize_exhaustive(modular(kExhaustiveLimit + 1, 1)); }) == ErrorCode::TooLarge);
}

TEST_CASE("a non-submodular oracle is detected by exhaustive search") {
  // Minimizers {0} and {1}, but their union costs more.
  CHECK_THROWS_AS(minimize_exhaustive(table_oracle(2, {1, 0, 0, 1})), InvariantViolation);
}

TEST_CASE("minimize_polynomial matches exhaustive on the examples") {
  for (const auto& oracle : {table_oracle(2, {0, 1, 1, 1}), modular(5, 1), modular(5, -1), path_cut(7)}) {
    auto a = minimize_exhaustive(oracle);
    auto b = minimize_polynomial(oracle);
    CHECK(a.value == b.value);
    CHECK(a.minimizer == b.minimizer);
    CHECK(b.is_maximal);
  }
  auto empty = minimize_polynomial(modular(0, 1));
  CHECK(empty.value == 0);
  CHECK(empty.minimizer.ground_size() == 0);
}

TEST_CASE("minimize_polynomial handles ground sets beyond exhaustive reach") {
  auto r = minimize_polynomial(path_cut(40));
  // Taking every vertex gives -1 with no cut edges.
  CHECK(r.value == -1);
  CHECK(r.minimizer == Subset::full(40));
  CHECK(minimize(path_cut(40), SfmBackend::automatic).minimizer == Subset::full(40));
}

TEST_CASE("maximality closure") {
  auto oracle = table_oracle(2, {0, 0, 1, 0});
  std::vector<std::size_t> order{1, 0};
  CHECK(maximality_closure(oracle, Subset(2), order) == Subset::full(2));
  // From ∅ no single addition stays minimal here, so the closure is ∅.
  auto gap = table_oracle(2, {0, 1, 1, 0});
  CHECK(maximality_closure(gap, Subset(2), order) == Subset(2));
}

TEST_CASE("verify_submodular examples") {
  Rng rng(1);
  CHECK(verify_submodular(modular(5, 1), 50, rng));
  CHECK(verify_submodular({4, [](const Subset& x) -> Rational { return Rational(std::min<long>(static_cast<long>(x.count()), 1)); }}, 50, rng));
  CHECK_FALSE(verify_submodular({3, [](const Subset& x) -> Rational { return Rational(-std::min<long>(static_cast<long>(x.count()), 1)); }}, 50, rng));
  CHECK(verify_submodular(path_cut(12), 500, rng));
}
