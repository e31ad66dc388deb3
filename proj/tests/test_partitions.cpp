#include <doctest.h>

#include "helpers.hpp"
#include "rhoc/rigidity.hpp"

using namespace rhoc;
using namespace rhoc::test;

namespace {

SubspaceFamily two_lines(const Field& q) { return SubspaceFamily(q, 2, {line(q, 2, 0), line(q, 2, 1)}); }

SubspaceFamily duplicate_plane(const Field& q) {
  Subspace p = span(q, 3, {{1, 0, 0}, {0, 1, 0}});
  return SubspaceFamily(q, 3, {p, p});
}

SubspaceFamily k3_edges() {
  return rigidity_family(Graph(3, {{0, 1}, {0, 2}, {1, 2}}), 2);
}

}  // namespace

TEST_CASE("families validate their members") {
  Field q = Field::rationals();
  SubspaceFamily f(q, 2);
  CHECK(error_code_of([&] { f.push_back(Subspace::zero(q, 2)); }) == ErrorCode::ZeroSubspace);
  CHECK(error_code_of([&] { f.push_back(line(q, 3, 0)); }) == ErrorCode::MixedAmbient);
  CHECK(error_code_of([&] { f.push_back(line(Field::prime(5), 2, 0)); }) == ErrorCode::MixedField);
  try {
    SubspaceFamily(q, 2, {line(q, 2, 0), Subspace::zero(q, 2)});
    FAIL("zero member accepted");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("1") != std::string::npos);
  }
}

TEST_CASE("partitions are canonical and validated") {
  Partition a({{2, 0}, {1}});
  Partition b({{1}, {0, 2}});
  CHECK(a == b);
  CHECK(a.blocks() == std::vector<Block>{{0, 2}, {1}});
  CHECK(error_code_of([] { Partition({{0, 1}, {1}}); }) == ErrorCode::InvalidPartition);
  CHECK(error_code_of([] { Partition({{0}, {}}); }) == ErrorCode::InvalidPartition);
  CHECK(error_code_of([] { Partition::of({{0}, {2}}, 3); }) == ErrorCode::InvalidPartition);
  CHECK(Partition::singletons(3).all_singletons());
  CHECK(Partition::whole(3).size() == 1);
  CHECK(Partition::whole(0).size() == 0);
}

TEST_CASE("rho_of_partition examples") {
  Field q = Field::rationals();
  auto f = two_lines(q);
  CHECK(rho_of_partition(f, Partition::singletons(2), 1) == 0);
  CHECK(rho_of_partition(f, Partition::whole(2), 1) == 1);
  CHECK(rho_of_partition(f, Partition::singletons(2), frac(1, 2)) == 1);
  CHECK(error_code_of([&] { rho_of_partition(f, Partition::singletons(3), 1); }) == ErrorCode::InvalidPartition);
}

TEST_CASE("rho_bruteforce examples") {
  Field q = Field::rationals();
  auto dup = rho_bruteforce(duplicate_plane(q), 1);
  CHECK(dup.value == 1);
  CHECK(dup.partition == Partition::whole(2));

  auto k3 = rho_bruteforce(k3_edges(), 1);
  CHECK(k3.value == 3);
  CHECK(k3.partition == Partition::whole(3));

  Vector diag = vec(q, {1, 1});
  SubspaceFamily lines(q, 2, {line(q, 2, 0), line(q, 2, 1), Subspace::span_of(Matrix::from_rows(q, 2, {diag}))});
  auto r = rho_bruteforce(lines, frac(3, 2));
  CHECK(r.value == frac(-3, 2));
  CHECK(r.partition.all_singletons());

  auto empty = rho_bruteforce(SubspaceFamily(q, 2), 1);
  CHECK(empty.value == 0);
  CHECK(empty.partition.size() == 0);
}

TEST_CASE("rho_bruteforce refuses large families") {
  Field q = Field::rationals();
  SubspaceFamily big(q, 2);
  for (int i = 0; i < 13; ++i) big.push_back(line(q, 2, 0));
  CHECK(error_code_of([&] { rho_bruteforce(big, 1); }) == ErrorCode::TooLarge);
}

TEST_CASE("restrict_partition examples") {
  Partition pi({{0, 1}, {2}});
  std::vector<std::size_t> sub{0, 2};
  CHECK(restrict_partition(pi, sub) == Partition({{0}, {2}}));
  std::vector<std::size_t> all{0, 1, 2};
  CHECK(restrict_partition(pi, all) == pi);
  CHECK(restrict_partition(Partition::whole(3), std::vector<std::size_t>{}).size() == 0);
}

TEST_CASE("is_refinement examples") {
  Partition coarse({{0, 1}, {2}});
  CHECK(is_refinement(Partition::singletons(3), coarse));
  CHECK_FALSE(is_refinement(Partition::whole(2), Partition::singletons(2)));
  CHECK(is_refinement(coarse, coarse));
  CHECK(error_code_of([&] { is_refinement(Partition::singletons(2), coarse); }) == ErrorCode::MismatchedGroundSet);
}

TEST_CASE("hat_family examples") {
  Field q = Field::rationals();
  auto f = two_lines(q);
  auto same = hat_family(f, Partition::singletons(2), 1);
  CHECK(same.members() == f.members());

  auto dup = duplicate_plane(q);
  auto hat = hat_family(dup, Partition::whole(2), 1);
  REQUIRE(hat.size() == 1);
  CHECK(hat[0] == dup[0]);

  auto k3 = hat_family(k3_edges(), Partition::whole(3), 1);
  REQUIRE(k3.size() == 1);
  CHECK(k3[0].dim() == 4);
}

TEST_CASE("hat_family rejects a non-minimal partition with coinciding spans") {
  Field q = Field::rationals();
  CHECK_THROWS_AS(hat_family(duplicate_plane(q), Partition::singletons(2), 1), InvariantViolation);
  // With c above the dimension the duplicate stays split and that is fine.
  CHECK(hat_family(duplicate_plane(q), Partition::singletons(2), 3).size() == 2);
}
