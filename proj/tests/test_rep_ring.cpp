#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catalog.hpp"
#include "oracles.hpp"
#include "orbirr/errors.hpp"
#include "orbirr/rep_ring.hpp"

using namespace orbirr;

namespace {

struct Fixture {
  GroupPtr group;
  CharacterTable table;
  explicit Fixture(PermGroup g) : group(std::make_shared<const PermGroup>(std::move(g))), table(character_table(group)) {}
};

// S3 acting on the sum-zero plane, basis e1 - e2, e2 - e3: x -> (x1, -x3).
oracle::Matrix standard_matrix(const Perm& p) {
  const auto image = [&](std::size_t basis) {
    std::vector<BigRational> x(3);
    x[p[basis]] += 1;
    x[p[basis + 1]] -= 1;
    return std::vector<BigRational>{x[0], -x[2]};
  };
  const auto c0 = image(0), c1 = image(1);
  return {{c0[0], c1[0]}, {c0[1], c1[1]}};
}

}  // namespace

TEST_CASE("basic characters") {
  Fixture s3(symmetric_group(3));
  const auto perm = permutation_character(s3.group);
  CHECK(perm.values == std::vector<Cyclotomic>{3L, 0L, 1L});
  CHECK(regular_character(s3.group).values == std::vector<Cyclotomic>{6L, 0L, 0L});
  CHECK(trivial_character(s3.group).values == std::vector<Cyclotomic>{1L, 1L, 1L});
  CHECK(inner_product(perm, trivial_character(s3.group)) == Cyclotomic(1L));
  CHECK(invariants_dim(irreducible_character(s3.table, 2)) == 0);
  CHECK(invariants_dim(regular_character(s3.group)) == 1);
}

TEST_CASE("tensor products and decomposition") {
  Fixture s3(symmetric_group(3));
  const auto std2 = irreducible_character(s3.table, 2);
  const auto sq = tensor(std2, std2);
  CHECK(sq.values == std::vector<Cyclotomic>{4L, 1L, 0L});
  const auto rep = VirtualRep::decompose(s3.table, sq);
  CHECK(rep.coordinates == std::vector<long>{1, 1, 1});
  CHECK(rep.is_actual());
  CHECK(rep.dimension() == 4);

  const auto virt = VirtualRep::from_coordinates(s3.table, {2, -1, 0});
  CHECK(virt.character.values == std::vector<Cyclotomic>{1L, 1L, 3L});
  CHECK_FALSE(virt.is_actual());
  CHECK(VirtualRep::decompose(s3.table, virt.character).coordinates == std::vector<long>{2, -1, 0});

  const auto half = make_class_function(s3.group, {Cyclotomic(make_rational(1, 2)), 0L, 0L});
  CHECK_THROWS_AS(VirtualRep::decompose(s3.table, half), InvalidInput);

  Fixture c3(cyclic_group(3));
  CHECK_THROWS_AS(tensor(std2, trivial_character(c3.group)), GroupMismatch);
  CHECK_THROWS_AS(make_class_function(s3.group, {1L}), InvalidInput);
}

TEST_CASE("exterior powers of the standard representation of S3") {
  Fixture s3(symmetric_group(3));
  const auto std2 = irreducible_character(s3.table, 2);
  const auto sign = irreducible_character(s3.table, 1);
  const auto lambdas = exterior_powers(std2, 4);
  CHECK(lambdas[0] == trivial_character(s3.group));
  CHECK(lambdas[1] == std2);
  CHECK(lambdas[2] == sign);
  CHECK(lambdas[3].values == std::vector<Cyclotomic>(3));
  CHECK(lambdas[4].values == std::vector<Cyclotomic>(3));
  for (std::size_t c = 0; c < 3; ++c) {
    const auto m = standard_matrix(s3.group->classes()[c].representative);
    CHECK(lambdas[2].values[c] == Cyclotomic(oracle::exterior_trace(m, 2)));
    CHECK(lambdas[1].values[c] == Cyclotomic(oracle::exterior_trace(m, 1)));
  }
  CHECK(exterior_power(permutation_character(s3.group), 3) == sign);
}

TEST_CASE("lambda operations against permutation matrices") {
  std::vector<PermGroup> groups{symmetric_group(3), symmetric_group(4), dihedral_group(4)};
  for (std::size_t n = 1; n <= 8; ++n) groups.push_back(cyclic_group(n));
  for (auto& g : groups) {
    Fixture f(std::move(g));
    const auto perm = permutation_character(f.group);
    const std::size_t dim = f.group->degree();
    const auto lambdas = exterior_powers(perm, dim + 2);
    const auto l1 = lambda_minus_one(f.table, perm);
    for (std::size_t c = 0; c < f.group->class_count(); ++c) {
      const auto m = oracle::permutation_matrix(f.group->classes()[c].representative);
      CHECK(l1.values[c] == Cyclotomic(oracle::det_one_minus(m)));
      for (std::size_t k = 0; k <= dim + 2; ++k) {
        CHECK(lambdas[k].values[c] == Cyclotomic(oracle::exterior_trace(m, k)));
      }
    }
    // Every lambda^k of an actual representation is actual.
    for (std::size_t k = 0; k <= dim; ++k) CHECK(VirtualRep::decompose(f.table, lambdas[k]).is_actual());
  }
  Fixture s3(symmetric_group(3));
  CHECK(lambda_minus_one(s3.table, permutation_character(s3.group)).values[2] == Cyclotomic(0L));
}

TEST_CASE("lambda_minus_one of irreducibles is det(1 - g)") {
  for (const auto& e : testing_catalog::groups()) {
    const auto table = character_table(e.group);
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto v = irreducible_character(table, i);
      const auto l = lambda_minus_one(table, v);
      // det(1 - g) = prod over eigenvalues; at the identity it vanishes.
      CHECK(l.values[0] == Cyclotomic(0L));
      // For a linear character it is 1 - chi.
      if (table.degrees[i] == 1) CHECK(l == trivial_character(e.group) - v);
    }
  }
  Fixture s3(symmetric_group(3));
  const auto virt = VirtualRep::from_coordinates(s3.table, {0, -1, 1}).character;
  CHECK_THROWS_AS(lambda_minus_one(s3.table, virt), InvalidInput);
}
