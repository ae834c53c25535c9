#include <gtest/gtest.h>

#include <map>

#include "brq/corpus.hpp"
#include "brq/error.hpp"
#include "brq/group.hpp"

using namespace brq;

namespace {

void expect_associative(const FiniteGroup& g) {
  const int n = static_cast<int>(g.order());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) ASSERT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
  for (int a = 0; a < n; ++a) {
    EXPECT_EQ(g.mul(0, a), a);
    EXPECT_EQ(g.mul(a, 0), a);
    EXPECT_EQ(g.mul(a, g.inv(a)), 0);
  }
}

std::map<int, int> order_census(const FiniteGroup& g) {
  std::map<int, int> census;
  for (std::size_t x = 0; x < g.order(); ++x) ++census[g.element_order(static_cast<int>(x))];
  return census;
}

std::vector<std::int64_t> invariants(const FiniteGroup& g) { return abelian_structure(g).invariants; }

}  // namespace

TEST(Permutations, Closure) {
  EXPECT_EQ(from_permutation_generators(3, {{1, 0, 2}, {1, 2, 0}}).order(), 6u);
  FiniteGroup k4 = from_permutation_generators(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
  EXPECT_EQ(k4.order(), 4u);
  EXPECT_EQ(invariants(k4), (std::vector<std::int64_t>{2, 2}));
  FiniteGroup a4 = from_permutation_generators(6, {{2, 3, 4, 5, 0, 1}, {1, 0, 3, 2, 4, 5}, {1, 0, 2, 3, 5, 4}});
  EXPECT_EQ(a4.order(), 12u);
  expect_associative(a4);
  EXPECT_THROW(from_permutation_generators(3, {{0, 0, 1}}), ValidationError);
  EXPECT_THROW(from_permutation_generators(5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, 100), SizeLimitError);
}

TEST(Permutations, Deterministic) {
  auto a = symmetric_group(4), b = symmetric_group(4);
  EXPECT_EQ(a.table(), b.table());
}

TEST(Cayley, Validation) {
  EXPECT_EQ(from_cayley_table({{0}}).order(), 1u);
  FiniteGroup z3 = from_cayley_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  EXPECT_EQ(invariants(z3), (std::vector<std::int64_t>{3}));
  // identity relabelled to 0
  FiniteGroup z2 = from_cayley_table({{1, 0}, {0, 1}});
  EXPECT_EQ(z2.mul(1, 1), 0);
  // loop that is not associative: 0 identity, x*x = y.
  std::vector<std::vector<int>> bad{{0, 1, 2, 3, 4},
                                    {1, 0, 3, 4, 2},
                                    {2, 4, 0, 1, 3},
                                    {3, 2, 4, 0, 1},
                                    {4, 3, 1, 2, 0}};
  try {
    from_cayley_table(bad);
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("not associative"), std::string::npos) << e.what();
  }
  EXPECT_THROW(from_cayley_table({{0, 1}, {1, 1}}), ValidationError);
  EXPECT_THROW(from_cayley_table({{1, 1}, {1, 1}}), ValidationError);
}

TEST(Bicyclic, Counts) {
  EXPECT_EQ(bicyclic_subgroups(cyclic_group(4)).size(), 3u);
  EXPECT_EQ(bicyclic_subgroups(abelian_group({2, 2})).size(), 5u);
  auto q8 = bicyclic_subgroups(dicyclic_group(2), false);
  ASSERT_EQ(q8.size(), 5u);
  EXPECT_EQ(q8.back().order(), 4u);
  // up to conjugacy S3 has trivial, one C2 class, C3
  EXPECT_EQ(bicyclic_subgroups(symmetric_group(3), true).size(), 3u);
  EXPECT_EQ(bicyclic_subgroups(symmetric_group(3), false).size(), 5u);
}

TEST(Bicyclic, AllAbelianOnTwoGenerators) {
  for (const auto& named : b0_vanishing_corpus()) {
    FiniteGroup g = named.make();
    if (g.order() > 32) continue;
    for (const auto& s : bicyclic_subgroups(g, false)) {
      check_subgroup(g, s);
      auto d = abelian_structure(g, s);
      EXPECT_LE(d.invariants.size(), 2u) << named.name;
    }
  }
}

TEST(Abelian, Structure) {
  EXPECT_TRUE(invariants(cyclic_group(1)).empty());
  EXPECT_EQ(invariants(cyclic_group(6)), (std::vector<std::int64_t>{6}));
  EXPECT_EQ(invariants(abelian_group({2, 4})), (std::vector<std::int64_t>{2, 4}));
  EXPECT_EQ(invariants(abelian_group({6, 4})), (std::vector<std::int64_t>{2, 12}));
  auto g = abelian_group({2, 4, 8});
  auto d = abelian_structure(g);
  for (std::size_t i = 0; i < d.invariants.size(); ++i) EXPECT_EQ(g.element_order(d.generators[i]), d.invariants[i]);
  EXPECT_EQ(generated_subgroup(g, d.generators).order(), g.order());
  EXPECT_THROW(abelian_structure(symmetric_group(3)), DomainError);
}

TEST(Products, Semidirect) {
  FiniteGroup z3 = cyclic_group(3), z2 = cyclic_group(2);
  EXPECT_EQ(semidirect_product(z3, z2, {{0, 1, 2}}), direct_product(z3, z2));
  FiniteGroup s3 = semidirect_product(z3, z2, {{0, 2, 1}});
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_EQ(order_census(s3)[2], 3);
  FiniteGroup f20 = metacyclic_group(5, 4, 2);
  EXPECT_EQ(f20.order(), 20u);
  EXPECT_EQ(center(f20).size(), 1u);
  expect_associative(f20);
  EXPECT_THROW(semidirect_product(z3, z2, {{0, 1, 1}}), ValidationError);
  // inversion has order 2, so it is not an action of Z/3
  EXPECT_THROW(semidirect_product(z3, z3, {{0, 2, 1}}), ValidationError);
}

TEST(Products, TrivialActionMatchesDirectProduct) {
  FiniteGroup a = abelian_group({2, 2}), b = cyclic_group(3);
  FiniteGroup d = direct_product(a, b);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 3; ++y)
      for (int x2 = 0; x2 < 4; ++x2)
        for (int y2 = 0; y2 < 3; ++y2)
          EXPECT_EQ(d.mul(x * 3 + y, x2 * 3 + y2), a.mul(x, x2) * 3 + b.mul(y, y2));
}

TEST(Extensions, CentralFromCocycle) {
  FiniteGroup k4 = abelian_group({2, 2});
  std::vector<std::int64_t> zero(16, 0);
  FiniteGroup e8 = central_extension_from_cocycle(k4, 2, zero);
  EXPECT_EQ(invariants(e8), (std::vector<std::int64_t>{2, 2, 2}));
  // Pauli cocycle c((a,b),(a',b')) = b a'
  std::vector<std::int64_t> pauli(16);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) pauli[static_cast<std::size_t>(x * 4 + y)] = (x & 1) * (y >> 1);
  FiniteGroup d8 = central_extension_from_cocycle(k4, 2, pauli);
  EXPECT_EQ(d8.order(), 8u);
  EXPECT_FALSE(d8.is_abelian());
  EXPECT_EQ(center(d8).size(), 2u);
  EXPECT_EQ(order_census(d8)[2], 5);  // dihedral
  FiniteGroup q8 = bilinear_extension(2, 2, {{1, 1}, {0, 1}});
  EXPECT_EQ(order_census(q8)[2], 1);
  EXPECT_EQ(order_census(q8)[4], 6);
  FiniteGroup same = central_extension_from_cocycle(k4, 1, zero);
  EXPECT_EQ(same, k4);
  std::vector<std::int64_t> broken(16, 0);
  broken[1 * 4 + 2] = 1;
  broken[2 * 4 + 1] = 1;
  broken[3 * 4 + 3] = 1;
  EXPECT_THROW(central_extension_from_cocycle(k4, 2, broken), ValidationError);
}

TEST(Extensions, QuotientRecoversBase) {
  FiniteGroup g = abelian_group({2, 4});
  std::vector<std::int64_t> c(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) c[static_cast<std::size_t>(x * 8 + y)] = (x / 4) * (y % 4) % 2;
  FiniteGroup e = central_extension_from_cocycle(g, 2, c);
  EXPECT_FALSE(e.is_abelian());
  Subgroup z = generated_subgroup(e, {static_cast<int>(g.order())});
  std::vector<int> coset;
  FiniteGroup q = quotient_group(e, z, &coset);
  for (int x = 0; x < 8; ++x) EXPECT_EQ(coset[static_cast<std::size_t>(x)], x);
  EXPECT_EQ(q.table(), g.table());
}

TEST(Subgroups, SmallIndex) {
  auto subs = subgroups_of_small_index(symmetric_group(4), 4);
  EXPECT_EQ(subs.size(), 9u);
  for (const auto& s : subs) check_subgroup(symmetric_group(4), s);
  EXPECT_EQ(subgroups_of_small_index(abelian_group({2, 2}), 4).size(), 5u);
  EXPECT_EQ(subgroups_of_small_index(cyclic_group(12), 4).size(), 4u);
}

TEST(Corpus, GroupsAreGroups) {
  auto corpus = b0_vanishing_corpus();
  EXPECT_GE(corpus.size(), 30u);
  for (const auto& named : corpus) {
    FiniteGroup g = named.make();
    EXPECT_LE(g.order(), 64u) << named.name;
    if (g.order() <= 32) expect_associative(g);
  }
}
