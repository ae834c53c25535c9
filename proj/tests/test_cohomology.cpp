#include <gtest/gtest.h>

#include <random>

#include "brq/cohomology.hpp"
#include "brq/corpus.hpp"
#include "brq/error.hpp"

using namespace brq;

namespace {

using Inv = std::vector<std::int64_t>;

Inv schur(const FiniteGroup& g) { return h2_qz(g).invariant_factors(); }

// Permutation lattice Z[G/H] for the cosets gH, on generators.
GModule permutation_lattice(const FiniteGroup& g, const Subgroup& h) {
  const std::size_t n = g.order();
  std::vector<int> coset(n, -1);
  std::vector<int> reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    for (int e : h.elements) coset[static_cast<std::size_t>(g.mul(static_cast<int>(x), e))] = static_cast<int>(reps.size());
    reps.push_back(static_cast<int>(x));
  }
  const std::size_t k = reps.size();
  std::vector<std::vector<Vec>> gens;
  for (int s : g.generators()) {
    std::vector<Vec> m(k, Vec(k, 0));
    for (std::size_t j = 0; j < k; ++j) m[static_cast<std::size_t>(coset[static_cast<std::size_t>(g.mul(s, reps[j]))])][j] = 1;
    gens.push_back(m);
  }
  return GModule::lattice(g, k, gens);
}

void check_representatives(const CohomologyGroup& h) {
  const auto& inv = h.invariant_factors();
  for (std::size_t i = 0; i < inv.size(); ++i) {
    EXPECT_TRUE(is_cocycle(h.module(), h.representatives()[i]));
    Vec e(inv.size(), 0);
    e[i] = 1;
    EXPECT_EQ(h.reduce(h.representatives()[i]), e);
  }
}

}  // namespace

TEST(Cohomology, SchurMultipliers) {
  EXPECT_EQ(schur(cyclic_group(1)), Inv{});
  EXPECT_EQ(schur(cyclic_group(12)), Inv{});
  EXPECT_EQ(schur(abelian_group({2, 2})), Inv{2});
  EXPECT_EQ(schur(abelian_group({4, 6})), Inv{2});
  EXPECT_EQ(schur(abelian_group({3, 9})), Inv{3});
  EXPECT_EQ(schur(abelian_group({2, 2, 2})), (Inv{2, 2, 2}));
  EXPECT_EQ(schur(abelian_group({2, 4, 4})), (Inv{2, 2, 4}));
  EXPECT_EQ(schur(symmetric_group(3)), Inv{});
  EXPECT_EQ(schur(dihedral_group(4)), Inv{2});
  EXPECT_EQ(schur(dihedral_group(5)), Inv{});
  EXPECT_EQ(schur(dicyclic_group(2)), Inv{});
  EXPECT_EQ(schur(alternating_group(4)), Inv{2});
  EXPECT_EQ(schur(symmetric_group(4)), Inv{2});
  EXPECT_EQ(schur(bilinear_extension(3, 2, {{0, 1}, {0, 0}})), (Inv{3, 3}));
}

TEST(Cohomology, RealizationModulusDoesNotMatter) {
  FiniteGroup g = abelian_group({2, 4});
  EXPECT_EQ(h2_qz(g, 8).invariant_factors(), h2_qz(g, 24).invariant_factors());
  EXPECT_THROW(h2_qz(g, 12), DomainError);
}

TEST(Cohomology, H1IsAbelianizationDual) {
  EXPECT_EQ(h1(GModule::trivial_qz(symmetric_group(4))).invariant_factors(), Inv{2});
  EXPECT_EQ(h1(GModule::trivial_qz(dicyclic_group(2))).invariant_factors(), (Inv{2, 2}));
  EXPECT_EQ(h1(GModule::trivial_qz(abelian_group({6, 4}))).invariant_factors(), (Inv{2, 12}));
  EXPECT_EQ(h1(GModule::trivial_qz(alternating_group(4))).invariant_factors(), Inv{3});
}

TEST(Cohomology, FiniteCoefficients) {
  FiniteGroup k4 = abelian_group({2, 2});
  EXPECT_EQ(h1(GModule::trivial_finite(k4, 2)).invariant_factors(), (Inv{2, 2}));
  EXPECT_EQ(h2(GModule::trivial_finite(k4, 2)).invariant_factors(), (Inv{2, 2, 2}));
  EXPECT_EQ(h2(GModule::trivial_finite(cyclic_group(6), 6)).invariant_factors(), Inv{6});
  EXPECT_EQ(h2(GModule::trivial_finite(cyclic_group(6), 4)).invariant_factors(), Inv{2});
  // Z/2 + Z/4 with the swap-free action (x, y) -> (x, y + 2x) of Z/2.
  FiniteGroup z2 = cyclic_group(2);
  GModule m = GModule::finite(z2, {2, 4}, {{{1, 0}, {2, 1}}});
  EXPECT_EQ(h2(m).invariant_factors(), small_complex_h(m, 2));
  EXPECT_EQ(h1(m).invariant_factors(), small_complex_h(m, 1));
  EXPECT_THROW(GModule::finite(z2, {2, 4}, {{{1, 0}, {1, 1}}}), ValidationError);
}

TEST(Cohomology, Lattices) {
  FiniteGroup z2 = cyclic_group(2);
  GModule sign = GModule::lattice(z2, 1, {{{-1}}});
  EXPECT_EQ(h1(sign).invariant_factors(), Inv{2});
  EXPECT_EQ(h2(sign).invariant_factors(), Inv{});
  EXPECT_EQ(h2(GModule::trivial_lattice(z2, 1)).invariant_factors(), Inv{2});
  EXPECT_EQ(h1(GModule::trivial_lattice(z2, 3)).invariant_factors(), Inv{});
  EXPECT_EQ(h2(GModule::trivial_lattice(cyclic_group(6), 2)).invariant_factors(), (Inv{6, 6}));
  EXPECT_THROW(GModule::lattice(z2, 1, {{{2}}}), ValidationError);
  EXPECT_THROW(GModule::lattice(cyclic_group(3), 1, {{{-1}}}), ValidationError);
}

TEST(Cohomology, ShapiroForPermutationLattices) {
  FiniteGroup s3 = symmetric_group(3);
  // H^2(G, Z[G/H]) = H^2(H, Z) = Hom(H, Q/Z).
  for (const auto& h : bicyclic_subgroups(s3, false)) {
    GModule m = permutation_lattice(s3, h);
    Inv expected = h.order() > 1 ? Inv{static_cast<std::int64_t>(h.order())} : Inv{};
    CohomologyGroup c = h2(m);
    EXPECT_EQ(c.invariant_factors(), expected) << h.order();
    check_representatives(c);
  }
  FiniteGroup k4 = abelian_group({2, 2});
  EXPECT_EQ(h2(permutation_lattice(k4, whole_group(k4))).invariant_factors(), (Inv{2, 2}));
  EXPECT_EQ(h2(permutation_lattice(k4, generated_subgroup(k4, {}))).invariant_factors(), Inv{});
}

TEST(Cohomology, RepresentativesAndCoboundaries) {
  for (const FiniteGroup& g : {abelian_group({2, 4}), dihedral_group(4), alternating_group(4)}) {
    CohomologyGroup h = h2_qz(g);
    check_representatives(h);
    // a random coboundary reduces to zero
    std::mt19937 rng(7);
    Cochain f = Cochain::zero(1, g.order(), 1, h.modulus());
    for (std::size_t x = 1; x < g.order(); ++x) f.at(static_cast<int>(x), 0) = static_cast<std::int64_t>(rng() % 97);
    Cochain b = coboundary(GModule::trivial_qz(g), f);
    EXPECT_EQ(h.reduce(b), Vec(h.invariant_factors().size(), 0));
  }
  GModule m = GModule::finite(dihedral_group(4), {4}, {{{1}}, {{3}}});
  check_representatives(h2(m));
  check_representatives(h1(m));
  FiniteGroup z4 = cyclic_group(4);
  GModule rot = GModule::lattice(z4, 2, {{{0, -1}, {1, 0}}});
  check_representatives(h1(rot));
  check_representatives(h2(rot));
}

TEST(Cohomology, LatticeReductionIsLinear) {
  FiniteGroup k4 = abelian_group({2, 2});
  GModule m = GModule::lattice(k4, 2, {{{0, 1}, {1, 0}}, {{1, 0}, {0, 1}}});
  CohomologyGroup h = h2(m);
  const auto& inv = h.invariant_factors();
  ASSERT_FALSE(inv.empty());
  std::mt19937 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    Vec a(inv.size());
    for (std::size_t i = 0; i < inv.size(); ++i) a[i] = static_cast<std::int64_t>(rng() % 5);
    Cochain c = h.cocycle_of(a);
    Cochain f = Cochain::zero(1, 4, 2, 0);
    for (auto& v : f.values) v = static_cast<std::int64_t>(rng() % 7) - 3;
    for (std::size_t i = 0; i < 2; ++i) f.at(0, static_cast<int>(i)) = 0;
    Cochain b = coboundary(m, f);
    for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] += b.values[i];
    Vec expect(inv.size());
    for (std::size_t i = 0; i < inv.size(); ++i) expect[i] = a[i] % inv[i];
    EXPECT_EQ(h.reduce(c), expect);
  }
}

TEST(Cohomology, SmallComplexAgrees) {
  std::mt19937 rng(11);
  const std::vector<Inv> shapes{{2}, {5}, {2, 2}, {2, 4}, {3, 3}, {4, 4}, {2, 6}};
  for (const auto& shape : shapes) {
    FiniteGroup a = abelian_group(shape);
    GModule qz = GModule::trivial_qz(a);
    EXPECT_EQ(h2(qz).invariant_factors(), small_complex_h(qz, 2));
    EXPECT_EQ(h1(qz).invariant_factors(), small_complex_h(qz, 1));
    for (std::int64_t n : {2, 3, 4}) {
      GModule t = GModule::trivial_finite(a, n);
      EXPECT_EQ(h2(t).invariant_factors(), small_complex_h(t, 2));
      EXPECT_EQ(h1(t).invariant_factors(), small_complex_h(t, 1));
    }
    // sign lattices: each generator acts by +-1
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<std::vector<Vec>> gens;
      for (std::size_t i = 0; i < a.generators().size(); ++i) {
        const std::int64_t ord = shape[i];
        const std::int64_t s = (ord % 2 == 0 && rng() % 2) ? -1 : 1;
        gens.push_back({{s, 0}, {0, ord % 2 == 0 && rng() % 2 ? -1 : 1}});
      }
      GModule l = GModule::lattice(a, 2, gens);
      EXPECT_EQ(h2(l).invariant_factors(), small_complex_h(l, 2)) << to_string(shape);
      EXPECT_EQ(h1(l).invariant_factors(), small_complex_h(l, 1));
    }
  }
  EXPECT_THROW(small_complex_h(GModule::trivial_qz(abelian_group({2, 2, 2})), 2), DomainError);
}

TEST(Cohomology, CorestrictionAfterRestriction) {
  for (const FiniteGroup& g : {dihedral_group(4), abelian_group({2, 4}), alternating_group(4)}) {
    CohomologyGroup hg = h2_qz(g);
    for (const auto& s : bicyclic_subgroups(g, false)) {
      SubgroupGroup sg = subgroup_group(g, s);
      CohomologyGroup hs = h2_qz(sg.group, hg.modulus());
      const auto index = static_cast<std::int64_t>(g.order() / s.order());
      for (std::size_t i = 0; i < hg.invariant_factors().size(); ++i) {
        Vec e(hg.invariant_factors().size(), 0);
        e[i] = 1;
        Vec r = restrict_class(hg, e, hs, sg);
        Cochain cores = corestrict_cochain(g, sg, hs.cocycle_of(r));
        EXPECT_TRUE(is_cocycle(GModule::trivial_qz(g), cores));
        Vec expect = e;
        for (auto& x : expect) x = mod_reduce(x * index, hg.invariant_factors()[i]);
        EXPECT_EQ(hg.reduce(cores), expect);
      }
    }
  }
}

TEST(Cohomology, RestrictionToBicyclic) {
  // The nontrivial class of K4 restricts to zero on every cyclic subgroup.
  FiniteGroup k4 = abelian_group({2, 2});
  CohomologyGroup h = h2_qz(k4);
  for (const auto& s : bicyclic_subgroups(k4, false)) {
    SubgroupGroup sg = subgroup_group(k4, s);
    CohomologyGroup hs = h2_qz(sg.group, h.modulus());
    Vec r = restrict_class(h, {1}, hs, sg);
    if (s.order() == 4) EXPECT_EQ(r, Vec{1});
    else EXPECT_TRUE(r.empty());
  }
}

TEST(Cohomology, SizeLimits) {
  Limits small;
  small.finite_cohomology = 10;
  small.lattice_cohomology = 4;
  small.lattice_rank = 1;
  EXPECT_THROW(h2_qz(cyclic_group(12), 0, small), SizeLimitError);
  EXPECT_THROW(h2(GModule::trivial_lattice(cyclic_group(6), 1), 0, small), SizeLimitError);
  EXPECT_THROW(h2(GModule::trivial_lattice(cyclic_group(2), 2), 0, small), SizeLimitError);
}
