#include <gtest/gtest.h>

#include <random>

#include "brq/brauer.hpp"
#include "brq/corpus.hpp"
#include "brq/error.hpp"
#include "brq/examples.hpp"

using namespace brq;

namespace {

using Factors = std::vector<std::int64_t>;

Vec times(const Vec& v, std::int64_t k, const Factors& d) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = mod_reduce(v[i] * k, d[i]);
  return out;
}

Vec plus(const Vec& a, const Vec& b, const Factors& d) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mod_reduce(a[i] + b[i], d[i]);
  return out;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t class_order(const Vec& v, const Factors& d) {
  for (std::int64_t k = 1;; ++k)
    if (is_zero(times(v, k, d))) return k;
}

// Plücker vector of the column span of an n x r integer matrix.
CycloMatrix plucker_vector(const std::vector<Vec>& rows, int r) { return exterior_power(int_matrix(rows), r); }

std::vector<Vec> columns_to_rows(const std::vector<Vec>& cols) {
  std::vector<Vec> rows(cols[0].size(), Vec(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) rows[i][j] = cols[j][i];
  return rows;
}

void expect_same_report(const BrauerReport& a, const BrauerReport& b) {
  EXPECT_EQ(a.h2, b.h2);
  EXPECT_EQ(a.amitsur, b.amitsur);
  EXPECT_EQ(a.stack_group.invariant_factors(), b.stack_group.invariant_factors());
  EXPECT_EQ(a.unramified_group.invariant_factors(), b.unramified_group.invariant_factors());
  EXPECT_EQ(a.unramified_witnesses, b.unramified_witnesses);
  ASSERT_EQ(a.diagnostics.size(), b.diagnostics.size());
  for (std::size_t i = 0; i < a.diagnostics.size(); ++i) {
    EXPECT_EQ(a.diagnostics[i].coords, b.diagnostics[i].coords);
    EXPECT_EQ(a.diagnostics[i].detected, b.diagnostics[i].detected);
  }
}

}  // namespace

TEST(Amitsur, PauliClassGeneratesH2) {
  const ProjectiveAction p = heisenberg_action(2);
  BrauerContext ctx(p.group);
  EXPECT_EQ(ctx.h2().invariant_factors(), Factors{2});
  EXPECT_EQ(ctx.class_of(p.scalar_cocycle), Vec{1});
  const BrauerReport r = br_nr_projective(p);
  EXPECT_TRUE(r.stack_group.invariant_factors().empty());
  EXPECT_TRUE(r.unramified_group.invariant_factors().empty());
}

TEST(Amitsur, HeisenbergClassHasOrderN) {
  for (int n = 2; n <= 6; ++n) {
    const ProjectiveAction p = heisenberg_action(n);
    BrauerContext ctx(p.group);
    const Vec g = ctx.class_of(p.scalar_cocycle);
    EXPECT_EQ(class_order(g, ctx.h2().invariant_factors()), n) << n;
    EXPECT_EQ(br_stack_quotient(ctx.h2(), {g}).invariant_factors(), Factors{}) << n;
  }
}

TEST(Amitsur, LinearRepresentationsHaveNoClass) {
  for (const auto& a : linear_action_corpus()) {
    if (a.action.group.order() > 32) continue;
    const ProjectiveAction p = collineation_action(a.action);
    BrauerContext ctx(p.group);
    EXPECT_TRUE(is_zero(ctx.class_of(p.scalar_cocycle))) << a.name;
  }
}

TEST(Amitsur, TensorProductAddsClasses) {
  // Z/4 x Z/4 acting on C^4 and on C^4 (x) C^4; also a twisted second factor.
  const FiniteGroup g = abelian_group({4, 4});
  const CycloMatrix x = shift_matrix(4), z = clock_matrix(4);
  const CycloMatrix z3 = z * z * z;
  const ProjectiveAction e = projective_action(g, {x, z});
  const ProjectiveAction f = projective_action(g, {x, z3});
  const ProjectiveAction ef = projective_action(g, {kronecker(x, x), kronecker(z, z3)});
  const ProjectiveAction ee = projective_action(g, {kronecker(x, x), kronecker(z, z)});
  BrauerContext ctx(g);
  const Factors& d = ctx.h2().invariant_factors();
  const Vec ge = ctx.class_of(e.scalar_cocycle), gf = ctx.class_of(f.scalar_cocycle);
  EXPECT_EQ(ctx.class_of(ef.scalar_cocycle), plus(ge, gf, d));
  EXPECT_EQ(ctx.class_of(ee.scalar_cocycle), times(ge, 2, d));
  EXPECT_TRUE(is_zero(plus(ge, gf, d)));
  EXPECT_EQ(class_order(ctx.class_of(ee.scalar_cocycle), d), 2);
}

TEST(Amitsur, ClassesFromFinerRealizations) {
  // The scalar cocycle of A4 on P^1 lives at conductor 4 while |G| = 12.
  for (const auto& a : projective_action_corpus()) {
    if (a.name != "A4 on P^1" && a.name != "S4 on P^1") continue;
    const ProjectiveAction p = collineation_action(a.action);
    BrauerContext coarse(p.group);
    BrauerContext fine(p.group, std::lcm<std::int64_t>(static_cast<std::int64_t>(p.group.order()), p.conductor));
    EXPECT_EQ(coarse.h2().invariant_factors(), Factors{2}) << a.name;
    EXPECT_EQ(coarse.class_of(p.scalar_cocycle), Vec{1}) << a.name;
    EXPECT_EQ(fine.class_of(p.scalar_cocycle), Vec{1}) << a.name;
  }
}

TEST(Amitsur, NonProjectiveInputIsRejected) {
  const FiniteGroup g = abelian_group({2, 2});
  const CycloMatrix x = shift_matrix(2);
  const CycloMatrix d = int_matrix({{1, 0}, {0, 2}});
  EXPECT_THROW(projective_action(g, {x, d}), DomainError);
  EXPECT_THROW(projective_action(g, {x}), ValidationError);
  EXPECT_THROW(projective_action(g, {x, int_matrix({{1, 1}, {1, 1}})}), ValidationError);
}

TEST(Plucker, CollineationsGiveMultiplesOfGamma) {
  for (int n = 2; n <= 4; ++n) {
    const ProjectiveAction h = heisenberg_action(n);
    const SemilinearAction a = as_collineations(h.group, {shift_matrix(n), clock_matrix(n)});
    BrauerContext ctx(h.group);
    const Vec gamma = ctx.class_of(h.scalar_cocycle);
    for (int r = 1; r < n; ++r) {
      const ProjectiveAction pl = plucker_action(a, r);
      EXPECT_EQ(ctx.class_of(pl.scalar_cocycle), times(gamma, r, ctx.h2().invariant_factors())) << n << " " << r;
    }
  }
}

TEST(Plucker, CorrelationMapsPlanesToAnnihilators) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> small(-3, 3);
  auto random_matrix = [&](std::size_t rows, std::size_t cols) {
    std::vector<Vec> m(rows, Vec(cols));
    for (auto& row : m)
      for (auto& x : row) x = small(rng);
    return m;
  };
  for (int trial = 0; trial < 6; ++trial) {
    const int n = trial < 3 ? 4 : 6, r = n / 2;
    std::vector<Vec> phi = random_matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    // Symmetric or skew, so that the correlation squares to a scalar.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) phi[i][j] = trial % 2 ? -phi[j][i] : phi[j][i];
    if (trial % 2)
      for (int i = 0; i < n; ++i) phi[i][i] = 0;
    if (determinant(int_matrix(phi)).is_zero()) continue;
    const SemilinearAction a = single_correlation_action(int_matrix(phi));
    const CycloMatrix pm = plucker_matrix(a, a.group.generators()[0], r);
    for (int plane = 0; plane < 5; ++plane) {
      const std::vector<Vec> s = random_matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(r));
      const CycloMatrix ps = plucker_vector(s, r);
      if (determinant(int_matrix(s).transpose() * int_matrix(s)).is_zero()) continue;
      // Annihilator of phi(S): u with u^T (phi S) = 0.
      const IntMatrix phis = IntMatrix::from_rows(s, static_cast<std::size_t>(r));
      const IntMatrix image = IntMatrix::from_rows(phi, static_cast<std::size_t>(n)) * phis;
      const std::vector<Vec> ann = left_kernel(image).to_rows();
      ASSERT_EQ(ann.size(), static_cast<std::size_t>(n - r));
      const CycloMatrix pw = plucker_vector(columns_to_rows(ann), n - r);
      EXPECT_TRUE((pm * ps).scalar_ratio(pw).has_value()) << "trial " << trial << " plane " << plane;
    }
  }
}

TEST(Plucker, CorrelationClassIsTwoTorsion) {
  for (int n : {2, 4}) {
    const SemilinearAction a = heisenberg_correlation_action(n);
    ASSERT_TRUE(a.has_correlations());
    const ProjectiveAction pl = plucker_action(a, n / 2);
    BrauerContext ctx(a.group);
    const Factors& d = ctx.h2().invariant_factors();
    const Vec beta = ctx.class_of(pl.scalar_cocycle);
    EXPECT_TRUE(is_zero(times(beta, 2, d))) << n;
    // On the collineations, beta restricts to (n/2) gamma.
    const SubgroupGroup sg = subgroup_group(a.group, a.collineations);
    const ProjectiveAction coll = collineation_action(a);
    const CohomologyGroup sub = h2_qz(sg.group, ctx.modulus());
    const Vec gamma = sub.reduce(coll.scalar_cocycle);
    EXPECT_EQ(restrict_class(ctx.h2(), beta, sub, sg), times(gamma, n / 2, sub.invariant_factors())) << n;
  }
}

TEST(Degeneracies, ProjectiveWithoutClassIsLinear) {
  for (const auto& a : linear_action_corpus()) {
    if (a.action.group.order() > 32) continue;
    const BrauerReport lin = br_nr_linear(a.action.group);
    const BrauerReport proj = br_nr_projective(collineation_action(a.action));
    expect_same_report(lin, proj);
  }
}

TEST(Degeneracies, GrassmannianOfLinesIsProjective) {
  for (const auto& a : projective_action_corpus()) {
    const BrauerReport proj = br_nr_projective(collineation_action(a.action));
    expect_same_report(br_nr_grassmannian(a.action, 1), proj);
    expect_same_report(br_nr_flag(a.action, {1}), proj);
  }
}

TEST(Degeneracies, FlagWithOneStepIsGrassmannian) {
  for (int n : {2, 4}) {
    const SemilinearAction a = heisenberg_correlation_action(n);
    expect_same_report(br_nr_flag(a, {n / 2}), br_nr_grassmannian(a, n / 2));
  }
  const ProjectiveAction h = heisenberg_action(4);
  const SemilinearAction a = as_collineations(h.group, {shift_matrix(4), clock_matrix(4)});
  for (int r = 1; r < 4; ++r) expect_same_report(br_nr_flag(a, {r}), br_nr_grassmannian(a, r));
}

TEST(Flags, AmitsurGenerators) {
  const ProjectiveAction h = heisenberg_action(4);
  const SemilinearAction a = as_collineations(h.group, {shift_matrix(4), clock_matrix(4)});
  BrauerContext ctx(h.group);
  const Factors& d = ctx.h2().invariant_factors();
  const Vec gamma = ctx.class_of(h.scalar_cocycle);
  EXPECT_EQ(br_nr_flag(a, {2}).amitsur, std::vector<Vec>{times(gamma, 2, d)});
  EXPECT_EQ(br_nr_flag(a, {1, 2}).amitsur, std::vector<Vec>{gamma});
  EXPECT_EQ(br_nr_flag(a, {2, 3}).amitsur, std::vector<Vec>{gamma});
  EXPECT_EQ(br_nr_flag(a, {2}).stack_group.invariant_factors(), Factors{2});

  const SemilinearAction c = heisenberg_correlation_action(4);
  EXPECT_THROW(br_nr_flag(c, {1, 2}), DomainError);
  EXPECT_THROW(br_nr_flag(c, {2, 1}), DomainError);
  EXPECT_THROW(br_nr_grassmannian(c, 1), DomainError);
  const BrauerReport even = br_nr_flag(c, {1, 3});
  const BrauerReport odd = br_nr_flag(c, {1, 2, 3});
  EXPECT_LE(even.amitsur.size(), 1u);
  EXPECT_LE(odd.amitsur.size(), 2u);
  for (const auto& r : {even, odd})
    EXPECT_LE(r.unramified_group.invariant_factors().size(), r.stack_group.invariant_factors().size());
}

TEST(Bogomolov, VanishesOnSmallCorpusMembers) {
  int checked = 0;
  for (const auto& ng : b0_vanishing_corpus()) {
    const FiniteGroup g = ng.make();
    if (g.order() > 24) continue;
    EXPECT_TRUE(bogomolov_multiplier(g).unramified_group.invariant_factors().empty()) << ng.name;
    ++checked;
  }
  EXPECT_GE(checked, 10);
}

TEST(Bogomolov, AbelianGroupsVanish) {
  for (const Factors& f : {Factors{2, 2, 2}, Factors{2, 4, 4}, Factors{3, 3, 3}, Factors{2, 2, 2, 2}}) {
    const BrauerReport r = bogomolov_multiplier(abelian_group(f));
    EXPECT_FALSE(r.h2.empty());
    EXPECT_TRUE(r.unramified_group.invariant_factors().empty());
  }
}

TEST(Bogomolov, OrderSixtyFourGroup) {
  const FiniteGroup g = b0_order64_group();
  ASSERT_EQ(g.order(), 64u);
  const BrauerReport r = bogomolov_multiplier(g);
  EXPECT_EQ(r.unramified_group.invariant_factors(), Factors{2});
  ASSERT_EQ(r.unramified_witnesses.size(), 1u);
  // Witness re-checked on every bicyclic subgroup, not only conjugacy representatives.
  BrauerContext all(g, 0, false);
  EXPECT_GT(all.subgroups().size(), r.subgroups.size());
  for (std::size_t a = 0; a < all.subgroups().size(); ++a)
    EXPECT_TRUE(is_zero(all.restrict_to(a, r.unramified_witnesses[0])));
  EXPECT_EQ(unramified_report(all, {}, "bogomolov").unramified_group.invariant_factors(), Factors{2});
}

TEST(Bogomolov, DiagnosticsNameDetectingSubgroups) {
  const BrauerReport r = bogomolov_multiplier(dihedral_group(4));
  EXPECT_EQ(r.stack_group.invariant_factors(), Factors{2});
  ASSERT_EQ(r.diagnostics.size(), 1u);
  ASSERT_TRUE(r.diagnostics[0].detected.has_value());
  EXPECT_LT(*r.diagnostics[0].detected, r.subgroups.size());
}

TEST(Toric, FiniteSubgroupsOfGL2) {
  for (const auto& l : gl2z_finite_subgroups()) {
    const BrauerReport r = br_nr_toric(l.module());
    EXPECT_TRUE(r.unramified_group.invariant_factors().empty()) << l.name;
  }
}

TEST(Toric, RootLatticeOfS3) {
  const LatticeExample l = s3_root_lattice();
  const GModule m = l.module();
  const BrauerReport r = br_nr_toric(m);
  // H^2(S3, Q/Z) = 0 and H^2(S3, M) = 0, so the report is empty.
  EXPECT_TRUE(r.h2.empty());
  EXPECT_TRUE(r.stack_group.invariant_factors().empty());
  EXPECT_TRUE(r.unramified_group.invariant_factors().empty());
  // Independently: restriction to Sylow subgroups is injective on H^2(S3, Q/Z + M).
  const FiniteGroup& g = m.group();
  const CohomologyGroup hm = h2(m);
  const CohomologyGroup hq = h2_qz(g);
  std::vector<Subgroup> sylow;
  for (int x = 1; x < static_cast<int>(g.order()); ++x) {
    const int o = g.element_order(x);
    if (o == 2 && sylow.empty()) sylow.push_back(generated_subgroup(g, {x}));
    if (o == 3 && sylow.size() == 1) sylow.push_back(generated_subgroup(g, {x}));
  }
  ASSERT_EQ(sylow.size(), 2u);
  for (std::size_t j = 0; j < hm.invariant_factors().size(); ++j) {
    Vec e(hm.invariant_factors().size(), 0);
    e[j] = 1;
    bool seen = false;
    for (const auto& s : sylow) {
      const SubgroupGroup sg = subgroup_group(g, s);
      seen = seen || !is_zero(restrict_class(hm, e, h2(m.restrict_to(sg)), sg));
    }
    EXPECT_TRUE(seen);
  }
  for (std::size_t j = 0; j < hq.invariant_factors().size(); ++j) {
    Vec e(hq.invariant_factors().size(), 0);
    e[j] = 1;
    bool seen = false;
    for (const auto& s : sylow) {
      const SubgroupGroup sg = subgroup_group(g, s);
      seen = seen || !is_zero(restrict_class(hq, e, h2_qz(sg.group), sg));
    }
    EXPECT_TRUE(seen);
  }
}

TEST(Toric, RejectsUnfaithfulActions) {
  const FiniteGroup g = abelian_group({2, 2});
  const GModule m = GModule::lattice(g, 2, {{{-1, 0}, {0, -1}}, {{1, 0}, {0, 1}}});
  EXPECT_THROW(br_nr_toric(m), DomainError);
  EXPECT_THROW(br_nr_toric(GModule::trivial_qz(g)), DomainError);
}

TEST(Stack, KleinFourOnProjectiveSpace) {
  const FiniteGroup k4 = abelian_group({2, 2});
  EXPECT_EQ(br_stack_fixed_point(k4, GModule::trivial_lattice(k4, 1), true).invariant_factors(), Factors{2});
  EXPECT_THROW(br_stack_fixed_point(k4, GModule::trivial_lattice(k4, 1), false), DomainError);
  const FiniteGroup one = cyclic_group(1);
  EXPECT_TRUE(br_stack_fixed_point(one, GModule::trivial_lattice(one, 1), true).invariant_factors().empty());
}

TEST(Stack, Quotients) {
  const FiniteGroup g = abelian_group({2, 2, 2});
  const CohomologyGroup h = h2_qz(g);
  ASSERT_EQ(h.invariant_factors(), (Factors{2, 2, 2}));
  EXPECT_EQ(br_stack_quotient(h, {}).invariant_factors(), (Factors{2, 2, 2}));
  EXPECT_EQ(br_stack_quotient(h, {{1, 0, 0}}).invariant_factors(), (Factors{2, 2}));
  EXPECT_EQ(br_stack_quotient(h, {{1, 0, 0}, {1, 0, 0}}).invariant_factors(), (Factors{2, 2}));
  EXPECT_THROW(br_stack_quotient(h, {{1, 0}}), DomainError);
}

TEST(Stack, A4RestrictsInjectivelyToKleinFour) {
  const FiniteGroup g = alternating_group(4);
  const CohomologyGroup h = h2_qz(g);
  ASSERT_EQ(h.invariant_factors(), Factors{2});
  for (const auto& s : bicyclic_subgroups(g, false)) {
    if (s.order() != 4) continue;
    const SubgroupGroup sg = subgroup_group(g, s);
    EXPECT_EQ(restrict_class(h, {1}, h2_qz(sg.group, h.modulus()), sg), Vec{1});
  }
}

TEST(Reports, UnramifiedInsideStack) {
  for (const auto& a : projective_action_corpus()) {
    const BrauerReport r = br_nr_projective(collineation_action(a.action));
    const auto& d = r.h2;
    for (const Vec& w : r.unramified_witnesses) {
      // Witnesses restrict to Am on every subgroup, hence are nonzero in the stack only if nonzero there.
      EXPECT_EQ(w.size(), d.size());
      (void)r.stack_group.coordinates(w);
    }
    std::int64_t ord_u = 1, ord_s = 1;
    for (auto x : r.unramified_group.invariant_factors()) ord_u *= x;
    for (auto x : r.stack_group.invariant_factors()) ord_s *= x;
    EXPECT_EQ(ord_s % ord_u, 0) << a.name;
  }
}
