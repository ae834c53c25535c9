#include "brq/brauer.hpp"

#include <numeric>

#include "brq/error.hpp"
#include "brq/parallel.hpp"

namespace brq {

namespace {

std::int64_t entry_conductor(const CycloMatrix& m) {
  std::int64_t l = m.conductor();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) l = std::lcm(l, m(i, j).conductor());
  return l;
}

CycloMatrix normalized(const CycloMatrix& m) { return m.promote(entry_conductor(m)); }

// Projective representation from one lift per element.
ProjectiveAction projective_from_elements(const FiniteGroup& g, std::vector<CycloMatrix> mats) {
  const std::size_t n = g.order();
  ProjectiveAction out;
  out.group = g;
  out.dimension = mats.empty() ? 0 : static_cast<int>(mats[0].rows());
  if (!mats.empty()) {
    if (!mats[0].as_scalar()) throw DomainError("the identity does not act by a scalar");
    mats[0] = CycloMatrix::identity(mats[0].rows());
  }
  std::int64_t l = 2;
  for (auto& m : mats) {
    m = normalized(m);
    l = std::lcm(l, m.conductor());
  }
  for (auto& m : mats) m = m.promote(l);
  out.conductor = l;

  // d(x, s) for every element x and tree generator s.
  const auto& gens = g.tree_gens();
  std::vector<std::int64_t> d(n * gens.size(), 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t si = 0; si < gens.size(); ++si) {
      const int s = gens[si], xs = g.mul(static_cast<int>(x), s);
      auto ratio = (mats[x] * mats[static_cast<std::size_t>(s)]).scalar_ratio(mats[static_cast<std::size_t>(xs)]);
      if (!ratio)
        throw DomainError("projective defect of elements " + std::to_string(x) + " and " + std::to_string(s) +
                          " is not a scalar");
      auto j = ratio->root_of_unity_exponent(l);
      if (!j)
        throw DomainError("projective defect of elements " + std::to_string(x) + " and " + std::to_string(s) +
                          " is not a root of unity in Q(zeta_" + std::to_string(l) + ")");
      d[x * gens.size() + si] = *j;
    }
  auto dd = [&](int x, int si) { return d[static_cast<std::size_t>(x) * gens.size() + static_cast<std::size_t>(si)]; };

  Cochain c = Cochain::zero(2, n, 1, l);
  for (std::size_t a = 0; a < n; ++a) {
    const int ai = static_cast<int>(a);
    for (int x : g.bfs_order()) {
      if (x == 0) continue;
      const int p = g.tree_parent(x), si = g.tree_step(x);
      // M_x = M_p M_s / d(p, s)
      c.at(ai, x, 0) = mod_reduce(c.at(ai, p, 0) + dd(g.mul(ai, p), si) - dd(p, si), l);
    }
  }
  out.matrices = std::move(mats);
  out.scalar_cocycle = std::move(c);
  return out;
}

CycloMatrix transpose_inverse(const CycloMatrix& m) { return matrix_inverse(m).transpose(); }

struct Semilinear {
  bool corr;
  CycloMatrix m;
};

// rho(x) o rho(y): y is applied first.
Semilinear compose(const Semilinear& x, const Semilinear& y) {
  if (!x.corr && !y.corr) return {false, x.m * y.m};
  if (!x.corr && y.corr) return {true, transpose_inverse(x.m) * y.m};
  if (x.corr && !y.corr) return {true, x.m * y.m};
  return {false, transpose_inverse(x.m) * y.m};
}

}  // namespace

ProjectiveAction projective_action(const FiniteGroup& g, const std::vector<CycloMatrix>& generator_matrices) {
  if (generator_matrices.size() != g.generators().size())
    throw ValidationError("expected " + std::to_string(g.generators().size()) + " generator matrices, got " +
                          std::to_string(generator_matrices.size()));
  const std::size_t dim = generator_matrices.empty() ? 1 : generator_matrices[0].rows();
  std::vector<int> first_gen(g.order(), -1);
  for (std::size_t i = 0; i < generator_matrices.size(); ++i) {
    const auto& m = generator_matrices[i];
    if (m.rows() != dim || m.cols() != dim)
      throw ValidationError("generator " + std::to_string(i) + ": matrix must be " + std::to_string(dim) + " x " +
                            std::to_string(dim));
    if (determinant(m).is_zero()) throw ValidationError("generator " + std::to_string(i) + ": matrix is singular");
    auto& f = first_gen[static_cast<std::size_t>(g.generators()[i])];
    if (f < 0) f = static_cast<int>(i);
  }
  std::vector<CycloMatrix> mats(g.order());
  mats[0] = CycloMatrix::identity(dim);
  for (int x : g.bfs_order()) {
    if (x == 0) continue;
    const int p = g.tree_parent(x), s = g.tree_gens()[static_cast<std::size_t>(g.tree_step(x))];
    mats[static_cast<std::size_t>(x)] =
        mats[static_cast<std::size_t>(p)] * generator_matrices[static_cast<std::size_t>(first_gen[static_cast<std::size_t>(s)])];
  }
  // Repeated generators and the identity must agree projectively.
  for (std::size_t i = 0; i < generator_matrices.size(); ++i)
    if (!generator_matrices[i].scalar_ratio(mats[static_cast<std::size_t>(g.generators()[i])]))
      throw DomainError("generator " + std::to_string(i) + ": matrix is not projectively consistent");
  return projective_from_elements(g, std::move(mats));
}

SemilinearAction semilinear_action(const FiniteGroup& g, const std::vector<CycloMatrix>& generator_matrices,
                                   const std::vector<bool>& generator_is_correlation) {
  const std::size_t ng = g.generators().size();
  if (generator_matrices.size() != ng || generator_is_correlation.size() != ng)
    throw ValidationError("expected " + std::to_string(ng) + " generator matrices");
  SemilinearAction a;
  a.group = g;
  a.generator_matrices = generator_matrices;
  a.generator_is_correlation = generator_is_correlation;
  const std::size_t dim = ng == 0 ? 1 : generator_matrices[0].rows();
  a.dimension = static_cast<int>(dim);
  std::vector<int> first_gen(g.order(), -1);
  for (std::size_t i = 0; i < ng; ++i) {
    const auto& m = generator_matrices[i];
    if (m.rows() != dim || m.cols() != dim)
      throw ValidationError("generator " + std::to_string(i) + ": matrix must be " + std::to_string(dim) + " x " +
                            std::to_string(dim));
    if (determinant(m).is_zero()) throw ValidationError("generator " + std::to_string(i) + ": matrix is singular");
    auto& f = first_gen[static_cast<std::size_t>(g.generators()[i])];
    if (f < 0) f = static_cast<int>(i);
  }
  std::vector<Semilinear> rho(g.order(), Semilinear{false, CycloMatrix::identity(dim)});
  auto gen_rho = [&](std::size_t i) { return Semilinear{generator_is_correlation[i], normalized(generator_matrices[i])}; };
  for (int x : g.bfs_order()) {
    if (x == 0) continue;
    const int p = g.tree_parent(x), s = g.tree_gens()[static_cast<std::size_t>(g.tree_step(x))];
    rho[static_cast<std::size_t>(x)] =
        compose(rho[static_cast<std::size_t>(p)], gen_rho(static_cast<std::size_t>(first_gen[static_cast<std::size_t>(s)])));
  }
  for (std::size_t i = 0; i < ng; ++i) {
    const auto& r = rho[static_cast<std::size_t>(g.generators()[i])];
    if (r.corr != generator_is_correlation[i] || !generator_matrices[i].scalar_ratio(r.m))
      throw DomainError("generator " + std::to_string(i) + ": matrix is not projectively consistent");
  }
  for (std::size_t x = 0; x < g.order(); ++x)
    for (int s : g.tree_gens()) {
      const Semilinear prod = compose(rho[x], rho[static_cast<std::size_t>(s)]);
      const auto& target = rho[static_cast<std::size_t>(g.mul(static_cast<int>(x), s))];
      if (prod.corr != target.corr)
        throw DomainError("correlations do not form a coset of an index-2 subgroup (elements " + std::to_string(x) +
                          ", " + std::to_string(s) + ")");
      if (!prod.m.scalar_ratio(target.m))
        throw DomainError("matrices do not define a projective action (elements " + std::to_string(x) + ", " +
                          std::to_string(s) + ")");
    }
  std::vector<int> colls;
  for (std::size_t x = 0; x < g.order(); ++x) {
    a.is_correlation.push_back(rho[x].corr);
    a.matrices.push_back(rho[x].m);
    if (!rho[x].corr) colls.push_back(static_cast<int>(x));
  }
  a.collineations = generated_subgroup(g, colls);
  return a;
}

CycloMatrix plucker_matrix(const SemilinearAction& a, int element, int r) {
  const auto x = static_cast<std::size_t>(element);
  CycloMatrix w = exterior_power(a.matrices[x], r);
  if (!a.is_correlation[x]) return w;
  return CycloMatrix::from_int(hodge_star(a.dimension, r)) * w;
}

ProjectiveAction plucker_action(const SemilinearAction& a, int r) {
  if (r < 1 || r >= a.dimension)
    throw DomainError("Plücker embedding needs 1 <= r <= n - 1 (r = " + std::to_string(r) +
                      ", n = " + std::to_string(a.dimension) + ")");
  if (a.has_correlations() && 2 * r != a.dimension)
    throw DomainError("correlations act on Gr(r, n) only for n = 2r (r = " + std::to_string(r) +
                      ", n = " + std::to_string(a.dimension) + ")");
  std::vector<CycloMatrix> mats;
  for (std::size_t x = 0; x < a.group.order(); ++x) mats.push_back(plucker_matrix(a, static_cast<int>(x), r));
  return projective_from_elements(a.group, std::move(mats));
}

ProjectiveAction collineation_action(const SemilinearAction& a) {
  if (!a.has_correlations()) return projective_from_elements(a.group, a.matrices);
  SubgroupGroup sg = subgroup_group(a.group, a.collineations);
  std::vector<CycloMatrix> mats;
  for (int x : sg.embedding) mats.push_back(a.matrices[static_cast<std::size_t>(x)]);
  return projective_from_elements(sg.group, std::move(mats));
}

CycloMatrix kronecker(const CycloMatrix& a, const CycloMatrix& b) {
  CycloMatrix out(a.rows() * b.rows(), a.cols() * b.cols(), std::lcm(entry_conductor(a), entry_conductor(b)));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return normalized(out);
}


// ---------------------------------------------------------------------------
// Restriction data

BrauerContext::BrauerContext(const FiniteGroup& g, std::int64_t modulus, bool up_to_conjugacy, const Limits& limits)
    : group_(g), limits_(limits), h2_(h2_qz(g, modulus, limits)), subgroups_(bicyclic_subgroups(g, up_to_conjugacy)) {
  const std::size_t count = subgroups_.size(), k = h2_.invariant_factors().size();
  sub_groups_.resize(count);
  sub_h2_.resize(count);
  restricted_generators_.resize(count);
  parallel_for(count, [&](std::size_t i) {
    sub_groups_[i] = subgroup_group(g, subgroups_[i]);
    sub_h2_[i] = h2_qz(sub_groups_[i].group, h2_.modulus(), limits);
    for (std::size_t j = 0; j < k; ++j) {
      Vec e(k, 0);
      e[j] = 1;
      restricted_generators_[i].push_back(restrict_class(h2_, e, sub_h2_[i], sub_groups_[i]));
    }
  });
}

Vec BrauerContext::class_of(const Cochain& c) const {
  if (c.modulus > 0 && modulus() % c.modulus == 0) return h2_.reduce(c);
  // Read the class in a finer realization, then write it on our generators.
  const CohomologyGroup fine = h2_qz(group_, std::lcm(modulus(), c.modulus), limits_);
  const auto& d = fine.invariant_factors();
  const auto& ours = h2_.invariant_factors();
  IntMatrix m(d.size(), ours.size() + d.size());
  for (std::size_t j = 0; j < ours.size(); ++j) {
    Vec e(ours.size(), 0);
    e[j] = 1;
    const Vec img = fine.reduce(h2_.cocycle_of(e));
    for (std::size_t i = 0; i < d.size(); ++i) m(i, j) = img[i];
  }
  for (std::size_t i = 0; i < d.size(); ++i) m(i, ours.size() + i) = d[i];
  const Vec target = fine.reduce(c);
  const auto x = solve_int(m, std::vector<mpz_class>(target.begin(), target.end()));
  if (!x) throw DomainError("class could not be transported between realizations");
  Vec out(ours.size());
  for (std::size_t j = 0; j < ours.size(); ++j) {
    mpz_class r = (*x)[j] % ours[j];
    if (r < 0) r += ours[j];
    out[j] = r.get_si();
  }
  return out;
}

Vec BrauerContext::restrict_to(std::size_t subgroup, const Vec& coords) const {
  const auto& inv = sub_h2_[subgroup].invariant_factors();
  Vec out(inv.size(), 0);
  for (std::size_t j = 0; j < coords.size(); ++j)
    for (std::size_t i = 0; i < inv.size(); ++i)
      out[i] = mod_reduce(out[i] + mod_mul(coords[j], restricted_generators_[subgroup][j][i], inv[i]), inv[i]);
  return out;
}

namespace {

// Kernel of Z^k/(diag d + am) -> sum_A Z^{k_A}/(diag d_A + rel_A) given the
// images of the standard generators.
struct KernelProblem {
  std::vector<std::int64_t> d;
  std::vector<Vec> am;
  std::vector<std::vector<std::int64_t>> target_d;
  std::vector<std::vector<Vec>> target_rel;
  std::vector<std::vector<Vec>> images;  // images[A][j]
};

std::vector<Vec> diagonal_rows(const std::vector<std::int64_t>& d) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < d.size(); ++i) {
    Vec r(d.size(), 0);
    r[i] = d[i];
    rows.push_back(std::move(r));
  }
  return rows;
}

struct KernelResult {
  AbelianStructure stack;
  AbelianStructure kernel;
  std::vector<Vec> kernel_witnesses;
  std::vector<ClassDiagnostic> diagnostics;
};

KernelResult solve_kernel(const KernelProblem& p) {
  const std::size_t k = p.d.size();
  std::vector<Vec> source_rel = diagonal_rows(p.d);
  for (const auto& a : p.am) source_rel.push_back(a);
  std::vector<Vec> all(k, Vec(k, 0));
  for (std::size_t i = 0; i < k; ++i) all[i][i] = 1;

  KernelResult out;
  out.stack = subquotient_structure(k, 0, all, source_rel);

  std::vector<std::size_t> offset{0};
  for (const auto& td : p.target_d) offset.push_back(offset.back() + td.size());
  const std::size_t cols = offset.back();
  std::vector<Vec> kernel_x;
  if (cols == 0 || k == 0) {
    kernel_x = all;
  } else {
    std::vector<Vec> rows;
    for (std::size_t j = 0; j < k; ++j) {
      Vec r(cols, 0);
      for (std::size_t a = 0; a < p.images.size(); ++a)
        for (std::size_t i = 0; i < p.target_d[a].size(); ++i) r[offset[a] + i] = p.images[a][j][i];
      rows.push_back(std::move(r));
    }
    for (std::size_t a = 0; a < p.target_d.size(); ++a) {
      std::vector<Vec> rel = diagonal_rows(p.target_d[a]);
      for (const auto& r : p.target_rel[a]) rel.push_back(r);
      for (const auto& r : rel) {
        Vec full(cols, 0);
        for (std::size_t i = 0; i < r.size(); ++i) full[offset[a] + i] = r[i];
        rows.push_back(std::move(full));
      }
    }
    for (const Vec& v : left_kernel(IntMatrix::from_rows(rows, cols)).to_rows())
      kernel_x.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
  }
  for (const auto& r : source_rel) kernel_x.push_back(r);
  out.kernel = subquotient_structure(k, 0, kernel_x, source_rel);
  for (Vec w : out.kernel.witnesses()) {
    for (std::size_t i = 0; i < k; ++i) w[i] = mod_reduce(w[i], p.d[i]);
    out.kernel_witnesses.push_back(std::move(w));
  }

  // First subgroup on which each stack generator survives.
  std::vector<AbelianStructure> targets;
  for (std::size_t a = 0; a < p.target_d.size(); ++a) {
    std::vector<Vec> rel = diagonal_rows(p.target_d[a]);
    for (const auto& r : p.target_rel[a]) rel.push_back(r);
    targets.push_back(quotient_structure(p.target_d[a].size(), rel));
  }
  for (Vec w : out.stack.witnesses()) {
    for (std::size_t i = 0; i < k; ++i) w[i] = mod_reduce(w[i], p.d[i]);
    ClassDiagnostic diag{w, std::nullopt};
    for (std::size_t a = 0; a < targets.size() && !diag.detected; ++a) {
      Vec img(p.target_d[a].size(), 0);
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < img.size(); ++i) img[i] += w[j] * p.images[a][j][i];
      Vec c = targets[a].coordinates(img);
      if (std::any_of(c.begin(), c.end(), [](std::int64_t x) { return x != 0; })) diag.detected = a;
    }
    out.diagnostics.push_back(std::move(diag));
  }
  return out;
}

std::vector<Vec> clean_generators(const std::vector<std::int64_t>& d, const std::vector<Vec>& gens) {
  std::vector<Vec> out;
  for (Vec g : gens) {
    bool zero = true;
    for (std::size_t i = 0; i < d.size(); ++i) {
      g[i] = mod_reduce(g[i], d[i]);
      zero = zero && g[i] == 0;
    }
    if (!zero && std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
  }
  return out;
}

BrauerReport make_report(const std::string& kind, std::int64_t modulus, const std::vector<std::int64_t>& h2,
                         const std::vector<Vec>& am, const std::vector<Subgroup>& subgroups, KernelResult r) {
  BrauerReport rep;
  rep.kind = kind;
  rep.modulus = modulus;
  rep.h2 = h2;
  rep.amitsur = am;
  rep.stack_group = std::move(r.stack);
  rep.unramified_group = std::move(r.kernel);
  rep.unramified_witnesses = std::move(r.kernel_witnesses);
  rep.subgroups = subgroups;
  rep.diagnostics = std::move(r.diagnostics);
  return rep;
}

Vec scale(const Vec& v, std::int64_t s) {
  Vec out = v;
  for (auto& x : out) x *= s;
  return out;
}

}  // namespace

BrauerReport unramified_report(const BrauerContext& ctx, const std::vector<Vec>& am_in, const std::string& kind) {
  const auto& d = ctx.h2().invariant_factors();
  const std::vector<Vec> am = clean_generators(d, am_in);
  KernelProblem p;
  p.d = d;
  p.am = am;
  const std::size_t k = d.size();
  for (std::size_t a = 0; a < ctx.subgroups().size(); ++a) {
    p.target_d.push_back(ctx.subgroup_h2(a).invariant_factors());
    std::vector<Vec> rel;
    for (const auto& g : am) rel.push_back(ctx.restrict_to(a, g));
    p.target_rel.push_back(std::move(rel));
    std::vector<Vec> imgs;
    for (std::size_t j = 0; j < k; ++j) {
      Vec e(k, 0);
      e[j] = 1;
      imgs.push_back(ctx.restrict_to(a, e));
    }
    p.images.push_back(std::move(imgs));
  }
  return make_report(kind, ctx.modulus(), d, am, ctx.subgroups(), solve_kernel(p));
}

BrauerReport bogomolov_multiplier(const FiniteGroup& g, const Limits& limits) {
  return unramified_report(BrauerContext(g, 0, true, limits), {}, "bogomolov");
}

BrauerReport br_nr_linear(const FiniteGroup& g, const Limits& limits) {
  return unramified_report(BrauerContext(g, 0, true, limits), {}, "linear");
}

BrauerReport br_nr_projective(const ProjectiveAction& a, const Limits& limits) {
  BrauerContext ctx(a.group, 0, true, limits);
  return unramified_report(ctx, {ctx.class_of(a.scalar_cocycle)}, "projective");
}

BrauerReport br_nr_grassmannian(const SemilinearAction& a, int r, const Limits& limits) {
  if (r < 1 || r >= a.dimension)
    throw DomainError("Grassmannian needs 1 <= r <= n - 1 (r = " + std::to_string(r) + ", n = " +
                      std::to_string(a.dimension) + ")");
  if (!a.has_correlations()) {
    ProjectiveAction p = collineation_action(a);
    BrauerContext ctx(a.group, 0, true, limits);
    return unramified_report(ctx, {scale(ctx.class_of(p.scalar_cocycle), r)}, "grassmannian");
  }
  ProjectiveAction pl = plucker_action(a, r);
  BrauerContext ctx(a.group, 0, true, limits);
  return unramified_report(ctx, {ctx.class_of(pl.scalar_cocycle)}, "grassmannian");
}

BrauerReport br_nr_flag(const SemilinearAction& a, const std::vector<int>& r_list, const Limits& limits) {
  const int n = a.dimension;
  const std::size_t m = r_list.size();
  if (m == 0) throw DomainError("flag variety needs at least one dimension");
  for (std::size_t i = 0; i < m; ++i) {
    if (r_list[i] < 1 || r_list[i] >= n)
      throw DomainError("flag dimensions must lie in [1, " + std::to_string(n - 1) + "]");
    if (i > 0 && r_list[i] <= r_list[i - 1]) throw DomainError("flag dimensions must be strictly increasing");
  }
  if (!a.has_correlations()) {
    int q = 0;
    for (int r : r_list) q = std::gcd(q, r);
    ProjectiveAction p = collineation_action(a);
    BrauerContext ctx(a.group, 0, true, limits);
    return unramified_report(ctx, {scale(ctx.class_of(p.scalar_cocycle), q)}, "flag");
  }
  for (std::size_t i = 0; i < m; ++i)
    if (r_list[i] + r_list[m - 1 - i] != n)
      throw DomainError("correlations need symmetric flag dimensions (r_i + r_{m+1-i} = n)");
  int q = 0;
  for (std::size_t i = 0; i < m / 2; ++i) q = std::gcd(q, r_list[i]);
  ProjectiveAction coll = collineation_action(a);
  std::optional<ProjectiveAction> pl;
  if (m % 2 == 1) pl = plucker_action(a, n / 2);
  BrauerContext ctx(a.group, 0, true, limits);
  std::vector<Vec> am;
  if (pl) am.push_back(ctx.class_of(pl->scalar_cocycle));
  Cochain qgamma = coll.scalar_cocycle;
  for (auto& v : qgamma.values) v = mod_reduce(v * q, qgamma.modulus);
  am.push_back(ctx.class_of(corestrict_cochain(a.group, subgroup_group(a.group, a.collineations), qgamma)));
  return unramified_report(ctx, am, "flag");
}

BrauerReport br_nr_toric(const GModule& lattice, const Limits& limits) {
  if (lattice.kind() != GModule::Kind::lattice) throw DomainError("toric action needs a lattice module");
  const FiniteGroup& g = lattice.group();
  for (std::size_t x = 1; x < g.order(); ++x) {
    bool identity = true;
    const auto& m = lattice.matrix(static_cast<int>(x));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) identity = identity && m[i][j] == (i == j ? 1 : 0);
    if (identity) throw DomainError("toric action is not faithful: element " + std::to_string(x) + " acts trivially");
  }
  BrauerContext ctx(g, 0, true, limits);
  CohomologyGroup hm = h2(lattice, 0, limits);
  const auto& dq = ctx.h2().invariant_factors();
  const auto& dm = hm.invariant_factors();
  const std::size_t kq = dq.size(), km = dm.size();
  KernelProblem p;
  p.d = dq;
  p.d.insert(p.d.end(), dm.begin(), dm.end());
  const std::size_t count = ctx.subgroups().size();
  std::vector<CohomologyGroup> sub_m(count);
  std::vector<std::vector<Vec>> sub_images(count);
  parallel_for(count, [&](std::size_t a) {
    SubgroupGroup sg = subgroup_group(g, ctx.subgroups()[a]);
    sub_m[a] = h2(lattice.restrict_to(sg), 0, limits);
    for (std::size_t j = 0; j < km; ++j) {
      Vec e(km, 0);
      e[j] = 1;
      sub_images[a].push_back(restrict_class(hm, e, sub_m[a], sg));
    }
  });
  for (std::size_t a = 0; a < count; ++a) {
    const auto& tq = ctx.subgroup_h2(a).invariant_factors();
    const auto& tm = sub_m[a].invariant_factors();
    std::vector<std::int64_t> td = tq;
    td.insert(td.end(), tm.begin(), tm.end());
    p.target_d.push_back(td);
    p.target_rel.emplace_back();
    std::vector<Vec> imgs;
    for (std::size_t j = 0; j < kq; ++j) {
      Vec e(kq, 0);
      e[j] = 1;
      Vec r = ctx.restrict_to(a, e);
      r.resize(td.size(), 0);
      imgs.push_back(std::move(r));
    }
    for (std::size_t j = 0; j < km; ++j) {
      Vec r(tq.size(), 0);
      r.insert(r.end(), sub_images[a][j].begin(), sub_images[a][j].end());
      imgs.push_back(std::move(r));
    }
    p.images.push_back(std::move(imgs));
  }
  return make_report("toric", ctx.modulus(), p.d, {}, ctx.subgroups(), solve_kernel(p));
}

AbelianStructure br_stack_quotient(const CohomologyGroup& h2g, const std::vector<Vec>& am_generators) {
  const auto& d = h2g.invariant_factors();
  std::vector<Vec> all(d.size(), Vec(d.size(), 0));
  for (std::size_t i = 0; i < d.size(); ++i) all[i][i] = 1;
  std::vector<Vec> rel = diagonal_rows(d);
  for (const auto& g : am_generators) {
    if (g.size() != d.size()) throw DomainError("Amitsur generator has the wrong number of coordinates");
    rel.push_back(g);
  }
  return subquotient_structure(d.size(), 0, all, rel);
}

AbelianStructure br_stack_fixed_point(const FiniteGroup& g, const GModule& pic, bool has_fixed_point,
                                      const Limits& limits) {
  if (!has_fixed_point)
    throw DomainError("unsupported case: the stack Brauer group is only computed when a G-fixed point is asserted");
  if (pic.kind() != GModule::Kind::lattice) throw DomainError("the Picard module must be a lattice");
  if (!(pic.group() == g)) throw DomainError("the Picard lattice is a module over a different group");
  std::vector<std::int64_t> d = h2_qz(g, 0, limits).invariant_factors();
  const auto h = h1(pic, 0, limits).invariant_factors();
  d.insert(d.end(), h.begin(), h.end());
  return quotient_structure(d.size(), diagonal_rows(d));
}

}  // namespace brq
