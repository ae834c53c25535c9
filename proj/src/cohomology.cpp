#include "brq/cohomology.hpp"

#include <algorithm>
#include <map>

#include "brq/error.hpp"

namespace brq {

namespace {

using Mat = std::vector<Vec>;  // square, rows

Mat identity_mat(std::size_t k) {
  Mat m(k, Vec(k, 0));
  for (std::size_t i = 0; i < k; ++i) m[i][i] = 1;
  return m;
}

// a * b with row i of the result reduced by reduce(i, .).
template <class Reduce>
Mat mat_mul(const Mat& a, const Mat& b, Reduce reduce) {
  const std::size_t k = a.size();
  Mat c(k, Vec(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) c[i][j] = reduce(i, c[i][j] + a[i][l] * b[l][j]);
    }
  return c;
}

Vec mat_vec(const Mat& a, const Vec& v, std::int64_t modulus) {
  Vec out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (modulus) s = mod_reduce(s + mod_mul(a[i][j], v[j], modulus), modulus);
      else s += a[i][j] * v[j];
    }
    out[i] = s;
  }
  return out;
}

bool unimodular(const Mat& a) {
  const std::size_t k = a.size();
  if (k == 0) return true;
  HermiteForm h = hermite_form(IntMatrix::from_rows(a, k));
  if (h.pivots.size() != k) return false;
  mpz_class d = 1;
  for (std::size_t i = 0; i < k; ++i) d *= h.H(i, h.pivots[i]);
  return abs(d) == 1;
}

}  // namespace

Cochain Cochain::zero(int degree, std::size_t n, std::size_t k, std::int64_t modulus) {
  Cochain c;
  c.degree = degree;
  c.n = n;
  c.k = k;
  c.modulus = modulus;
  c.values.assign((degree == 1 ? n : n * n) * k, 0);
  return c;
}

// ---------------------------------------------------------------------------
// Modules

GModule GModule::trivial_qz(const FiniteGroup& g) {
  GModule m;
  m.kind_ = Kind::trivial_qz;
  m.group_ = std::make_shared<const FiniteGroup>(g);
  m.rank_ = 1;
  m.matrices_.assign(g.order(), identity_mat(1));
  return m;
}

GModule GModule::finite(const FiniteGroup& g, std::vector<std::int64_t> factors,
                        const std::vector<std::vector<Vec>>& generator_action) {
  GModule m;
  m.kind_ = Kind::finite;
  m.group_ = std::make_shared<const FiniteGroup>(g);
  m.rank_ = factors.size();
  m.modulus_ = 1;
  for (auto d : factors) {
    if (d < 1) throw DomainError("module factors must be positive");
    m.modulus_ = lcm64(m.modulus_, d);
  }
  m.factors_ = std::move(factors);
  m.extend(generator_action);
  return m;
}

GModule GModule::lattice(const FiniteGroup& g, std::size_t rank, const std::vector<std::vector<Vec>>& generator_action) {
  GModule m;
  m.kind_ = Kind::lattice;
  m.group_ = std::make_shared<const FiniteGroup>(g);
  m.rank_ = rank;
  m.extend(generator_action);
  return m;
}

GModule GModule::trivial_finite(const FiniteGroup& g, std::int64_t n) {
  return finite(g, {n}, std::vector<std::vector<Vec>>(g.generators().size(), identity_mat(1)));
}

GModule GModule::trivial_lattice(const FiniteGroup& g, std::size_t rank) {
  return lattice(g, rank, std::vector<std::vector<Vec>>(g.generators().size(), identity_mat(rank)));
}

void GModule::extend(const std::vector<std::vector<Vec>>& generator_action) {
  const FiniteGroup& g = *group_;
  const std::size_t n = g.order(), k = rank_;
  const bool fin = kind_ == Kind::finite;
  if (generator_action.size() != g.generators().size())
    throw ValidationError("expected " + std::to_string(g.generators().size()) + " generator matrices, got " +
                          std::to_string(generator_action.size()));
  auto reduce_orig = [&](std::size_t i, std::int64_t x) { return fin ? mod_reduce(x, factors_[i]) : x; };

  std::map<int, Mat> by_element;
  for (std::size_t i = 0; i < generator_action.size(); ++i) {
    Mat a = generator_action[i];
    const std::string name = "generator " + std::to_string(i);
    if (a.size() != k) throw ValidationError(name + ": matrix must be " + std::to_string(k) + " x " + std::to_string(k));
    for (std::size_t r = 0; r < k; ++r) {
      if (a[r].size() != k)
        throw ValidationError(name + ": matrix must be " + std::to_string(k) + " x " + std::to_string(k));
      for (std::size_t c = 0; c < k; ++c) {
        if (fin && mod_reduce(a[r][c] * factors_[c], factors_[r]) != 0)
          throw ValidationError(name + ": entry (" + std::to_string(r) + ", " + std::to_string(c) +
                                ") is not compatible with the module factors");
        a[r][c] = reduce_orig(r, a[r][c]);
      }
    }
    if (!fin && !unimodular(a)) throw ValidationError(name + ": matrix is not invertible over Z");
    const int el = g.generators()[i];
    auto [it, fresh] = by_element.emplace(el, a);
    if (!fresh && it->second != a) throw ValidationError(name + ": conflicting matrices for the same element");
    if (el == 0 && a != identity_mat(k)) throw ValidationError(name + ": the identity must act trivially");
  }

  matrices_.assign(n, Mat{});
  matrices_[0] = identity_mat(k);
  for (int x : g.bfs_order()) {
    if (x == 0) continue;
    const int p = g.tree_parent(x), s = g.tree_gens()[static_cast<std::size_t>(g.tree_step(x))];
    matrices_[static_cast<std::size_t>(x)] =
        mat_mul(matrices_[static_cast<std::size_t>(p)], by_element.at(s), reduce_orig);
  }
  // Homomorphism check on all products x * s.
  for (std::size_t x = 0; x < n; ++x)
    for (const auto& [s, a] : by_element) {
      const int xs = g.mul(static_cast<int>(x), s);
      if (mat_mul(matrices_[x], a, reduce_orig) != matrices_[static_cast<std::size_t>(xs)]) {
        std::size_t gi = 0;
        while (g.generators()[gi] != s) ++gi;
        throw ValidationError("generator " + std::to_string(gi) +
                              ": the matrices do not define an action of the group");
      }
    }

  if (fin) {
    storage_.assign(n, Mat(k, Vec(k, 0)));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          storage_[x][i][j] = mod_reduce(matrices_[x][i][j] * factors_[j] / factors_[i], modulus_);
  }
}

Vec GModule::act(int g, const Vec& m) const {
  switch (kind_) {
    case Kind::trivial_qz:
      return m;
    case Kind::finite:
      return mat_vec(storage_[static_cast<std::size_t>(g)], m, modulus_);
    case Kind::lattice:
      return mat_vec(matrices_[static_cast<std::size_t>(g)], m, 0);
  }
  return m;
}

bool GModule::trivial_action() const {
  const Mat id = identity_mat(rank_);
  return std::all_of(matrices_.begin(), matrices_.end(), [&](const Mat& a) { return a == id; });
}

bool GModule::faithful() const {
  const Mat id = identity_mat(rank_);
  for (std::size_t x = 1; x < matrices_.size(); ++x)
    if (matrices_[x] == id) return false;
  return true;
}

GModule GModule::restrict_to(const SubgroupGroup& s) const {
  std::vector<std::vector<Vec>> gens;
  for (int h : s.group.generators()) gens.push_back(matrices_[static_cast<std::size_t>(s.embedding[static_cast<std::size_t>(h)])]);
  switch (kind_) {
    case Kind::trivial_qz:
      return trivial_qz(s.group);
    case Kind::finite:
      return finite(s.group, factors_, gens);
    case Kind::lattice:
      return lattice(s.group, rank_, gens);
  }
  return trivial_qz(s.group);
}


// ---------------------------------------------------------------------------
// Tree-gauge parametrization
//
// A normalized 2-cocycle is cohomologous to a unique-up-to-residual-gauge one
// vanishing on the edges of the spanning tree, and is then determined by its
// values c(g, s) on the remaining edges (g != e, s a tree generator).

namespace {

struct Tree {
  const FiniteGroup* g;
  std::size_t n, t;
  std::vector<int> slot;  // g * t + s -> slot or -1
  std::vector<std::pair<int, int>> slots;

  explicit Tree(const FiniteGroup& grp) : g(&grp), n(grp.order()), t(grp.tree_gens().size()), slot(n * t, -1) {
    for (std::size_t x = 1; x < n; ++x)
      for (std::size_t si = 0; si < t; ++si)
        if (!tree_edge(static_cast<int>(x), static_cast<int>(si))) {
          slot[x * t + si] = static_cast<int>(slots.size());
          slots.emplace_back(static_cast<int>(x), static_cast<int>(si));
        }
  }
  int gen(int si) const { return g->tree_gens()[static_cast<std::size_t>(si)]; }
  bool tree_edge(int h, int si) const {
    const int x = g->mul(h, gen(si));
    return x != 0 && g->tree_parent(x) == h && g->tree_step(x) == si;
  }
  int slot_of(int h, int si) const {
    return h == 0 ? -1 : slot[static_cast<std::size_t>(h) * t + static_cast<std::size_t>(si)];
  }
};

// Coefficients realized in (Z/N)^k, with module elements the span of scale_j e_j.
struct Coeffs {
  const GModule* m;
  std::int64_t N;
  std::size_t k;
  Vec scale;
  std::vector<Mat> cols;  // cols[g][j] = g . e_j

  Coeffs(const GModule& mod, std::int64_t modulus) : m(&mod), N(modulus), k(mod.rank()) {
    scale.assign(k, 1);
    if (mod.kind() == GModule::Kind::finite)
      for (std::size_t j = 0; j < k; ++j) scale[j] = N / mod.factors()[j];
    const std::size_t n = mod.group().order();
    cols.assign(n, Mat(k));
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t j = 0; j < k; ++j) {
        Vec e(k, 0);
        e[j] = 1;
        cols[g][j] = act(static_cast<int>(g), e);
      }
  }
  Vec act(int g, const Vec& v) const {
    Vec r = m->act(g, v);
    for (auto& x : r) x = mod_reduce(x, N);
    return r;
  }
  std::int64_t entry(int g, std::size_t i, std::size_t j) const { return cols[static_cast<std::size_t>(g)][j][i]; }
  void add(Vec& a, const Vec& b, std::int64_t sign = 1) const {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = mod_reduce(a[i] + sign * b[i], N);
  }
};

void check_order(const FiniteGroup& g, std::size_t limit, const std::string& what, std::size_t unknowns) {
  if (g.order() > limit)
    throw SizeLimitError(what + " over a group of order " + std::to_string(g.order()) + " needs " +
                         std::to_string(unknowns) + " unknowns; the limit is order " + std::to_string(limit));
}

// f(x) for a 1-cocycle given on tree generators: f(p s) = f(p) + p.f(s).
std::vector<Vec> expand_h1(const Coeffs& c, const Tree& tr, const std::vector<Vec>& on_gens) {
  std::vector<Vec> f(tr.n, Vec(c.k, 0));
  for (int x : tr.g->bfs_order()) {
    if (x == 0) continue;
    const int p = tr.g->tree_parent(x), si = tr.g->tree_step(x);
    f[static_cast<std::size_t>(x)] = f[static_cast<std::size_t>(p)];
    c.add(f[static_cast<std::size_t>(x)], c.act(p, on_gens[static_cast<std::size_t>(si)]));
  }
  return f;
}

struct H1Data {
  std::vector<Vec> z;  // cocycles, by values on tree generators
  std::vector<Vec> b;  // coboundaries
};

H1Data finite_h1_data(const Coeffs& c, const Tree& tr) {
  const std::size_t k = c.k, t = tr.t, u_count = t * k;
  // f_u(x) for the unknown u = (si, j) set to e_j on generator si.
  std::vector<std::vector<Vec>> fu(u_count);
  for (std::size_t si = 0; si < t; ++si)
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Vec> gens(t, Vec(k, 0));
      gens[si][j] = 1;
      fu[si * k + j] = expand_h1(c, tr, gens);
    }
  HowellBasis cons(c.N, u_count);
  for (std::size_t h = 0; h < tr.n; ++h)
    for (std::size_t si = 0; si < t; ++si) {
      if (tr.tree_edge(static_cast<int>(h), static_cast<int>(si))) continue;
      const std::size_t hs = static_cast<std::size_t>(tr.g->mul(static_cast<int>(h), tr.gen(static_cast<int>(si))));
      for (std::size_t i = 0; i < k; ++i) {
        Vec row(u_count, 0);
        for (std::size_t u = 0; u < u_count; ++u) {
          std::int64_t v = fu[u][hs][i] - fu[u][h][i];
          if (u / k == si) v -= c.entry(static_cast<int>(h), i, u % k);
          row[u] = mod_reduce(mod_mul(mod_reduce(v, c.N), c.scale[u % k], c.N), c.N);
        }
        cons.insert(std::move(row));
      }
    }
  H1Data out;
  for (Vec z : annihilator(cons)) {
    for (std::size_t u = 0; u < u_count; ++u) z[u] = mod_mul(z[u], c.scale[u % k], c.N);
    out.z.push_back(std::move(z));
  }
  for (std::size_t j = 0; j < k; ++j) {
    Vec m(k, 0);
    m[j] = c.scale[j] % c.N;
    Vec row(u_count, 0);
    for (std::size_t si = 0; si < t; ++si) {
      Vec d = c.act(tr.gen(static_cast<int>(si)), m);
      c.add(d, m, -1);
      for (std::size_t i = 0; i < k; ++i) row[si * k + i] = d[i];
    }
    out.b.push_back(std::move(row));
  }
  return out;
}

Vec flatten_gens(const Tree& tr, const Cochain& f) {
  Vec y(tr.t * f.k);
  for (std::size_t si = 0; si < tr.t; ++si)
    for (std::size_t i = 0; i < f.k; ++i) y[si * f.k + i] = f.at(tr.gen(static_cast<int>(si)), static_cast<int>(i));
  return y;
}

Cochain h1_cochain(const Coeffs& c, const Tree& tr, const Vec& y) {
  std::vector<Vec> gens(tr.t, Vec(c.k));
  for (std::size_t si = 0; si < tr.t; ++si)
    for (std::size_t i = 0; i < c.k; ++i) gens[si][i] = y[si * c.k + i];
  auto f = expand_h1(c, tr, gens);
  Cochain out = Cochain::zero(1, tr.n, c.k, c.N);
  for (std::size_t x = 0; x < tr.n; ++x)
    for (std::size_t i = 0; i < c.k; ++i) out.at(static_cast<int>(x), static_cast<int>(i)) = f[x][i];
  return out;
}

// Gauge-fixed coordinates of a normalized 2-cocycle (values mod N).
Vec gauge(const Coeffs& c, const Tree& tr, const Cochain& cc) {
  const std::size_t k = c.k;
  std::vector<Vec> f(tr.n, Vec(k, 0));
  for (int x : tr.g->bfs_order()) {
    const int p = tr.g->tree_parent(x);
    if (x == 0 || p == 0) continue;
    const int s = tr.gen(tr.g->tree_step(x));
    for (std::size_t i = 0; i < k; ++i)
      f[static_cast<std::size_t>(x)][i] =
          mod_reduce(f[static_cast<std::size_t>(p)][i] + cc.at(p, s, static_cast<int>(i)), c.N);
  }
  Vec y(tr.slots.size() * k);
  for (std::size_t u = 0; u < tr.slots.size(); ++u) {
    const auto [g, si] = tr.slots[u];
    const int s = tr.gen(si), gs = tr.g->mul(g, s);
    for (std::size_t i = 0; i < k; ++i)
      y[u * k + i] = mod_reduce(cc.at(g, s, static_cast<int>(i)) - f[static_cast<std::size_t>(gs)][i] +
                                    f[static_cast<std::size_t>(g)][i],
                                c.N);
  }
  return y;
}

// Full table of the gauge-fixed cocycle with the given slot values.
Cochain expand_h2(const Coeffs& c, const Tree& tr, const Vec& y) {
  Cochain out = Cochain::zero(2, tr.n, c.k, c.N);
  for (std::size_t g = 1; g < tr.n; ++g)
    for (int x : tr.g->bfs_order()) {
      if (x == 0) continue;
      const int p = tr.g->tree_parent(x), si = tr.g->tree_step(x);
      const int u = tr.slot_of(tr.g->mul(static_cast<int>(g), p), si);
      for (std::size_t i = 0; i < c.k; ++i)
        out.at(static_cast<int>(g), x, static_cast<int>(i)) =
            mod_reduce(out.at(static_cast<int>(g), p, static_cast<int>(i)) +
                           (u < 0 ? 0 : y[static_cast<std::size_t>(u) * c.k + i]),
                       c.N);
    }
  return out;
}

struct H2Data {
  std::vector<Vec> z;
  std::vector<Vec> b;
};

H2Data finite_h2_data(const Coeffs& c, const Tree& tr) {
  const std::size_t k = c.k, ns = tr.slots.size(), u_count = ns * k;
  HowellBasis cons(c.N, u_count);
  std::vector<Vec> e(tr.n, Vec(ns, 0));
  for (std::size_t g = 1; g < tr.n; ++g) {
    const int gi = static_cast<int>(g);
    // e[x] = coefficients of c(g, x) in the slot values.
    for (int x : tr.g->bfs_order()) {
      if (x == 0) continue;
      const int p = tr.g->tree_parent(x);
      e[static_cast<std::size_t>(x)] = e[static_cast<std::size_t>(p)];
      const int u = tr.slot_of(tr.g->mul(gi, p), tr.g->tree_step(x));
      if (u >= 0) e[static_cast<std::size_t>(x)][static_cast<std::size_t>(u)] += 1;
    }
    // c(g,h) + c(gh,s) - g.c(h,s) - c(g,hs) = 0 on non-tree edges (h, s).
    for (std::size_t h = 1; h < tr.n; ++h)
      for (std::size_t si = 0; si < tr.t; ++si) {
        const int hi = static_cast<int>(h), sii = static_cast<int>(si);
        if (tr.tree_edge(hi, sii)) continue;
        const std::size_t hs = static_cast<std::size_t>(tr.g->mul(hi, tr.gen(sii)));
        const int u_ghs = tr.slot_of(tr.g->mul(gi, hi), sii);
        const int u_hs = tr.slot_of(hi, sii);
        for (std::size_t i = 0; i < k; ++i) {
          Vec row(u_count, 0);
          for (std::size_t u = 0; u < ns; ++u) row[u * k + i] = e[h][u] - e[hs][u];
          if (u_ghs >= 0) row[static_cast<std::size_t>(u_ghs) * k + i] += 1;
          for (std::size_t j = 0; j < k; ++j) row[static_cast<std::size_t>(u_hs) * k + j] -= c.entry(gi, i, j);
          for (std::size_t col = 0; col < u_count; ++col)
            row[col] = mod_mul(mod_reduce(row[col], c.N), c.scale[col % k], c.N);
          cons.insert(std::move(row));
        }
      }
  }
  H2Data out;
  for (Vec z : annihilator(cons)) {
    for (std::size_t col = 0; col < u_count; ++col) z[col] = mod_mul(z[col], c.scale[col % k], c.N);
    out.z.push_back(std::move(z));
  }
  // Residual gauge: 1-cochains with f(p s) = f(p) + p.f(s) on the tree.
  for (std::size_t si = 0; si < tr.t; ++si)
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Vec> gens(tr.t, Vec(k, 0));
      gens[si][j] = c.scale[j] % c.N;
      auto f = expand_h1(c, tr, gens);
      Vec row(u_count, 0);
      for (std::size_t u = 0; u < ns; ++u) {
        const auto [g, sj] = tr.slots[u];
        const int s = tr.gen(sj);
        Vec d = c.act(g, f[static_cast<std::size_t>(s)]);
        c.add(d, f[static_cast<std::size_t>(tr.g->mul(g, s))], -1);
        c.add(d, f[static_cast<std::size_t>(g)]);
        for (std::size_t i = 0; i < k; ++i) row[u * k + i] = d[i];
      }
      out.b.push_back(std::move(row));
    }
  return out;
}

Cochain rescale(const Cochain& c, std::int64_t target) {
  if (c.modulus == target) return c;
  if (c.modulus <= 0 || target % c.modulus != 0)
    throw DomainError("cochain with modulus " + std::to_string(c.modulus) + " cannot be realized modulo " +
                      std::to_string(target));
  Cochain out = c;
  out.modulus = target;
  for (auto& v : out.values) v = mod_reduce(v, c.modulus) * (target / c.modulus);
  return out;
}

}  // namespace

struct CohomologyBuilder {
  static CohomologyGroup make(int degree, std::shared_ptr<const GModule> m, AbelianStructure s, std::int64_t modulus,
                              std::vector<Cochain> reps, std::function<Vec(const Cochain&)> reducer) {
    CohomologyGroup out;
    out.degree_ = degree;
    out.module_ = std::move(m);
    out.structure_ = std::move(s);
    out.modulus_ = modulus;
    out.reps_ = std::move(reps);
    out.reducer_ = std::move(reducer);
    return out;
  }
};


namespace {

std::int64_t qz_realization(const FiniteGroup& g, std::int64_t modulus) {
  const auto n = static_cast<std::int64_t>(g.order());
  if (modulus == 0) return n;
  if (modulus < 0 || modulus % n != 0)
    throw DomainError("realization modulus " + std::to_string(modulus) + " must be a positive multiple of |G| = " +
                      std::to_string(n));
  return modulus;
}

Cochain for_coeffs(const Coeffs& c, const Cochain& x, bool qz) {
  if (qz) return rescale(x, c.N);
  if (x.modulus != c.N)
    throw DomainError("cochain modulus " + std::to_string(x.modulus) + " does not match the module (" +
                      std::to_string(c.N) + ")");
  return x;
}

// Integer crossed-homomorphism data for a lattice: rows of the constraint
// matrix C with C b = 0 for cocycles given on tree generators.
struct LatticeH1 {
  std::size_t k, t;
  std::vector<std::vector<Vec>> fu;  // fu[u][x]
  std::vector<Vec> rows;
  std::vector<std::pair<int, int>> edges;  // (h, si) per block of k rows
};

LatticeH1 lattice_h1_data(const GModule& m, const Tree& tr) {
  LatticeH1 d;
  d.k = m.rank();
  d.t = tr.t;
  const std::size_t k = d.k, u_count = d.t * k;
  d.fu.assign(u_count, std::vector<Vec>(tr.n, Vec(k, 0)));
  for (std::size_t u = 0; u < u_count; ++u) {
    auto& f = d.fu[u];
    for (int x : tr.g->bfs_order()) {
      if (x == 0) continue;
      const int p = tr.g->tree_parent(x), si = tr.g->tree_step(x);
      Vec fs(k, 0);
      if (static_cast<std::size_t>(si) == u / k) fs[u % k] = 1;
      Vec a = m.act(p, fs);
      for (std::size_t i = 0; i < k; ++i) f[static_cast<std::size_t>(x)][i] = f[static_cast<std::size_t>(p)][i] + a[i];
    }
  }
  for (std::size_t h = 1; h < tr.n; ++h)
    for (std::size_t si = 0; si < tr.t; ++si) {
      if (tr.tree_edge(static_cast<int>(h), static_cast<int>(si))) continue;
      d.edges.emplace_back(static_cast<int>(h), static_cast<int>(si));
      const auto hs = static_cast<std::size_t>(tr.g->mul(static_cast<int>(h), tr.gen(static_cast<int>(si))));
      const auto& a = m.matrix(static_cast<int>(h));
      for (std::size_t i = 0; i < k; ++i) {
        Vec row(u_count, 0);
        for (std::size_t u = 0; u < u_count; ++u) {
          row[u] = d.fu[u][hs][i] - d.fu[u][h][i];
          if (u / k == si) row[u] -= a[i][u % k];
        }
        d.rows.push_back(std::move(row));
      }
    }
  return d;
}

std::vector<Vec> lattice_z1(const LatticeH1& d) {
  const std::size_t u_count = d.t * d.k;
  if (u_count == 0) return {};
  if (d.rows.empty()) {
    std::vector<Vec> out;
    for (std::size_t u = 0; u < u_count; ++u) {
      Vec e(u_count, 0);
      e[u] = 1;
      out.push_back(e);
    }
    return out;
  }
  IntMatrix c = IntMatrix::from_rows(d.rows, u_count);
  return left_kernel(c.transpose()).to_rows();
}

CohomologyGroup lattice_h1(std::shared_ptr<const GModule> mod) {
  const GModule& m = *mod;
  Tree tr(m.group());
  LatticeH1 d = lattice_h1_data(m, tr);
  const std::size_t k = d.k, u_count = d.t * k;
  std::vector<Vec> b;
  for (std::size_t j = 0; j < k; ++j) {
    Vec row(u_count, 0);
    for (std::size_t si = 0; si < tr.t; ++si) {
      const auto& a = m.matrix(tr.gen(static_cast<int>(si)));
      for (std::size_t i = 0; i < k; ++i) row[si * k + i] = a[i][j] - (i == j ? 1 : 0);
    }
    b.push_back(std::move(row));
  }
  AbelianStructure st = subquotient_structure(u_count, 0, lattice_z1(d), b);
  std::vector<Cochain> reps;
  for (const auto& w : st.witnesses()) {
    Cochain f = Cochain::zero(1, tr.n, k, 0);
    for (std::size_t u = 0; u < u_count; ++u)
      for (std::size_t x = 0; x < tr.n; ++x)
        for (std::size_t i = 0; i < k; ++i) f.at(static_cast<int>(x), static_cast<int>(i)) += w[u] * d.fu[u][x][i];
    reps.push_back(std::move(f));
  }
  auto reducer = [st, tr](const Cochain& f) {
    if (f.modulus != 0) throw DomainError("expected an integer-valued cochain");
    return st.coordinates(flatten_gens(tr, f));
  };
  return CohomologyBuilder::make(1, mod, st, 0, std::move(reps), reducer);
}

// H^2(G, M) for a lattice through H^1(G, M/N) / Z^1(G, M), N = |G|.
CohomologyGroup lattice_h2(std::shared_ptr<const GModule> mod) {
  const GModule& m = *mod;
  const FiniteGroup& g = m.group();
  const auto N = static_cast<std::int64_t>(g.order());
  Tree tr(g);
  Coeffs c(m, N);
  LatticeH1 d = lattice_h1_data(m, tr);
  const std::size_t k = d.k, u_count = d.t * k;
  H1Data fin = finite_h1_data(c, tr);
  std::vector<Vec> image = fin.b;
  for (Vec z : lattice_z1(d)) {
    for (auto& x : z) x = mod_reduce(x, N);
    image.push_back(std::move(z));
  }
  AbelianStructure st = subquotient_structure(u_count, N, fin.z, image);

  std::vector<Cochain> reps;
  for (const auto& w : st.witnesses()) {
    Cochain f = h1_cochain(c, tr, w);
    Cochain cc = Cochain::zero(2, tr.n, k, 0);
    for (std::size_t a = 0; a < tr.n; ++a)
      for (std::size_t b = 0; b < tr.n; ++b) {
        Vec fb(k);
        for (std::size_t i = 0; i < k; ++i) fb[i] = f.at(static_cast<int>(b), static_cast<int>(i));
        Vec v = m.act(static_cast<int>(a), fb);
        const int ab = g.mul(static_cast<int>(a), static_cast<int>(b));
        for (std::size_t i = 0; i < k; ++i) {
          const std::int64_t num = v[i] - f.at(ab, static_cast<int>(i)) + f.at(static_cast<int>(a), static_cast<int>(i));
          if (num % N != 0) throw std::logic_error("lattice representative is not integral");
          cc.at(static_cast<int>(a), static_cast<int>(b), static_cast<int>(i)) = num / N;
        }
      }
    reps.push_back(std::move(cc));
  }

  // Reduction: solve delta(b) = N c over Z with b given on tree generators.
  auto smith = std::make_shared<SmithForm>();
  const std::size_t rows = d.rows.size();
  if (rows > 0 && u_count > 0) *smith = smith_normal_form(IntMatrix::from_rows(d.rows, u_count));
  auto reducer = [st, tr, smith, rows, u_count, k, N](const Cochain& cc) -> Vec {
    if (cc.modulus != 0) throw DomainError("expected an integer-valued cochain");
    if (u_count == 0) return st.coordinates(Vec{});
    // kappa(x): b(x) with b vanishing on generators.
    std::vector<std::vector<mpz_class>> kappa(tr.n, std::vector<mpz_class>(k, 0));
    for (int x : tr.g->bfs_order()) {
      const int p = tr.g->tree_parent(x);
      if (x == 0 || p == 0) continue;
      const int s = tr.gen(tr.g->tree_step(x));
      for (std::size_t i = 0; i < k; ++i)
        kappa[static_cast<std::size_t>(x)][i] =
            kappa[static_cast<std::size_t>(p)][i] - mpz_class(static_cast<long>(N)) * cc.at(p, s, static_cast<int>(i));
    }
    std::vector<mpz_class> rhs;
    rhs.reserve(rows);
    for (std::size_t h = 1; h < tr.n; ++h)
      for (std::size_t si = 0; si < tr.t; ++si) {
        if (tr.tree_edge(static_cast<int>(h), static_cast<int>(si))) continue;
        const int s = tr.gen(static_cast<int>(si));
        const auto hs = static_cast<std::size_t>(tr.g->mul(static_cast<int>(h), s));
        for (std::size_t i = 0; i < k; ++i)
          rhs.push_back(-(mpz_class(static_cast<long>(N)) * cc.at(static_cast<int>(h), s, static_cast<int>(i)) +
                          kappa[hs][i] - kappa[h][i]));
      }
    Vec b(u_count, 0);
    if (rows > 0) {
      const SmithForm& sf = *smith;
      std::vector<mpz_class> y(rows, 0);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j)
          if (sf.U(i, j) != 0 && rhs[j] != 0) y[i] += sf.U(i, j) * rhs[j];
      std::vector<mpz_class> z(u_count, 0);
      for (std::size_t i = 0; i < rows; ++i) {
        const mpz_class dii = i < u_count ? sf.D(i, i) : mpz_class(0);
        if (dii == 0) {
          if (y[i] != 0) throw DomainError("cochain is not a cocycle");
          continue;
        }
        if (y[i] % dii != 0) throw DomainError("cochain is not a cocycle");
        z[i] = y[i] / dii;
      }
      for (std::size_t i = 0; i < u_count; ++i) {
        mpz_class acc = 0;
        for (std::size_t j = 0; j < u_count; ++j) acc += sf.V(i, j) * z[j];
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), acc.get_mpz_t(), mpz_class(static_cast<long>(N)).get_mpz_t());
        b[i] = r.get_si();
      }
    }
    return st.coordinates(b);
  };
  return CohomologyBuilder::make(2, mod, st, N, std::move(reps), reducer);
}

}  // namespace

Cochain CohomologyGroup::cocycle_of(const Vec& coords) const {
  if (coords.size() != reps_.size()) throw DomainError("expected " + std::to_string(reps_.size()) + " coordinates");
  const std::size_t n = module_->group().order();
  Cochain out = Cochain::zero(degree_, n, module_->rank(),
                              reps_.empty() ? (module_->kind() == GModule::Kind::lattice && degree_ == 2 ? 0 : modulus_)
                                            : reps_[0].modulus);
  for (std::size_t r = 0; r < reps_.size(); ++r)
    for (std::size_t i = 0; i < out.values.size(); ++i) {
      out.values[i] += coords[r] * reps_[r].values[i];
      if (out.modulus) out.values[i] = mod_reduce(out.values[i], out.modulus);
    }
  return out;
}

CohomologyGroup h1(const GModule& m, std::int64_t qz_modulus, const Limits& limits) {
  const FiniteGroup& g = m.group();
  auto mod = std::make_shared<const GModule>(m);
  const std::size_t unknowns = g.tree_gens().size() * m.rank();
  if (m.kind() == GModule::Kind::lattice) {
    check_order(g, limits.lattice_cohomology, "H^1", unknowns);
    return lattice_h1(mod);
  }
  check_order(g, limits.finite_cohomology, "H^1", unknowns);
  const bool qz = m.kind() == GModule::Kind::trivial_qz;
  const std::int64_t N = qz ? qz_realization(g, qz_modulus) : m.modulus();
  Coeffs c(*mod, N);
  Tree tr(mod->group());
  H1Data d = finite_h1_data(c, tr);
  AbelianStructure st = subquotient_structure(tr.t * c.k, N, d.z, d.b);
  std::vector<Cochain> reps;
  for (const auto& w : st.witnesses()) reps.push_back(h1_cochain(c, tr, w));
  auto reducer = [st, c, tr, qz](const Cochain& f) { return st.coordinates(flatten_gens(tr, for_coeffs(c, f, qz))); };
  return CohomologyBuilder::make(1, mod, st, N, std::move(reps), reducer);
}

CohomologyGroup h2(const GModule& m, std::int64_t qz_modulus, const Limits& limits) {
  const FiniteGroup& g = m.group();
  const std::size_t t = g.tree_gens().size(), n = g.order();
  const std::size_t unknowns = (n > 0 ? (n - 1) * t - (n - 1 - t) : 0) * m.rank();
  if (m.kind() == GModule::Kind::lattice) {
    check_order(g, limits.lattice_cohomology, "H^2", unknowns);
    if (m.rank() > limits.lattice_rank)
      throw SizeLimitError("lattice of rank " + std::to_string(m.rank()) + " exceeds the rank limit " +
                           std::to_string(limits.lattice_rank));
    return lattice_h2(std::make_shared<const GModule>(m));
  }
  check_order(g, limits.finite_cohomology, "H^2", unknowns);
  const bool qz = m.kind() == GModule::Kind::trivial_qz;
  const std::int64_t N = qz ? qz_realization(g, qz_modulus) : m.modulus();
  auto mod = std::make_shared<const GModule>(m);
  Coeffs c(*mod, N);
  Tree tr(mod->group());
  H2Data d = finite_h2_data(c, tr);
  if (qz) {
    for (const Vec& z : finite_h1_data(c, tr).z)
      d.b.push_back(gauge(c, tr, connecting_bockstein(mod->group(), h1_cochain(c, tr, z))));
  }
  AbelianStructure st = subquotient_structure(tr.slots.size() * c.k, N, d.z, d.b);
  std::vector<Cochain> reps;
  for (const auto& w : st.witnesses()) reps.push_back(expand_h2(c, tr, w));
  auto reducer = [st, c, tr, qz](const Cochain& x) { return st.coordinates(gauge(c, tr, for_coeffs(c, x, qz))); };
  return CohomologyBuilder::make(2, mod, st, N, std::move(reps), reducer);
}

CohomologyGroup h2_qz(const FiniteGroup& g, std::int64_t modulus, const Limits& limits) {
  return h2(GModule::trivial_qz(g), modulus, limits);
}

Cochain connecting_bockstein(const FiniteGroup& g, const Cochain& chi) {
  const std::int64_t N = chi.modulus;
  if (chi.degree != 1 || chi.k != 1 || N <= 0) throw DomainError("expected a Z/N-valued homomorphism");
  const std::size_t n = g.order();
  Cochain out = Cochain::zero(2, n, 1, N);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const int ab = g.mul(static_cast<int>(a), static_cast<int>(b));
      const std::int64_t s = mod_reduce(chi.at(static_cast<int>(a), 0), N) + mod_reduce(chi.at(static_cast<int>(b), 0), N) -
                             mod_reduce(chi.at(ab, 0), N);
      if (s % N != 0) throw DomainError("character is not a homomorphism");
      out.at(static_cast<int>(a), static_cast<int>(b), 0) = mod_reduce(s / N, N);
    }
  return out;
}

namespace {

Vec act_values(const GModule& m, int g, const Vec& v, std::int64_t modulus) {
  Vec r = m.act(g, v);
  if (modulus)
    for (auto& x : r) x = mod_reduce(x, modulus);
  return r;
}

}  // namespace

Cochain coboundary(const GModule& m, const Cochain& f) {
  const FiniteGroup& g = m.group();
  const std::size_t n = g.order(), k = f.k;
  Cochain out = Cochain::zero(2, n, k, f.modulus);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vec fb(k);
      for (std::size_t i = 0; i < k; ++i) fb[i] = f.at(static_cast<int>(b), static_cast<int>(i));
      Vec v = act_values(m, static_cast<int>(a), fb, f.modulus);
      const int ab = g.mul(static_cast<int>(a), static_cast<int>(b));
      for (std::size_t i = 0; i < k; ++i) {
        std::int64_t x = v[i] - f.at(ab, static_cast<int>(i)) + f.at(static_cast<int>(a), static_cast<int>(i));
        out.at(static_cast<int>(a), static_cast<int>(b), static_cast<int>(i)) = f.modulus ? mod_reduce(x, f.modulus) : x;
      }
    }
  return out;
}

bool is_cocycle(const GModule& m, const Cochain& c) {
  const FiniteGroup& g = m.group();
  const std::size_t n = g.order(), k = c.k;
  auto zero = [&](std::int64_t x) { return c.modulus ? mod_reduce(x, c.modulus) == 0 : x == 0; };
  if (c.degree == 1) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Vec fb(k);
        for (std::size_t i = 0; i < k; ++i) fb[i] = c.at(static_cast<int>(b), static_cast<int>(i));
        Vec v = act_values(m, static_cast<int>(a), fb, c.modulus);
        const int ab = g.mul(static_cast<int>(a), static_cast<int>(b));
        for (std::size_t i = 0; i < k; ++i)
          if (!zero(c.at(ab, static_cast<int>(i)) - c.at(static_cast<int>(a), static_cast<int>(i)) - v[i])) return false;
      }
    return true;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const int ab = g.mul(static_cast<int>(a), static_cast<int>(b));
      for (std::size_t x = 0; x < n; ++x) {
        const int bx = g.mul(static_cast<int>(b), static_cast<int>(x));
        Vec cb(k);
        for (std::size_t i = 0; i < k; ++i) cb[i] = c.at(static_cast<int>(b), static_cast<int>(x), static_cast<int>(i));
        Vec v = act_values(m, static_cast<int>(a), cb, c.modulus);
        for (std::size_t i = 0; i < k; ++i) {
          const int ii = static_cast<int>(i);
          if (!zero(v[i] - c.at(ab, static_cast<int>(x), ii) + c.at(static_cast<int>(a), bx, ii) -
                    c.at(static_cast<int>(a), static_cast<int>(b), ii)))
            return false;
        }
      }
    }
  return true;
}

Cochain restrict_cochain(const Cochain& c, const SubgroupGroup& s) {
  const std::size_t n = s.group.order();
  Cochain out = Cochain::zero(c.degree, n, c.k, c.modulus);
  for (std::size_t a = 0; a < n; ++a) {
    const int pa = s.embedding[a];
    if (c.degree == 1) {
      for (std::size_t i = 0; i < c.k; ++i) out.at(static_cast<int>(a), static_cast<int>(i)) = c.at(pa, static_cast<int>(i));
      continue;
    }
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t i = 0; i < c.k; ++i)
        out.at(static_cast<int>(a), static_cast<int>(b), static_cast<int>(i)) =
            c.at(pa, s.embedding[b], static_cast<int>(i));
  }
  return out;
}

Vec restrict_class(const CohomologyGroup& over_g, const Vec& coords, const CohomologyGroup& over_s,
                   const SubgroupGroup& s) {
  return over_s.reduce(restrict_cochain(over_g.cocycle_of(coords), s));
}

Cochain corestrict_cochain(const FiniteGroup& g, const SubgroupGroup& h, const Cochain& c) {
  const std::size_t n = g.order();
  // rep[x] = smallest element of the right coset H x.
  std::vector<int> rep(n, -1);
  std::vector<int> reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (rep[x] >= 0) continue;
    reps.push_back(static_cast<int>(x));
    for (int e : h.embedding) rep[static_cast<std::size_t>(g.mul(e, static_cast<int>(x)))] = static_cast<int>(x);
  }
  auto phi = [&](int t, int a) {
    const int ta = g.mul(t, a);
    return h.index_of[static_cast<std::size_t>(g.mul(ta, g.inv(rep[static_cast<std::size_t>(ta)])))];
  };
  Cochain out = Cochain::zero(2, n, c.k, c.modulus);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (int t : reps) {
        const int ta = rep[static_cast<std::size_t>(g.mul(t, static_cast<int>(a)))];
        const int h1 = phi(t, static_cast<int>(a)), h2 = phi(ta, static_cast<int>(b));
        for (std::size_t i = 0; i < c.k; ++i) {
          auto& v = out.at(static_cast<int>(a), static_cast<int>(b), static_cast<int>(i));
          v += c.at(h1, h2, static_cast<int>(i));
          if (c.modulus) v = mod_reduce(v, c.modulus);
        }
      }
  return out;
}

Vec corestrict_class(const CohomologyGroup& over_h, const Vec& coords, const CohomologyGroup& over_g,
                     const SubgroupGroup& h) {
  return over_g.reduce(corestrict_cochain(over_g.module().group(), h, over_h.cocycle_of(coords)));
}


// ---------------------------------------------------------------------------
// Small complexes for cyclic and bicyclic groups

namespace {

struct Complex {
  std::size_t k;
  Vec torsion;                     // per coordinate; 0 for Z
  Mat t1, t2;                      // actions of the two generators
  std::int64_t n1 = 1, n2 = 1;

  std::int64_t red(std::size_t i, std::int64_t x) const {
    return torsion[i] ? mod_reduce(x, torsion[i]) : x;
  }
  Mat delta(const Mat& t) const {
    Mat d = t;
    for (std::size_t i = 0; i < k; ++i) d[i][i] = red(i, d[i][i] - 1);
    return d;
  }
  Mat norm(const Mat& t, std::int64_t order) const {
    auto r = [this](std::size_t i, std::int64_t x) { return red(i, x); };
    Mat sum(k, Vec(k, 0)), pw = identity_mat(k);
    for (std::int64_t j = 0; j < order; ++j) {
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) sum[a][b] = red(a, sum[a][b] + pw[a][b]);
      pw = mat_mul(pw, t, r);
    }
    return sum;
  }
  // Matrix of d^deg : C^deg -> C^deg+1 (column convention), blocks (p, deg - p).
  Mat differential(int deg) const {
    const std::size_t rows = static_cast<std::size_t>(deg + 2) * k, cols = static_cast<std::size_t>(deg + 1) * k;
    Mat d(rows, Vec(cols, 0));
    const Mat D1 = delta(t1), N1 = norm(t1, n1), D2 = delta(t2), N2 = norm(t2, n2);
    auto put = [&](std::size_t rb, std::size_t cb, const Mat& m, std::int64_t sign) {
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) d[rb * k + i][cb * k + j] += sign * m[i][j];
    };
    for (int p = 0; p <= deg; ++p) {
      const int q = deg - p;
      put(static_cast<std::size_t>(p + 1), static_cast<std::size_t>(p), p % 2 == 0 ? D1 : N1, 1);
      put(static_cast<std::size_t>(p), static_cast<std::size_t>(p), q % 2 == 0 ? D2 : N2, p % 2 == 0 ? 1 : -1);
    }
    return d;
  }
  std::vector<std::int64_t> cohomology(int deg) const {
    const std::size_t dim = static_cast<std::size_t>(deg + 1) * k, next = dim + k;
    // x in ker d  <=>  (x, y) * [d^T ; -torsion] = 0 for some y.
    const Mat d = differential(deg);
    std::vector<Vec> stacked;
    for (std::size_t j = 0; j < dim; ++j) {
      Vec row(next);
      for (std::size_t i = 0; i < next; ++i) row[i] = d[i][j];
      stacked.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < next; ++i)
      if (torsion[i % k]) {
        Vec row(next, 0);
        row[i] = torsion[i % k];
        stacked.push_back(std::move(row));
      }
    std::vector<Vec> kernel;
    for (const Vec& v : left_kernel(IntMatrix::from_rows(stacked, next)).to_rows())
      kernel.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(dim));
    std::vector<Vec> image;
    if (deg > 0) {
      const Mat prev = differential(deg - 1);
      for (std::size_t j = 0; j < prev[0].size(); ++j) {
        Vec col(dim);
        for (std::size_t i = 0; i < dim; ++i) col[i] = prev[i][j];
        image.push_back(std::move(col));
      }
    }
    for (std::size_t i = 0; i < dim; ++i)
      if (torsion[i % k]) {
        Vec row(dim, 0);
        row[i] = torsion[i % k];
        image.push_back(std::move(row));
        kernel.push_back(image.back());
      }
    return subquotient_structure(dim, 0, kernel, image).invariant_factors();
  }
};

}  // namespace

std::vector<std::int64_t> small_complex_h(const GModule& m, int degree) {
  if (degree < 0 || degree > 2) throw DomainError("small complex supports degrees 0, 1, 2");
  const FiniteGroup& g = m.group();
  const AbelianDecomposition a = abelian_structure(g);
  if (a.invariants.size() > 2)
    throw DomainError("small complex needs a group on at most two generators; got invariants " + to_string(a.invariants));
  Complex cx;
  cx.k = m.rank();
  cx.torsion.assign(cx.k, 0);
  if (m.kind() == GModule::Kind::finite) cx.torsion = m.factors();
  cx.t1 = cx.t2 = identity_mat(cx.k);
  if (!a.invariants.empty()) {
    cx.n1 = a.invariants[0];
    cx.t1 = m.matrix(a.generators[0]);
  }
  if (a.invariants.size() == 2) {
    cx.n2 = a.invariants[1];
    cx.t2 = m.matrix(a.generators[1]);
  }
  if (m.kind() == GModule::Kind::trivial_qz) {
    // H^i(A, Q/Z) = H^{i+1}(A, Z) for i >= 1.
    if (degree == 0) throw DomainError("H^0(A, Q/Z) is not finite");
    return cx.cohomology(degree + 1);
  }
  return cx.cohomology(degree);
}

}  // namespace brq
