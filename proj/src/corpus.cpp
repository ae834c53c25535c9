#include "brq/corpus.hpp"

#include <array>
#include <numeric>

#include "brq/error.hpp"

namespace brq {

FiniteGroup cyclic_group(std::int64_t n) { return abelian_group({n}); }

Vec abelian_coordinates(const std::vector<std::int64_t>& factors, int index) {
  Vec c(factors.size());
  std::int64_t x = index;
  for (std::size_t i = factors.size(); i-- > 0;) {
    c[i] = x % factors[i];
    x /= factors[i];
  }
  return c;
}

int abelian_index(const std::vector<std::int64_t>& factors, const Vec& coords) {
  std::int64_t x = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) x = x * factors[i] + mod_reduce(coords[i], factors[i]);
  return static_cast<int>(x);
}

FiniteGroup abelian_group(const std::vector<std::int64_t>& factors) {
  std::int64_t n = 1;
  for (auto d : factors) {
    if (d < 1) throw DomainError("abelian group factors must be positive");
    n *= d;
  }
  if (n > static_cast<std::int64_t>(Limits::defaults().group_order))
    throw SizeLimitError("abelian group of order " + std::to_string(n) + " exceeds the maximum order");
  const auto order = static_cast<std::size_t>(n);
  std::vector<Vec> coords(order);
  for (std::size_t x = 0; x < order; ++x) coords[x] = abelian_coordinates(factors, static_cast<int>(x));
  std::vector<int> table(order * order);
  Vec sum(factors.size());
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t i = 0; i < factors.size(); ++i) sum[i] = coords[a][i] + coords[b][i];
      table[a * order + b] = abelian_index(factors, sum);
    }
  std::vector<int> gens;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] == 1) continue;
    Vec e(factors.size(), 0);
    e[i] = 1;
    gens.push_back(abelian_index(factors, e));
  }
  return FiniteGroup::from_valid_table(std::move(table), order, std::move(gens));
}

FiniteGroup dihedral_group(int n) {
  if (n < 1) throw DomainError("dihedral group needs n >= 1");
  if (n <= 2) return abelian_group({2, n});
  Perm rot(static_cast<std::size_t>(n)), refl(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rot[static_cast<std::size_t>(i)] = (i + 1) % n;
    refl[static_cast<std::size_t>(i)] = (n - i) % n;
  }
  return from_permutation_generators(n, {rot, refl});
}

FiniteGroup dicyclic_group(int m) {
  if (m < 1) throw DomainError("dicyclic group needs m >= 1");
  // x^a y^b with a < 2m, b < 2; y x = x^-1 y, y^2 = x^m.
  const int n = 4 * m, h = 2 * m;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < h; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < h; ++c)
        for (int d = 0; d < 2; ++d) {
          int e = (a + (b ? h - c : c)) % h;
          int f = b + d;
          if (f == 2) {
            e = (e + m) % h;
            f = 0;
          }
          t[static_cast<std::size_t>(2 * a + b)][static_cast<std::size_t>(2 * c + d)] = 2 * e + f;
        }
  return from_cayley_table(t);
}

FiniteGroup metacyclic_group(std::int64_t m, std::int64_t n, std::int64_t u) {
  std::vector<int> phi(static_cast<std::size_t>(m));
  for (std::int64_t a = 0; a < m; ++a) phi[static_cast<std::size_t>(a)] = static_cast<int>(mod_reduce(a * u, m));
  FiniteGroup cm = cyclic_group(m), cn = cyclic_group(n);
  return semidirect_product(cm, cn, std::vector<std::vector<int>>(cn.generators().size(), phi));
}

FiniteGroup symmetric_group(int k) {
  if (k <= 1) return cyclic_group(1);
  Perm swap(static_cast<std::size_t>(k)), cycle(static_cast<std::size_t>(k));
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  for (int i = 0; i < k; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % k;
  return from_permutation_generators(k, {swap, cycle});
}

FiniteGroup alternating_group(int k) {
  if (k <= 2) return cyclic_group(1);
  std::vector<Perm> gens;
  for (int i = 2; i < k; ++i) {
    Perm p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    p[0] = 1;
    p[1] = i;
    p[static_cast<std::size_t>(i)] = 0;
    gens.push_back(p);
  }
  return from_permutation_generators(k, gens);
}

FiniteGroup bilinear_extension(std::int64_t p, int k, const std::vector<Vec>& form) {
  const std::vector<std::int64_t> factors(static_cast<std::size_t>(k), p);
  FiniteGroup base = abelian_group(factors);
  const std::size_t n = base.order();
  std::vector<std::int64_t> c(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const Vec u = abelian_coordinates(factors, static_cast<int>(a));
    for (std::size_t b = 0; b < n; ++b) {
      const Vec v = abelian_coordinates(factors, static_cast<int>(b));
      std::int64_t s = 0;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          s += form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * u[static_cast<std::size_t>(i)] *
               v[static_cast<std::size_t>(j)];
      c[a * n + b] = mod_reduce(s, p);
    }
  }
  return central_extension_from_cocycle(base, p, c);
}

namespace {

// Automorphism of an abelian group given on coordinates.
std::vector<int> abelian_map(const std::vector<std::int64_t>& factors, const std::function<Vec(const Vec&)>& f) {
  std::int64_t n = 1;
  for (auto d : factors) n *= d;
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) out[static_cast<std::size_t>(x)] = abelian_index(factors, f(abelian_coordinates(factors, x)));
  return out;
}

FiniteGroup abelian_by(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                       const std::vector<std::function<Vec(const Vec&)>>& maps) {
  std::vector<std::vector<int>> action;
  for (const auto& f : maps) action.push_back(abelian_map(a, f));
  return semidirect_product(abelian_group(a), abelian_group(b), action);
}

}  // namespace

std::vector<NamedGroup> b0_vanishing_corpus() {
  std::vector<NamedGroup> out;
  for (int n : {4, 5, 6, 7, 8, 10, 12, 16})
    out.push_back({"D" + std::to_string(2 * n), [n] { return dihedral_group(n); }});
  for (int m : {2, 3, 4, 6, 8})
    out.push_back({"Dic" + std::to_string(4 * m), [m] { return dicyclic_group(m); }});
  const std::vector<std::array<std::int64_t, 3>> meta{{5, 4, 2},  {7, 3, 2},  {8, 2, 3},  {8, 2, 5},
                                                      {4, 4, 3},  {13, 3, 3}, {7, 6, 3},  {9, 3, 4},
                                                      {16, 2, 7}, {16, 2, 9}, {11, 5, 3}, {8, 8, 3}};
  for (const auto& [m, n, u] : meta)
    out.push_back({"C" + std::to_string(m) + ":C" + std::to_string(n) + "[" + std::to_string(u) + "]",
                   [m = m, n = n, u = u] { return metacyclic_group(m, n, u); }});
  out.push_back({"C3^2:C2", [] {
                   return abelian_by({3, 3}, {2}, {[](const Vec& v) { return Vec{-v[0], -v[1]}; }});
                 }});
  out.push_back({"C3^2:C2^2", [] {
                   return abelian_by({3, 3}, {2, 2},
                                     {[](const Vec& v) { return Vec{-v[0], v[1]}; },
                                      [](const Vec& v) { return Vec{v[0], -v[1]}; }});
                 }});
  out.push_back({"C4^2:C2", [] {
                   return abelian_by({4, 4}, {2}, {[](const Vec& v) { return Vec{v[1], v[0]}; }});
                 }});
  out.push_back({"C2^4:C2", [] {
                   return abelian_by({2, 2, 2, 2}, {2}, {[](const Vec& v) { return Vec{v[2], v[3], v[0], v[1]}; }});
                 }});
  out.push_back({"C2^3:C7", [] {
                   return abelian_by({2, 2, 2}, {7}, {[](const Vec& v) { return Vec{v[2], v[0] + v[2], v[1]}; }});
                 }});
  out.push_back({"C3^2:C4", [] {
                   return abelian_by({3, 3}, {4}, {[](const Vec& v) { return Vec{-v[1], v[0]}; }});
                 }});
  out.push_back({"Heis27", [] { return bilinear_extension(3, 2, {{0, 1}, {0, 0}}); }});
  out.push_back({"2^{1+4}+", [] {
                   return bilinear_extension(2, 4, {{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}});
                 }});
  out.push_back({"2^{1+4}-", [] {
                   return bilinear_extension(2, 4, {{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}});
                 }});
  out.push_back({"C4^2.C2", [] {
                   FiniteGroup base = abelian_group({4, 4});
                   const std::size_t n = base.order();
                   std::vector<std::int64_t> c(n * n);
                   for (std::size_t a = 0; a < n; ++a)
                     for (std::size_t b = 0; b < n; ++b)
                       c[a * n + b] = (abelian_coordinates({4, 4}, static_cast<int>(a))[0] *
                                       abelian_coordinates({4, 4}, static_cast<int>(b))[1]) % 2;
                   return central_extension_from_cocycle(base, 2, c);
                 }});
  out.push_back({"S4", [] { return symmetric_group(4); }});
  out.push_back({"A4", [] { return alternating_group(4); }});
  return out;
}

FiniteGroup b0_order64_group() {
  // Faithful on 16 + 4 points.
  return from_permutation_generators(
      20, {{1, 0, 13, 10, 9, 11, 8, 15, 6, 4, 3, 5, 14, 2, 12, 7, 16, 18, 17, 19},
           {0, 2, 1, 3, 5, 4, 6, 8, 7, 9, 12, 11, 10, 13, 14, 15, 17, 19, 16, 18},
           {3, 4, 5, 13, 2, 1, 11, 12, 10, 6, 7, 15, 8, 14, 0, 9, 16, 18, 17, 19}});
}

}  // namespace brq
