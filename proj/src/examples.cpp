#include "brq/examples.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "brq/corpus.hpp"
#include "brq/error.hpp"

namespace brq {

namespace {

std::string key_of(const CycloMatrix& m) {
  std::string k;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      k += m(i, j).to_string();
      k += ';';
    }
  return k;
}

// Scaled so that the first nonzero entry is 1.
CycloMatrix projective_normal(const CycloMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return m.scaled(m(i, j).inverse());
  return m;
}

struct Closure {
  std::vector<CycloMatrix> elements;
  std::vector<int> table;
  std::vector<int> gens;
};

Closure close(const std::vector<CycloMatrix>& gens_in, bool projective, std::size_t max_order) {
  if (gens_in.empty()) throw ValidationError("matrix group needs at least one generator");
  std::int64_t l = 1;
  for (const auto& g : gens_in) l = std::lcm(l, g.conductor());
  const std::size_t n = gens_in[0].rows();
  std::vector<CycloMatrix> gens;
  for (const auto& g : gens_in) {
    if (g.rows() != n || g.cols() != n) throw ValidationError("matrix group generators must be square of equal size");
    CycloMatrix p = g.promote(l);
    gens.push_back(projective ? projective_normal(p) : p);
  }
  auto canon = [&](const CycloMatrix& m) { return projective ? projective_normal(m) : m; };
  Closure c;
  std::map<std::string, int> index;
  c.elements.push_back(CycloMatrix::identity(n, l));
  index.emplace(key_of(c.elements[0]), 0);
  std::vector<std::vector<int>> right;  // right[x][s] = x * gens[s]
  for (std::size_t x = 0; x < c.elements.size(); ++x) {
    right.emplace_back();
    for (const auto& s : gens) {
      CycloMatrix y = canon(c.elements[x] * s);
      const std::string k = key_of(y);
      auto it = index.find(k);
      if (it == index.end()) {
        if (c.elements.size() >= max_order)
          throw SizeLimitError("matrix group exceeds the maximum order " + std::to_string(max_order));
        it = index.emplace(k, static_cast<int>(c.elements.size())).first;
        c.elements.push_back(std::move(y));
      }
      right[x].push_back(it->second);
    }
  }
  for (const auto& s : gens) c.gens.push_back(index.at(key_of(canon(s))));
  // Words along the BFS tree give the full table from the right-multiplication table.
  const std::size_t order = c.elements.size();
  std::vector<std::vector<int>> word(order);
  std::vector<char> seen(order, 0);
  seen[0] = 1;
  std::vector<int> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const int x = queue[q];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const int y = right[static_cast<std::size_t>(x)][s];
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        word[static_cast<std::size_t>(y)] = word[static_cast<std::size_t>(x)];
        word[static_cast<std::size_t>(y)].push_back(static_cast<int>(s));
        queue.push_back(y);
      }
    }
  }
  c.table.resize(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      int x = static_cast<int>(a);
      for (int s : word[b]) x = right[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)];
      c.table[a * order + b] = x;
    }
  return c;
}

CycloMatrix power(const CycloMatrix& m, int k) {
  CycloMatrix out = CycloMatrix::identity(m.rows(), m.conductor());
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

CycloNumber z(std::int64_t m, std::int64_t k) { return CycloNumber::zeta(m, k); }
CycloNumber q(std::int64_t a, std::int64_t b = 1, std::int64_t conductor = 1) {
  return CycloNumber::rational(mpq_class(a, b), conductor);
}

CycloMatrix build(std::size_t n, std::int64_t conductor, const std::vector<std::vector<CycloNumber>>& rows) {
  CycloMatrix m(n, n, conductor);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j].promote(conductor);
  return m;
}

}  // namespace

MatrixGroup matrix_group(const std::vector<CycloMatrix>& gens, std::size_t max_order) {
  Closure c = close(gens, false, max_order);
  const std::size_t order = c.elements.size();
  return {FiniteGroup::from_valid_table(std::move(c.table), order, std::move(c.gens)), std::move(c.elements)};
}

CycloMatrix clock_matrix(int n) {
  CycloMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n), n);
  for (int i = 0; i < n; ++i) m(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = z(n, i).promote(n);
  return m;
}

CycloMatrix shift_matrix(int n) {
  CycloMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n), n);
  for (int i = 0; i < n; ++i)
    m(static_cast<std::size_t>((i + 1) % n), static_cast<std::size_t>(i)) = CycloNumber::rational(1, n);
  return m;
}

CycloMatrix permutation_matrix(const Perm& p) {
  CycloMatrix m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(i, static_cast<std::size_t>(p[i])) = CycloNumber::rational(1);
  return m;
}

CycloMatrix int_matrix(const std::vector<Vec>& rows) {
  CycloMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = CycloNumber::rational(rows[i][j]);
  return m;
}

FiniteGroup LatticeExample::group() const {
  if (generators.empty()) return cyclic_group(1);
  std::vector<CycloMatrix> gens;
  for (const auto& g : generators) gens.push_back(int_matrix(g));
  return matrix_group(gens).group;
}

GModule LatticeExample::module() const {
  const FiniteGroup g = group();
  if (generators.empty()) return GModule::trivial_lattice(g, 2);
  return GModule::lattice(g, generators[0].size(), generators);
}

std::vector<LatticeExample> gl2z_finite_subgroups() {
  const std::vector<Vec> minus{{-1, 0}, {0, -1}}, reflect{{1, 0}, {0, -1}}, swap{{0, 1}, {1, 0}},
      nswap{{0, -1}, {-1, 0}}, c3{{0, -1}, {1, -1}}, c4{{0, -1}, {1, 0}}, c6{{1, -1}, {1, 0}};
  return {
      {"1", {}, true},
      {"C2 = <-1>", {minus}, true},
      {"C2 = <diag(1,-1)>", {reflect}, true},
      {"C2 = <swap>", {swap}, true},
      {"C3", {c3}, true},
      {"C4", {c4}, true},
      {"C6", {c6}, true},
      {"C2^2 = <diag(1,-1), -1>", {reflect, minus}, true},
      {"C2^2 = <swap, -1>", {swap, minus}, true},
      {"S3 = <C3, swap>", {c3, swap}, false},
      {"S3 = <C3, -swap>", {c3, nswap}, false},
      {"D4", {c4, reflect}, false},
      {"D6", {c6, swap}, false},
  };
}

LatticeExample s3_root_lattice() { return {"S3 on the root lattice", {{{0, -1}, {1, -1}}, {{0, 1}, {1, 0}}}, false}; }

ProjectiveAction heisenberg_action(int n) {
  return projective_action(abelian_group({n, n}), {shift_matrix(n), clock_matrix(n)});
}

SemilinearAction heisenberg_correlation_action(int n) {
  const FiniteGroup a = abelian_group({n, n});
  std::vector<int> flip(a.order());
  for (std::size_t x = 0; x < a.order(); ++x) {
    Vec c = abelian_coordinates({n, n}, static_cast<int>(x));
    c[1] = (n - c[1]) % n;
    flip[x] = abelian_index({n, n}, c);
  }
  const FiniteGroup g = semidirect_product(a, cyclic_group(2), {flip});
  std::vector<CycloMatrix> mats;
  std::vector<bool> corr;
  for (int e : g.generators()) {
    const Vec c = abelian_coordinates({n, n}, e / 2);
    const CycloMatrix m = power(shift_matrix(n), static_cast<int>(c[0])) * power(clock_matrix(n), static_cast<int>(c[1]));
    const bool t = e % 2 == 1;
    mats.push_back(t ? matrix_inverse(m).transpose() : m);
    corr.push_back(t);
  }
  return semilinear_action(g, mats, corr);
}

SemilinearAction single_correlation_action(const CycloMatrix& phi) {
  return semilinear_action(cyclic_group(2), {phi}, {true});
}

SemilinearAction as_collineations(const FiniteGroup& g, const std::vector<CycloMatrix>& generator_matrices) {
  return semilinear_action(g, generator_matrices, std::vector<bool>(generator_matrices.size(), false));
}

namespace {

NamedAction linear(const std::string& name, const std::vector<CycloMatrix>& gens) {
  MatrixGroup m = matrix_group(gens);
  return {name, as_collineations(m.group, gens)};
}

NamedAction projective(const std::string& name, const std::vector<CycloMatrix>& gens) {
  Closure c = close(gens, true, 1000);
  const std::size_t order = c.elements.size();
  const FiniteGroup g = FiniteGroup::from_valid_table(std::move(c.table), order, std::move(c.gens));
  return {name, as_collineations(g, gens)};
}

CycloMatrix pauli_x() { return shift_matrix(2); }
CycloMatrix pauli_z() { return clock_matrix(2); }

}  // namespace

std::vector<NamedAction> linear_action_corpus() {
  const CycloNumber i = z(4, 1), zero = q(0), one = q(1), m1 = q(-1);
  std::vector<NamedAction> out;
  out.push_back(linear("S3 permuting coordinates", {permutation_matrix({1, 0, 2}), permutation_matrix({1, 2, 0})}));
  out.push_back(linear("S4 permuting coordinates", {permutation_matrix({1, 0, 2, 3}), permutation_matrix({1, 2, 3, 0})}));
  out.push_back(linear("A4 permuting coordinates", {permutation_matrix({1, 2, 0, 3}), permutation_matrix({0, 2, 3, 1})}));
  out.push_back(linear("D4 on the plane", {int_matrix({{0, -1}, {1, 0}}), int_matrix({{1, 0}, {0, -1}})}));
  out.push_back(linear("Q8 in SL2", {build(2, 4, {{i, zero}, {zero, -i}}), build(2, 4, {{zero, one}, {m1, zero}})}));
  out.push_back(linear("Heisenberg group of order 27", {shift_matrix(3), clock_matrix(3)}));
  out.push_back(linear("Pauli group of order 16", {pauli_x(), pauli_z().scaled(i)}));
  out.push_back(linear("D8 on the plane",
                       {build(2, 8, {{z(8, 1), zero}, {zero, z(8, 7)}}), build(2, 8, {{zero, one}, {one, zero}})}));
  out.push_back(linear("C4 x C2 by characters",
                       {build(2, 4, {{i, zero}, {zero, one}}), build(2, 4, {{one, zero}, {zero, m1}})}));
  {
    const FiniteGroup g = b0_order64_group();
    const std::vector<Perm> perms{{1, 0, 13, 10, 9, 11, 8, 15, 6, 4, 3, 5, 14, 2, 12, 7, 16, 18, 17, 19},
                                  {0, 2, 1, 3, 5, 4, 6, 8, 7, 9, 12, 11, 10, 13, 14, 15, 17, 19, 16, 18},
                                  {3, 4, 5, 13, 2, 1, 11, 12, 10, 6, 7, 15, 8, 14, 0, 9, 16, 18, 17, 19}};
    std::vector<CycloMatrix> mats;
    for (const auto& p : perms) mats.push_back(permutation_matrix(p));
    out.push_back(linear("order 64 group on 20 points", mats));
  }
  return out;
}

std::vector<NamedAction> projective_action_corpus() {
  const CycloNumber i = z(4, 1), zero = q(0), one = q(1), m1 = q(-1);
  std::vector<NamedAction> out;
  for (int n = 2; n <= 6; ++n) {
    const ProjectiveAction h = heisenberg_action(n);
    out.push_back({"Heisenberg action on P^" + std::to_string(n - 1), as_collineations(h.group, {shift_matrix(n), clock_matrix(n)})});
  }
  out.push_back(projective("(Z/2)^4 by Pauli tensors",
                           {kronecker(pauli_x(), CycloMatrix::identity(2)), kronecker(pauli_z(), CycloMatrix::identity(2)),
                            kronecker(CycloMatrix::identity(2), pauli_x()), kronecker(CycloMatrix::identity(2), pauli_z())}));
  out.push_back(projective("(Z/4)^2 on the square of the clock and shift",
                           {kronecker(shift_matrix(4), shift_matrix(4)), kronecker(clock_matrix(4), clock_matrix(4))}));
  // Binary tetrahedral and octahedral groups modulo -1.
  const CycloMatrix qi = build(2, 4, {{i, zero}, {zero, -i}});
  const CycloMatrix qt = build(2, 4, {{one + i, one + i}, {m1 + i, one - i}}).scaled(q(1, 2));
  out.push_back(projective("A4 on P^1", {qi, qt}));
  const CycloNumber s = z(8, 1);  // (1 + i) / sqrt 2
  const CycloMatrix qo = build(2, 8, {{s, zero}, {zero, s.inverse()}});
  out.push_back(projective("S4 on P^1", {qo, qt}));
  out.push_back(projective("S3 on P^2", {permutation_matrix({1, 0, 2}), permutation_matrix({1, 2, 0})}));
  return out;
}

}  // namespace brq
