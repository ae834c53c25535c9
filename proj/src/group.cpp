#include "brq/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "brq/error.hpp"

namespace brq {

Limits Limits::defaults() {
  Limits l;
  if (const char* env = std::getenv("BRQ_MAX_ORDER")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      l.finite_cohomology = l.lattice_cohomology = static_cast<std::size_t>(v);
      l.group_order = std::max<std::size_t>(l.group_order, static_cast<std::size_t>(v));
    }
  }
  return l;
}

namespace {

std::string elem_name(int x) { return std::to_string(x); }

}  // namespace

FiniteGroup FiniteGroup::from_valid_table(std::vector<int> table, std::size_t order, std::vector<int> generators,
                                          std::vector<std::string> labels) {
  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.generators_ = std::move(generators);
  g.labels_ = std::move(labels);
  g.inverse_.assign(order, -1);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      if (g.table_[a * order + b] == 0) {
        g.inverse_[a] = static_cast<int>(b);
        break;
      }
  for (int s : g.generators_) {
    if (s < 0 || static_cast<std::size_t>(s) >= order) throw ValidationError("generator index out of range: " + elem_name(s));
    if (s != 0 && std::find(g.tree_gens_.begin(), g.tree_gens_.end(), s) == g.tree_gens_.end()) g.tree_gens_.push_back(s);
  }
  g.parent_.assign(order, -1);
  g.step_.assign(order, -1);
  std::vector<char> seen(order, 0);
  seen[0] = 1;
  g.bfs_.push_back(0);
  for (std::size_t head = 0; head < g.bfs_.size(); ++head) {
    const int x = g.bfs_[head];
    for (std::size_t i = 0; i < g.tree_gens_.size(); ++i) {
      const int y = g.mul(x, g.tree_gens_[i]);
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      g.parent_[static_cast<std::size_t>(y)] = x;
      g.step_[static_cast<std::size_t>(y)] = static_cast<int>(i);
      g.bfs_.push_back(y);
    }
  }
  if (g.bfs_.size() != order)
    throw ValidationError("generators do not generate the group (" + std::to_string(g.bfs_.size()) + " of " +
                          std::to_string(order) + " elements reached)");
  return g;
}

int FiniteGroup::power(int g, std::int64_t k) const {
  const std::int64_t o = element_order(g);
  k %= o;
  if (k < 0) k += o;
  int result = 0, base = g;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

int FiniteGroup::element_order(int g) const {
  int k = 1;
  for (int x = g; x != 0; x = mul(x, g)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a : tree_gens_)
    for (int b : tree_gens_)
      if (!commute(a, b)) return false;
  return true;
}

std::int64_t FiniteGroup::exponent() const {
  std::int64_t e = 1;
  for (std::size_t x = 0; x < order_; ++x) e = std::lcm(e, static_cast<std::int64_t>(element_order(static_cast<int>(x))));
  return e;
}

bool Subgroup::contains(int g) const { return std::binary_search(elements.begin(), elements.end(), g); }

// ---------------------------------------------------------------------------
// Construction

FiniteGroup from_permutation_generators(int degree, const std::vector<Perm>& perms, std::size_t max_order) {
  if (degree < 1) throw ValidationError("permutation degree must be positive");
  for (std::size_t i = 0; i < perms.size(); ++i) {
    const Perm& p = perms[i];
    if (p.size() != static_cast<std::size_t>(degree))
      throw ValidationError("permutation " + std::to_string(i) + " has length " + std::to_string(p.size()) +
                            ", expected " + std::to_string(degree));
    std::vector<char> hit(static_cast<std::size_t>(degree), 0);
    for (int x : p) {
      if (x < 0 || x >= degree || hit[static_cast<std::size_t>(x)])
        throw ValidationError("permutation " + std::to_string(i) + " is not a bijection on 0.." +
                              std::to_string(degree - 1));
      hit[static_cast<std::size_t>(x)] = 1;
    }
  }
  // (g h)(i) = h(g(i))
  auto compose = [&](const Perm& g, const Perm& h) {
    Perm r(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) r[i] = h[static_cast<std::size_t>(g[i])];
    return r;
  };
  Perm id(static_cast<std::size_t>(degree));
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elements{id};
  std::map<Perm, int> index{{id, 0}};
  std::vector<Perm> layer{id};
  while (!layer.empty()) {
    std::set<Perm> next;
    for (const auto& x : layer)
      for (const auto& s : perms) {
        Perm y = compose(x, s);
        if (!index.count(y)) next.insert(std::move(y));
      }
    layer.assign(next.begin(), next.end());
    for (const auto& y : layer) {
      index.emplace(y, static_cast<int>(elements.size()));
      elements.push_back(y);
      if (elements.size() > max_order)
        throw SizeLimitError("permutation group closure exceeds the maximum order " + std::to_string(max_order));
    }
  }
  const std::size_t n = elements.size();
  std::vector<int> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elements[a], elements[b]));
  std::vector<int> gens;
  for (const auto& p : perms) gens.push_back(index.at(p));
  return FiniteGroup::from_valid_table(std::move(table), n, std::move(gens));
}

FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& t) {
  const std::size_t n = t.size();
  if (n == 0) throw ValidationError("empty Cayley table");
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i].size() != n) throw ValidationError("Cayley table is not square (row " + std::to_string(i) + ")");
    for (int x : t[i])
      if (x < 0 || static_cast<std::size_t>(x) >= n)
        throw ValidationError("Cayley table entry " + std::to_string(x) + " out of range in row " + std::to_string(i));
  }
  int e = -1;
  for (std::size_t c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = t[c][x] == static_cast<int>(x) && t[x][c] == static_cast<int>(x);
    if (ok) e = static_cast<int>(c);
  }
  if (e < 0) throw ValidationError("Cayley table has no identity element");
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) found = t[a][b] == e && t[b][a] == e;
    if (!found) throw ValidationError("element " + std::to_string(a) + " has no inverse");
  }
  // Relabel: swap e and 0.
  auto relabel = [&](int x) { return x == e ? 0 : (x == 0 ? e : x); };
  std::vector<int> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[static_cast<std::size_t>(relabel(static_cast<int>(a))) * n + static_cast<std::size_t>(relabel(static_cast<int>(b)))] =
          relabel(t[a][b]);
  auto mul = [&](int a, int b) { return table[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)]; };

  // Greedy generating set under the magma operation.
  std::vector<int> gens;
  std::vector<char> in(n, 0);
  std::vector<int> members;
  auto add = [&](int x, std::deque<int>& q) {
    if (in[static_cast<std::size_t>(x)]) return;
    in[static_cast<std::size_t>(x)] = 1;
    members.push_back(x);
    q.push_back(x);
  };
  for (std::size_t cand = (n == 1 ? 0 : 1); cand < n; ++cand) {
    if (in[cand]) continue;
    gens.push_back(static_cast<int>(cand));
    std::deque<int> q;
    add(static_cast<int>(cand), q);
    while (!q.empty()) {
      const int u = q.front();
      q.pop_front();
      for (std::size_t k = 0; k < members.size(); ++k) {
        const int v = members[k];
        add(mul(u, v), q);
        add(mul(v, u), q);
      }
    }
  }
  // Light's associativity test over the generating set.
  for (int s : gens)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const int xi = static_cast<int>(x), yi = static_cast<int>(y);
        if (mul(mul(xi, s), yi) != mul(xi, mul(s, yi)))
          throw ValidationError("Cayley table is not associative: (" + std::to_string(relabel(xi)) + "," +
                                std::to_string(relabel(s)) + "," + std::to_string(relabel(yi)) + ")");
      }
  return FiniteGroup::from_valid_table(std::move(table), n, gens);
}

// ---------------------------------------------------------------------------
// Subgroups

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems{0};
  in[0] = 1;
  std::vector<int> kept;
  // Generators already in the span are dropped.
  for (int s : gens) {
    if (in[static_cast<std::size_t>(s)]) continue;
    kept.push_back(s);
    for (std::size_t head = 0; head < elems.size(); ++head)
      for (int t : kept) {
        const int y = g.mul(elems[head], t);
        if (!in[static_cast<std::size_t>(y)]) {
          in[static_cast<std::size_t>(y)] = 1;
          elems.push_back(y);
        }
      }
  }
  std::sort(elems.begin(), elems.end());
  return {std::move(elems), std::move(kept)};
}

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup s;
  s.elements.resize(g.order());
  std::iota(s.elements.begin(), s.elements.end(), 0);
  s.generators = g.tree_gens();
  return s;
}

void check_subgroup(const FiniteGroup& g, const Subgroup& s) {
  if (s.elements.empty() || s.elements.front() != 0) throw DomainError("subgroup does not contain the identity");
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    const int x = s.elements[i];
    if (x < 0 || static_cast<std::size_t>(x) >= g.order())
      throw DomainError("subgroup element " + elem_name(x) + " is not an element of the group");
    if (i && s.elements[i - 1] >= x) throw DomainError("subgroup elements must be sorted and distinct");
  }
  for (int a : s.elements)
    for (int b : s.elements)
      if (!s.contains(g.mul(a, b)))
        throw DomainError("subgroup is not closed: " + elem_name(a) + "*" + elem_name(b) + " = " + elem_name(g.mul(a, b)));
  for (int x : s.generators)
    if (!s.contains(x)) throw DomainError("subgroup generator " + elem_name(x) + " is not in the subgroup");
  if (generated_subgroup(g, s.generators).elements != s.elements)
    throw DomainError("subgroup generators do not generate the subgroup");
}

SubgroupGroup subgroup_group(const FiniteGroup& g, const Subgroup& s) {
  SubgroupGroup out;
  out.embedding = s.elements;
  out.index_of.assign(g.order(), -1);
  const std::size_t n = s.elements.size();
  for (std::size_t i = 0; i < n; ++i) out.index_of[static_cast<std::size_t>(s.elements[i])] = static_cast<int>(i);
  std::vector<int> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const int p = out.index_of[static_cast<std::size_t>(g.mul(s.elements[a], s.elements[b]))];
      if (p < 0) throw DomainError("subgroup is not closed under multiplication");
      table[a * n + b] = p;
    }
  std::vector<int> gens;
  for (int x : s.generators) {
    const int p = out.index_of[static_cast<std::size_t>(x)];
    if (p < 0) throw DomainError("subgroup generator " + elem_name(x) + " is not in the subgroup");
    gens.push_back(p);
  }
  out.group = FiniteGroup::from_valid_table(std::move(table), n, std::move(gens));
  return out;
}

namespace {

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements < b.elements;
}

std::vector<int> conjugate_set(const FiniteGroup& g, const std::vector<int>& elems, int x) {
  std::vector<int> out;
  out.reserve(elems.size());
  for (int a : elems) out.push_back(g.conjugate(a, x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Subgroup> bicyclic_subgroups(const FiniteGroup& g, bool up_to_conjugacy) {
  // Cyclic subgroups, each with its smallest-index generator.
  std::map<std::vector<int>, int> cyclic;
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::vector<int> powers{0};
    for (int y = static_cast<int>(x); y != 0; y = g.mul(y, static_cast<int>(x))) powers.push_back(y);
    std::sort(powers.begin(), powers.end());
    cyclic.emplace(std::move(powers), static_cast<int>(x));
  }
  std::vector<std::pair<std::vector<int>, int>> cyc(cyclic.begin(), cyclic.end());
  std::map<std::vector<int>, std::vector<int>> found;
  for (std::size_t i = 0; i < cyc.size(); ++i)
    for (std::size_t j = i; j < cyc.size(); ++j) {
      const int a = cyc[i].second, b = cyc[j].second;
      if (!g.commute(a, b)) continue;
      std::vector<int> elems;
      for (int u : cyc[i].first)
        for (int v : cyc[j].first) elems.push_back(g.mul(u, v));
      std::sort(elems.begin(), elems.end());
      elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
      if (found.count(elems)) continue;
      std::vector<int> gens;
      const bool b_in_a = std::binary_search(cyc[i].first.begin(), cyc[i].first.end(), b);
      const bool a_in_b = std::binary_search(cyc[j].first.begin(), cyc[j].first.end(), a);
      if (b_in_a) {
        if (a != 0) gens = {a};
      } else if (a_in_b) {
        if (b != 0) gens = {b};
      } else {
        gens = {a, b};
      }
      found.emplace(std::move(elems), std::move(gens));
    }
  std::vector<Subgroup> out;
  for (auto& [elems, gens] : found) {
    if (up_to_conjugacy) {
      bool minimal = true;
      for (std::size_t x = 1; x < g.order() && minimal; ++x)
        if (conjugate_set(g, elems, static_cast<int>(x)) < elems) minimal = false;
      if (!minimal) continue;
    }
    out.push_back({elems, gens});
  }
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

namespace {

std::vector<int> reduced_generators(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<int> kept;
  std::size_t reached = 1;
  for (int s : gens) {
    if (s == 0) continue;
    auto sub = generated_subgroup(g, kept);
    if (sub.contains(s)) continue;
    kept.push_back(s);
    reached = generated_subgroup(g, kept).order();
    if (reached == g.order()) break;
  }
  return kept;
}

std::vector<Perm> all_perms(int k) {
  Perm p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

std::vector<Subgroup> subgroups_of_small_index(const FiniteGroup& g, int max_index) {
  if (max_index < 1 || max_index > 4) throw DomainError("subgroups_of_small_index supports indices 1..4");
  const std::vector<int> gens = reduced_generators(g, g.tree_gens());
  if (gens.size() > 6) throw SizeLimitError("too many generators for the index search");
  const std::size_t n = g.order();
  // Local spanning tree over the reduced generators.
  std::vector<int> parent(n, -1), step(n, -1), order{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t h = 0; h < order.size(); ++h)
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int y = g.mul(order[h], gens[i]);
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      parent[static_cast<std::size_t>(y)] = order[h];
      step[static_cast<std::size_t>(y)] = static_cast<int>(i);
      order.push_back(y);
    }

  std::set<std::vector<int>> found;
  std::vector<Subgroup> out;
  for (int k = 1; k <= max_index; ++k) {
    if (n % static_cast<std::size_t>(k) != 0) continue;
    const auto perms = all_perms(k);
    const std::size_t np = perms.size();
    std::vector<std::size_t> choice(gens.size(), 0);
    std::vector<Perm> images(n);
    for (;;) {
      images[0] = perms[0];
      for (std::size_t h = 1; h < order.size(); ++h) {
        const int x = order[h];
        const Perm& p = images[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        const Perm& s = perms[choice[static_cast<std::size_t>(step[static_cast<std::size_t>(x)])]];
        Perm r(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) r[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])];
        images[static_cast<std::size_t>(x)] = std::move(r);
      }
      bool hom = true;
      for (std::size_t x = 0; x < n && hom; ++x)
        for (std::size_t i = 0; i < gens.size() && hom; ++i) {
          const Perm& px = images[x];
          const Perm& s = perms[choice[i]];
          const Perm& pxs = images[static_cast<std::size_t>(g.mul(static_cast<int>(x), gens[i]))];
          for (int j = 0; j < k && hom; ++j)
            hom = pxs[static_cast<std::size_t>(j)] == s[static_cast<std::size_t>(px[static_cast<std::size_t>(j)])];
        }
      if (hom) {
        std::vector<char> orbit(static_cast<std::size_t>(k), 0);
        orbit[0] = 1;
        for (std::size_t x = 0; x < n; ++x) orbit[static_cast<std::size_t>(images[x][0])] = 1;
        if (std::all_of(orbit.begin(), orbit.end(), [](char c) { return c; })) {
          std::vector<int> stab;
          for (std::size_t x = 0; x < n; ++x)
            if (images[x][0] == 0) stab.push_back(static_cast<int>(x));
          if (found.insert(stab).second) {
            Subgroup s{stab, {}};
            s.generators = reduced_generators(g, stab);
            out.push_back(std::move(s));
          }
        }
      }
      std::size_t pos = 0;
      while (pos < choice.size() && ++choice[pos] == np) choice[pos++] = 0;
      if (pos == choice.size()) break;
    }
  }
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

// ---------------------------------------------------------------------------
// Abelian structure

AbelianDecomposition abelian_structure(const FiniteGroup& g, const Subgroup& s) {
  for (int a : s.elements)
    for (int b : s.elements)
      if (!g.commute(a, b))
        throw DomainError("subgroup is not abelian: elements " + elem_name(a) + " and " + elem_name(b) + " do not commute");
  std::vector<int> gens = s.generators;
  if (generated_subgroup(g, gens).elements != s.elements) gens = reduced_generators(g, s.elements);
  gens.erase(std::remove(gens.begin(), gens.end(), 0), gens.end());
  const std::size_t k = gens.size();
  std::unordered_map<int, Vec> word{{0, Vec(k, 0)}};
  std::vector<int> queue{0};
  std::set<Vec> relations;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int x = queue[h];
    for (std::size_t i = 0; i < k; ++i) {
      const int y = g.mul(x, gens[i]);
      Vec w = word.at(x);
      w[i] += 1;
      auto it = word.find(y);
      if (it == word.end()) {
        word.emplace(y, w);
        queue.push_back(y);
        continue;
      }
      Vec rel(k);
      for (std::size_t j = 0; j < k; ++j) rel[j] = w[j] - it->second[j];
      if (std::any_of(rel.begin(), rel.end(), [](auto v) { return v != 0; })) relations.insert(rel);
    }
  }
  AbelianStructure q = quotient_structure(k, {relations.begin(), relations.end()});
  AbelianDecomposition out;
  out.invariants = q.invariant_factors();
  for (const auto& w : q.witnesses()) {
    int x = 0;
    for (std::size_t i = 0; i < k; ++i) x = g.mul(x, g.power(gens[i], w[i]));
    out.generators.push_back(x);
  }
  return out;
}

AbelianDecomposition abelian_structure(const FiniteGroup& g) { return abelian_structure(g, whole_group(g)); }

bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target, const GroupHom& h) {
  if (h.images.size() != source.order()) return false;
  for (int x : h.images)
    if (x < 0 || static_cast<std::size_t>(x) >= target.order()) return false;
  for (std::size_t a = 0; a < source.order(); ++a)
    for (std::size_t b = 0; b < source.order(); ++b)
      if (h.images[static_cast<std::size_t>(source.mul(static_cast<int>(a), static_cast<int>(b)))] !=
          target.mul(h.images[a], h.images[b]))
        return false;
  return true;
}

// ---------------------------------------------------------------------------
// Products and extensions

FiniteGroup semidirect_product(const FiniteGroup& a, const FiniteGroup& b, const std::vector<std::vector<int>>& action) {
  const std::size_t na = a.order(), nb = b.order();
  if (action.size() != b.generators().size())
    throw ValidationError("semidirect product: expected one automorphism per generator of the acting group (" +
                          std::to_string(b.generators().size()) + "), got " + std::to_string(action.size()));
  for (std::size_t i = 0; i < action.size(); ++i) {
    const auto& phi = action[i];
    if (phi.size() != na) throw ValidationError("semidirect product: automorphism " + std::to_string(i) + " has wrong length");
    std::vector<char> hit(na, 0);
    for (int x : phi) {
      if (x < 0 || static_cast<std::size_t>(x) >= na || hit[static_cast<std::size_t>(x)])
        throw ValidationError("semidirect product: image list " + std::to_string(i) + " is not a bijection");
      hit[static_cast<std::size_t>(x)] = 1;
    }
    if (!is_homomorphism(a, a, {phi}))
      throw ValidationError("semidirect product: image list " + std::to_string(i) + " is not an automorphism");
  }
  // phi_x for every x in B, extended along the spanning tree.
  std::vector<std::vector<int>> phi(nb);
  phi[0].resize(na);
  std::iota(phi[0].begin(), phi[0].end(), 0);
  auto compose = [&](const std::vector<int>& f, const std::vector<int>& h) {
    std::vector<int> r(na);
    for (std::size_t x = 0; x < na; ++x) r[x] = f[static_cast<std::size_t>(h[x])];
    return r;
  };
  auto action_of = [&](int s) -> const std::vector<int>& {
    const auto& gens = b.generators();
    return action[static_cast<std::size_t>(std::find(gens.begin(), gens.end(), s) - gens.begin())];
  };
  for (std::size_t h = 1; h < nb; ++h) {
    const int x = b.bfs_order()[h];
    const int s = b.tree_gens()[static_cast<std::size_t>(b.tree_step(x))];
    phi[static_cast<std::size_t>(x)] = compose(phi[static_cast<std::size_t>(b.tree_parent(x))], action_of(s));
  }
  for (std::size_t i = 0; i < action.size(); ++i)
    for (std::size_t x = 0; x < nb; ++x) {
      const int xs = b.mul(static_cast<int>(x), b.generators()[i]);
      if (phi[static_cast<std::size_t>(xs)] != compose(phi[x], action[i]))
        throw ValidationError("semidirect product: the given automorphisms do not define an action (generator " +
                              std::to_string(i) + ")");
    }
  const std::size_t n = na * nb;
  std::vector<int> table(n * n);
  for (std::size_t a1 = 0; a1 < na; ++a1)
    for (std::size_t b1 = 0; b1 < nb; ++b1)
      for (std::size_t a2 = 0; a2 < na; ++a2)
        for (std::size_t b2 = 0; b2 < nb; ++b2) {
          const std::size_t ar = static_cast<std::size_t>(a.mul(static_cast<int>(a1), phi[b1][a2]));
          const std::size_t br = static_cast<std::size_t>(b.mul(static_cast<int>(b1), static_cast<int>(b2)));
          table[(a1 * nb + b1) * n + (a2 * nb + b2)] = static_cast<int>(ar * nb + br);
        }
  std::vector<int> gens;
  for (int x : a.generators()) gens.push_back(static_cast<int>(static_cast<std::size_t>(x) * nb));
  for (int y : b.generators()) gens.push_back(y);
  return FiniteGroup::from_valid_table(std::move(table), n, std::move(gens));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  std::vector<int> id(a.order());
  std::iota(id.begin(), id.end(), 0);
  return semidirect_product(a, b, std::vector<std::vector<int>>(b.generators().size(), id));
}

FiniteGroup central_extension_from_cocycle(const FiniteGroup& g, std::int64_t n, const std::vector<std::int64_t>& c0) {
  const std::size_t m = g.order();
  if (n < 1) throw ValidationError("central extension: modulus must be positive");
  if (c0.size() != m * m) throw ValidationError("central extension: cocycle table must have |G|^2 entries");
  std::vector<std::int64_t> c(c0.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_reduce(c0[i], n);
  auto at = [&](int x, int y) { return c[static_cast<std::size_t>(x) * m + static_cast<std::size_t>(y)]; };
  for (std::size_t x = 0; x < m; ++x)
    if (at(0, static_cast<int>(x)) != 0 || at(static_cast<int>(x), 0) != 0)
      throw ValidationError("central extension: cocycle is not normalized at element " + std::to_string(x));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z) {
        const int xi = static_cast<int>(x), yi = static_cast<int>(y), zi = static_cast<int>(z);
        if (mod_reduce(at(xi, yi) + at(g.mul(xi, yi), zi) - at(yi, zi) - at(xi, g.mul(yi, zi)), n) != 0)
          throw ValidationError("central extension: cocycle identity fails at (" + std::to_string(x) + "," +
                                std::to_string(y) + "," + std::to_string(z) + ")");
      }
  const std::size_t total = static_cast<std::size_t>(n) * m;
  std::vector<int> table(total * total);
  for (std::size_t z1 = 0; z1 < static_cast<std::size_t>(n); ++z1)
    for (std::size_t g1 = 0; g1 < m; ++g1)
      for (std::size_t z2 = 0; z2 < static_cast<std::size_t>(n); ++z2)
        for (std::size_t g2 = 0; g2 < m; ++g2) {
          const int gi = static_cast<int>(g1), hi = static_cast<int>(g2);
          const auto z = static_cast<std::size_t>(
              mod_reduce(static_cast<std::int64_t>(z1 + z2) + at(gi, hi), n));
          table[(z1 * m + g1) * total + (z2 * m + g2)] = static_cast<int>(z * m + static_cast<std::size_t>(g.mul(gi, hi)));
        }
  std::vector<int> gens(g.generators());
  if (n > 1) gens.push_back(static_cast<int>(m));
  return FiniteGroup::from_valid_table(std::move(table), total, std::move(gens));
}

FiniteGroup quotient_group(const FiniteGroup& g, const Subgroup& normal, std::vector<int>* coset_of) {
  check_subgroup(g, normal);
  for (std::size_t x = 0; x < g.order(); ++x)
    for (int a : normal.elements)
      if (!normal.contains(g.conjugate(a, static_cast<int>(x))))
        throw DomainError("subgroup is not normal: conjugating " + elem_name(a) + " by " + std::to_string(x) +
                          " leaves it");
  std::vector<int> coset(g.order(), -1);
  std::vector<int> reps;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (coset[x] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(static_cast<int>(x));
    for (int a : normal.elements) coset[static_cast<std::size_t>(g.mul(static_cast<int>(x), a))] = id;
  }
  const std::size_t k = reps.size();
  std::vector<int> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = coset[static_cast<std::size_t>(g.mul(reps[i], reps[j]))];
  std::vector<int> gens;
  for (int s : g.generators()) gens.push_back(coset[static_cast<std::size_t>(s)]);
  if (coset_of) *coset_of = coset;
  return FiniteGroup::from_valid_table(std::move(table), k, std::move(gens));
}

std::vector<int> center(const FiniteGroup& g) {
  std::vector<int> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int s : g.tree_gens())
      if (!g.commute(static_cast<int>(x), s)) central = false;
    if (central) out.push_back(static_cast<int>(x));
  }
  return out;
}

}  // namespace brq
