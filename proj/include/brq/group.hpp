#pragma once

// Finite groups given by Cayley tables.

#include <cstdint>
#include <string>
#include <vector>

#include "brq/linalg.hpp"

namespace brq {

/// Size limits. BRQ_MAX_ORDER in the environment overrides the cohomology
/// limits (and raises the construction limit if larger).
struct Limits {
  std::size_t group_order = 4096;
  std::size_t finite_cohomology = 96;
  std::size_t lattice_cohomology = 24;
  std::size_t lattice_rank = 8;

  static Limits defaults();
};

using Perm = std::vector<int>;

class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Builds from a validated table whose identity is element 0. Generators must
  /// generate; this is checked.
  static FiniteGroup from_valid_table(std::vector<int> table, std::size_t order, std::vector<int> generators,
                                      std::vector<std::string> labels = {});

  std::size_t order() const { return order_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  static constexpr int identity() { return 0; }
  const std::vector<int>& generators() const { return generators_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& table() const { return table_; }

  int power(int g, std::int64_t k) const;
  int element_order(int g) const;
  int conjugate(int g, int x) const { return mul(mul(inv(x), g), x); }  // x^-1 g x
  bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }
  bool is_abelian() const;
  std::int64_t exponent() const;

  // Breadth-first spanning tree over the distinct non-identity generators:
  // x = tree_parent(x) * tree_gens()[tree_step(x)] for x != 0.
  const std::vector<int>& tree_gens() const { return tree_gens_; }
  int tree_parent(int x) const { return parent_[static_cast<std::size_t>(x)]; }
  int tree_step(int x) const { return step_[static_cast<std::size_t>(x)]; }
  /// Elements in breadth-first order (identity first).
  const std::vector<int>& bfs_order() const { return bfs_; }

  bool operator==(const FiniteGroup& o) const { return order_ == o.order_ && table_ == o.table_; }

 private:
  std::size_t order_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> generators_;
  std::vector<std::string> labels_;
  std::vector<int> tree_gens_;
  std::vector<int> parent_;
  std::vector<int> step_;
  std::vector<int> bfs_;
};

struct Subgroup {
  std::vector<int> elements;    // sorted, contains 0
  std::vector<int> generators;  // generate the subgroup

  std::size_t order() const { return elements.size(); }
  bool contains(int g) const;
  bool operator==(const Subgroup& o) const { return elements == o.elements; }
};

/// A subgroup as a group in its own right: element i of `group` is
/// embedding[i] of the parent, with embedding sorted (so 0 maps to 0).
struct SubgroupGroup {
  FiniteGroup group;
  std::vector<int> embedding;
  std::vector<int> index_of;  // parent element -> subgroup index, or -1
};

struct GroupHom {
  std::vector<int> images;  // one per source element
};

struct AbelianDecomposition {
  std::vector<std::int64_t> invariants;  // d1 | d2 | ...
  std::vector<int> generators;           // element of order d_i
};

FiniteGroup from_permutation_generators(int degree, const std::vector<Perm>& perms,
                                        std::size_t max_order = Limits::defaults().group_order);
/// Validates group axioms; relabels so the identity is element 0.
FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table);

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);
/// Checks closure; throws DomainError naming the offending element.
void check_subgroup(const FiniteGroup& g, const Subgroup& s);
SubgroupGroup subgroup_group(const FiniteGroup& g, const Subgroup& s);
Subgroup whole_group(const FiniteGroup& g);

std::vector<Subgroup> bicyclic_subgroups(const FiniteGroup& g, bool up_to_conjugacy = true);
/// Subgroups of index at most max_index (at most 4 supported), found as point
/// stabilizers of transitive actions; sorted by (order, elements).
std::vector<Subgroup> subgroups_of_small_index(const FiniteGroup& g, int max_index);

AbelianDecomposition abelian_structure(const FiniteGroup& g, const Subgroup& s);
AbelianDecomposition abelian_structure(const FiniteGroup& g);

bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target, const GroupHom& h);

/// action[i] is the automorphism of A given by B's i-th generator, as an image
/// list over A's elements. Element (a, b) has index a*|B| + b and
/// (a1,b1)(a2,b2) = (a1 phi_{b1}(a2), b1 b2).
FiniteGroup semidirect_product(const FiniteGroup& a, const FiniteGroup& b, const std::vector<std::vector<int>>& action);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Element (z, g) has index z*|G| + g and (z1,g1)(z2,g2) = (z1+z2+c(g1,g2), g1 g2).
/// c is indexed c[g1*|G| + g2] with values mod n.
FiniteGroup central_extension_from_cocycle(const FiniteGroup& g, std::int64_t n, const std::vector<std::int64_t>& c);

/// Cayley table of G/N for a normal subgroup N; cosets ordered by smallest
/// element.
FiniteGroup quotient_group(const FiniteGroup& g, const Subgroup& normal, std::vector<int>* coset_of = nullptr);

std::vector<int> center(const FiniteGroup& g);

}  // namespace brq
