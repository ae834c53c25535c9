#pragma once

// Matrix groups and example actions used by the tests, the acceptance suite
// and `brq verify`.

#include <string>
#include <vector>

#include "brq/brauer.hpp"
#include "brq/cohomology.hpp"
#include "brq/cyclotomic.hpp"
#include "brq/group.hpp"

namespace brq {

/// Closure of invertible matrices under multiplication. Element 0 is the
/// identity and generator i is gens[i]; elements[x] is the matrix of x.
struct MatrixGroup {
  FiniteGroup group;
  std::vector<CycloMatrix> elements;
};
MatrixGroup matrix_group(const std::vector<CycloMatrix>& gens, std::size_t max_order = 1000);

CycloMatrix clock_matrix(int n);  // diag(1, z, ..., z^{n-1})
CycloMatrix shift_matrix(int n);  // e_i -> e_{i+1}
/// P with P[i][p(i)] = 1, so that permutations composed left to right multiply.
CycloMatrix permutation_matrix(const Perm& p);
CycloMatrix int_matrix(const std::vector<Vec>& rows);

struct LatticeExample {
  std::string name;
  std::vector<std::vector<Vec>> generators;
  bool bicyclic = false;

  FiniteGroup group() const;
  GModule module() const;
};

/// One subgroup per conjugacy class of finite subgroups of GL_2(Z).
std::vector<LatticeExample> gl2z_finite_subgroups();
/// S3 permuting three vectors with zero sum.
LatticeExample s3_root_lattice();

/// Z/n x Z/n acting on P^{n-1} by shift and clock.
ProjectiveAction heisenberg_action(int n);
/// (Z/n x Z/n) x| Z/2 on Gr(n/2, n): shift, clock and the correlation phi = 1.
SemilinearAction heisenberg_correlation_action(int n);
/// Z/2 generated by a single correlation; phi must be symmetric or skew.
SemilinearAction single_correlation_action(const CycloMatrix& phi);

struct NamedAction {
  std::string name;
  SemilinearAction action;  // collineations only
};
/// Linear representations (gamma = 0).
std::vector<NamedAction> linear_action_corpus();
/// Projective representations, several with gamma != 0.
std::vector<NamedAction> projective_action_corpus();

SemilinearAction as_collineations(const FiniteGroup& g, const std::vector<CycloMatrix>& generator_matrices);

}  // namespace brq
