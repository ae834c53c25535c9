#pragma once

// Bogomolov multipliers, Amitsur classes of projective and Plücker actions,
// and unramified Brauer groups of quotients.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brq/cohomology.hpp"
#include "brq/cyclotomic.hpp"
#include "brq/group.hpp"

namespace brq {

/// Scalar 2-cocycle of a projective representation and its class.
struct ProjectiveAction {
  FiniteGroup group;
  int dimension = 0;
  std::vector<CycloMatrix> matrices;  // one per element, products along the spanning tree
  std::int64_t conductor = 1;         // defects are conductor-th roots of unity
  Cochain scalar_cocycle;             // Q/Z values a / conductor
};

/// generator_matrices[i] lifts G's i-th generator. Throws DomainError when a
/// defect is not a scalar root of unity.
ProjectiveAction projective_action(const FiniteGroup& g, const std::vector<CycloMatrix>& generator_matrices);

/// Projective action of a group on Gr(r, 2r) by collineations and
/// correlations. A correlation is given by phi : U -> U^dual and sends a
/// subspace S to the annihilator of phi(S).
struct SemilinearAction {
  FiniteGroup group;
  int dimension = 0;
  std::vector<bool> generator_is_correlation;
  std::vector<CycloMatrix> generator_matrices;

  std::vector<bool> is_correlation;   // per element
  std::vector<CycloMatrix> matrices;  // per element (collineation or phi)
  Subgroup collineations;             // index 1 or 2
  bool has_correlations() const { return collineations.order() != group.order(); }
};

SemilinearAction semilinear_action(const FiniteGroup& g, const std::vector<CycloMatrix>& generator_matrices,
                                   const std::vector<bool>& generator_is_correlation);

/// Matrix of the element on Plücker coordinates (lexicographic r-subsets).
CycloMatrix plucker_matrix(const SemilinearAction& a, int element, int r);
/// The projective action of G on the Plücker embedding of Gr(r, n).
ProjectiveAction plucker_action(const SemilinearAction& a, int r);
/// The action of the collineation subgroup on U.
ProjectiveAction collineation_action(const SemilinearAction& a);

CycloMatrix kronecker(const CycloMatrix& a, const CycloMatrix& b);

/// A fixed realization of H^2(G, Q/Z) together with the bicyclic subgroups used
/// for unramified classes.
class BrauerContext {
 public:
  /// modulus 0 means |G|; otherwise a multiple of |G|.
  explicit BrauerContext(const FiniteGroup& g, std::int64_t modulus = 0, bool up_to_conjugacy = true,
                         const Limits& limits = Limits::defaults());

  const FiniteGroup& group() const { return group_; }
  std::int64_t modulus() const { return h2_.modulus(); }
  const CohomologyGroup& h2() const { return h2_; }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }

  /// Class of a Q/Z-valued 2-cocycle of G at any modulus.
  Vec class_of(const Cochain& c) const;
  /// Class coordinates of res_A for the given subgroup index.
  Vec restrict_to(std::size_t subgroup, const Vec& coords) const;
  const CohomologyGroup& subgroup_h2(std::size_t subgroup) const { return sub_h2_[subgroup]; }

 private:
  FiniteGroup group_;
  Limits limits_;
  CohomologyGroup h2_;
  std::vector<Subgroup> subgroups_;
  std::vector<SubgroupGroup> sub_groups_;
  std::vector<CohomologyGroup> sub_h2_;
  std::vector<std::vector<Vec>> restricted_generators_;
};

struct ClassDiagnostic {
  Vec coords;                           // H^2(G) coordinates of a stack generator
  std::optional<std::size_t> detected;  // first subgroup with nonzero image
};

struct BrauerReport {
  std::string kind;
  std::int64_t modulus = 0;
  std::vector<std::int64_t> h2;         // H^2 of G (with lattice part for toric)
  std::vector<Vec> amitsur;             // generators of Am on H^2 coordinates
  AbelianStructure stack_group;
  AbelianStructure unramified_group;
  std::vector<Vec> unramified_witnesses;  // H^2 coordinates
  std::vector<Subgroup> subgroups;
  std::vector<ClassDiagnostic> diagnostics;
  std::vector<std::string> flags;
};

/// Kernel of H^2(G)/<am> -> sum over bicyclic A of H^2(A)/<res_A am>.
BrauerReport unramified_report(const BrauerContext& ctx, const std::vector<Vec>& am, const std::string& kind);

BrauerReport bogomolov_multiplier(const FiniteGroup& g, const Limits& limits = Limits::defaults());
BrauerReport br_nr_linear(const FiniteGroup& g, const Limits& limits = Limits::defaults());
BrauerReport br_nr_projective(const ProjectiveAction& a, const Limits& limits = Limits::defaults());
BrauerReport br_nr_grassmannian(const SemilinearAction& a, int r, const Limits& limits = Limits::defaults());
BrauerReport br_nr_flag(const SemilinearAction& a, const std::vector<int>& r_list,
                        const Limits& limits = Limits::defaults());
BrauerReport br_nr_toric(const GModule& lattice, const Limits& limits = Limits::defaults());

/// H^2(G) / <generators>.
AbelianStructure br_stack_quotient(const CohomologyGroup& h2, const std::vector<Vec>& am_generators);

/// H^2(G) + H^1(G, Pic V) when the caller asserts a G-fixed point.
AbelianStructure br_stack_fixed_point(const FiniteGroup& g, const GModule& pic, bool has_fixed_point,
                                      const Limits& limits = Limits::defaults());

}  // namespace brq
