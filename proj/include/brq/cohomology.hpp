#pragma once

// Low-degree cohomology of finite groups.
//
// Cochains are stored as full tables. For finite modules Z/d_1 + ... + Z/d_k
// module elements are stored in the embedding into (Z/N)^k, N = lcm(d_i),
// y_i = (N/d_i) m_i. Q/Z values are stored as numerators a of a/N.

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "brq/group.hpp"
#include "brq/linalg.hpp"

namespace brq {

struct Cochain {
  int degree = 2;
  std::size_t n = 0;           // group order
  std::size_t k = 1;           // module rank
  std::int64_t modulus = 0;    // 0 for integer values
  std::vector<std::int64_t> values;

  std::int64_t& at(int g, int i) { return values[static_cast<std::size_t>(g) * k + static_cast<std::size_t>(i)]; }
  std::int64_t at(int g, int i) const { return values[static_cast<std::size_t>(g) * k + static_cast<std::size_t>(i)]; }
  std::int64_t& at(int g, int h, int i) {
    return values[(static_cast<std::size_t>(g) * n + static_cast<std::size_t>(h)) * k + static_cast<std::size_t>(i)];
  }
  std::int64_t at(int g, int h, int i) const {
    return values[(static_cast<std::size_t>(g) * n + static_cast<std::size_t>(h)) * k + static_cast<std::size_t>(i)];
  }
  static Cochain zero(int degree, std::size_t n, std::size_t k, std::int64_t modulus);
};

class GModule {
 public:
  enum class Kind { trivial_qz, finite, lattice };

  static GModule trivial_qz(const FiniteGroup& g);
  /// generator_action[i] is the k x k integer matrix of G's i-th generator
  /// acting on column vectors; entry (i, j) must satisfy d_i | a_ij d_j.
  static GModule finite(const FiniteGroup& g, std::vector<std::int64_t> factors,
                        const std::vector<std::vector<Vec>>& generator_action);
  static GModule lattice(const FiniteGroup& g, std::size_t rank, const std::vector<std::vector<Vec>>& generator_action);
  static GModule trivial_finite(const FiniteGroup& g, std::int64_t n);
  static GModule trivial_lattice(const FiniteGroup& g, std::size_t rank);

  Kind kind() const { return kind_; }
  const FiniteGroup& group() const { return *group_; }
  std::size_t rank() const { return rank_; }
  const std::vector<std::int64_t>& factors() const { return factors_; }
  /// lcm of the factors for finite modules; 0 otherwise.
  std::int64_t modulus() const { return modulus_; }

  /// Integer matrix of g (rows), entries of row i reduced mod d_i for finite modules.
  const std::vector<Vec>& matrix(int g) const { return matrices_[static_cast<std::size_t>(g)]; }
  /// Action in storage coordinates (embedding for finite modules).
  Vec act(int g, const Vec& m) const;
  bool trivial_action() const;
  bool faithful() const;

  /// The module restricted to a subgroup.
  GModule restrict_to(const SubgroupGroup& s) const;

 private:
  GModule() = default;
  void extend(const std::vector<std::vector<Vec>>& generator_action);

  Kind kind_ = Kind::trivial_qz;
  std::shared_ptr<const FiniteGroup> group_;
  std::size_t rank_ = 1;
  std::vector<std::int64_t> factors_;
  std::int64_t modulus_ = 0;
  std::vector<std::vector<Vec>> matrices_;  // original coordinates
  std::vector<std::vector<Vec>> storage_;   // embedding coordinates (finite only)
};

class CohomologyGroup {
 public:
  int degree() const { return degree_; }
  const AbelianStructure& structure() const { return structure_; }
  const std::vector<std::int64_t>& invariant_factors() const { return structure_.invariant_factors(); }
  /// One cocycle per invariant factor.
  const std::vector<Cochain>& representatives() const { return reps_; }
  /// Realization modulus: N for Q/Z and finite coefficients, |G| for lattice H^2.
  std::int64_t modulus() const { return modulus_; }
  const GModule& module() const { return *module_; }

  /// Class coordinates of a cocycle (each reduced mod its invariant factor).
  Vec reduce(const Cochain& c) const { return reducer_(c); }
  /// Cocycle representing sum coords_i * representative_i.
  Cochain cocycle_of(const Vec& coords) const;

 private:
  friend struct CohomologyBuilder;
  int degree_ = 0;
  std::shared_ptr<const GModule> module_;
  AbelianStructure structure_;
  std::vector<Cochain> reps_;
  std::int64_t modulus_ = 0;
  std::function<Vec(const Cochain&)> reducer_;
};

CohomologyGroup h1(const GModule& m, std::int64_t qz_modulus = 0, const Limits& limits = Limits::defaults());
CohomologyGroup h2(const GModule& m, std::int64_t qz_modulus = 0, const Limits& limits = Limits::defaults());
/// H^2(G, Q/Z) realized as H^2(G, Z/N) modulo Bockstein classes; N defaults
/// to |G| and must be a multiple of |G|.
CohomologyGroup h2_qz(const FiniteGroup& g, std::int64_t modulus = 0, const Limits& limits = Limits::defaults());

/// (g, h) -> (chi(g) + chi(h) - chi(gh)) / N mod N for a homomorphism chi: G -> Z/N.
Cochain connecting_bockstein(const FiniteGroup& g, const Cochain& chi);

/// Cocycle identity check (exhaustive).
bool is_cocycle(const GModule& m, const Cochain& c);
/// delta of a 1-cochain.
Cochain coboundary(const GModule& m, const Cochain& f);

Cochain restrict_cochain(const Cochain& c, const SubgroupGroup& s);
/// Class coordinates of the restriction of a class of `over_g` to the subgroup.
Vec restrict_class(const CohomologyGroup& over_g, const Vec& coords, const CohomologyGroup& over_s,
                   const SubgroupGroup& s);

/// Transfer of a Q/Z-valued 2-cochain from a subgroup H to G, using right
/// cosets with smallest-index representatives.
Cochain corestrict_cochain(const FiniteGroup& g, const SubgroupGroup& h, const Cochain& c);
Vec corestrict_class(const CohomologyGroup& over_h, const Vec& coords, const CohomologyGroup& over_g,
                     const SubgroupGroup& h);

/// Invariant factors of H^degree(A, M) (degree <= 2) from the cyclic or
/// bicyclic small complex. A must be abelian on at most two generators.
std::vector<std::int64_t> small_complex_h(const GModule& m, int degree);

}  // namespace brq
