#pragma once

// Standard small groups.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "brq/group.hpp"

namespace brq {

FiniteGroup cyclic_group(std::int64_t n);
/// Z/n1 x ... x Z/nk; element index is mixed radix with the last factor
/// varying fastest. Generators are the unit vectors.
FiniteGroup abelian_group(const std::vector<std::int64_t>& factors);
Vec abelian_coordinates(const std::vector<std::int64_t>& factors, int index);
int abelian_index(const std::vector<std::int64_t>& factors, const Vec& coords);

/// Dihedral group of order 2n.
FiniteGroup dihedral_group(int n);
/// Generalized quaternion group of order 4m.
FiniteGroup dicyclic_group(int m);
/// Z/m x| Z/n, the generator of Z/n acting by multiplication by u.
FiniteGroup metacyclic_group(std::int64_t m, std::int64_t n, std::int64_t u);
FiniteGroup symmetric_group(int k);
FiniteGroup alternating_group(int k);

/// Central extension of (Z/p)^k by Z/p with cocycle c(u, v) = sum B_ij u_i v_j (mod p).
FiniteGroup bilinear_extension(std::int64_t p, int k, const std::vector<Vec>& form);

struct NamedGroup {
  std::string name;
  std::function<FiniteGroup()> make;
};

/// Groups with vanishing Bogomolov multiplier, from the abelian-by-cyclic,
/// abelian-by-bicyclic and bicyclic-central-extension families plus S4, A4.
std::vector<NamedGroup> b0_vanishing_corpus();

/// A group of order 64 with Bogomolov multiplier Z/2.
FiniteGroup b0_order64_group();

}  // namespace brq
