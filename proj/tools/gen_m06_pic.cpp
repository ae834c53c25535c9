// Writes fixtures/m06_pic.json: the Picard lattice of the moduli space of
// stable six-pointed rational curves with A4 permuting the points in pairs.
//
// Pic is spanned by the boundary divisors D_I (I and its complement giving
// the same divisor, 2 <= |I| <= 3) subject to the Keel relations
//   sum_{i,j in I; k,l not in I} D_I = sum_{i,k in I; j,l not in I} D_I.
// A basis comes from the Smith form of the relation matrix.

#include <bit>
#include <iostream>
#include <map>

#include <json.hpp>

#include "brq/cohomology.hpp"
#include "brq/group.hpp"
#include "brq/linalg.hpp"

using namespace brq;

namespace {

constexpr int kPoints = 6;
constexpr unsigned kAll = (1u << kPoints) - 1;

unsigned canonical(unsigned mask) {
  const int size = std::popcount(mask);
  if (size > kPoints / 2 || (size == kPoints / 2 && !(mask & 1u))) return kAll & ~mask;
  return mask;
}

unsigned image_of(const Perm& p, unsigned mask) {
  unsigned out = 0;
  for (int i = 0; i < kPoints; ++i)
    if (mask & (1u << i)) out |= 1u << p[static_cast<std::size_t>(i)];
  return out;
}

int fail(const std::string& what) {
  std::cerr << "gen_m06_pic: " << what << "\n";
  return 1;
}

}  // namespace

int main() {
  std::vector<unsigned> divisors;
  for (unsigned m = 0; m <= kAll; ++m) {
    const int size = std::popcount(m);
    if (size >= 2 && size <= kPoints - 2 && canonical(m) == m) divisors.push_back(m);
  }
  std::map<unsigned, std::size_t> index;
  for (std::size_t i = 0; i < divisors.size(); ++i) index[divisors[i]] = i;
  const std::size_t n = divisors.size();
  if (n != 25) return fail("expected 25 boundary divisors, found " + std::to_string(n));

  std::vector<Vec> relations;
  for (int i = 0; i < kPoints; ++i)
    for (int j = 0; j < kPoints; ++j)
      for (int k = 0; k < kPoints; ++k)
        for (int l = 0; l < kPoints; ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
          Vec row(n, 0);
          for (unsigned m = 0; m <= kAll; ++m) {
            const int size = std::popcount(m);
            if (size < 2 || size > kPoints - 2) continue;
            auto in = [m](int x) { return (m >> x) & 1u; };
            if (in(i) && in(j) && !in(k) && !in(l)) row[index.at(canonical(m))] += 1;
            if (in(i) && in(k) && !in(j) && !in(l)) row[index.at(canonical(m))] -= 1;
          }
          relations.push_back(row);
        }

  const IntMatrix r = IntMatrix::from_rows(relations, n);
  const SmithForm s = smith_normal_form(r);
  std::size_t rank = 0;
  for (std::size_t d = 0; d < std::min(s.D.rows(), s.D.cols()); ++d) {
    if (s.D(d, d) == 0) break;
    if (s.D(d, d) != 1) return fail("the relation lattice is not saturated");
    ++rank;
  }
  const std::size_t pic_rank = n - rank;
  if (pic_rank != 16) return fail("expected Picard rank 16, found " + std::to_string(pic_rank));

  // y = x V: relations span the first `rank` coordinates.
  const std::vector<Perm> generators = {{2, 3, 4, 5, 0, 1}, {1, 0, 3, 2, 4, 5}, {1, 0, 2, 3, 5, 4}};
  std::vector<std::vector<Vec>> action;
  // Row vectors x -> x P_p push D_I to D_{p(I)}, a right action when
  // permutations compose left to right. The left module has g acting by the
  // transpose of the matrix of g^-1.
  for (const Perm& p : generators) {
    Perm inverse(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inverse[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    IntMatrix perm(n, n);
    for (std::size_t a = 0; a < n; ++a) perm(a, index.at(canonical(image_of(inverse, divisors[a])))) = 1;
    const IntMatrix a = s.V_inverse * perm * s.V;
    for (std::size_t x = 0; x < rank; ++x)
      for (std::size_t y = rank; y < n; ++y)
        if (a(x, y) != 0) return fail("relations are not preserved");
    std::vector<Vec> m(pic_rank, Vec(pic_rank));
    for (std::size_t x = 0; x < pic_rank; ++x)
      for (std::size_t y = 0; y < pic_rank; ++y) m[y][x] = a(rank + x, rank + y).get_si();
    action.push_back(m);
  }

  const FiniteGroup g = from_permutation_generators(kPoints, generators);
  if (g.order() != 12) return fail("the permutations do not generate A4");
  GModule::lattice(g, pic_rank, action);  // validates the action

  std::cout << "{\n  \"group\": {\"kind\": \"permutation\", \"degree\": 6, \"generators\": "
            << nlohmann::json(generators).dump() << "},\n";
  std::cout << "  \"pic\": {\n    \"kind\": \"lattice\",\n    \"rank\": " << pic_rank << ",\n    \"action\": [\n";
  for (std::size_t gi = 0; gi < action.size(); ++gi) {
    std::cout << "      [\n";
    for (std::size_t x = 0; x < pic_rank; ++x)
      std::cout << "        " << nlohmann::json(action[gi][x]).dump() << (x + 1 < pic_rank ? "," : "") << "\n";
    std::cout << "      ]" << (gi + 1 < action.size() ? "," : "") << "\n";
  }
  std::cout << "    ]\n  },\n  \"flags\": {\"fixed_point\": true}\n}\n";
  return 0;
}
