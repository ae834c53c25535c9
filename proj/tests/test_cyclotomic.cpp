#include <gtest/gtest.h>

#include <random>

#include "brq/cyclotomic.hpp"
#include "brq/error.hpp"

using namespace brq;

namespace {

CycloNumber random_number(std::mt19937& rng, std::int64_t m) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  QPoly p(static_cast<std::size_t>(euler_phi(m)));
  for (auto& q : p) q = mpq_class(num(rng), den(rng));
  return CycloNumber(m, p);
}

CycloMatrix random_matrix(std::mt19937& rng, std::size_t n, std::int64_t m) {
  CycloMatrix a(n, n, m);
  std::uniform_int_distribution<int> d(-2, 2), k(0, static_cast<int>(m) - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = CycloNumber::rational(d(rng), m) + CycloNumber::zeta(m, k(rng)).pow(d(rng) > 0 ? 1 : 2);
  return a;
}

}  // namespace

TEST(Cyclotomic, Polynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (QPoly{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (QPoly{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (QPoly{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (QPoly{1, 0, -1, 0, 1}));
  EXPECT_EQ(euler_phi(24), 8);
}

TEST(Cyclotomic, Arithmetic) {
  EXPECT_EQ(CycloNumber::zeta(4) * CycloNumber::zeta(4), CycloNumber::rational(-1));
  EXPECT_EQ(CycloNumber::zeta(8).inverse(), CycloNumber::zeta(8, 7));
  EXPECT_TRUE((CycloNumber(3, {1, 1}) + CycloNumber(3, {-1, -1})).is_zero());
  EXPECT_EQ(CycloNumber::zeta(3) * CycloNumber::zeta(4), CycloNumber::zeta(12, 7));
  EXPECT_THROW(CycloNumber(5).inverse(), DomainError);
}

TEST(Cyclotomic, FieldAxioms) {
  std::mt19937 rng(17);
  for (std::int64_t m : {1, 3, 4, 5, 8, 12, 15, 24}) {
    for (int t = 0; t < 4; ++t) {
      auto a = random_number(rng, m), b = random_number(rng, m), c = random_number(rng, m);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), CycloNumber::rational(1, m));
    }
  }
}

TEST(Cyclotomic, RootsOfUnity) {
  EXPECT_EQ(CycloNumber::rational(1).root_of_unity_order(), 1);
  EXPECT_EQ(CycloNumber::zeta(8, 3).root_of_unity_order(), 8);
  EXPECT_FALSE((CycloNumber::rational(1, 4) + CycloNumber::zeta(4)).root_of_unity_order());
  EXPECT_EQ((-CycloNumber::zeta(3)).root_of_unity_order(), 6);
  EXPECT_EQ(CycloNumber::rational(-1).root_of_unity_order(), 2);
  EXPECT_EQ(CycloNumber::zeta(4).root_of_unity_exponent(8), 2);
  EXPECT_FALSE(CycloNumber::rational(2).root_of_unity_order());
  for (std::int64_t m : {5, 6, 9, 12})
    for (std::int64_t k = 0; k < 2 * m; ++k) {
      auto x = (k % 2 ? -CycloNumber::zeta(m, k) : CycloNumber::zeta(m, k));
      auto t = x.root_of_unity_order();
      ASSERT_TRUE(t.has_value());
      EXPECT_EQ(x.pow(*t), CycloNumber::rational(1, m));
    }
}

TEST(CycloMatrices, Inverse) {
  auto id = CycloMatrix::identity(3, 5);
  EXPECT_EQ(matrix_inverse(id), id);
  CycloMatrix d(2, 2, 3);
  d(0, 0) = CycloNumber::zeta(3);
  d(1, 1) = CycloNumber::zeta(3, 2);
  CycloMatrix di(2, 2, 3);
  di(0, 0) = CycloNumber::zeta(3, 2);
  di(1, 1) = CycloNumber::zeta(3);
  EXPECT_EQ(matrix_inverse(d), di);
  CycloMatrix swap(2, 2);
  swap(0, 1) = CycloNumber::rational(1);
  swap(1, 0) = CycloNumber::rational(1);
  EXPECT_EQ(matrix_inverse(swap), swap);
  EXPECT_THROW(matrix_inverse(CycloMatrix(2, 2)), DomainError);
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    auto a = random_matrix(rng, 3, 8);
    if (determinant(a).is_zero()) continue;
    EXPECT_EQ(a * matrix_inverse(a), CycloMatrix::identity(3, 8));
  }
}

TEST(CycloMatrices, ExteriorPower) {
  std::mt19937 rng(5);
  for (int t = 0; t < 6; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 3);
    auto a = random_matrix(rng, n, 4), b = random_matrix(rng, n, 4);
    EXPECT_EQ(exterior_power(a, 1), a);
    for (int r = 1; r <= static_cast<int>(n); ++r)
      EXPECT_EQ(exterior_power(a * b, r), exterior_power(a, r) * exterior_power(b, r));
    auto top = exterior_power(a, static_cast<int>(n));
    EXPECT_EQ(top(0, 0), determinant(a));
  }
  CycloMatrix d(3, 3);
  for (int i = 0; i < 3; ++i) d(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = CycloNumber::rational(i + 2);
  auto w = exterior_power(d, 2);
  EXPECT_EQ(w(0, 0), CycloNumber::rational(6));
  EXPECT_EQ(w(1, 1), CycloNumber::rational(8));
  EXPECT_EQ(w(2, 2), CycloNumber::rational(12));
  EXPECT_TRUE(w(0, 1).is_zero());
  EXPECT_THROW(exterior_power(d, 4), DomainError);
}

TEST(Hodge, Signs) {
  IntMatrix h = hodge_star(2, 1);
  EXPECT_EQ(h(1, 0), 1);
  EXPECT_EQ(h(0, 1), -1);
  IntMatrix h4 = hodge_star(4, 2);
  EXPECT_EQ(h4(5, 0), 1);  // e01 -> e23
  for (int n = 1; n <= 5; ++n)
    for (int r = 0; r <= n; ++r) {
      IntMatrix twice = hodge_star(n, n - r) * hodge_star(n, r);
      IntMatrix expected = IntMatrix::identity(twice.rows());
      if ((r * (n - r)) % 2)
        for (std::size_t i = 0; i < expected.rows(); ++i) expected(i, i) = -1;
      EXPECT_EQ(twice, expected) << n << " " << r;
    }
}
