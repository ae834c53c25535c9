#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>

#include "brq/error.hpp"
#include "brq/linalg.hpp"

using namespace brq;

namespace {

IntMatrix random_int_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

mpz_class det(std::vector<std::vector<mpz_class>> a) {
  // Bareiss fraction-free elimination.
  const std::size_t n = a.size();
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// gcd of all k x k minors
mpz_class minor_gcd(const IntMatrix& m, std::size_t k) {
  mpz_class g = 0;
  std::vector<std::size_t> rows, cols;
  std::function<void(std::size_t)> pick_cols;
  std::function<void(std::size_t)> pick_rows = [&](std::size_t start) {
    if (rows.size() == k) {
      pick_cols(0);
      return;
    }
    for (std::size_t i = start; i < m.rows(); ++i) {
      rows.push_back(i);
      pick_rows(i + 1);
      rows.pop_back();
    }
  };
  pick_cols = [&](std::size_t start) {
    if (cols.size() == k) {
      std::vector<std::vector<mpz_class>> sub(k, std::vector<mpz_class>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(rows[i], cols[j]);
      mpz_class d = det(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      return;
    }
    for (std::size_t j = start; j < m.cols(); ++j) {
      cols.push_back(j);
      pick_cols(j + 1);
      cols.pop_back();
    }
  };
  pick_rows(0);
  return g;
}

std::set<Vec> enumerate_span(std::int64_t n, std::size_t cols, const std::vector<Vec>& gens) {
  std::set<Vec> span{Vec(cols, 0)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vec> current(span.begin(), span.end());
    for (const auto& v : current)
      for (const auto& g : gens) {
        Vec w(cols);
        for (std::size_t i = 0; i < cols; ++i) w[i] = mod_reduce(v[i] + g[i], n);
        if (span.insert(w).second) grew = true;
      }
  }
  return span;
}

std::vector<Vec> random_rows(std::mt19937& rng, std::size_t r, std::size_t c, std::int64_t n) {
  std::uniform_int_distribution<std::int64_t> dist(0, n - 1);
  std::vector<Vec> rows(r, Vec(c));
  for (auto& row : rows)
    for (auto& x : row) x = dist(rng);
  return rows;
}

}  // namespace

TEST(Smith, TransformsAndDiagonal) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix m = random_int_matrix(rng, r, c, 6);
    SmithForm s = smith_normal_form(m);
    EXPECT_EQ(s.U * m * s.V, s.D);
    EXPECT_EQ(s.V * s.V_inverse, IntMatrix::identity(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) EXPECT_EQ(s.D(i, j), 0);
    const std::size_t k = std::min(r, c);
    for (std::size_t i = 0; i + 1 < k; ++i) {
      EXPECT_GE(s.D(i, i), 0);
      if (s.D(i, i) == 0) {
        EXPECT_EQ(s.D(i + 1, i + 1), 0);
      } else {
        EXPECT_TRUE(mpz_divisible_p(s.D(i + 1, i + 1).get_mpz_t(), s.D(i, i).get_mpz_t()));
      }
    }
  }
}

TEST(Smith, DeterminantalDivisorsMatchMinors) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 2 + rng() % 2, c = 2 + rng() % 2;
    IntMatrix m = random_int_matrix(rng, r, c, 9);
    SmithForm s = smith_normal_form(m);
    mpz_class prod = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
      prod *= s.D(k - 1, k - 1);
      EXPECT_EQ(prod, minor_gcd(m, k)) << "k=" << k;
    }
  }
}

TEST(Hermite, LeftKernel) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 3;
    IntMatrix m = random_int_matrix(rng, r, c, 5);
    HermiteForm h = hermite_form(m);
    EXPECT_EQ(h.T * m, h.H);
    IntMatrix k = left_kernel(m);
    EXPECT_EQ(k.rows() + h.pivots.size(), r);
    IntMatrix prod = k * m;
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j) EXPECT_EQ(prod(i, j), 0);
  }
}

TEST(Howell, SpanAndEchelonProperty) {
  std::mt19937 rng(5);
  for (std::int64_t n : {2, 4, 6, 8, 9, 12}) {
    for (int trial = 0; trial < 12; ++trial) {
      const std::size_t cols = 2 + rng() % 2;
      auto gens = random_rows(rng, 1 + rng() % 3, cols, n);
      HowellBasis h(n, cols);
      h.insert_rows(gens);
      auto span = enumerate_span(n, cols, gens);
      EXPECT_EQ(enumerate_span(n, cols, h.rows()), span);
      EXPECT_EQ(h.span_order(), static_cast<std::int64_t>(span.size()));
      // rows with pivot >= k span everything vanishing on the first k coordinates
      for (std::size_t k = 0; k <= cols; ++k) {
        auto tail = enumerate_span(n, cols, h.rows_from(k));
        std::size_t expected = 0;
        for (const auto& v : span)
          if (std::all_of(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), [](auto x) { return x == 0; }))
            ++expected;
        EXPECT_EQ(tail.size(), expected);
      }
      for (const auto& v : span) EXPECT_TRUE(h.contains(v));
      ModMatrix again = howell_form(ModMatrix::from_rows(n, h.rows(), cols));
      EXPECT_EQ(again.to_rows(), h.rows());
    }
  }
}

TEST(Howell, KernelIntersectionAnnihilator) {
  std::mt19937 rng(9);
  const std::int64_t n = 12;
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_rows(rng, 3, 2, n);
    auto ker = left_kernel_mod(n, a, 2);
    std::size_t count = 0;
    for (std::int64_t x = 0; x < n; ++x)
      for (std::int64_t y = 0; y < n; ++y)
        for (std::int64_t z = 0; z < n; ++z) {
          bool zero = true;
          for (std::size_t j = 0; j < 2; ++j)
            if (mod_reduce(x * a[0][j] + y * a[1][j] + z * a[2][j], n) != 0) zero = false;
          if (zero) ++count;
        }
    EXPECT_EQ(enumerate_span(n, 3, ker).size(), count);

    auto b = random_rows(rng, 2, 2, n);
    auto sa = enumerate_span(n, 2, a), sb = enumerate_span(n, 2, b);
    std::size_t both = 0;
    for (const auto& v : sa) both += sb.count(v);
    EXPECT_EQ(enumerate_span(n, 2, intersect_spans(n, 2, a, b)).size(), both);

    HowellBasis h(n, 2);
    h.insert_rows(b);
    auto ann = annihilator(h);
    std::size_t ann_count = 0;
    for (std::int64_t x = 0; x < n; ++x)
      for (std::int64_t y = 0; y < n; ++y) {
        bool zero = true;
        for (const auto& row : h.rows())
          if (mod_reduce(row[0] * x + row[1] * y, n) != 0) zero = false;
        if (zero) ++ann_count;
      }
    EXPECT_EQ(enumerate_span(n, 2, ann).size(), ann_count);
  }
}

TEST(Subquotient, ModularExamples) {
  // (Z/4)^2 / <(2,0)> = Z/2 + Z/4
  auto q = subquotient_structure(2, 4, {{1, 0}, {0, 1}}, {{2, 0}});
  EXPECT_EQ(q.invariant_factors(), (std::vector<std::int64_t>{2, 4}));
  // <(2,2)> inside (Z/4)^2 modulo nothing = Z/2
  auto s = subquotient_structure(2, 4, {{2, 2}}, {});
  EXPECT_EQ(s.invariant_factors(), (std::vector<std::int64_t>{2}));
  EXPECT_EQ(s.coordinates({2, 2}), (Vec{1}));
  EXPECT_EQ(s.coordinates({0, 0}), (Vec{0}));
  EXPECT_THROW(subquotient_structure(2, 4, {{2, 0}}, {{1, 0}}), ValidationError);
}

TEST(Subquotient, CoordinatesAreHomomorphic) {
  std::mt19937 rng(21);
  for (std::int64_t n : {6, 8, 12}) {
    for (int trial = 0; trial < 8; ++trial) {
      auto ker = random_rows(rng, 3, 3, n);
      auto kspan = enumerate_span(n, 3, ker);
      std::vector<Vec> kvec(kspan.begin(), kspan.end());
      std::vector<Vec> img{kvec[rng() % kvec.size()]};
      auto q = subquotient_structure(3, n, ker, img);
      const std::size_t ispan = enumerate_span(n, 3, img).size();
      EXPECT_EQ(static_cast<std::size_t>(q.order()) * ispan, kspan.size());
      for (std::size_t i = 0; i < q.rank(); ++i) {
        Vec e(q.rank(), 0);
        e[i] = 1;
        EXPECT_EQ(q.coordinates(q.witnesses()[i]), e);
      }
      EXPECT_EQ(q.coordinates(img[0]), Vec(q.rank(), 0));
      for (int k = 0; k < 10; ++k) {
        const Vec& u = kvec[rng() % kvec.size()];
        const Vec& v = kvec[rng() % kvec.size()];
        Vec w(3);
        for (std::size_t i = 0; i < 3; ++i) w[i] = mod_reduce(u[i] + v[i], n);
        Vec cu = q.coordinates(u), cv = q.coordinates(v);
        Vec sum(q.rank());
        for (std::size_t i = 0; i < q.rank(); ++i) sum[i] = cu[i] + cv[i];
        EXPECT_EQ(q.normalize(sum), q.coordinates(w));
      }
    }
  }
}

TEST(Subquotient, IntegerExamples) {
  auto q = quotient_structure(3, {{2, 0, 0}, {0, 4, 6}});
  EXPECT_EQ(q.invariant_factors(), (std::vector<std::int64_t>{2, 2, 0}));
  EXPECT_EQ(canonical_invariants({2, 3, 4}), (std::vector<std::int64_t>{2, 12}));
  EXPECT_EQ(canonical_invariants({1, 1}), (std::vector<std::int64_t>{}));
  auto z = quotient_structure(2, {{1, 1}});
  EXPECT_EQ(z.invariant_factors(), (std::vector<std::int64_t>{0}));
  EXPECT_EQ(z.order(), 0);
  auto sub = subquotient_structure(2, 0, {{2, 0}, {0, 2}}, {{4, 2}});
  EXPECT_EQ(sub.invariant_factors(), (std::vector<std::int64_t>{0}));
  EXPECT_EQ(sub.coordinates({4, 2}), (Vec{0}));
}

TEST(Solve, ModularAndInteger) {
  ModMatrix m = ModMatrix::from_rows(4, {{2}}, 1);
  EXPECT_EQ(solve_mod(m, {2}), (Vec{1}));
  EXPECT_FALSE(solve_mod(m, {1}).has_value());
  ModMatrix a = ModMatrix::from_rows(6, {{1, 2}, {3, 0}}, 2);
  auto x = solve_mod(a, {5, 3});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(mod_reduce((*x)[0] + 2 * (*x)[1], 6), 5);
  EXPECT_EQ(mod_reduce(3 * (*x)[0], 6), 3);

  IntMatrix b = IntMatrix::from_rows({{2, 4}, {6, 8}}, 2);
  auto y = solve_int(b, {mpz_class(2), mpz_class(2)});
  ASSERT_TRUE(y.has_value());
  EXPECT_EQ(2 * (*y)[0] + 4 * (*y)[1], 2);
  EXPECT_EQ(6 * (*y)[0] + 8 * (*y)[1], 2);
  EXPECT_FALSE(solve_int(b, {mpz_class(1), mpz_class(0)}).has_value());
}

TEST(Scalars, NormalizingUnit) {
  for (std::int64_t n : {1, 2, 12, 30, 64})
    for (std::int64_t a = 0; a < n; ++a) {
      std::int64_t w = normalizing_unit(a, n);
      EXPECT_EQ(gcd64(w, n), 1);
      if (a) EXPECT_EQ(mod_mul(w, a, n), gcd64(a, n) % n);
    }
}
