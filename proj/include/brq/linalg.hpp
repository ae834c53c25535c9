#pragma once

// Exact integer and Z/N linear algebra.
//
// Row-vector conventions throughout: a matrix is a list of rows, and a
// subgroup/submodule is the row span of its generators.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace brq {

using Vec = std::vector<std::int64_t>;

/// Dense matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const;

  IntMatrix transpose() const;
  std::vector<mpz_class> row(std::size_t i) const;
  /// Entries as machine integers; throws if any entry overflows int64.
  std::vector<Vec> to_rows() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Dense matrix over Z/N with entries in [0, N).
struct ModMatrix {
  std::int64_t modulus = 1;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  ModMatrix() = default;
  ModMatrix(std::int64_t n, std::size_t r, std::size_t c) : modulus(n), rows(r), cols(c), data(r * c, 0) {}
  static ModMatrix from_rows(std::int64_t n, const std::vector<Vec>& rows, std::size_t cols);

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  std::vector<Vec> to_rows() const;
  bool operator==(const ModMatrix&) const = default;
};

// ---------------------------------------------------------------------------
// Modular scalar helpers.

std::int64_t mod_reduce(std::int64_t x, std::int64_t n);
std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t n);
/// Unit w of Z/N with w*a = gcd(a, N) (mod N). For a = 0 returns 1.
std::int64_t normalizing_unit(std::int64_t a, std::int64_t n);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

// ---------------------------------------------------------------------------
// Smith normal form.

struct SmithForm {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix D;  // rows x cols, diagonal with d1 | d2 | ...
  IntMatrix V;  // cols x cols, unimodular
  IntMatrix V_inverse;
};

/// U * M * V = D. Pivots are chosen as the entry of smallest absolute value,
/// ties broken by row-major position.
SmithForm smith_normal_form(const IntMatrix& m);

/// Nonzero diagonal entries of the Smith form (all positive).
std::vector<mpz_class> elementary_divisors(const IntMatrix& m);

// ---------------------------------------------------------------------------
// Hermite (row echelon) form over Z.

struct HermiteForm {
  IntMatrix H;                     // echelon, zero rows at the bottom
  IntMatrix T;                     // unimodular, T * A = H
  std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

HermiteForm hermite_form(const IntMatrix& a);

/// Basis (in Hermite form) of { x : x * A = 0 }.
IntMatrix left_kernel(const IntMatrix& a);

/// A full-rank sublattice of Z^n given by an echelon basis; supports exact
/// coordinates of lattice vectors.
class IntLattice {
 public:
  IntLattice() = default;
  IntLattice(std::size_t dim, const std::vector<std::vector<mpz_class>>& generators);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<std::vector<mpz_class>>& basis() const { return basis_; }
  /// lambda with lambda * basis = v, or nullopt if v is not in the lattice.
  std::optional<std::vector<mpz_class>> coordinates(std::vector<mpz_class> v) const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::vector<mpz_class>> basis_;
  std::vector<std::size_t> pivots_;
};

// ---------------------------------------------------------------------------
// Howell form over Z/N.

/// Incrementally maintained Howell basis of a submodule of (Z/N)^cols.
///
/// Rows are kept in echelon form with pivots dividing N, and the span is
/// closed under the annihilator rows (N/pivot) * row, so that for every k the
/// rows with pivot column >= k span all span elements vanishing on the first
/// k coordinates.
class HowellBasis {
 public:
  HowellBasis(std::int64_t modulus, std::size_t cols);

  void insert(Vec row);
  void insert_rows(const std::vector<Vec>& rows);

  std::int64_t modulus() const { return modulus_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const;

  /// Canonical rows, ordered by pivot column.
  std::vector<Vec> rows() const;
  /// Canonical rows whose pivot column is >= first_col.
  std::vector<Vec> rows_from(std::size_t first_col) const;
  /// Order of the spanned submodule (saturating at INT64_MAX).
  std::int64_t span_order() const;

  bool contains(const Vec& v) const;
  /// lambda with sum lambda_i * rows()[i] = v (mod N), or nullopt.
  std::optional<Vec> coefficients(const Vec& v) const;
  /// Canonical remainder of v modulo the span.
  Vec remainder(Vec v) const;

 private:
  void canonicalize() const;

  std::int64_t modulus_;
  std::size_t cols_;
  mutable std::vector<Vec> pivot_rows_;   // indexed by pivot column; empty if none
  mutable bool canonical_ = true;
};

ModMatrix howell_form(const ModMatrix& m);

/// Basis of { x : x * A = 0 } over Z/N, A given by rows of length cols.
std::vector<Vec> left_kernel_mod(std::int64_t modulus, const std::vector<Vec>& a_rows, std::size_t a_cols);

/// Submodule { x : A x = 0 } of (Z/N)^cols where A is spanned by the rows of
/// the given Howell basis.
std::vector<Vec> annihilator(const HowellBasis& constraints);

/// Intersection of two row spans over Z/N.
std::vector<Vec> intersect_spans(std::int64_t modulus, std::size_t cols, const std::vector<Vec>& a,
                                 const std::vector<Vec>& b);

// ---------------------------------------------------------------------------
// Finite abelian groups as subquotients.

namespace detail {
struct ClassMap {
  virtual ~ClassMap() = default;
  virtual Vec coordinates(const Vec& ambient) const = 0;
};
}  // namespace detail

/// A finitely generated abelian group in invariant-factor form
/// Z/d1 + ... + Z/dk (d1 | d2 | ... , each >= 2; a factor 0 stands for Z),
/// realized as a subquotient of an ambient Z^n or (Z/N)^n.
class AbelianStructure {
 public:
  AbelianStructure() = default;
  AbelianStructure(std::vector<std::int64_t> invariant_factors, std::vector<Vec> witnesses,
                   std::shared_ptr<const detail::ClassMap> class_map);

  const std::vector<std::int64_t>& invariant_factors() const { return invariants_; }
  /// Ambient vectors mapping to the standard generators.
  const std::vector<Vec>& witnesses() const { return witnesses_; }
  std::size_t rank() const { return invariants_.size(); }
  /// Group order; 0 if there is a free factor.
  std::int64_t order() const;
  bool trivial() const { return invariants_.empty(); }

  /// Coordinates of an ambient kernel vector, each reduced mod its factor.
  Vec coordinates(const Vec& ambient) const;
  /// Normalizes a coordinate vector (entries mod invariant factors).
  Vec normalize(Vec coords) const;

 private:
  std::vector<std::int64_t> invariants_;
  std::vector<Vec> witnesses_;
  std::shared_ptr<const detail::ClassMap> class_map_;
};

/// Structure of span(kernel_gens) / span(image_gens) inside Z^n (modulus 0)
/// or (Z/N)^n. Throws ValidationError naming the offending vector when an
/// image generator is not in the kernel span.
AbelianStructure subquotient_structure(std::size_t ambient_dim, std::int64_t modulus,
                                       const std::vector<Vec>& kernel_gens,
                                       const std::vector<Vec>& image_gens);

/// Z^k modulo the given relation rows.
AbelianStructure quotient_structure(std::size_t dim, const std::vector<Vec>& relations);

/// Canonical invariant factors of Z/a1 + Z/a2 + ... (entries <= 1 dropped).
std::vector<std::int64_t> canonical_invariants(const std::vector<std::int64_t>& cyclic_orders);

// ---------------------------------------------------------------------------
// Linear systems M x = b (column convention).

/// Canonical solution over Z/N: the smallest representative modulo the kernel.
std::optional<Vec> solve_mod(const ModMatrix& m, const Vec& b);
/// A solution over Z with free Smith coordinates set to zero.
std::optional<std::vector<mpz_class>> solve_int(const IntMatrix& m, const std::vector<mpz_class>& b);

std::string to_string(const Vec& v);

}  // namespace brq
