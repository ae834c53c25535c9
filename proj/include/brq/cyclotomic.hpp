#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_m).

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brq/linalg.hpp"

namespace brq {

using QPoly = std::vector<mpq_class>;

/// The m-th cyclotomic polynomial (integer coefficients, low degree first).
const QPoly& cyclotomic_polynomial(std::int64_t m);
std::int64_t euler_phi(std::int64_t m);

/// Element of Q(zeta_m), stored as a polynomial in zeta_m of degree < phi(m).
class CycloNumber {
 public:
  CycloNumber() : CycloNumber(1) {}
  explicit CycloNumber(std::int64_t conductor);
  CycloNumber(std::int64_t conductor, QPoly coefficients);

  static CycloNumber rational(const mpq_class& q, std::int64_t conductor = 1);
  /// zeta_m^k
  static CycloNumber zeta(std::int64_t m, std::int64_t k = 1);

  std::int64_t conductor() const { return m_; }
  /// Exactly phi(m) coefficients.
  const QPoly& coefficients() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;

  /// The same number in Q(zeta_l); requires m | l.
  CycloNumber promote(std::int64_t l) const;

  CycloNumber operator+(const CycloNumber& o) const;
  CycloNumber operator-(const CycloNumber& o) const;
  CycloNumber operator*(const CycloNumber& o) const;
  CycloNumber operator-() const;
  CycloNumber inverse() const;
  CycloNumber operator/(const CycloNumber& o) const { return *this * o.inverse(); }
  CycloNumber pow(std::int64_t k) const;
  bool operator==(const CycloNumber& o) const;
  bool operator!=(const CycloNumber& o) const { return !(*this == o); }

  /// Multiplicative order if this is a root of unity (checked over t | 2m).
  std::optional<std::int64_t> root_of_unity_order() const;
  /// j in [0, l) with this = zeta_l^j, for l a multiple of lcm(m, 2); none
  /// if this is not an l-th root of unity.
  std::optional<std::int64_t> root_of_unity_exponent(std::int64_t l) const;

  std::string to_string() const;

 private:
  std::int64_t m_;
  QPoly c_;
};

class CycloMatrix {
 public:
  CycloMatrix() = default;
  CycloMatrix(std::size_t rows, std::size_t cols, std::int64_t conductor = 1);

  static CycloMatrix identity(std::size_t n, std::int64_t conductor = 1);
  static CycloMatrix from_int(const IntMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t conductor() const { return m_; }

  CycloNumber& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const CycloNumber& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// All entries moved to Q(zeta_l).
  CycloMatrix promote(std::int64_t l) const;
  CycloMatrix operator*(const CycloMatrix& o) const;
  CycloMatrix scaled(const CycloNumber& s) const;
  CycloMatrix transpose() const;
  bool operator==(const CycloMatrix& o) const;

  /// s with this = s * identity, if any.
  std::optional<CycloNumber> as_scalar() const;
  /// s with this = s * o, if any (o nonzero).
  std::optional<CycloNumber> scalar_ratio(const CycloMatrix& o) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::int64_t m_ = 1;
  std::vector<CycloNumber> data_;
};

/// Exact inverse; throws DomainError if singular.
CycloMatrix matrix_inverse(const CycloMatrix& m);
CycloNumber determinant(const CycloMatrix& m);

/// r-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int r);

/// Matrix of r x r minors indexed by lexicographic r-subsets.
CycloMatrix exterior_power(const CycloMatrix& m, int r);

/// Column-convention matrix of e_S -> sign(S, S^c) e_{S^c}, of size
/// C(n, n-r) x C(n, r).
IntMatrix hodge_star(int n, int r);

}  // namespace brq
