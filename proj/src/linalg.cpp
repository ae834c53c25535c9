#include "brq/linalg.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <sstream>
#include <utility>

#include "brq/error.hpp"

namespace brq {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DomainError("IntMatrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rows[i][j]);
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DomainError("IntMatrix product: dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<mpz_class> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

namespace {

std::int64_t to_i64(const mpz_class& x) {
  if (!x.fits_slong_p()) throw SizeLimitError("integer entry exceeds 64 bits: " + x.get_str());
  return x.get_si();
}

Vec to_vec(const std::vector<mpz_class>& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_i64(v[i]);
  return out;
}

std::vector<mpz_class> to_mpz(const Vec& v) {
  std::vector<mpz_class> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<long>(v[i]);
  return out;
}

}  // namespace

std::vector<Vec> IntMatrix::to_rows() const {
  std::vector<Vec> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = to_vec(row(i));
  return out;
}

// ---------------------------------------------------------------------------
// ModMatrix

ModMatrix ModMatrix::from_rows(std::int64_t n, const std::vector<Vec>& rows, std::size_t cols) {
  ModMatrix m(n, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DomainError("ModMatrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = mod_reduce(rows[i][j], n);
  }
  return m;
}

std::vector<Vec> ModMatrix::to_rows() const {
  std::vector<Vec> out(rows);
  for (std::size_t i = 0; i < rows; ++i)
    out[i] = Vec(data.begin() + static_cast<std::ptrdiff_t>(i * cols),
                 data.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols));
  return out;
}

// ---------------------------------------------------------------------------
// Scalars

std::int64_t mod_reduce(std::int64_t x, std::int64_t n) {
  if (n == 0) return x;
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t n) {
  auto r = static_cast<std::int64_t>(static_cast<__int128>(a) * b % n);
  return r < 0 ? r + n : r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

namespace {

struct Gcdex {
  std::int64_t g, s, t;
};

// s*a + t*b = g = gcd(a, b) over the integers.
Gcdex ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
  Gcdex e = ext_gcd(mod_reduce(a, n), n);
  return mod_reduce(e.s, n);
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

// v += k * w (mod n)
void axpy_mod(Vec& v, std::int64_t k, const Vec& w, std::int64_t n) {
  k = mod_reduce(k, n);
  if (k == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (w[i] != 0) v[i] = mod_reduce(v[i] + mod_mul(k, w[i], n), n);
}

Vec scale_mod(const Vec& v, std::int64_t k, std::int64_t n) {
  Vec out(v.size());
  k = mod_reduce(k, n);
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = mod_mul(v[i], k, n);
  return out;
}

// (p, q) <- (s p + t q, u p + v q)
void combine_mod(Vec& p, Vec& q, std::int64_t s, std::int64_t t, std::int64_t u, std::int64_t v,
                 std::int64_t n) {
  s = mod_reduce(s, n);
  t = mod_reduce(t, n);
  u = mod_reduce(u, n);
  v = mod_reduce(v, n);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0 && q[i] == 0) continue;
    std::int64_t a = p[i], b = q[i];
    p[i] = mod_reduce(mod_mul(s, a, n) + mod_mul(t, b, n), n);
    q[i] = mod_reduce(mod_mul(u, a, n) + mod_mul(v, b, n), n);
  }
}

}  // namespace

std::int64_t normalizing_unit(std::int64_t a, std::int64_t n) {
  a = mod_reduce(a, n);
  if (a == 0 || n == 1) return 1;
  std::int64_t g = gcd64(a, n);
  std::int64_t np = n / g;
  std::int64_t w0 = np == 1 ? 1 : inverse_mod(a / g, np);
  for (std::int64_t w = w0;; w += np) {
    if (gcd64(w, n) == 1) return mod_reduce(w, n);
  }
}

// ---------------------------------------------------------------------------
// Smith normal form over Z

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// rows (p, q) <- (s p + t q, u p + v q)
void combine_rows(IntMatrix& m, std::size_t p, std::size_t q, const mpz_class& s, const mpz_class& t,
                  const mpz_class& u, const mpz_class& v) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    mpz_class a = m(p, j), b = m(q, j);
    m(p, j) = s * a + t * b;
    m(q, j) = u * a + v * b;
  }
}

void combine_cols(IntMatrix& m, std::size_t p, std::size_t q, const mpz_class& s, const mpz_class& t,
                  const mpz_class& u, const mpz_class& v) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class a = m(i, p), b = m(i, q);
    m(i, p) = s * a + t * b;
    m(i, q) = u * a + v * b;
  }
}

struct MpzGcdex {
  mpz_class g, s, t;
};

MpzGcdex mpz_gcdex(const mpz_class& a, const mpz_class& b) {
  MpzGcdex r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Eliminates m(q, c) against pivot m(p, c) by a unimodular row operation,
// mirrored on the companion matrix.
void eliminate_row(IntMatrix& m, IntMatrix* companion, std::size_t p, std::size_t q, std::size_t c) {
  const mpz_class a = m(p, c), b = m(q, c);
  if (b == 0) return;
  if (a != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
    mpz_class k = b / a;
    for (std::size_t j = 0; j < m.cols(); ++j) m(q, j) -= k * m(p, j);
    if (companion)
      for (std::size_t j = 0; j < companion->cols(); ++j) (*companion)(q, j) -= k * (*companion)(p, j);
    return;
  }
  MpzGcdex e = mpz_gcdex(a, b);
  mpz_class u = -b / e.g, v = a / e.g;
  combine_rows(m, p, q, e.s, e.t, u, v);
  if (companion) combine_rows(*companion, p, q, e.s, e.t, u, v);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithForm f{IntMatrix::identity(rows), m, IntMatrix::identity(cols), IntMatrix::identity(cols)};
  IntMatrix& D = f.D;
  IntMatrix& U = f.U;
  IntMatrix& V = f.V;
  IntMatrix& Vi = f.V_inverse;

  auto col_op = [&](std::size_t p, std::size_t q, std::size_t r) {
    // Eliminates D(r, q) against pivot D(r, p) by a column operation.
    const mpz_class a = D(r, p), b = D(r, q);
    if (b == 0) return;
    if (a != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
      mpz_class k = b / a;
      for (std::size_t i = 0; i < rows; ++i) D(i, q) -= k * D(i, p);
      for (std::size_t i = 0; i < cols; ++i) V(i, q) -= k * V(i, p);
      for (std::size_t j = 0; j < cols; ++j) Vi(p, j) += k * Vi(q, j);
      return;
    }
    MpzGcdex e = mpz_gcdex(a, b);
    mpz_class u = -b / e.g, v = a / e.g;
    combine_cols(D, p, q, e.s, e.t, u, v);
    combine_cols(V, p, q, e.s, e.t, u, v);
    // inverse of [[s, u], [t, v]] acting on rows of Vi
    combine_rows(Vi, p, q, v, -u, -e.t, e.s);
  };

  const std::size_t lim = std::min(rows, cols);
  for (std::size_t t = 0; t < lim; ++t) {
    // Pivot: smallest absolute value, ties by row-major position.
    bool found = false;
    std::size_t pi = 0, pj = 0;
    mpz_class best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (D(i, j) == 0) continue;
        mpz_class a = abs(D(i, j));
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    swap_rows(D, t, pi);
    swap_rows(U, t, pi);
    swap_cols(D, t, pj);
    swap_cols(V, t, pj);
    swap_rows(Vi, t, pj);

    for (;;) {
      for (std::size_t i = t + 1; i < rows; ++i) eliminate_row(D, &U, t, i, t);
      for (std::size_t j = t + 1; j < cols; ++j) col_op(t, j, t);
      bool column_clean = true;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (D(i, t) != 0) column_clean = false;
      if (!column_clean) continue;
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (D(i, j) != 0 && !mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            for (std::size_t k = 0; k < cols; ++k) D(t, k) += D(i, k);
            for (std::size_t k = 0; k < rows; ++k) U(t, k) += U(i, k);
            fixed = true;
            break;
          }
        }
      if (!fixed) break;
    }
    if (D(t, t) < 0) {
      for (std::size_t k = 0; k < cols; ++k) D(t, k) = -D(t, k);
      for (std::size_t k = 0; k < rows; ++k) U(t, k) = -U(t, k);
    }
  }
  return f;
}

std::vector<mpz_class> elementary_divisors(const IntMatrix& m) {
  SmithForm f = smith_normal_form(m);
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    if (f.D(i, i) != 0) out.push_back(f.D(i, i));
  return out;
}

// ---------------------------------------------------------------------------
// Hermite form over Z

HermiteForm hermite_form(const IntMatrix& a) {
  HermiteForm h{a, IntMatrix::identity(a.rows()), {}};
  IntMatrix& H = h.H;
  std::size_t r = 0;
  for (std::size_t c = 0; c < H.cols() && r < H.rows(); ++c) {
    std::size_t best = H.rows();
    for (std::size_t i = r; i < H.rows(); ++i)
      if (H(i, c) != 0 && (best == H.rows() || abs(H(i, c)) < abs(H(best, c)))) best = i;
    if (best == H.rows()) continue;
    swap_rows(H, r, best);
    swap_rows(h.T, r, best);
    for (std::size_t i = r + 1; i < H.rows(); ++i) eliminate_row(H, &h.T, r, i, c);
    if (H(r, c) < 0) {
      for (std::size_t j = 0; j < H.cols(); ++j) H(r, j) = -H(r, j);
      for (std::size_t j = 0; j < h.T.cols(); ++j) h.T(r, j) = -h.T(r, j);
    }
    for (std::size_t k = 0; k < r; ++k) {
      if (H(k, c) == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), H(k, c).get_mpz_t(), H(r, c).get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = 0; j < H.cols(); ++j) H(k, j) -= q * H(r, j);
      for (std::size_t j = 0; j < h.T.cols(); ++j) h.T(k, j) -= q * h.T(r, j);
    }
    h.pivots.push_back(c);
    ++r;
  }
  return h;
}

IntMatrix left_kernel(const IntMatrix& a) {
  HermiteForm h = hermite_form(a);
  const std::size_t rank = h.pivots.size();
  IntMatrix k(a.rows() - rank, a.rows());
  for (std::size_t i = rank; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) k(i - rank, j) = h.T(i, j);
  if (k.rows() == 0) return k;
  HermiteForm kh = hermite_form(k);
  IntMatrix out(kh.pivots.size(), a.rows());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = kh.H(i, j);
  return out;
}

IntLattice::IntLattice(std::size_t dim, const std::vector<std::vector<mpz_class>>& generators) : dim_(dim) {
  if (generators.empty()) return;
  IntMatrix g(generators.size(), dim);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != dim) throw DomainError("IntLattice: generator of wrong length");
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = generators[i][j];
  }
  HermiteForm h = hermite_form(g);
  for (std::size_t i = 0; i < h.pivots.size(); ++i) basis_.push_back(h.H.row(i));
  pivots_ = h.pivots;
}

std::optional<std::vector<mpz_class>> IntLattice::coordinates(std::vector<mpz_class> v) const {
  if (v.size() != dim_) throw DomainError("IntLattice::coordinates: wrong length");
  std::vector<mpz_class> lambda(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t c = pivots_[i];
    for (std::size_t j = (i == 0 ? 0 : pivots_[i - 1] + 1); j < c; ++j)
      if (v[j] != 0) return std::nullopt;
    if (v[c] == 0) continue;
    if (!mpz_divisible_p(v[c].get_mpz_t(), basis_[i][c].get_mpz_t())) return std::nullopt;
    lambda[i] = v[c] / basis_[i][c];
    for (std::size_t j = c; j < dim_; ++j) v[j] -= lambda[i] * basis_[i][j];
  }
  for (const auto& x : v)
    if (x != 0) return std::nullopt;
  return lambda;
}

// ---------------------------------------------------------------------------
// Howell form over Z/N

HowellBasis::HowellBasis(std::int64_t modulus, std::size_t cols)
    : modulus_(modulus), cols_(cols), pivot_rows_(cols) {
  if (modulus < 1) throw DomainError("HowellBasis: modulus must be >= 1");
  if (modulus > (std::int64_t{1} << 40)) throw SizeLimitError("HowellBasis: modulus too large");
}

void HowellBasis::insert(Vec row) {
  if (row.size() != cols_) throw DomainError("HowellBasis::insert: wrong row length");
  const std::int64_t n = modulus_;
  for (auto& x : row) x = mod_reduce(x, n);
  std::vector<Vec> queue;
  queue.push_back(std::move(row));
  while (!queue.empty()) {
    Vec w = std::move(queue.back());
    queue.pop_back();
    for (std::size_t c = 0; c < cols_; ++c) {
      if (w[c] == 0) continue;
      Vec& p = pivot_rows_[c];
      if (p.empty()) {
        std::int64_t unit = normalizing_unit(w[c], n);
        if (unit != 1) w = scale_mod(w, unit, n);
        const std::int64_t g = w[c];
        p = std::move(w);
        canonical_ = false;
        if (g != 1) {
          Vec ann = scale_mod(p, n / g, n);
          if (!is_zero(ann)) queue.push_back(std::move(ann));
        }
        break;
      }
      const std::int64_t a = p[c], x = w[c];
      if (x % a == 0) {
        axpy_mod(w, -(x / a), p, n);
        continue;
      }
      Gcdex e = ext_gcd(a, x);
      combine_mod(p, w, e.s, e.t, -x / e.g, a / e.g, n);
      std::int64_t unit = normalizing_unit(p[c], n);
      if (unit != 1) p = scale_mod(p, unit, n);
      canonical_ = false;
      const std::int64_t g = p[c];
      if (g != 1) {
        Vec ann = scale_mod(p, n / g, n);
        if (!is_zero(ann)) queue.push_back(std::move(ann));
      }
    }
  }
}

void HowellBasis::insert_rows(const std::vector<Vec>& rows) {
  for (const auto& r : rows) insert(r);
}

std::size_t HowellBasis::size() const {
  return static_cast<std::size_t>(
      std::count_if(pivot_rows_.begin(), pivot_rows_.end(), [](const Vec& r) { return !r.empty(); }));
}

void HowellBasis::canonicalize() const {
  if (canonical_) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (pivot_rows_[c].empty()) continue;
    const Vec& p = pivot_rows_[c];
    const std::int64_t g = p[c];
    for (std::size_t c2 = 0; c2 < c; ++c2) {
      Vec& above = pivot_rows_[c2];
      if (above.empty() || above[c] < g) continue;
      axpy_mod(above, -(above[c] / g), p, modulus_);
    }
  }
  canonical_ = true;
}

std::vector<Vec> HowellBasis::rows() const { return rows_from(0); }

std::vector<Vec> HowellBasis::rows_from(std::size_t first_col) const {
  canonicalize();
  std::vector<Vec> out;
  for (std::size_t c = first_col; c < cols_; ++c)
    if (!pivot_rows_[c].empty()) out.push_back(pivot_rows_[c]);
  return out;
}

std::int64_t HowellBasis::span_order() const {
  // In Howell form the span order is the product of N / pivot.
  __int128 order = 1;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (pivot_rows_[c].empty()) continue;
    order *= modulus_ / pivot_rows_[c][c];
    if (order > INT64_MAX) return INT64_MAX;
  }
  return static_cast<std::int64_t>(order);
}

Vec HowellBasis::remainder(Vec v) const {
  canonicalize();
  for (auto& x : v) x = mod_reduce(x, modulus_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c] == 0 || pivot_rows_[c].empty()) continue;
    const Vec& p = pivot_rows_[c];
    axpy_mod(v, -(v[c] / p[c]), p, modulus_);
  }
  return v;
}

bool HowellBasis::contains(const Vec& v) const { return is_zero(remainder(v)); }

std::optional<Vec> HowellBasis::coefficients(const Vec& v0) const {
  canonicalize();
  Vec v = v0;
  for (auto& x : v) x = mod_reduce(x, modulus_);
  Vec lambda;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (pivot_rows_[c].empty()) {
      if (v[c] != 0) return std::nullopt;
      continue;
    }
    const Vec& p = pivot_rows_[c];
    if (v[c] % p[c] != 0) return std::nullopt;
    const std::int64_t q = v[c] / p[c];
    lambda.push_back(q);
    axpy_mod(v, -q, p, modulus_);
  }
  if (!is_zero(v)) return std::nullopt;
  return lambda;
}

ModMatrix howell_form(const ModMatrix& m) {
  HowellBasis h(m.modulus, m.cols);
  for (const auto& r : m.to_rows()) h.insert(r);
  return ModMatrix::from_rows(m.modulus, h.rows(), m.cols);
}

std::vector<Vec> left_kernel_mod(std::int64_t modulus, const std::vector<Vec>& a_rows, std::size_t a_cols) {
  const std::size_t m = a_rows.size();
  HowellBasis h(modulus, a_cols + m);
  for (std::size_t i = 0; i < m; ++i) {
    Vec row(a_cols + m, 0);
    std::copy(a_rows[i].begin(), a_rows[i].end(), row.begin());
    row[a_cols + i] = 1;
    h.insert(std::move(row));
  }
  std::vector<Vec> out;
  for (const auto& r : h.rows_from(a_cols)) out.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(a_cols), r.end());
  return out;
}

std::vector<Vec> annihilator(const HowellBasis& constraints) {
  const auto rows = constraints.rows();
  const std::size_t n = constraints.cols();
  std::vector<Vec> transposed(n, Vec(rows.size(), 0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) transposed[j][i] = rows[i][j];
  return left_kernel_mod(constraints.modulus(), transposed, rows.size());
}

std::vector<Vec> intersect_spans(std::int64_t modulus, std::size_t cols, const std::vector<Vec>& a,
                                 const std::vector<Vec>& b) {
  HowellBasis h(modulus, 2 * cols);
  for (const auto& r : a) {
    Vec row(2 * cols);
    std::copy(r.begin(), r.end(), row.begin());
    std::copy(r.begin(), r.end(), row.begin() + static_cast<std::ptrdiff_t>(cols));
    h.insert(std::move(row));
  }
  for (const auto& r : b) {
    Vec row(2 * cols, 0);
    std::copy(r.begin(), r.end(), row.begin());
    h.insert(std::move(row));
  }
  std::vector<Vec> out;
  for (const auto& r : h.rows_from(cols)) out.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(cols), r.end());
  return out;
}

// ---------------------------------------------------------------------------
// Smith form over Z/N (used for subquotients of (Z/N)^n)

namespace {

struct ModSmith {
  std::vector<std::int64_t> diagonal;  // length = cols; 0 means the full Z/N
  std::vector<Vec> V;                  // cols x cols
  std::vector<Vec> V_inverse;
};

ModSmith mod_smith(std::vector<Vec> m, std::size_t cols, std::int64_t n) {
  const std::size_t rows = m.size();
  ModSmith f;
  f.V.assign(cols, Vec(cols, 0));
  f.V_inverse.assign(cols, Vec(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) f.V[i][i] = f.V_inverse[i][i] = 1 % n;
  f.diagonal.assign(cols, 0);

  auto col_combine = [&](std::size_t p, std::size_t q, std::int64_t s, std::int64_t t, std::int64_t u,
                         std::int64_t v) {
    for (auto& row : m) {
      std::int64_t a = row[p], b = row[q];
      row[p] = mod_reduce(mod_mul(s, a, n) + mod_mul(t, b, n), n);
      row[q] = mod_reduce(mod_mul(u, a, n) + mod_mul(v, b, n), n);
    }
    for (auto& row : f.V) {
      std::int64_t a = row[p], b = row[q];
      row[p] = mod_reduce(mod_mul(s, a, n) + mod_mul(t, b, n), n);
      row[q] = mod_reduce(mod_mul(u, a, n) + mod_mul(v, b, n), n);
    }
    combine_mod(f.V_inverse[p], f.V_inverse[q], v, -u, -t, s, n);
  };
  auto col_swap = [&](std::size_t p, std::size_t q) {
    if (p == q) return;
    for (auto& row : m) std::swap(row[p], row[q]);
    for (auto& row : f.V) std::swap(row[p], row[q]);
    std::swap(f.V_inverse[p], f.V_inverse[q]);
  };

  const std::size_t lim = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < lim; ++t) {
    bool found = false;
    std::size_t pi = 0, pj = 0;
    std::int64_t best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        std::int64_t g = gcd64(m[i][j], n);
        if (!found || g < best) {
          found = true;
          best = g;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    std::swap(m[t], m[pi]);
    col_swap(t, pj);
    for (;;) {
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const std::int64_t a = m[t][t], b = m[i][t];
        if (a != 0 && b % a == 0) {
          axpy_mod(m[i], -(b / a), m[t], n);
        } else {
          Gcdex e = ext_gcd(a, b);
          combine_mod(m[t], m[i], e.s, e.t, -b / e.g, a / e.g, n);
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const std::int64_t a = m[t][t], b = m[t][j];
        if (a != 0 && b % a == 0) {
          col_combine(t, j, 1, 0, -(b / a), 1);
        } else {
          Gcdex e = ext_gcd(a, b);
          col_combine(t, j, e.s, e.t, -b / e.g, a / e.g);
        }
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (m[i][t] != 0) clean = false;
      if (!clean) continue;
      std::int64_t unit = normalizing_unit(m[t][t], n);
      if (unit != 1) m[t] = scale_mod(m[t], unit, n);
      const std::int64_t g = m[t][t];
      bool fixed = false;
      if (g != 0) {
        for (std::size_t i = t + 1; i < rows && !fixed; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (m[i][j] % g != 0) {
              axpy_mod(m[t], 1, m[i], n);
              fixed = true;
              break;
            }
      }
      if (!fixed) break;
    }
    f.diagonal[t] = m[t][t];
  }
  return f;
}

class ModClassMap : public detail::ClassMap {
 public:
  ModClassMap(HowellBasis kernel, std::vector<Vec> v, std::vector<std::size_t> index,
              std::vector<std::int64_t> factors)
      : kernel_(std::move(kernel)), v_(std::move(v)), index_(std::move(index)), factors_(std::move(factors)) {}

  Vec coordinates(const Vec& ambient) const override {
    auto lambda = kernel_.coefficients(ambient);
    if (!lambda) throw DomainError("class map: vector " + to_string(ambient) + " is not in the kernel");
    const std::int64_t n = kernel_.modulus();
    Vec out(index_.size(), 0);
    for (std::size_t k = 0; k < index_.size(); ++k) {
      std::int64_t acc = 0;
      for (std::size_t i = 0; i < lambda->size(); ++i) acc = mod_reduce(acc + mod_mul((*lambda)[i], v_[i][index_[k]], n), n);
      out[k] = mod_reduce(acc, factors_[k]);
    }
    return out;
  }

 private:
  HowellBasis kernel_;
  std::vector<Vec> v_;
  std::vector<std::size_t> index_;
  std::vector<std::int64_t> factors_;
};

class IntClassMap : public detail::ClassMap {
 public:
  IntClassMap(IntLattice kernel, IntMatrix v, std::vector<std::size_t> index, std::vector<std::int64_t> factors)
      : kernel_(std::move(kernel)), v_(std::move(v)), index_(std::move(index)), factors_(std::move(factors)) {}

  Vec coordinates(const Vec& ambient) const override {
    auto lambda = kernel_.coordinates(to_mpz(ambient));
    if (!lambda) throw DomainError("class map: vector " + to_string(ambient) + " is not in the kernel");
    Vec out(index_.size(), 0);
    for (std::size_t k = 0; k < index_.size(); ++k) {
      mpz_class acc = 0;
      for (std::size_t i = 0; i < lambda->size(); ++i) acc += (*lambda)[i] * v_(i, index_[k]);
      if (factors_[k] != 0) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), acc.get_mpz_t(), mpz_class(static_cast<long>(factors_[k])).get_mpz_t());
        acc = r;
      }
      out[k] = to_i64(acc);
    }
    return out;
  }

 private:
  IntLattice kernel_;
  IntMatrix v_;
  std::vector<std::size_t> index_;
  std::vector<std::int64_t> factors_;
};

AbelianStructure subquotient_mod(std::size_t n, std::int64_t modulus, const std::vector<Vec>& kernel_gens,
                                 const std::vector<Vec>& image_gens) {
  HowellBasis kernel(modulus, n);
  for (const auto& g : kernel_gens) kernel.insert(g);
  for (const auto& g : image_gens)
    if (!kernel.contains(g))
      throw ValidationError("subquotient: image vector " + to_string(g) + " is not contained in the kernel");
  const auto krows = kernel.rows();
  const std::size_t a = krows.size();
  HowellBasis aug(modulus, n + a);
  for (std::size_t i = 0; i < a; ++i) {
    Vec row(n + a, 0);
    std::copy(krows[i].begin(), krows[i].end(), row.begin());
    row[n + i] = 1;
    aug.insert(std::move(row));
  }
  for (const auto& g : image_gens) {
    Vec row(n + a, 0);
    std::copy(g.begin(), g.end(), row.begin());
    aug.insert(std::move(row));
  }
  std::vector<Vec> relations;
  for (const auto& r : aug.rows_from(n)) relations.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(n), r.end());
  ModSmith s = mod_smith(relations, a, modulus);

  std::vector<std::int64_t> factors;
  std::vector<std::size_t> index;
  std::vector<Vec> witnesses;
  for (std::size_t i = 0; i < a; ++i) {
    std::int64_t d = s.diagonal[i] == 0 ? modulus : gcd64(s.diagonal[i], modulus);
    if (d == 1) continue;
    factors.push_back(d);
    index.push_back(i);
    Vec w(n, 0);
    for (std::size_t j = 0; j < a; ++j) axpy_mod(w, s.V_inverse[i][j], krows[j], modulus);
    witnesses.push_back(std::move(w));
  }
  auto map = std::make_shared<ModClassMap>(std::move(kernel), std::move(s.V), index, factors);
  return AbelianStructure(std::move(factors), std::move(witnesses), std::move(map));
}

AbelianStructure subquotient_int(std::size_t n, const std::vector<Vec>& kernel_gens,
                                 const std::vector<Vec>& image_gens) {
  std::vector<std::vector<mpz_class>> gens;
  for (const auto& g : kernel_gens) gens.push_back(to_mpz(g));
  IntLattice kernel(n, gens);
  const std::size_t a = kernel.rank();
  IntMatrix rel(image_gens.size(), a);
  for (std::size_t i = 0; i < image_gens.size(); ++i) {
    auto c = kernel.coordinates(to_mpz(image_gens[i]));
    if (!c) throw ValidationError("subquotient: image vector " + to_string(image_gens[i]) +
                                  " is not contained in the kernel");
    for (std::size_t j = 0; j < a; ++j) rel(i, j) = (*c)[j];
  }
  SmithForm s = smith_normal_form(rel);
  std::vector<std::int64_t> factors;
  std::vector<std::size_t> index;
  std::vector<Vec> witnesses;
  for (std::size_t i = 0; i < a; ++i) {
    mpz_class d = i < std::min(rel.rows(), a) ? s.D(i, i) : mpz_class(0);
    if (d == 1) continue;
    factors.push_back(to_i64(d));
    index.push_back(i);
    std::vector<mpz_class> w(n);
    for (std::size_t j = 0; j < a; ++j)
      for (std::size_t k = 0; k < n; ++k) w[k] += s.V_inverse(i, j) * kernel.basis()[j][k];
    witnesses.push_back(to_vec(w));
  }
  // Free factors (0) come last in Smith order already.
  auto map = std::make_shared<IntClassMap>(std::move(kernel), std::move(s.V), index, factors);
  return AbelianStructure(std::move(factors), std::move(witnesses), std::move(map));
}

}  // namespace

// ---------------------------------------------------------------------------
// AbelianStructure

AbelianStructure::AbelianStructure(std::vector<std::int64_t> invariant_factors, std::vector<Vec> witnesses,
                                   std::shared_ptr<const detail::ClassMap> class_map)
    : invariants_(std::move(invariant_factors)), witnesses_(std::move(witnesses)), class_map_(std::move(class_map)) {}

std::int64_t AbelianStructure::order() const {
  std::int64_t o = 1;
  for (auto d : invariants_) {
    if (d == 0) return 0;
    o *= d;
  }
  return o;
}

Vec AbelianStructure::coordinates(const Vec& ambient) const {
  if (!class_map_) return {};
  return class_map_->coordinates(ambient);
}

Vec AbelianStructure::normalize(Vec coords) const {
  if (coords.size() != invariants_.size()) throw DomainError("AbelianStructure::normalize: wrong length");
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (invariants_[i] != 0) coords[i] = mod_reduce(coords[i], invariants_[i]);
  return coords;
}

AbelianStructure subquotient_structure(std::size_t ambient_dim, std::int64_t modulus,
                                       const std::vector<Vec>& kernel_gens, const std::vector<Vec>& image_gens) {
  for (const auto& v : kernel_gens)
    if (v.size() != ambient_dim) throw DomainError("subquotient: kernel generator of wrong length");
  for (const auto& v : image_gens)
    if (v.size() != ambient_dim) throw DomainError("subquotient: image generator of wrong length");
  if (modulus < 0) throw DomainError("subquotient: negative modulus");
  if (modulus == 0) return subquotient_int(ambient_dim, kernel_gens, image_gens);
  return subquotient_mod(ambient_dim, modulus, kernel_gens, image_gens);
}

AbelianStructure quotient_structure(std::size_t dim, const std::vector<Vec>& relations) {
  std::vector<Vec> basis(dim, Vec(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) basis[i][i] = 1;
  return subquotient_structure(dim, 0, basis, relations);
}

std::vector<std::int64_t> canonical_invariants(const std::vector<std::int64_t>& cyclic_orders) {
  std::vector<Vec> rel;
  const std::size_t k = cyclic_orders.size();
  for (std::size_t i = 0; i < k; ++i) {
    Vec r(k, 0);
    r[i] = cyclic_orders[i];
    rel.push_back(r);
  }
  return quotient_structure(k, rel).invariant_factors();
}

// ---------------------------------------------------------------------------
// Linear systems

std::optional<Vec> solve_mod(const ModMatrix& m, const Vec& b) {
  if (b.size() != m.rows) throw DomainError("solve_mod: dimension mismatch");
  const std::int64_t n = m.modulus;
  const std::size_t eq = m.rows, vars = m.cols;
  HowellBasis h(n, eq + vars);
  for (std::size_t j = 0; j < vars; ++j) {
    Vec row(eq + vars, 0);
    for (std::size_t i = 0; i < eq; ++i) row[i] = m(i, j);
    row[eq + j] = 1;
    h.insert(std::move(row));
  }
  Vec target(eq + vars, 0);
  for (std::size_t i = 0; i < eq; ++i) target[i] = mod_reduce(b[i], n);
  Vec rem = h.remainder(target);
  for (std::size_t i = 0; i < eq; ++i)
    if (rem[i] != 0) return std::nullopt;
  Vec x(vars);
  for (std::size_t j = 0; j < vars; ++j) x[j] = mod_reduce(-rem[eq + j], n);
  HowellBasis kernel(n, vars);
  for (const auto& r : h.rows_from(eq)) kernel.insert(Vec(r.begin() + static_cast<std::ptrdiff_t>(eq), r.end()));
  return kernel.remainder(x);
}

std::optional<std::vector<mpz_class>> solve_int(const IntMatrix& m, const std::vector<mpz_class>& b) {
  if (b.size() != m.rows()) throw DomainError("solve_int: dimension mismatch");
  SmithForm s = smith_normal_form(m);
  std::vector<mpz_class> ub(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.rows(); ++k) ub[i] += s.U(i, k) * b[k];
  std::vector<mpz_class> y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const mpz_class d = i < m.cols() ? s.D(i, i) : mpz_class(0);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
      continue;
    }
    if (!mpz_divisible_p(ub[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    y[i] = ub[i] / d;
  }
  std::vector<mpz_class> x(m.cols());
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) x[i] += s.V(i, k) * y[k];
  return x;
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

}  // namespace brq
