#include "brq/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "brq/error.hpp"

namespace brq {

namespace {

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo a monic polynomial f.
QPoly poly_mod(QPoly p, const QPoly& f) {
  const std::size_t df = f.size() - 1;
  trim(p);
  while (p.size() > df) {
    const mpq_class lead = p.back();
    const std::size_t shift = p.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) p[shift + i] -= lead * f[i];
    trim(p);
  }
  return p;
}

// Quotient and remainder for a general nonzero divisor.
std::pair<QPoly, QPoly> poly_divmod(QPoly p, const QPoly& f) {
  const std::size_t df = f.size() - 1;
  trim(p);
  QPoly q(p.size() > df ? p.size() - df : 0);
  while (!p.empty() && p.size() > df) {
    const mpq_class lead = p.back() / f.back();
    const std::size_t shift = p.size() - 1 - df;
    q[shift] = lead;
    for (std::size_t i = 0; i <= df; ++i) p[shift + i] -= lead * f[i];
    trim(p);
  }
  return {q, p};
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

QPoly poly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

std::int64_t euler_phi(std::int64_t m) {
  std::int64_t result = m, n = m;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const QPoly& cyclotomic_polynomial(std::int64_t m) {
  if (m < 1) throw DomainError("cyclotomic conductor must be positive");
  static std::mutex mu;
  static std::map<std::int64_t, QPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  QPoly num(static_cast<std::size_t>(m) + 1);
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (std::int64_t d = 1; d < m; ++d)
    if (m % d == 0) num = poly_divmod(num, cyclotomic_polynomial(d)).first;
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(m, std::move(num)).first->second;
}

// ---------------------------------------------------------------------------

CycloNumber::CycloNumber(std::int64_t conductor) : m_(conductor) {
  if (conductor < 1) throw DomainError("cyclotomic conductor must be positive");
  c_.assign(static_cast<std::size_t>(euler_phi(conductor)), 0);
}

CycloNumber::CycloNumber(std::int64_t conductor, QPoly coefficients) : CycloNumber(conductor) {
  for (auto& q : coefficients) q.canonicalize();
  QPoly r = poly_mod(std::move(coefficients), cyclotomic_polynomial(conductor));
  for (std::size_t i = 0; i < r.size(); ++i) c_[i] = r[i];
}

CycloNumber CycloNumber::rational(const mpq_class& q, std::int64_t conductor) {
  CycloNumber x(conductor);
  x.c_[0] = q;
  return x;
}

CycloNumber CycloNumber::zeta(std::int64_t m, std::int64_t k) {
  k = mod_reduce(k, m);
  QPoly p(static_cast<std::size_t>(k) + 1);
  p[static_cast<std::size_t>(k)] = 1;
  return CycloNumber(m, std::move(p));
}

bool CycloNumber::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool CycloNumber::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

CycloNumber CycloNumber::promote(std::int64_t l) const {
  if (l == m_) return *this;
  if (l % m_ != 0) throw DomainError("cannot promote Q(zeta_" + std::to_string(m_) + ") to Q(zeta_" + std::to_string(l) + ")");
  const std::size_t step = static_cast<std::size_t>(l / m_);
  QPoly p(c_.empty() ? 0 : (c_.size() - 1) * step + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
  return CycloNumber(l, std::move(p));
}

CycloNumber CycloNumber::operator+(const CycloNumber& o) const {
  const std::int64_t l = std::lcm(m_, o.m_);
  if (l != m_ || l != o.m_) return promote(l) + o.promote(l);
  CycloNumber r(*this);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r(*this);
  for (auto& q : r.c_) q = -q;
  return r;
}

CycloNumber CycloNumber::operator-(const CycloNumber& o) const { return *this + (-o); }

CycloNumber CycloNumber::operator*(const CycloNumber& o) const {
  const std::int64_t l = std::lcm(m_, o.m_);
  if (l != m_ || l != o.m_) return promote(l) * o.promote(l);
  if (is_zero() || o.is_zero()) return CycloNumber(m_);
  return CycloNumber(m_, poly_mul(c_, o.c_));
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw DomainError("inversion of zero in Q(zeta_" + std::to_string(m_) + ")");
  QPoly r0 = cyclotomic_polynomial(m_), r1 = c_;
  trim(r1);
  QPoly s0, s1{1};
  while (!r1.empty()) {
    auto [q, rem] = poly_divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant
  const mpq_class c = r0[0];
  for (auto& q : s0) q /= c;
  return CycloNumber(m_, std::move(s0));
}

CycloNumber CycloNumber::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  CycloNumber result = rational(1, m_), base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

bool CycloNumber::operator==(const CycloNumber& o) const {
  if (m_ == o.m_) return c_ == o.c_;
  const std::int64_t l = std::lcm(m_, o.m_);
  return promote(l).c_ == o.promote(l).c_;
}

std::optional<std::int64_t> CycloNumber::root_of_unity_exponent(std::int64_t l) const {
  const CycloNumber x = promote(l);
  const QPoly& f = cyclotomic_polynomial(l);
  const std::size_t deg = f.size() - 1;
  QPoly z(deg, 0);
  z[0] = 1;
  for (std::int64_t j = 0; j < l; ++j) {
    if (z == x.c_) return j;
    // multiply by zeta_l: shift and reduce by the monic f
    mpq_class top = z[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) z[i] = z[i - 1];
    z[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < deg; ++i) z[i] -= top * f[i];
  }
  return std::nullopt;
}

std::optional<std::int64_t> CycloNumber::root_of_unity_order() const {
  const std::int64_t l = std::lcm(m_, std::int64_t{2});
  auto j = root_of_unity_exponent(l);
  if (!j) return std::nullopt;
  return l / std::gcd(*j, l);
}

std::string CycloNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].get_str();
    if (i) os << "*z" << m_ << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------

CycloMatrix::CycloMatrix(std::size_t rows, std::size_t cols, std::int64_t conductor)
    : rows_(rows), cols_(cols), m_(conductor), data_(rows * cols, CycloNumber(conductor)) {}

CycloMatrix CycloMatrix::identity(std::size_t n, std::int64_t conductor) {
  CycloMatrix r(n, n, conductor);
  for (std::size_t i = 0; i < n; ++i) r(i, i) = CycloNumber::rational(1, conductor);
  return r;
}

CycloMatrix CycloMatrix::from_int(const IntMatrix& m) {
  CycloMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = CycloNumber::rational(mpq_class(m(i, j)));
  return r;
}

CycloMatrix CycloMatrix::promote(std::int64_t l) const {
  if (l == m_) return *this;
  CycloMatrix r(rows_, cols_, l);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k].promote(l);
  return r;
}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& o) const {
  if (cols_ != o.rows_) throw DomainError("matrix product: dimension mismatch");
  const std::int64_t l = std::lcm(m_, o.m_);
  if (l != m_ || l != o.m_) return promote(l) * o.promote(l);
  CycloMatrix r(rows_, o.cols_, l);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const CycloNumber& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) r(i, j) = r(i, j) + a * o(k, j);
    }
  return r;
}

CycloMatrix CycloMatrix::scaled(const CycloNumber& s) const {
  const std::int64_t l = std::lcm(m_, s.conductor());
  CycloMatrix r = promote(l);
  for (auto& x : r.data_) x = x * s;
  return r;
}

CycloMatrix CycloMatrix::transpose() const {
  CycloMatrix r(cols_, rows_, m_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool CycloMatrix::operator==(const CycloMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (data_[k] != o.data_[k]) return false;
  return true;
}

std::optional<CycloNumber> CycloMatrix::scalar_ratio(const CycloMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return std::nullopt;
  std::optional<CycloNumber> s;
  for (std::size_t k = 0; k < data_.size() && !s; ++k)
    if (!o.data_[k].is_zero()) s = data_[k] / o.data_[k];
  if (!s) return std::nullopt;
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (data_[k] != *s * o.data_[k]) return std::nullopt;
  return s;
}

std::optional<CycloNumber> CycloMatrix::as_scalar() const {
  if (rows_ != cols_) return std::nullopt;
  return scalar_ratio(identity(rows_, m_));
}

CycloMatrix matrix_inverse(const CycloMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("matrix inverse: matrix is not square");
  const std::size_t n = m.rows();
  CycloMatrix a = m, inv = CycloMatrix::identity(n, m.conductor());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) throw DomainError("matrix inverse: matrix is singular");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    const CycloNumber piv = a(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) = a(c, j) * piv;
      inv(c, j) = inv(c, j) * piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      const CycloNumber f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = a(i, j) - f * a(c, j);
        inv(i, j) = inv(i, j) - f * inv(c, j);
      }
    }
  }
  return inv;
}

CycloNumber determinant(const CycloMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant: matrix is not square");
  const std::size_t n = m.rows();
  CycloMatrix a = m;
  CycloNumber det = CycloNumber::rational(1, m.conductor());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return CycloNumber(m.conductor());
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det = det * a(c, c);
    const CycloNumber piv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const CycloNumber f = a(i, c) * piv;
      for (std::size_t j = c; j < n; ++j) a(i, j) = a(i, j) - f * a(c, j);
    }
  }
  return det;
}

std::vector<std::vector<int>> subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  if (r < 0 || r > n) return out;
  std::vector<int> s(static_cast<std::size_t>(r));
  std::iota(s.begin(), s.end(), 0);
  for (;;) {
    out.push_back(s);
    int i = r - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) break;
    ++s[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

CycloMatrix exterior_power(const CycloMatrix& m, int r) {
  const int maxr = static_cast<int>(std::min(m.rows(), m.cols()));
  if (r < 1 || r > maxr)
    throw DomainError("exterior power: r = " + std::to_string(r) + " out of range 1.." + std::to_string(maxr));
  const auto rs = subsets(static_cast<int>(m.rows()), r), cs = subsets(static_cast<int>(m.cols()), r);
  CycloMatrix out(rs.size(), cs.size(), m.conductor());
  CycloMatrix sub(static_cast<std::size_t>(r), static_cast<std::size_t>(r), m.conductor());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) {
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
          sub(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) =
              m(static_cast<std::size_t>(rs[i][static_cast<std::size_t>(a)]),
                static_cast<std::size_t>(cs[j][static_cast<std::size_t>(b)]));
      out(i, j) = determinant(sub);
    }
  return out;
}

IntMatrix hodge_star(int n, int r) {
  if (r < 0 || r > n) throw DomainError("hodge star: r out of range");
  const auto from = subsets(n, r), to = subsets(n, n - r);
  IntMatrix h(to.size(), from.size());
  for (std::size_t j = 0; j < from.size(); ++j) {
    std::vector<int> comp;
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int s : from[j]) in[static_cast<std::size_t>(s)] = 1;
    for (int x = 0; x < n; ++x)
      if (!in[static_cast<std::size_t>(x)]) comp.push_back(x);
    // inversions of the shuffle (S, S^c)
    int inversions = 0;
    for (std::size_t k = 0; k < from[j].size(); ++k) inversions += from[j][k] - static_cast<int>(k);
    const std::size_t i = static_cast<std::size_t>(std::lower_bound(to.begin(), to.end(), comp) - to.begin());
    h(i, j) = inversions % 2 ? -1 : 1;
  }
  return h;
}

}  // namespace brq
