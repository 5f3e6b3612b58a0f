#include "skewmori/exact.hpp"

#include <sstream>
#include <utility>

#include "skewmori/errors.hpp"

namespace skewmori {

ExactVector make_vector(std::initializer_list<long> entries) {
  ExactVector v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

ExactVector to_exact(std::span<const std::int64_t> entries) {
  ExactVector v;
  v.reserve(entries.size());
  for (std::int64_t e : entries) v.emplace_back(static_cast<long>(e));
  return v;
}

ExactVector to_exact(const IntVector& entries) {
  ExactVector v;
  v.reserve(entries.size());
  for (const auto& e : entries) v.emplace_back(e);
  return v;
}

ExactScalar dot(std::span<const mpq_class> a, std::span<const mpq_class> b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  mpq_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

mpz_class dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(std::span<const mpq_class> v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

IntVector primitive(std::span<const mpq_class> v) {
  mpz_class denom_lcm = 1;
  for (const auto& x : v) {
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    mpz_class scaled = x.get_num() * (denom_lcm / x.get_den());
    out.push_back(std::move(scaled));
  }
  return primitive(out);
}

IntVector primitive(const IntVector& v) {
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0 || g == 1) return v;
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x / g);
  return out;
}

std::vector<std::int64_t> to_int64(const IntVector& v) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw DomainError("integer entry exceeds 64 bits: " + x.get_str());
    out.push_back(x.get_si());
  }
  return out;
}

std::string to_string(const ExactScalar& x) { return x.get_str(); }

std::string to_string(std::span<const mpq_class> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<ExactVector>& rows, std::size_t cols) {
  ExactMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ExactVector ExactMatrix::row(std::size_t r) const {
  return ExactVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

ExactVector ExactMatrix::col(std::size_t c) const {
  ExactVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner sizes differ");
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpq_class& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

ExactVector operator*(const ExactMatrix& a, std::span<const mpq_class> v) {
  if (a.cols_ != v.size()) throw DimensionError("matrix-vector product: sizes differ");
  ExactVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0) out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

ExactMatrix rref(ExactMatrix m, std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
    }
    const mpq_class inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      const mpq_class f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (sgn(m(lead_row, k)) != 0) m(r, k) -= f * m(lead_row, k);
      }
    }
    if (pivots) pivots->push_back(c);
    ++lead_row;
  }
  return m;
}

std::size_t rank(const ExactMatrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

mpq_class determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant: matrix not square");
  ExactMatrix a = m;
  const std::size_t n = a.rows();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(a(r, c)) == 0) continue;
      const mpq_class f = a(r, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse: matrix not square");
  const std::size_t n = m.rows();
  ExactMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> piv;
  aug = rref(std::move(aug), &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) throw DomainError("inverse: matrix is singular");
  ExactMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  }
  return out;
}

std::vector<ExactVector> kernel_basis(const ExactMatrix& m) {
  std::vector<std::size_t> piv;
  const ExactMatrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<ExactVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ExactVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_of(const std::vector<ExactVector>& vs, std::size_t dim) {
  if (vs.empty()) return 0;
  return rank(ExactMatrix::from_rows(vs, dim));
}

bool solve(const ExactMatrix& m, std::span<const mpq_class> b, ExactVector& x) {
  if (b.size() != m.rows()) throw DimensionError("solve: right-hand side length mismatch");
  ExactMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> piv;
  aug = rref(std::move(aug), &piv);
  if (!piv.empty() && piv.back() == m.cols()) return false;
  x.assign(m.cols(), mpq_class(0));
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, m.cols());
  return true;
}

}  // namespace skewmori
