#pragma once

// Exact rational linear algebra on GMP rationals. Everything above this layer
// (cones, Pfaffians, lattices, chambers) is built on these primitives; no
// floating point is used anywhere in the library.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace skewmori {

using ExactScalar = mpq_class;
using ExactVector = std::vector<mpq_class>;
using IntVector = std::vector<mpz_class>;

ExactVector make_vector(std::initializer_list<long> entries);
ExactVector to_exact(std::span<const std::int64_t> entries);
ExactVector to_exact(const IntVector& entries);

ExactScalar dot(std::span<const mpq_class> a, std::span<const mpq_class> b);
mpz_class dot(const IntVector& a, const IntVector& b);
bool is_zero(std::span<const mpq_class> v);

// Positive multiple of `v` with coprime integer entries. The zero vector maps
// to itself.
IntVector primitive(std::span<const mpq_class> v);
IntVector primitive(const IntVector& v);

std::vector<std::int64_t> to_int64(const IntVector& v);

std::string to_string(const ExactScalar& x);
std::string to_string(std::span<const mpq_class> v);
std::string to_string(const IntVector& v);

// Dense row-major matrix of rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<ExactVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpq_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpq_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ExactVector row(std::size_t r) const;
  ExactVector col(std::size_t c) const;
  ExactMatrix transpose() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactVector operator*(const ExactMatrix& a, std::span<const mpq_class> v);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

// Reduced row echelon form; `pivots` receives the pivot column of each
// nonzero row.
ExactMatrix rref(ExactMatrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const ExactMatrix& m);
mpq_class determinant(const ExactMatrix& m);

// Throws DomainError when `m` is singular, DimensionError when not square.
ExactMatrix inverse(const ExactMatrix& m);

// Basis of {x : m x = 0}, one vector per free column, in RREF order.
std::vector<ExactVector> kernel_basis(const ExactMatrix& m);

// Rank of a family of vectors of common length `dim`.
std::size_t rank_of(const std::vector<ExactVector>& vs, std::size_t dim);

// Solves m x = b; returns false if inconsistent. When underdetermined, free
// variables are set to zero.
bool solve(const ExactMatrix& m, std::span<const mpq_class> b, ExactVector& x);

}  // namespace skewmori
