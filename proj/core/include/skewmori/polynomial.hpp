#pragma once

// Sparse polynomials with integer coefficients in the entries z_ij
// (0 <= i < j <= n) of a generic (n+1)x(n+1) skew-symmetric matrix.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace skewmori {

// Variables are ordered lexicographically on (i, j): z01, z02, ..., z0n, z12, ...
std::size_t variable_count(int n);
std::size_t variable_index(int n, int i, int j);
std::pair<int, int> variable_pair(int n, std::size_t index);
// "z01" while both indices are single digits, "z_10_11" style otherwise.
std::string variable_name(int n, std::size_t index);

using Exponent = std::vector<std::uint16_t>;

class Polynomial {
 public:
  explicit Polynomial(int n);
  static Polynomial constant(int n, const mpz_class& c);
  static Polynomial variable(int n, int i, int j);

  int n() const { return n_; }
  std::size_t num_vars() const { return variable_count(n_); }

  // Exponent vectors (dense, length num_vars()) to nonzero coefficients.
  const std::map<Exponent, mpz_class>& terms() const { return terms_; }
  void add_term(const Exponent& e, const mpz_class& c);

  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const mpz_class& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const mpz_class& c) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= -1; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  // Terms in decreasing lexicographic order, e.g. "z01*z23 - z02*z13 + z03*z12".
  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& other) const;

  int n_;
  std::map<Exponent, mpz_class> terms_;
};

// d/dz_ij. For i > j the variable is read as z_ij = -z_ji, so the result is
// -d/dz_ji. Throws DomainError for i == j or an index beyond n.
Polynomial partial(const Polynomial& p, int i, int j);

}  // namespace skewmori
