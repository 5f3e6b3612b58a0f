#pragma once

// Pfaffian calculus on the generic skew-symmetric matrix Z = (z_ij), exact
// sampling of secant varieties of the Grassmannian of lines G(1,n) (matrices of
// rank <= 2h), vanishing orders, secant dimensions, wedge powers and the
// inverse involution on invertible skew forms.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "skewmori/exact.hpp"
#include "skewmori/polynomial.hpp"

namespace skewmori {

// Skew-symmetric rational matrix stored by its strict upper triangle, in the
// same order as the polynomial variables z_ij.
class RationalSkewMatrix {
 public:
  explicit RationalSkewMatrix(std::size_t size);
  static RationalSkewMatrix from_upper(std::size_t size, std::vector<mpq_class> upper);
  // Throws DomainError unless m is square with m^t = -m.
  static RationalSkewMatrix from_matrix(const ExactMatrix& m);
  static RationalSkewMatrix zero(std::size_t size) { return RationalSkewMatrix(size); }

  std::size_t size() const { return size_; }
  // Entry (i, j) with the sign implied by antisymmetry.
  mpq_class at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const mpq_class& value);
  const std::vector<mpq_class>& upper() const { return upper_; }

  ExactMatrix to_matrix() const;
  bool is_zero() const;

  friend bool operator==(const RationalSkewMatrix&, const RationalSkewMatrix&) = default;

 private:
  std::size_t offset(std::size_t i, std::size_t j) const;

  std::size_t size_;
  std::vector<mpq_class> upper_;
};

// Strictly increasing row/column indices of a principal minor.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> indices);
  explicit IndexSet(std::vector<int> indices);
  static IndexSet range(int first, int count);

  std::size_t size() const { return idx_.size(); }
  bool empty() const { return idx_.empty(); }
  int operator[](std::size_t k) const { return idx_[k]; }
  int max() const { return idx_.back(); }
  auto begin() const { return idx_.begin(); }
  auto end() const { return idx_.end(); }
  const std::vector<int>& indices() const { return idx_; }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<int> idx_;
};

// Pfaffian of the principal skew submatrix of Z on rows/columns I, by
// expansion along the first row with memoized subsets:
//   pf(Z_I) = sum_j (-1)^(j+1) z_{i_0 i_j} pf(Z_{I - {i_0, i_j}}),
// normalized so pf([[0, a], [-a, 0]]) = a. The empty Pfaffian is 1.
// Throws DomainError for odd |I| ("odd Pfaffian undefined") or max(I) > n.
Polynomial sub_pfaffian(int n, const IndexSet& indices);

// Pfaffian of a numeric skew matrix by symplectic Gaussian elimination; an
// independent route to the value of sub_pfaffian(...) evaluated at Z.
mpq_class pfaffian_value(const RationalSkewMatrix& z);

// Exact value of p at Z. Z may be larger than p's ambient matrix; a variable
// used by p that does not exist in Z raises DomainError.
mpq_class evaluate(const Polynomial& p, const RationalSkewMatrix& z);

std::size_t rank(const RationalSkewMatrix& z);

// Z = sum_{i=1..h} x_i ^ y_i with integer vectors drawn from [-bound, bound],
// resampled until rank(Z) = 2h.
RationalSkewMatrix secant_sample(int n, int h, std::int64_t bound, std::uint64_t seed);

// Smallest j <= max_order such that some order-j partial derivative of p is
// nonzero at Z; max_order + 1 when all of them vanish. Computed from the
// Taylor expansion p(Z + Y) truncated at degree max_order.
int vanishing_order(const Polynomial& p, const RationalSkewMatrix& z, int max_order);

struct MultiplicityOptions {
  int trials = 5;
  std::int64_t bound = 100;
  std::uint64_t seed = 0;
  std::size_t threads = 0;  // 0: thread_limit()
};

// Minimum over trials of the vanishing order of pf(Z_{0..2k+1}) at a random
// point of sec_h(G(1,n)). Generically this is max(k - h + 1, 0).
int multiplicity_estimate(int n, int k, int h, const MultiplicityOptions& options = {});

// Projective dimension of sec_h(G(1,n)) for 1 <= h < floor((n+1)/2):
//   2(n-1)h + h - 1 - 2h(h-1).
long dim_secant(int n, int h);
// Codimension in P(wedge^2 V), same range: (n^2 + n - 2h(2n - 2h + 1)) / 2.
long codim_secant(int n, int h);

// Terracini oracle: projective dimension of the span of the affine tangent
// spaces x_i ^ V + y_i ^ V at h random points of G(1,n).
long terracini_dim(int n, int h, std::int64_t bound, std::uint64_t seed);

struct WedgePower {
  std::vector<IndexSet> index;  // k-subsets, lexicographic
  ExactMatrix matrix;           // matrix(I, J) = det Z[I, J]
};

// k-th compound matrix of Z, 1 <= k <= size - 1.
WedgePower wedge_power(const RationalSkewMatrix& z, int k);

// Z^{-1}, which is again skew. Throws DomainError for odd size or pf(Z) = 0.
RationalSkewMatrix skew_inverse(const RationalSkewMatrix& z);

// One step of a complete skew-form: a 2-form and a basis of its kernel,
// given as the columns of `kernel` (size() rows).
struct CompleteFormStage {
  RationalSkewMatrix form;
  ExactMatrix kernel;
};

// True iff every form is nonzero, every kernel matrix is a basis of ker(form),
// each form lives on the previous kernel and the last form is nondegenerate
// or has a 1-dimensional kernel. Throws DimensionError when consecutive stage
// sizes do not chain.
bool validate_complete_form(const std::vector<CompleteFormStage>& stages);

// All k-subsets of {0, ..., m-1} in lexicographic order.
std::vector<IndexSet> subsets_of_size(int m, int k);

}  // namespace skewmori
