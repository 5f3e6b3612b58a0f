#include "skewmori/pfaffian.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <utility>

#include "skewmori/errors.hpp"
#include "skewmori/parallel.hpp"
#include "skewmori/random.hpp"

namespace skewmori {

RationalSkewMatrix::RationalSkewMatrix(std::size_t size) : size_(size), upper_(size * (size ? size - 1 : 0) / 2) {}

RationalSkewMatrix RationalSkewMatrix::from_upper(std::size_t size, std::vector<mpq_class> upper) {
  RationalSkewMatrix z(size);
  if (upper.size() != z.upper_.size()) throw DimensionError("from_upper: wrong number of upper-triangle entries");
  z.upper_ = std::move(upper);
  return z;
}

RationalSkewMatrix RationalSkewMatrix::from_matrix(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("skew matrix must be square");
  RationalSkewMatrix z(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (sgn(m(i, i)) != 0) throw DomainError("skew matrix has a nonzero diagonal entry");
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      if (m(i, j) != -m(j, i)) throw DomainError("matrix is not skew-symmetric");
      z.set(i, j, m(i, j));
    }
  }
  return z;
}

std::size_t RationalSkewMatrix::offset(std::size_t i, std::size_t j) const {
  return i * (2 * size_ - i - 1) / 2 + (j - i - 1);
}

mpq_class RationalSkewMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= size_ || j >= size_) throw DimensionError("skew matrix index out of range");
  if (i == j) return 0;
  if (i < j) return upper_[offset(i, j)];
  return -upper_[offset(j, i)];
}

void RationalSkewMatrix::set(std::size_t i, std::size_t j, const mpq_class& value) {
  if (i >= size_ || j >= size_ || i == j) throw DimensionError("skew matrix index out of range");
  if (i < j) upper_[offset(i, j)] = value;
  else upper_[offset(j, i)] = -value;
}

ExactMatrix RationalSkewMatrix::to_matrix() const {
  ExactMatrix m(size_, size_);
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = i + 1; j < size_; ++j) {
      m(i, j) = upper_[offset(i, j)];
      m(j, i) = -upper_[offset(i, j)];
    }
  }
  return m;
}

bool RationalSkewMatrix::is_zero() const { return skewmori::is_zero(upper_); }

IndexSet::IndexSet(std::initializer_list<int> indices) : IndexSet(std::vector<int>(indices)) {}

IndexSet::IndexSet(std::vector<int> indices) : idx_(std::move(indices)) {
  for (std::size_t k = 0; k < idx_.size(); ++k) {
    if (idx_[k] < 0) throw DomainError("index set entries must be nonnegative");
    if (k > 0 && idx_[k] <= idx_[k - 1]) throw DomainError("index set must be strictly increasing");
  }
}

IndexSet IndexSet::range(int first, int count) {
  std::vector<int> v(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) v[static_cast<std::size_t>(k)] = first + k;
  return IndexSet(std::move(v));
}

std::vector<IndexSet> subsets_of_size(int m, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > m) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  for (;;) {
    out.emplace_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == m - k + pos) --pos;
    if (pos < 0) break;
    ++cur[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)] + 1;
  }
  return out;
}

namespace {

class PfaffianExpander {
 public:
  explicit PfaffianExpander(int n) : n_(n) {}

  const Polynomial& expand(std::uint64_t mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    Polynomial result(n_);
    if (mask == 0) {
      result = Polynomial::constant(n_, 1);
    } else {
      std::vector<int> idx;
      for (int b = 0; b < 64; ++b) {
        if (mask & (std::uint64_t{1} << b)) idx.push_back(b);
      }
      const int head = idx.front();
      for (std::size_t p = 1; p < idx.size(); ++p) {
        const std::uint64_t rest = mask & ~(std::uint64_t{1} << head) & ~(std::uint64_t{1} << idx[p]);
        const Polynomial& minor = expand(rest);
        const std::size_t var = variable_index(n_, head, idx[p]);
        const bool negative = (p % 2) == 0;
        for (const auto& [e, c] : minor.terms()) {
          Exponent shifted = e;
          ++shifted[var];
          result.add_term(shifted, negative ? mpz_class(-c) : c);
        }
      }
    }
    return memo_.emplace(mask, std::move(result)).first->second;
  }

 private:
  int n_;
  std::unordered_map<std::uint64_t, Polynomial> memo_;
};

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

Polynomial sub_pfaffian(int n, const IndexSet& indices) {
  if (indices.size() % 2 != 0) throw DomainError("odd Pfaffian undefined");
  if (n < 1) throw DomainError("sub_pfaffian: n must be at least 1");
  if (n > 63) throw DomainError("sub_pfaffian: n above 63 is not supported");
  if (!indices.empty() && indices.max() > n) throw DomainError("sub_pfaffian: index exceeds n");
  std::uint64_t mask = 0;
  for (int i : indices) mask |= std::uint64_t{1} << i;
  PfaffianExpander expander(n);
  return expander.expand(mask);
}

mpq_class pfaffian_value(const RationalSkewMatrix& z) {
  const std::size_t m = z.size();
  if (m % 2 != 0) return 0;
  ExactMatrix a = z.to_matrix();
  mpq_class pf = 1;
  for (std::size_t k = 0; k < m; k += 2) {
    std::size_t piv = k + 1;
    while (piv < m && sgn(a(k, piv)) == 0) ++piv;
    if (piv == m) return 0;
    if (piv != k + 1) {
      // Simultaneous row/column swap flips the Pfaffian's sign.
      for (std::size_t c = 0; c < m; ++c) std::swap(a(piv, c), a(k + 1, c));
      for (std::size_t r = 0; r < m; ++r) std::swap(a(r, piv), a(r, k + 1));
      pf = -pf;
    }
    const mpq_class p = a(k, k + 1);
    pf *= p;
    // Schur complement of the leading 2x2 block [[0, p], [-p, 0]].
    for (std::size_t i = k + 2; i < m; ++i) {
      for (std::size_t j = k + 2; j < m; ++j) {
        const mpq_class delta = a(k + 1, i) * a(k, j) - a(k, i) * a(k + 1, j);
        if (sgn(delta) != 0) a(i, j) += delta / p;
      }
    }
  }
  return pf;
}

mpq_class evaluate(const Polynomial& p, const RationalSkewMatrix& z) {
  const int n = p.n();
  std::vector<mpq_class> values(p.num_vars());
  std::vector<bool> known(p.num_vars(), false);
  mpq_class total = 0;
  for (const auto& [e, c] : p.terms()) {
    mpq_class term = c;
    for (std::size_t v = 0; v < e.size() && sgn(term) != 0; ++v) {
      if (e[v] == 0) continue;
      if (!known[v]) {
        auto [i, j] = variable_pair(n, v);
        if (static_cast<std::size_t>(j) >= z.size())
          throw DomainError("unknown variable " + variable_name(n, v) + " for a matrix of size " +
                            std::to_string(z.size()));
        values[v] = z.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        known[v] = true;
      }
      for (unsigned k = 0; k < e[v]; ++k) term *= values[v];
    }
    total += term;
  }
  return total;
}

std::size_t rank(const RationalSkewMatrix& z) { return rank(z.to_matrix()); }

RationalSkewMatrix secant_sample(int n, int h, std::int64_t bound, std::uint64_t seed) {
  if (n < 1) throw DomainError("secant_sample: n must be at least 1");
  if (h < 1 || h > (n + 1) / 2) throw DomainError("secant_sample: h out of range [1, floor((n+1)/2)]");
  if (bound < 1) throw DomainError("secant_sample: bound must be at least 1");
  const std::size_t size = static_cast<std::size_t>(n) + 1;
  IntSampler rng(seed);
  constexpr int kMaxAttempts = 10000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    RationalSkewMatrix z(size);
    for (int t = 0; t < h; ++t) {
      std::vector<std::int64_t> x(size), y(size);
      for (auto& v : x) v = rng.uniform(-bound, bound);
      for (auto& v : y) v = rng.uniform(-bound, bound);
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i + 1; j < size; ++j) {
          const long w = static_cast<long>(x[i] * y[j] - x[j] * y[i]);
          if (w != 0) z.set(i, j, z.at(i, j) + w);
        }
      }
    }
    if (rank(z) == static_cast<std::size_t>(2 * h)) return z;
  }
  throw DomainError("secant_sample: no sample of rank 2h found");
}

int vanishing_order(const Polynomial& p, const RationalSkewMatrix& z, int max_order) {
  if (max_order < 0) throw DomainError("vanishing_order: max_order must be nonnegative");
  const int n = p.n();
  std::vector<mpq_class> values(p.num_vars());
  for (std::size_t v = 0; v < values.size(); ++v) {
    auto [i, j] = variable_pair(n, v);
    if (static_cast<std::size_t>(j) < z.size()) values[v] = z.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }

  // Sparse Taylor coefficients of p(Z + Y): y-monomial -> coefficient.
  using YMonomial = std::vector<std::pair<std::uint32_t, std::uint16_t>>;
  std::map<YMonomial, mpq_class> shifted;

  for (const auto& [e, c] : p.terms()) {
    std::vector<std::uint32_t> vars;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      auto [i, j] = variable_pair(n, v);
      if (static_cast<std::size_t>(j) >= z.size())
        throw DomainError("unknown variable " + variable_name(n, v) + " for a matrix of size " + std::to_string(z.size()));
      vars.push_back(static_cast<std::uint32_t>(v));
    }
    // Enumerate how many factors of each variable move into Y.
    std::vector<std::uint16_t> take(vars.size(), 0);
    for (;;) {
      int degree = 0;
      for (auto t : take) degree += t;
      if (degree <= max_order) {
        mpq_class coef = c;
        YMonomial mono;
        for (std::size_t k = 0; k < vars.size() && sgn(coef) != 0; ++k) {
          const unsigned ev = e[vars[k]];
          coef *= binomial(ev, take[k]);
          for (unsigned r = 0; r < ev - take[k]; ++r) coef *= values[vars[k]];
          if (take[k] > 0) mono.emplace_back(vars[k], take[k]);
        }
        if (sgn(coef) != 0) {
          auto& slot = shifted[mono];
          slot += coef;
        }
      }
      std::size_t pos = 0;
      while (pos < vars.size() && take[pos] == e[vars[pos]]) take[pos++] = 0;
      if (pos == vars.size()) break;
      ++take[pos];
    }
  }

  int best = max_order + 1;
  for (const auto& [mono, coef] : shifted) {
    if (sgn(coef) == 0) continue;
    int degree = 0;
    for (const auto& [v, t] : mono) degree += t;
    best = std::min(best, degree);
  }
  return best;
}

int multiplicity_estimate(int n, int k, int h, const MultiplicityOptions& options) {
  if (k < 0 || 2 * k + 2 > n + 1) throw DomainError("multiplicity_estimate: need 0 <= k and 2k+2 <= n+1");
  if (h < 1 || h > (n + 1) / 2) throw DomainError("multiplicity_estimate: h out of range [1, floor((n+1)/2)]");
  if (options.trials < 1) throw DomainError("multiplicity_estimate: trials must be at least 1");
  const Polynomial pf = sub_pfaffian(n, IndexSet::range(0, 2 * k + 2));
  const int cap = k + 1;  // pf has degree k + 1
  std::vector<int> orders(static_cast<std::size_t>(options.trials));
  parallel_for(
      orders.size(),
      [&](std::size_t t) {
        const auto z = secant_sample(n, h, options.bound, derive_seed(options.seed, t));
        orders[t] = vanishing_order(pf, z, cap);
      },
      options.threads);
  return *std::min_element(orders.begin(), orders.end());
}

namespace {
void check_secant_range(int n, int h, const char* what) {
  if (n < 1 || h < 1 || h >= (n + 1) / 2)
    throw DomainError(std::string(what) + ": need 1 <= h < floor((n+1)/2)");
}
}  // namespace

long dim_secant(int n, int h) {
  check_secant_range(n, h, "dim_secant");
  return 2L * (n - 1) * h + h - 1 - 2L * h * (h - 1);
}

long codim_secant(int n, int h) {
  check_secant_range(n, h, "codim_secant");
  return (static_cast<long>(n) * n + n - 2L * h * (2L * n - 2L * h + 1)) / 2;
}

long terracini_dim(int n, int h, std::int64_t bound, std::uint64_t seed) {
  if (n < 1) throw DomainError("terracini_dim: n must be at least 1");
  if (h < 1 || h > (n + 1) / 2) throw DomainError("terracini_dim: h out of range [1, floor((n+1)/2)]");
  if (bound < 1) throw DomainError("terracini_dim: bound must be at least 1");
  const std::size_t size = static_cast<std::size_t>(n) + 1;
  const std::size_t dim = variable_count(n);
  IntSampler rng(seed);
  std::vector<ExactVector> tangent;
  auto wedge_unit = [&](const std::vector<std::int64_t>& x, std::size_t a) {
    // x ^ e_a in the basis z_ij, i < j.
    ExactVector w(dim);
    for (std::size_t i = 0; i < size; ++i) {
      if (i == a || x[i] == 0) continue;
      if (i < a) w[variable_index(n, static_cast<int>(i), static_cast<int>(a))] = static_cast<long>(x[i]);
      else w[variable_index(n, static_cast<int>(a), static_cast<int>(i))] = -static_cast<long>(x[i]);
    }
    return w;
  };
  for (int t = 0; t < h; ++t) {
    std::vector<std::int64_t> x(size), y(size);
    for (auto& v : x) v = rng.uniform(-bound, bound);
    for (auto& v : y) v = rng.uniform(-bound, bound);
    for (std::size_t a = 0; a < size; ++a) {
      tangent.push_back(wedge_unit(x, a));
      tangent.push_back(wedge_unit(y, a));
    }
  }
  return static_cast<long>(rank_of(tangent, dim)) - 1;
}

WedgePower wedge_power(const RationalSkewMatrix& z, int k) {
  const int m = static_cast<int>(z.size());
  if (k < 1 || k > m - 1) throw DomainError("wedge_power: k out of range [1, n]");
  WedgePower out;
  out.index = subsets_of_size(m, k);
  const std::size_t count = out.index.size();
  out.matrix = ExactMatrix(count, count);
  const ExactMatrix full = z.to_matrix();
  const auto ku = static_cast<std::size_t>(k);
  for (std::size_t r = 0; r < count; ++r) {
    for (std::size_t c = 0; c < count; ++c) {
      ExactMatrix sub(ku, ku);
      for (std::size_t a = 0; a < ku; ++a) {
        for (std::size_t b = 0; b < ku; ++b) {
          sub(a, b) = full(static_cast<std::size_t>(out.index[r][a]), static_cast<std::size_t>(out.index[c][b]));
        }
      }
      out.matrix(r, c) = determinant(sub);
    }
  }
  return out;
}

RationalSkewMatrix skew_inverse(const RationalSkewMatrix& z) {
  if (z.size() % 2 != 0) throw DomainError("skew_inverse: odd-size skew matrices are singular");
  if (sgn(pfaffian_value(z)) == 0) throw DomainError("skew_inverse: matrix is singular");
  return RationalSkewMatrix::from_matrix(inverse(z.to_matrix()));
}

bool validate_complete_form(const std::vector<CompleteFormStage>& stages) {
  if (stages.empty()) return false;
  for (std::size_t s = 0; s < stages.size(); ++s) {
    const auto& [form, kernel] = stages[s];
    if (kernel.rows() != form.size())
      throw DimensionError("complete form: kernel basis of stage " + std::to_string(s) + " has the wrong length");
    if (s + 1 < stages.size() && stages[s + 1].form.size() != kernel.cols())
      throw DimensionError("complete form: stage " + std::to_string(s + 1) + " is not sized to the previous kernel");
  }
  for (std::size_t s = 0; s < stages.size(); ++s) {
    const auto& [form, kernel] = stages[s];
    if (form.size() == 0 || form.is_zero()) return false;
    const ExactMatrix m = form.to_matrix();
    const std::size_t kernel_dim = form.size() - rank(m);
    if (kernel.cols() != kernel_dim) return false;
    if (kernel_dim > 0) {
      if (rank(kernel) != kernel_dim) return false;
      const ExactMatrix prod = m * kernel;
      for (std::size_t i = 0; i < prod.rows(); ++i) {
        for (std::size_t j = 0; j < prod.cols(); ++j) {
          if (sgn(prod(i, j)) != 0) return false;
        }
      }
    }
    if (s + 1 == stages.size() && kernel_dim > 1) return false;
  }
  return true;
}

}  // namespace skewmori
