#include "skewmori/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "skewmori/errors.hpp"

namespace skewmori {

std::size_t variable_count(int n) {
  if (n < 1) throw DomainError("variable_count: n must be at least 1");
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2;
}

std::size_t variable_index(int n, int i, int j) {
  if (i < 0 || j > n || i >= j) throw DomainError("variable z_" + std::to_string(i) + "," + std::to_string(j) +
                                                  " does not exist for n=" + std::to_string(n));
  // Row i starts after rows 0..i-1, which hold n, n-1, ..., n-i+1 entries.
  const std::size_t start = static_cast<std::size_t>(i) * static_cast<std::size_t>(2 * n - i + 1) / 2;
  return start + static_cast<std::size_t>(j - i - 1);
}

std::pair<int, int> variable_pair(int n, std::size_t index) {
  for (int i = 0; i < n; ++i) {
    const std::size_t row = static_cast<std::size_t>(n - i);
    if (index < row) return {i, i + 1 + static_cast<int>(index)};
    index -= row;
  }
  throw DomainError("variable index out of range");
}

std::string variable_name(int n, std::size_t index) {
  auto [i, j] = variable_pair(n, index);
  if (n <= 9) return "z" + std::to_string(i) + std::to_string(j);
  return "z_" + std::to_string(i) + "_" + std::to_string(j);
}

Polynomial::Polynomial(int n) : n_(n) { (void)variable_count(n); }

Polynomial Polynomial::constant(int n, const mpz_class& c) {
  Polynomial p(n);
  p.add_term(Exponent(p.num_vars(), 0), c);
  return p;
}

Polynomial Polynomial::variable(int n, int i, int j) {
  Polynomial p(n);
  Exponent e(p.num_vars(), 0);
  e[variable_index(n, i, j)] = 1;
  p.add_term(e, 1);
  return p;
}

void Polynomial::add_term(const Exponent& e, const mpz_class& c) {
  if (e.size() != num_vars()) throw DimensionError("add_term: exponent length mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int Polynomial::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (other.n_ != n_) throw DimensionError("polynomials live over different variable sets");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const mpz_class& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpz_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      std::string f = variable_name(n_, v);
      if (e[v] > 1) f += "^" + std::to_string(e[v]);
      factors.push_back(std::move(f));
    }
    if (factors.empty() || mag != 1) {
      os << mag.get_str();
      if (!factors.empty()) os << '*';
    }
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) os << '*';
      os << factors[k];
    }
  }
  return os.str();
}

Polynomial partial(const Polynomial& p, int i, int j) {
  const bool flipped = i > j;
  if (flipped) std::swap(i, j);
  const std::size_t v = variable_index(p.n(), i, j);
  Polynomial out(p.n());
  for (const auto& [e, c] : p.terms()) {
    if (e[v] == 0) continue;
    Exponent d = e;
    --d[v];
    mpz_class coef = c * e[v];
    if (flipped) coef = -coef;
    out.add_term(d, coef);
  }
  return out;
}

}  // namespace skewmori
